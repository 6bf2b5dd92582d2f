# 2026 bhlearn developers

"""
Flat-file formats of the package: exact functions as text, sample lists and reports
as CSV, and experiment files of :code:`key=value` lines.

Functions are written with a header line :code:`n=<int> kind=<table|coeffs>`, then
either the 2^n table values in index order or one :code:`<subset-hex> <value>` line
per coefficient. Floats are printed with :func:`repr`, the shortest string that reads
back to the same double.
"""

import configparser
import logging
import sys

import numpy as np
import pandas

from bhlearn import repo, cube, zoo

LOG = logging.getLogger(__name__)


def _open(target, mode):
    if hasattr(target, 'write') or hasattr(target, 'read'):
        return target, False
    return open(target, mode), True


def write_function(f, target):
    """Writes a :class:`cube.truth_table` or :class:`cube.coeff_map` to a path or handle."""
    handle, close = _open(target, 'w')
    try:
        if isinstance(f, cube.truth_table):
            handle.write('n=%d kind=table\n' % f.n)
            for value in f.values.tolist():
                handle.write('%s\n' % repr(value))
        elif isinstance(f, cube.coeff_map):
            handle.write('n=%d kind=coeffs\n' % f.n)
            for key in sorted(f.keys(), key=lambda k: (repo.popcount(k), k)):
                handle.write('%s %s\n' % (repo.tohex(key), repr(f[key])))
        else:
            raise ValueError('cannot serialize %s' % type(f).__name__)
    finally:
        if close:
            handle.close()


def read_function(source):
    """Reads what :func:`write_function` wrote."""
    handle, close = _open(source, 'r')
    try:
        lines = [line.strip() for line in handle if line.strip()]
    finally:
        if close:
            handle.close()
    if not lines:
        raise ValueError('empty function file')
    try:
        header = dict(field.split('=', 1) for field in lines[0].split())
        n, kind = int(header['n']), header['kind']
    except (KeyError, ValueError):
        raise ValueError('invalid header line: %s' % lines[0])

    if kind == 'table':
        return cube.truth_table(n, [float(line) for line in lines[1:]])
    elif kind == 'coeffs':
        entries = dict()
        for line in lines[1:]:
            try:
                key, value = line.split()
                key = repo.fromhex(key)
            except ValueError:
                raise ValueError('invalid coefficient line: %s' % line)
            if key in entries:
                raise ValueError('duplicate subset %s' % repo.tohex(key))
            entries[key] = float(value)
        return cube.coeff_map(n, entries)
    raise ValueError('unknown function kind: %s' % kind)


def write_samples(samples, target):
    """One :code:`<point-hex>,<value>` line per sample, without header."""
    points = [repo.tohex(repo.tomask(np.flatnonzero(row).tolist())) for row in samples.bits]
    df = pandas.DataFrame({'point': points, 'value': samples.values})
    df.to_csv(target, header=False, index=False, lineterminator='\n')


def read_samples(source, n):
    """Reads a sample CSV back into a :class:`zoo.sample_batch` of dimension n."""
    df = pandas.read_csv(source, header=None, names=['point', 'value'], dtype={'point': str},
                         float_precision='round_trip')
    bits = np.zeros((len(df), n), dtype=bool)
    for j, text in enumerate(df['point']):
        mask = repo.fromhex(text)
        if mask >> n:
            raise ValueError('point %s does not fit into %d bits' % (text, n))
        bits[j, repo.toindices(mask)] = True
    return zoo.sample_batch(bits, df['value'].to_numpy(dtype=np.float64))


def read_experiment(source):
    """
    Reads a flat experiment file: one :code:`key=value` per line, :code:`#` comments.
    Keys keep their case.

    :returns: dict of str values
    """
    handle, close = _open(source, 'r')
    try:
        text = handle.read()
    finally:
        if close:
            handle.close()
    cfg_parser = configparser.ConfigParser(delimiters=('=',), comment_prefixes=('#',),
                                           inline_comment_prefixes=('#',), interpolation=None)
    cfg_parser.optionxform = str
    try:
        cfg_parser.read_string('[experiment]\n' + text)
    except configparser.Error as ex:
        raise ValueError('invalid experiment file: %s' % ex.message.splitlines()[0])
    return dict(cfg_parser['experiment'])


def write_report(df, target=None):
    """Writes a report :class:`pandas.DataFrame` as CSV to a path, or to stdout."""
    df.to_csv(sys.stdout if target is None else target, index=False, lineterminator='\n')
    if target is not None:
        LOG.info('wrote %d rows to %s' % (len(df), target))
