# 2026 bhlearn developers

"""
Target functions and query oracles. A learner sees a target only through a
:class:`query_oracle`, which hands out values in [-1, 1] and counts every query; the
exact ground truth rides along as a :class:`cube.coeff_map` for verification.

Sample points are drawn as (N, n) Boolean matrices, row j holding the packed bits of
X_j, from a Philox generator keyed by :func:`repo.generator`.
"""

import logging
import threading
from collections import namedtuple

import numpy as np

from bhlearn import repo, cube, i_o

LOG = logging.getLogger(__name__)

query_sample = namedtuple('query_sample', ['point', 'value'])


class query_oracle:
    """
    Query access to a bounded function of degree at most :code:`d`.

    :param batch: callable mapping an (N, n) Boolean point matrix to N values
    :param truth: exact expansion of the target
    :param table: exact truth table, if n is within the dense cap
    """

    def __init__(self, n, d, batch, truth, table=None, label=''):
        self.n = n
        self.d = d
        self.label = label
        self.truth = truth
        self.table = table
        self._batch = batch
        self._count = 0
        self._lock = threading.Lock()

    def __repr__(self):
        return 'query_oracle(%s, n=%d, d=%d)' % (self.label, self.n, self.d)

    @property
    def count(self):
        return self._count

    def _tally(self, k):
        with self._lock:
            self._count += k

    def query_batch(self, bits):
        bits = np.asarray(bits, dtype=bool)
        if bits.ndim != 2 or bits.shape[1] != self.n:
            raise ValueError('points must form an (N, %d) matrix' % self.n)
        values = np.asarray(self._batch(bits), dtype=np.float64)
        self._tally(len(values))
        return values

    def query(self, point):
        bits = cube._bits_of(point, self.n)
        row = np.zeros((1, self.n), dtype=bool)
        row[0, repo.toindices(bits)] = True
        return float(self.query_batch(row)[0])

    def clone(self):
        """Same target, fresh counter."""
        return query_oracle(self.n, self.d, self._batch, self.truth, self.table, self.label)


class sample_batch:
    """N examples (X_j, f(X_j)): an (N, n) Boolean point matrix and the values."""

    def __init__(self, bits, values):
        self.bits = bits
        self.values = values

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        n = self.bits.shape[1]
        for row, value in zip(self.bits, self.values.tolist()):
            yield query_sample(cube.point_mask(n, repo.tomask(np.flatnonzero(row).tolist())), value)

    @classmethod
    def from_samples(cls, samples, n):
        samples = list(samples)
        bits = np.zeros((len(samples), n), dtype=bool)
        for j, sample in enumerate(samples):
            bits[j, repo.toindices(cube._bits_of(sample.point, n))] = True
        return cls(bits, np.array([s.value for s in samples], dtype=np.float64))


def _table_batch(table):
    values = table.values
    return lambda bits: values[cube.unpack_points(bits)]


def character_oracle(n, S):
    """w_S for any dimension"""
    if not isinstance(S, cube.subset_mask):
        S = cube.subset_mask(n, S)
    if S.n != n:
        raise ValueError('dimension mismatch: %d != %d' % (S.n, n))
    idx = np.array(repo.toindices(S.bits), dtype=np.intp)

    def batch(bits):
        if len(idx) == 0:
            return np.ones(len(bits))
        return 1.0 - 2.0 * np.bitwise_xor.reduce(bits[:, idx], axis=1)

    truth = cube.coeff_map(n, {S.bits: 1.0})
    table = cube.to_truth_table(truth) if n <= repo.settings.n_max else None
    return query_oracle(n, len(S), batch, truth, table, 'character:%s' % S.hex())


def sparse_oracle(c, label='sparse'):
    """
    Oracle over an explicit expansion. Within the dense cap the bound ||c||_inf <= 1 is
    checked exactly; beyond it the expansion must satisfy sum_S |c(S)| <= 1.
    """
    tol = repo.settings.tolerance
    if c.n <= repo.settings.n_max:
        table = cube.to_truth_table(c)
        if cube.linf_norm(table) > 1 + tol:
            raise ValueError('target exceeds [-1,1]: sup norm %f' % cube.linf_norm(table))
        table = cube.truth_table(c.n, np.clip(table.values, -1, 1))
        batch = _table_batch(table)
    else:
        table = None
        if cube.lp_fourier_norm(c, 1) > 1 + tol:
            raise ValueError('cannot certify [-1,1] values beyond %d coordinates: '
                             'coefficient l1 norm exceeds 1' % repo.settings.n_max)
        batch = lambda bits: np.clip(cube.evaluate_batch(c, bits), -1, 1)
    return query_oracle(c.n, cube.degree(c), batch, c, table, label)


def _law(coefficient_law):
    if callable(coefficient_law):
        return coefficient_law
    laws = {
        'uniform': lambda rng, size: rng.uniform(-1, 1, size),
        'gaussian': lambda rng, size: rng.standard_normal(size),
        'rademacher': lambda rng, size: 2.0 * rng.integers(0, 2, size) - 1.0,
    }
    if coefficient_law not in laws:
        raise ValueError('unknown coefficient law: %s' % coefficient_law)
    return laws[coefficient_law]


def _normalized(n, d, dense, label):
    """Oracle for the dense coefficients divided by the sup norm of their table."""
    table = cube.fwht(dense)
    top = float(np.max(np.abs(table)))
    if top <= repo.settings.tolerance:
        return None
    dense = dense / top
    truth = cube.coeff_map(n, ((k, dense[k]) for k in np.flatnonzero(dense).tolist()), max_degree=d)
    table = cube.truth_table(n, table / top)
    return query_oracle(n, d, _table_batch(table), truth, table, label)


def random_bounded_low_degree(n, d, rng_seed, coefficient_law='uniform'):
    """
    A random degree-<=d function with sup norm exactly 1: coefficients of all |S| <= d
    from :code:`coefficient_law` in increasing mask order, normalized by the exact
    sup norm. All-zero draws retry on the next substream.

    :param rng_seed: int or tuple of int keys
    """
    if not 0 <= d <= n:
        raise ValueError('need 0 <= d <= n, got d=%s n=%s' % (d, n))
    cube._check_cap(n)
    law = _law(coefficient_law)
    keys = rng_seed if isinstance(rng_seed, (tuple, list)) else (rng_seed,)
    low = np.flatnonzero(cube.levels(n) <= d)
    for attempt in range(repo.settings.retries):
        rng = repo.generator(keys, attempt)
        dense = np.zeros(1 << n)
        dense[low] = law(rng, len(low))
        oracle = _normalized(n, d, dense, 'random:%s' % '/'.join(map(str, keys)))
        if oracle is not None:
            return oracle
        LOG.debug('all-zero draw for keys %s, attempt %d' % (keys, attempt))
    raise RuntimeError('no nonzero function after %d draws' % repo.settings.retries)


def scaled_majority_style_oracle(n, d):
    """The degree-<=d truncation of sign(sum x_i), sign(0) = +1, scaled to sup norm 1"""
    if not 0 <= d <= n:
        raise ValueError('need 0 <= d <= n, got d=%s n=%s' % (d, n))
    cube._check_cap(n)
    lv = cube.levels(n)
    majority = np.where(n - 2 * lv >= 0, 1.0, -1.0)
    dense = cube.fwht(majority) / float(1 << n)
    dense[lv > d] = 0.0
    oracle = _normalized(n, d, dense, 'majority')
    if oracle is None:
        raise ValueError('degree-%d truncation of majority on %d coordinates is zero' % (d, n))
    return oracle


def draw_samples(oracle, N, rng_seed):
    """
    N uniform points with their values. The points are the Boolean matrix
    :code:`rng.integers(0, 2, (N, n), dtype=bool)` of a :func:`repo.generator` keyed
    by :code:`rng_seed`.
    """
    if N < 0:
        raise ValueError('invalid sample count: %s' % N)
    keys = rng_seed if isinstance(rng_seed, (tuple, list)) else (rng_seed,)
    rng = repo.generator(keys)
    bits = rng.integers(0, 2, size=(N, oracle.n), dtype=bool)
    return sample_batch(bits, oracle.query_batch(bits))


def is_fixed_target(text):
    """Whether a target spec names one function, or a fresh draw per trial."""
    return text.strip() not in ('random', 'character')


def target_from_spec(text, n, d, keys=()):
    """
    Builds the oracle for a target spec: :code:`character:<hex>`, :code:`character`
    (a random |T| = d subset), :code:`random:<seed>`, :code:`random`,
    :code:`majority` or :code:`sparse:<path>`. Per-trial draws use :code:`keys`.
    """
    kind, _, value = text.strip().partition(':')
    keys = tuple(keys) if isinstance(keys, (tuple, list)) else (keys,)
    if kind == 'character':
        if value:
            try:
                bits = repo.fromhex(value)
            except ValueError:
                raise ValueError('invalid character subset: %s' % value)
            return character_oracle(n, cube.subset_mask(n, bits))
        if not keys:
            raise ValueError('a random character target needs seed keys')
        chosen = repo.generator(keys).choice(n, size=d, replace=False)
        return character_oracle(n, cube.subset_mask(n, repo.tomask(chosen.tolist())))
    elif kind == 'random':
        if value:
            try:
                return random_bounded_low_degree(n, d, int(value))
            except ValueError as ex:
                raise ValueError('invalid random target %s: %s' % (text, ex))
        if not keys:
            raise ValueError('a random target needs seed keys')
        return random_bounded_low_degree(n, d, keys)
    elif kind == 'majority' and not value:
        return scaled_majority_style_oracle(n, d)
    elif kind == 'sparse' and value:
        c = i_o.read_function(value)
        if isinstance(c, cube.truth_table):
            c = cube.walsh_transform(c)
        if c.n != n:
            raise ValueError('target %s has dimension %d, expected %d' % (value, c.n, n))
        if cube.degree(c) > d:
            raise ValueError('target %s has degree %d > %d' % (value, cube.degree(c), d))
        return sparse_oracle(c, text)
    raise ValueError('invalid target: %s' % text)
