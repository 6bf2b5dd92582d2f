#!/usr/bin/env python3
# 2026 bhlearn developers

"""
Main module of the package. Gets the parsed command line from :class:`cli.parser`,
runs the requested subcommand and writes its CSV report. Returns 0 on success, 1 on
runtime errors or certified-bound violations; usage errors exit with 2 in the parser.
"""

import logging
import math
import sys

import pandas

from bhlearn import repo, cli, i_o, growth, learn, harness

BOUNDS_COLUMNS = ['d', 'l', 'markov_bound', 'weak_bound', 'bh_exponent', 'dmp_bound_kappa']
BUDGET_COLUMNS = ['formula', 'N', 'branch']


def print_sample_budgets(n, d, eps, delta, model=None, C=None):
    """
    One row per sample-count formula: the low-degree algorithm, both forms of the
    dimension-free count and the minimum of the two-branch bound with its branch.
    Formulas that overflow get an empty N.
    """
    log = logging.getLogger(__name__)
    model = learn.default_bh_model(d) if model is None else model
    C = repo.settings.C if C is None else C
    rows = list()

    def add(formula, compute):
        try:
            N, branch = compute()
        except OverflowError as ex:
            log.warning('%s: %s' % (formula, ex))
            N, branch = None, None
        rows.append({'formula': formula, 'N': N, 'branch': branch})

    add('lmn', lambda: (learn.lmn_sample_count(n, d, eps, delta), None))
    add('theorem2-statement', lambda: (learn.theorem2_sample_count(n, d, eps, delta, model)[1], None))
    add('theorem2-proof', lambda: (learn.theorem2_sample_count(n, d, eps, delta, model)[0], None))
    add('theorem1', lambda: learn.theorem1_sample_count(n, d, eps, delta, C))
    # object columns keep ints beyond int64 and blanks for missing values
    return pandas.DataFrame(rows, columns=BUDGET_COLUMNS, dtype=object)


def _learn(args):
    config = harness.experiment_config('learn-trials', {'n': [args.n], 'd': [args.d], 'eps': [args.eps],
                                                        'delta': [args.delta], 'algo': [args.algo], 'N': [args.N]},
                                       args.trials, args.seed, args.out, args.target, args.bh_model, args.C,
                                       args.timing)
    report = harness.learning_trials(config, args.max_threads, args.samples_out)
    i_o.write_report(report.frame(args.timing), args.out)
    logging.getLogger(__name__).info(report.summary())
    return 0


def _scan(args):
    report = harness.scan_log_n(args.d, args.eps, args.delta, args.ns, args.algo, args.seed, args.trials,
                                args.target, args.bh_model, args.max_threads)
    i_o.write_report(report.frame(args.timing), args.out)
    logging.getLogger(__name__).info(report.summary())
    return 0


def _grid(args):
    listed = lambda value: value if isinstance(value, list) else [value]
    grid = {'n': args.n, 'd': args.d, 'eps': args.eps, 'delta': args.delta, 'algo': listed(args.algo),
            'N': listed(args.N)}
    config = harness.experiment_config('scan-n', grid, args.trials, args.seed, args.out, args.target,
                                       args.bh_model, args.C, args.timing)
    report = harness.run_grid(config, args.max_threads)
    i_o.write_report(report.frame(args.timing), args.out)
    logging.getLogger(__name__).info(report.summary())
    return 0


def _bounds(args):
    kappa = repo.settings.kappa if args.kappa is None else args.kappa
    rows = [{'d': args.d, 'l': level, 'markov_bound': growth.markov_level_bound(args.d, level),
             'weak_bound': growth.weak_level_bound(args.d, level), 'bh_exponent': growth.bh_exponent(args.d),
             'dmp_bound_kappa': growth.dmp_constant_bound(args.d, kappa)} for level in range(1, args.d + 1)]
    i_o.write_report(pandas.DataFrame(rows, columns=BOUNDS_COLUMNS), args.out)
    return 0


def _bh_estimate(args):
    report = harness.bh_estimate_report(args.n, args.d, args.trials, args.seed, args.law, args.max_threads)
    i_o.write_report(report.frame(args.timing), args.out)
    return 0


def _collision(args):
    report = harness.collision_report(args.n, args.N, args.trials, args.seed, args.budget)
    row = report.rows[0]
    if row['N'] > math.log2(args.n):
        logging.getLogger(__name__).info('N=%d > log2 n: collision probability %g < 1/n' % (row['N'], row['exact']))
    i_o.write_report(report.frame(args.timing), args.out)
    return 0


def _audit(args):
    report = harness.bounds_audit(args.n, args.d, args.count, args.seed, args.corpus, args.kappa, args.law,
                                  args.max_threads)
    i_o.write_report(report.frame(args.timing), args.out)
    logging.getLogger(__name__).info(report.summary())
    return 1 if report.violations else 0


def _budgets(args):
    i_o.write_report(print_sample_budgets(args.n, args.d, args.eps, args.delta, args.bh_model, args.C), args.out)
    return 0


COMMANDS = {
    'learn': _learn,
    'scan': _scan,
    'grid': _grid,
    'bounds': _bounds,
    'bh-estimate': _bh_estimate,
    'collision': _collision,
    'audit': _audit,
    'budgets': _budgets,
}


def run(argv):
    """Parses :code:`argv`, dispatches and returns the exit code."""
    try:
        args = cli.parser(argv).args
    except SystemExit as ex:
        return ex.code if isinstance(ex.code, int) else 0 if ex.code is None else 1
    except OSError as ex:
        # the console handler is in place before the log file is opened
        logging.getLogger(__name__).error('cannot open log file: %s' % ex)
        return 1

    log = logging.getLogger(__name__)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, OverflowError, ZeroDivisionError, RuntimeError, OSError) as ex:
        log.error('%s: %s' % (args.command, ex))
        return 1


def _main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    _main()
