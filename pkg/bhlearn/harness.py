# 2026 bhlearn developers

"""
Seeded Monte-Carlo experiments: success rates of the learners on grids of parameter
cells, ln n scans of the sample count, the coordinate-collision experiment with its
indistinguishability witness, and audits of the growth bounds over function corpora.

Trial t of cell c under master seed s draws its target from the generator keyed
(s, c, t, 1) and its samples from (s, c, t, 0), so every cell and trial can be
reproduced in isolation, in any order and on any number of threads.
"""

import itertools
import logging
import math
import time
from argparse import Namespace

import numpy as np
import pandas

from bhlearn import repo, cube, growth, learn, zoo, i_o

LOG = logging.getLogger(__name__)

COLUMNS = {
    'learn-trials': ['trial', 'N', 'b', 'a', 'support_size', 'queries_used', 'l2_sq_error', 'success',
                     'good_event'],
    'scan-n': ['n', 'd', 'eps', 'delta', 'algo', 'N', 'trials', 'successes', 'success_rate', 'band',
               'mean_sq_error', 'mean_support', 'mean_queries'],
    'collision': ['n', 'N', 'trials', 'seed', 'frequency', 'exact', 'band', 'witness_found', 'witness_attempts'],
    'bounds-audit': ['function', 'degree', 'bh_ratio', 'bh_bound', 'markov_slack', 'weak_slack', 'l1_slack',
                     'prior_l1_slack', 'certified_violations'],
    'bh-estimate': ['n', 'd', 'trials', 'seed', 'max_ratio'],
}
ALGOS = ('bh', 'lmn', 'auto')
CERTIFIED_TOL = 1e-9


def band(p, trials):
    """3 sigma of a binomial frequency with success probability p"""
    return 3 * math.sqrt(p * (1 - p) / trials)


class experiment_config:
    """
    One experiment: its kind, a parameter grid whose product gives the cells, trials
    per cell and the master seed.

    :param grid: dict of lists over the keys n, d, eps, delta, algo and N (a sample
        count override, None for the formula)
    """
    KINDS = tuple(COLUMNS)

    def __init__(self, kind, grid, trials, seed, out=None, target='random', model=None, C=None, timing=False):
        if kind not in self.KINDS:
            raise ValueError('unknown experiment kind: %s' % kind)
        if not grid or any(len(values) == 0 for values in grid.values()):
            raise ValueError('empty parameter grid')
        if trials < 1:
            raise ValueError('need at least one trial, got %s' % trials)
        if seed is None or seed < 0:
            raise ValueError('a non-negative master seed is required')
        self.kind = kind
        self.grid = {key: list(values) for key, values in grid.items()}
        self.trials = trials
        self.seed = seed
        self.out = out
        self.target = target
        self.model = model
        self.C = C
        self.timing = timing
        for cell in self.cells():
            self._check_cell(cell)

    def cells(self):
        keys = list(self.grid)
        return [Namespace(index=j, **dict(zip(keys, values)))
                for j, values in enumerate(itertools.product(*self.grid.values()))]

    def _check_cell(self, cell):
        if self.kind not in ('learn-trials', 'scan-n'):
            return
        for key in ('n', 'd', 'eps', 'delta'):
            if key not in cell:
                raise ValueError('grid misses %s' % key)
        learn._check_ranges(cell.n, cell.d, cell.eps, cell.delta)
        if getattr(cell, 'algo', 'bh') not in ALGOS:
            raise ValueError('unknown algorithm: %s' % cell.algo)
        N = getattr(cell, 'N', None)
        if N is not None and N < 1:
            raise ValueError('sample count override must be at least 1, got %s' % N)


class experiment_report:
    """Rows of one experiment with the master seed; wall times are kept apart."""

    def __init__(self, kind, seed, rows=None, wall_time=None):
        self.kind = kind
        self.seed = seed
        self.rows = list() if rows is None else rows
        self.wall_time = list() if wall_time is None else wall_time
        self.violations = 0

    def __len__(self):
        return len(self.rows)

    def frame(self, timing=False):
        df = pandas.DataFrame(self.rows, columns=COLUMNS[self.kind])
        if timing:
            df['wall_time'] = self.wall_time + [None] * (len(df) - len(self.wall_time))
        return df

    def summary(self):
        lines = ['%s, master seed %s, %d rows' % (self.kind, self.seed, len(self.rows))]
        if self.kind == 'scan-n':
            for row in self.rows:
                lines.append('  n=%d N=%d success %d/%d (>= %.3f needed)'
                             % (row['n'], row['N'], row['successes'], row['trials'],
                                1 - row['delta'] - row['band']))
        if self.wall_time:
            lines.append('  wall time %.2f s' % sum(self.wall_time))
        if self.violations:
            lines.append('  %d certified bound violations' % self.violations)
        return '\n'.join(lines)


def _learner(cell, model, C):
    algo = getattr(cell, 'algo', 'bh')
    N = getattr(cell, 'N', None)
    if algo == 'bh':
        return lambda o, keys: learn.learn_bh(o, cell.n, cell.d, cell.eps, cell.delta, model, keys, N)
    elif algo == 'lmn':
        return lambda o, keys: learn.learn_lmn(o, cell.n, cell.d, cell.eps, cell.delta, keys, N)
    return lambda o, keys: learn.learn_auto(o, cell.n, cell.d, cell.eps, cell.delta, model, C, keys, N)


def run_learning_cell(cell, trials, seed, target='random', model=None, C=None, threads=None, samples_out=None):
    """
    Runs :code:`trials` seeded learning trials of one cell against exact ground truth.
    A trial succeeds if the squared L2 error is below eps. With :code:`samples_out`
    the samples of trial 0 are written there as CSV.

    :returns: tuple (row dict, list of per-trial dicts)
    """
    if trials < 1:
        raise ValueError('need at least one trial, got %s' % trials)
    N = getattr(cell, 'N', None)
    if N is not None and N < 1:
        raise ValueError('sample count override must be at least 1, got %s' % N)
    if target.strip() == 'random' and cell.n > repo.settings.n_max:
        raise ValueError('random targets need n <= %d; use character or sparse targets' % repo.settings.n_max)
    fixed = zoo.target_from_spec(target, cell.n, cell.d, (seed, cell.index)) \
        if zoo.is_fixed_target(target) else None
    run = _learner(cell, model, C)

    def job(trial):
        keys = (seed, cell.index, trial)
        oracle = fixed.clone() if fixed is not None else zoo.target_from_spec(target, cell.n, cell.d, keys + (1,))
        h, info = run(oracle, keys + (0,))
        if trial == 0 and samples_out is not None:
            i_o.write_samples(info.samples, samples_out)
        error = cube.l2_squared_distance(h, oracle.truth)
        return {'trial': trial, 'N': info.N, 'b': info.b, 'a': info.a, 'support_size': info.support_size,
                'queries_used': info.queries_used, 'l2_sq_error': error, 'success': bool(error < cell.eps),
                'good_event': learn.good_event(info.spectrum, oracle.truth, info.b) if info.b is not None else None}

    start = time.perf_counter()
    records = repo.run_shares(job, range(trials), threads)
    elapsed = time.perf_counter() - start

    successes = sum(r['success'] for r in records)
    row = {'n': cell.n, 'd': cell.d, 'eps': cell.eps, 'delta': cell.delta, 'algo': getattr(cell, 'algo', 'bh'),
           'N': records[0]['N'], 'trials': trials, 'successes': successes, 'success_rate': successes / trials,
           'band': band(cell.delta, trials),
           'mean_sq_error': math.fsum(r['l2_sq_error'] for r in records) / trials,
           'mean_support': sum(r['support_size'] for r in records) / trials,
           'mean_queries': sum(r['queries_used'] for r in records) / trials,
           'wall_time': elapsed}
    LOG.info('cell %d: n=%d d=%d %s N=%d success %d/%d'
             % (cell.index, cell.n, cell.d, row['algo'], row['N'], successes, trials))
    return row, records


def learning_trials(config, threads=None, samples_out=None):
    """Per-trial report of a single learning cell."""
    cells = config.cells()
    if len(cells) != 1:
        raise ValueError('per-trial reports need a single cell, got %d' % len(cells))
    row, records = run_learning_cell(cells[0], config.trials, config.seed, config.target, config.model,
                                     config.C, threads, samples_out)
    return experiment_report('learn-trials', config.seed, records, [row['wall_time']])


def scan_log_n(d, eps, delta, n_list, algo, seed, trials=1, target='character', model=None, threads=None):
    """
    Success rates across dimensions at fixed d, eps, delta. The BH learner runs at the
    proof-form sample count, in which n enters only through ln sum_{k<=d} C(n,k).
    Beyond the dense cap only character and sparse targets are possible.
    """
    if not n_list:
        raise ValueError('empty list of dimensions')
    if algo not in ALGOS:
        raise ValueError('unknown algorithm: %s' % algo)
    model = learn.default_bh_model(d) if model is None else model
    report = experiment_report('scan-n', seed)
    for j, n in enumerate(n_list):
        learn._check_ranges(n, d, eps, delta)
        runs = learn.auto_choice(n, d, eps, delta, model) if algo == 'auto' else algo
        N = learn.theorem2_sample_count(n, d, eps, delta, model)[0] if runs == 'bh' else None
        cell = Namespace(index=j, n=n, d=d, eps=eps, delta=delta, algo=algo, N=N)
        row, _ = run_learning_cell(cell, trials, seed, target, model, None, threads)
        report.wall_time.append(row.pop('wall_time'))
        report.rows.append(row)
    if not log_growth_ok([r['n'] for r in report.rows], [r['N'] for r in report.rows], d):
        LOG.warning('sample counts grow faster than ln n over %s' % list(n_list))
    return report


def run_grid(config, threads=None):
    """One row per cell of a learning grid."""
    report = experiment_report('scan-n', config.seed)
    for cell in config.cells():
        row, _ = run_learning_cell(cell, config.trials, config.seed, config.target, config.model, config.C,
                                   threads)
        report.wall_time.append(row.pop('wall_time'))
        report.rows.append(row)
    return report


def log_growth_ok(ns, Ns, d):
    """N(n2)/N(n1) <= 1.1 ln(n2^d)/ln(n1^d) for every pair n1 < n2 with n1 >= 2"""
    pairs = sorted(zip(ns, Ns))
    for (n1, N1), (n2, N2) in itertools.combinations(pairs, 2):
        if n1 < 2 or n1 == n2:
            continue
        if N2 / N1 > 1.1 * math.log(n2) / math.log(n1) + 1e-12:
            return False
    return True


def collision_experiment(n, N, trials, seed):
    """
    Frequency of the event that all N uniform points agree on coordinates 1 and 2,
    next to its exact probability 2^-N. Only those two coordinates are drawn.

    :returns: tuple (frequency, exact)
    """
    if n < 2:
        raise ValueError('need n >= 2, got %s' % n)
    if N < 0 or trials < 1:
        raise ValueError('invalid sample count %s or trials %s' % (N, trials))
    rng = repo.generator(seed)
    chunk = max(1, (1 << 22) // max(1, 2 * N))
    hits = 0
    for start in range(0, trials, chunk):
        size = min(chunk, trials - start)
        draws = rng.integers(0, 2, size=(size, N, 2), dtype=bool)
        hits += int(np.count_nonzero(np.all(draws[:, :, 0] == draws[:, :, 1], axis=1)))
    return hits / trials, 2.0 ** -N


def indistinguishability_check(n, N, seed, budget=None):
    """
    Searches seeded draws of N points for one on which x -> x_1 and x -> x_2 give the
    same example lists.

    :returns: :class:`argparse.Namespace` with the points, both example lists, the
        attempts used and the exact separation E(r1 - r2)^2 = 2, or None
    """
    if n < 2:
        raise ValueError('need n >= 2, got %s' % n)
    if N < 0:
        raise ValueError('invalid sample count: %s' % N)
    budget = repo.settings.search_budget if budget is None else budget
    r1 = zoo.character_oracle(n, cube.subset_mask.from_indices(n, [1]))
    r2 = zoo.character_oracle(n, cube.subset_mask.from_indices(n, [2]))
    for attempt in range(budget):
        bits = repo.generator(seed, attempt).integers(0, 2, size=(N, n), dtype=bool)
        if not np.array_equal(bits[:, 0], bits[:, 1]):
            continue
        first, second = r1.query_batch(bits), r2.query_batch(bits)
        if not np.array_equal(first, second):
            raise RuntimeError('collision draw gave different examples')
        LOG.debug('witness for n=%d N=%d after %d attempts' % (n, N, attempt + 1))
        return Namespace(points=bits, examples_r1=zoo.sample_batch(bits, first),
                         examples_r2=zoo.sample_batch(bits, second), attempts=attempt + 1,
                         separation=cube.l2_squared_distance(r1.truth, r2.truth))
    return None


def collision_report(n, N, trials, seed, budget=None):
    frequency, exact = collision_experiment(n, N, trials, seed)
    witness = indistinguishability_check(n, N, seed, budget)
    row = {'n': n, 'N': N, 'trials': trials, 'seed': seed, 'frequency': frequency, 'exact': exact,
           'band': band(exact, trials), 'witness_found': witness is not None,
           'witness_attempts': witness.attempts if witness is not None else None}
    return experiment_report('collision', seed, [row])


def _audit_one(n, d, kappa, oracle):
    c, f = oracle.truth, oracle.table
    top = cube.linf_norm(f)
    ratio = growth.bh_ratio(c, f)
    dd = max(1, cube.degree(c))
    linf, l1 = growth.level_norms(c)
    linf = np.pad(linf, (0, d - len(linf)))
    l1 = np.pad(l1, (0, d - len(l1)))

    markov = np.array([growth.markov_level_bound(d, k) for k in range(1, d + 1)]) * top - linf
    weak = np.array([growth.weak_level_bound(d, k) for k in range(1, d + 1)]) * top - linf
    l1_slack = np.array([growth.level_l1_bound(n, d, k, kappa) for k in range(1, d + 1)]) * top - l1
    prior = np.array([growth.prior_level_l1_bound(n, d, k) for k in range(1, d + 1)]) * top - l1

    # the level-1 l1 sum is the sup norm of the linear part
    violations = int(np.sum(markov < -CERTIFIED_TOL) + np.sum(weak < -CERTIFIED_TOL)) \
                 + int(l1_slack[0] < -CERTIFIED_TOL) + int(dd == 1 and ratio > 1 + CERTIFIED_TOL)
    return {'degree': cube.degree(c), 'bh_ratio': ratio,
            'bh_bound': 1.0 if dd == 1 else growth.dmp_constant_bound(dd, kappa),
            'markov_slack': float(markov.min()), 'weak_slack': float(weak.min()),
            'l1_slack': float(l1_slack.min()), 'prior_l1_slack': float(prior.min()),
            'certified_violations': violations}


def bounds_audit(n, d, count, seed, corpus='random', kappa=None, law='uniform', threads=None):
    """
    Audits the growth bounds over :code:`count` functions of degree <= d drawn from a
    corpus spec (see :func:`zoo.target_from_spec`). Slacks are bound minus observed
    value, minimized over the levels. The level bounds, the level-1 l1 bound and the
    d = 1 BH constant are certified; the rest is recorded.
    """
    if not 1 <= d <= n:
        raise ValueError('need 1 <= d <= n, got d=%s n=%s' % (d, n))
    if count < 1:
        raise ValueError('need at least one function, got %s' % count)
    cube._check_cap(n)
    kappa = repo.settings.kappa if kappa is None else kappa

    def job(j):
        if corpus == 'random':
            oracle = zoo.random_bounded_low_degree(n, d, (seed, 0, j), law)
        else:
            oracle = zoo.target_from_spec(corpus, n, d, (seed, 0, j))
        row = {'function': j}
        row.update(_audit_one(n, d, kappa, oracle))
        return row

    start = time.perf_counter()
    report = experiment_report('bounds-audit', seed, repo.run_shares(job, range(count), threads),
                               [time.perf_counter() - start])
    report.violations = sum(row['certified_violations'] for row in report.rows)
    if report.violations:
        LOG.error('%d certified bound violations in %d functions' % (report.violations, count))
    return report


def bh_estimate_report(n, d, trials, seed, law='uniform', threads=None):
    start = time.perf_counter()
    best = growth.estimate_bh_constant(n, d, trials, seed, law, threads)
    row = {'n': n, 'd': d, 'trials': trials, 'seed': seed, 'max_ratio': best}
    return experiment_report('bh-estimate', seed, [row], [time.perf_counter() - start])
