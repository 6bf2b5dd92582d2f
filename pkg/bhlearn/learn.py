# 2026 bhlearn developers

"""
Learning bounded low-degree functions from uniformly random examples.

:func:`learn_bh` estimates every Fourier coefficient of level at most d from N_b
samples, keeps those with magnitude at least a = b(1 + sqrt(d+1)) and returns their
sum. The tolerance b is chosen so that the squared L2 error stays below eps whenever
all estimates lie within b of the truth, which happens with probability at least
1 - delta. N_b then grows only with ln n. :func:`learn_lmn` is the classical
low-degree algorithm, which keeps every estimate, and :func:`learn_auto` runs the
cheaper of the two.
"""

import logging
import math
from argparse import Namespace

import numpy as np
from scipy.special import comb

from bhlearn import repo, cube, zoo
from bhlearn.growth import bh_model, bh_exponent

LOG = logging.getLogger(__name__)


def _check_unit(name, value):
    if not 0 < value < 1:
        raise ValueError('%s must lie in (0,1), got %s' % (name, value))


class learn_params:
    """
    All tunables of a learning run. :code:`b` and :code:`a` are None for the
    thresholdless algorithm.
    """

    def __init__(self, n, d, eps, delta, N, b=None, a=None, model=None):
        _check_unit('eps', eps)
        _check_unit('delta', delta)
        if not 1 <= d <= n:
            raise ValueError('need 1 <= d <= n, got d=%s n=%s' % (d, n))
        if N < 1:
            raise ValueError('sample count must be at least 1, got %s' % N)
        if b is not None and not 0 < b < a:
            raise ValueError('need 0 < b < a, got b=%s a=%s' % (b, a))
        self.n, self.d, self.eps, self.delta = n, d, eps, delta
        self.N, self.b, self.a, self.model = N, b, a, model

    def __repr__(self):
        return 'learn_params(%s)' % ', '.join('%s=%s' % kv for kv in vars(self).items())


def default_bh_model(d, kappa=None):
    """The certified constant 1 for d = 1, the heuristic exp(kappa sqrt(d ln d)) above."""
    return bh_model('explicit', 1.0) if d == 1 else bh_model('dmp', kappa)


def low_subset_count(n, d):
    """sum_{k<=d} C(n, k), exact"""
    if not 0 <= d <= n:
        raise ValueError('need 0 <= d <= n, got d=%s n=%s' % (d, n))
    return sum(comb(n, k, exact=True) for k in range(d + 1))


def low_subset_count_bound(n, d):
    """(en/d)^d, the elementary upper bound on :func:`low_subset_count`"""
    if not 0 <= d <= n:
        raise ValueError('need 0 <= d <= n, got d=%s n=%s' % (d, n))
    return 1.0 if d == 0 else math.exp(d * (1 + math.log(n) - math.log(d)))


def _colex(n, k):
    """k-subsets of range(n) as increasing tuples, in increasing mask order"""
    if k == 0:
        yield ()
        return
    for top in range(k - 1, n):
        for rest in _colex(top, k - 1):
            yield rest + (top,)


def _low_levels(n, d):
    """Per level k <= d: the (m, k) index array of all k-subsets in mask order."""
    total = low_subset_count(n, d)
    if total > repo.settings.max_subsets:
        raise OverflowError('%d subsets of size <= %d on %d coordinates exceed the budget of %d'
                            % (total, d, n, repo.settings.max_subsets))
    yield 0, np.zeros((1, 0), dtype=np.intp)
    for k in range(1, d + 1):
        yield k, np.array(list(_colex(n, k)), dtype=np.intp).reshape(-1, k)


def enumerate_low_subsets(n, d):
    """All subsets of size <= d, ordered by (size, mask)."""
    return [cube.subset_mask(n, repo.tomask(row)) for _, idx in _low_levels(n, d) for row in idx.tolist()]


class empirical_spectrum:
    """
    Estimates alpha_S of every |S| <= d, zeros retained, in (size, mask) order.

    :param subsets: packed subset ints
    :param alpha: float array aligned with :code:`subsets`
    """

    def __init__(self, n, d, subsets, alpha):
        self.n = n
        self.d = d
        self.subsets = subsets
        self.alpha = alpha
        self._index = {s: j for j, s in enumerate(subsets)}

    def __len__(self):
        return len(self.subsets)

    def __getitem__(self, key):
        return float(self.alpha[self._index[cube._bits_of(key, self.n)]])

    def __contains__(self, key):
        return cube._bits_of(key, self.n) in self._index

    def items(self):
        return zip(self.subsets, self.alpha.tolist())

    def coeffs(self):
        return cube.coeff_map(self.n, self.items())


def estimate_coefficients(samples, n, d):
    """
    alpha_S = N^-1 sum_j f(X_j) w_S(X_j) for every |S| <= d. The (N, block) sign
    matrix is built for :code:`repo.settings.block` subsets at a time.

    :param samples: :class:`zoo.sample_batch` or a list of :class:`zoo.query_sample`
    """
    if not isinstance(samples, zoo.sample_batch):
        samples = zoo.sample_batch.from_samples(samples, n)
    if len(samples) == 0:
        raise ValueError('cannot estimate coefficients from an empty sample')
    if samples.bits.shape[1] != n:
        raise ValueError('dimension mismatch: %d != %d' % (samples.bits.shape[1], n))
    N = len(samples)
    y = samples.values[:, None]
    block = max(1, repo.settings.block)

    subsets, alpha = list(), list()
    for k, idx in _low_levels(n, d):
        subsets.extend(repo.tomask(row) for row in idx.tolist())
        if k == 0:
            alpha.append(np.array([samples.values.sum()]) / N)
            continue
        for start in range(0, len(idx), block):
            odd = np.bitwise_xor.reduce(samples.bits[:, idx[start:start + block]], axis=2)
            alpha.append(((1.0 - 2.0 * odd) * y).sum(axis=0) / N)
    return empirical_spectrum(n, d, subsets, np.concatenate(alpha))


def threshold_spectrum(alpha, a):
    """{S : |alpha_S| >= a}, ties included"""
    if not a > 0:
        raise ValueError('threshold must be positive, got %s' % a)
    return {s for s, v in alpha.items() if abs(v) >= a}


def build_hypothesis(alpha, kept):
    """sum_{S in kept} alpha_S w_S"""
    kept = {cube._bits_of(s, alpha.n) for s in kept}
    if any(s not in alpha for s in kept):
        raise ValueError('kept subsets must come from the estimated spectrum')
    return cube.coeff_map(alpha.n, {s: alpha[s] for s in kept}, max_degree=alpha.d)


def _log_total(n, d, delta):
    return math.log(2 / delta) + math.log(low_subset_count(n, d))


def _ceil(log_value, what):
    if not math.isfinite(log_value) or log_value > 700:
        raise OverflowError('%s sample count does not fit into a float' % what)
    return max(1, math.ceil(math.exp(log_value)))


def sample_count_for_b(n, d, delta, b):
    """N_b = ceil((2/b^2) ln((2/delta) sum_{k<=d} C(n,k)))"""
    _check_unit('delta', delta)
    if not b > 0:
        raise ValueError('b must be positive, got %s' % b)
    value = 2 / b ** 2 * _log_total(n, d, delta)
    if not math.isfinite(value):
        raise OverflowError('sample count for b=%s is not finite' % b)
    return max(1, math.ceil(value))


def choose_b(eps, d, model):
    """b = sqrt(e^-5 d^-1 eps^(d+1) B_d^(-2d))"""
    _check_unit('eps', eps)
    if d < 1:
        raise ValueError('invalid degree: %s' % d)
    log_b2 = -5 - math.log(d) + (d + 1) * math.log(eps) - 2 * d * math.log(model(d))
    b = math.exp(log_b2 / 2)
    if b == 0:
        raise ValueError('b underflows for eps=%s d=%s B_d=%s' % (eps, d, model(d)))
    return b


def threshold_a(b, d):
    """a = b(1 + sqrt(d+1))"""
    if not b > 0:
        raise ValueError('b must be positive, got %s' % b)
    if d < 0:
        raise ValueError('invalid degree: %s' % d)
    return b * (1 + math.sqrt(d + 1))


def _check_ranges(n, d, eps, delta):
    _check_unit('eps', eps)
    _check_unit('delta', delta)
    if not 1 <= d <= n:
        raise ValueError('need 1 <= d <= n, got d=%s n=%s' % (d, n))


def theorem2_sample_count(n, d, eps, delta, model):
    """
    The dimension-free sample count, in two forms.

    :returns: tuple (proof form, statement form), where the proof form is
        ceil(e^6 d B_d^(2d) eps^-(d+1) ln((2/delta) sum_{k<=d} C(n,k))) and the
        statement form ceil(e^8 d^2 B_d^(2d) eps^-(d+1) ln(n/delta))
    """
    _check_ranges(n, d, eps, delta)
    log_B = math.log(model(d))
    core = 2 * d * log_B - (d + 1) * math.log(eps)
    proof = _ceil(6 + math.log(d) + core + math.log(_log_total(n, d, delta)), 'proof-form')
    statement = _ceil(8 + 2 * math.log(d) + core + math.log(math.log(n / delta)), 'statement-form')
    return proof, statement


def theorem1_sample_count(n, d, eps, delta, C):
    """
    min{exp(C d^(3/2) sqrt(ln d)) / eps^(d+1), 4 d n^d / eps} ln(n/delta), with the
    branches compared in logs.

    :returns: tuple (N, branch) with branch 1 for the dimension-free term
    """
    _check_ranges(n, d, eps, delta)
    log_first = C * d ** 1.5 * math.sqrt(math.log(d)) - (d + 1) * math.log(eps)
    log_second = math.log(4 * d) + d * math.log(n) - math.log(eps)
    branch = 1 if log_first <= log_second else 2
    return _ceil(min(log_first, log_second) + math.log(math.log(n / delta)), 'dimension-free'), branch


def lmn_sample_count(n, d, eps, delta):
    """ceil((2 n^d / eps) ln(2 n^d / delta))"""
    _check_unit('eps', eps)
    _check_unit('delta', delta)
    if not 0 <= d <= n:
        raise ValueError('need 0 <= d <= n, got d=%s n=%s' % (d, n))
    log_m = math.log(2) + d * math.log(n)
    return _ceil(log_m - math.log(eps) + math.log(log_m - math.log(delta)), 'low-degree')


def support_size_bound(a, b, d, B):
    """(a-b)^(-2d/(d+1)) B^(2d/(d+1)), the size of S_a on the good event"""
    if not a > b > 0:
        raise ValueError('need a > b > 0, got a=%s b=%s' % (a, b))
    p = bh_exponent(d)
    return (B / (a - b)) ** p


def hypothesis_error_bound(b, d, B):
    """B^(2d/(d+1)) b^(2/(d+1)) ((d+1)^(-d/(d+1)) + (2+sqrt(d+1))^(2/(d+1)))"""
    if not b > 0:
        raise ValueError('b must be positive, got %s' % b)
    return B ** bh_exponent(d) * b ** (2 / (d + 1)) \
           * ((d + 1) ** (-d / (d + 1)) + (2 + math.sqrt(d + 1)) ** (2 / (d + 1)))


def good_event(alpha, truth, b):
    """Whether every estimate lies within b of the true coefficient."""
    return all(abs(v - truth[s]) <= b for s, v in alpha.items())


def error_split(alpha, kept, truth):
    """
    The two sums of the Parseval error of :func:`build_hypothesis`: squared estimation
    error on the kept subsets and squared true mass outside them.
    """
    kept = {cube._bits_of(s, alpha.n) for s in kept}
    inside = math.fsum((alpha[s] - truth[s]) ** 2 for s in kept)
    outside = math.fsum(v ** 2 for s, v in truth.items() if s not in kept)
    return inside, outside


def _check_oracle(oracle, n, d):
    if oracle.n != n:
        raise ValueError('oracle dimension %d != %d' % (oracle.n, n))
    if oracle.d > d:
        raise ValueError('oracle degree %d exceeds the degree bound %d' % (oracle.d, d))


def _run(oracle, params, rng_seed, algo):
    start = oracle.count
    samples = zoo.draw_samples(oracle, params.N, rng_seed)
    alpha = estimate_coefficients(samples, params.n, params.d)
    kept = set(alpha.subsets) if params.a is None else threshold_spectrum(alpha, params.a)
    h = build_hypothesis(alpha, kept)
    info = Namespace(algo=algo, params=params, N=params.N, b=params.b, a=params.a, samples=samples,
                     support_size=len(kept), queries_used=oracle.count - start, spectrum=alpha, kept=kept)
    LOG.debug('%s: N=%d kept %d of %d coefficients' % (algo, params.N, len(kept), len(alpha)))
    return h, info


def learn_bh(oracle, n, d, eps, delta, model=None, rng_seed=0, N=None):
    """
    Thresholded estimation with b from :func:`choose_b` and a from :func:`threshold_a`.

    :param N: sample count override; N_b by default
    :returns: tuple (hypothesis, diagnostics)
    """
    _check_ranges(n, d, eps, delta)
    _check_oracle(oracle, n, d)
    model = default_bh_model(d) if model is None else model
    b = choose_b(eps, d, model)
    a = threshold_a(b, d)
    N = sample_count_for_b(n, d, delta, b) if N is None else N
    return _run(oracle, learn_params(n, d, eps, delta, N, b, a, model), rng_seed, 'bh')


def learn_lmn(oracle, n, d, eps, delta, rng_seed=0, N=None):
    """The low-degree algorithm: every estimate of level <= d is kept."""
    _check_ranges(n, d, eps, delta)
    _check_oracle(oracle, n, d)
    N = lmn_sample_count(n, d, eps, delta) if N is None else N
    return _run(oracle, learn_params(n, d, eps, delta, N), rng_seed, 'lmn')


def auto_choice(n, d, eps, delta, model=None):
    """The algorithm with the smaller sample count, 'bh' on ties."""
    model = default_bh_model(d) if model is None else model
    try:
        bh_count = sample_count_for_b(n, d, delta, choose_b(eps, d, model))
    except (ValueError, OverflowError):
        bh_count = math.inf
    try:
        lmn_count = lmn_sample_count(n, d, eps, delta)
    except OverflowError:
        lmn_count = math.inf
    return 'bh' if bh_count <= lmn_count else 'lmn'


def learn_auto(oracle, n, d, eps, delta, model=None, C=None, rng_seed=0, N=None):
    """
    Runs :func:`learn_bh` or :func:`learn_lmn`, whichever draws fewer samples. The
    branch of the dimension-free bound for constant :code:`C` is recorded as
    :code:`theorem1`.
    """
    _check_ranges(n, d, eps, delta)
    model = default_bh_model(d) if model is None else model
    C = repo.settings.C if C is None else C
    algo = auto_choice(n, d, eps, delta, model)
    if algo == 'bh':
        h, info = learn_bh(oracle, n, d, eps, delta, model, rng_seed, N)
    else:
        h, info = learn_lmn(oracle, n, d, eps, delta, rng_seed, N)
    try:
        info.theorem1 = theorem1_sample_count(n, d, eps, delta, C)
    except OverflowError:
        info.theorem1 = None
    LOG.info('auto dispatch: %s' % algo)
    return h, info


def sign_round(h):
    """The +-1 table sign(h(x)), with sign(0) = +1"""
    table = cube.to_truth_table(h)
    return cube.truth_table(h.n, np.where(table.values >= 0, 1.0, -1.0))
