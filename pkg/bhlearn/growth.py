# 2026 bhlearn developers

"""
Fourier-growth quantities of bounded low-degree functions and their numerical audit:
the Bohnenblust-Hille exponent and constant models, Chebyshev-Markov level bounds,
the weak level bound d^l/l! and the level-l1 bounds. All logarithms are natural.
"""

import functools
import logging
import math
from fractions import Fraction

import numpy as np
from scipy.special import comb, gammaln

from bhlearn import repo, cube, zoo

LOG = logging.getLogger(__name__)


class cheby_poly:
    """
    Chebyshev polynomial of the first kind in the monomial basis, with exact integer
    coefficients in ascending powers.
    """

    def __init__(self, d, coefficients):
        if d < 0:
            raise ValueError('invalid degree: %s' % d)
        coefficients = tuple(coefficients)
        if len(coefficients) != d + 1 or not all(isinstance(c, int) for c in coefficients):
            raise ValueError('T_%d needs %d integer coefficients' % (d, d + 1))
        # T_d = 2t T_{d-1} - T_{d-2}
        if coefficients != _recurrence(d):
            raise ValueError('coefficients are not those of T_%d' % d)
        self.d = d
        self.coefficients = coefficients

    def __repr__(self):
        return 'cheby_poly(%d, %s)' % (self.d, list(self.coefficients))

    def __eq__(self, other):
        return isinstance(other, cheby_poly) and self.coefficients == other.coefficients

    def coefficient(self, power):
        return self.coefficients[power] if 0 <= power <= self.d else 0

    def evaluate(self, t):
        """Exact evaluation at the float t = p/q, rounded once at the end."""
        p, q = float(t).as_integer_ratio()
        num = sum(c * p ** k * q ** (self.d - k) for k, c in enumerate(self.coefficients) if c)
        return num / q ** self.d

    def derivative_at_zero(self, order):
        """T_d^(l)(0) = l! times the coefficient of t^l"""
        return math.factorial(order) * self.coefficient(order)


@functools.lru_cache(maxsize=64)
def _recurrence(d):
    """Coefficients of T_d through T_{k+1} = 2t T_k - T_{k-1} in exact integer arithmetic."""
    prev, cur = (1,), (0, 1)
    if d == 0:
        return prev
    for _ in range(d - 1):
        nxt = [0] + [2 * c for c in cur]
        for k, c in enumerate(prev):
            nxt[k] -= c
        prev, cur = cur, tuple(nxt)
    return cur


def chebyshev(d):
    """T_d as a :class:`cheby_poly`"""
    if d < 0:
        raise ValueError('invalid degree: %s' % d)
    return cheby_poly(d, _recurrence(d))


def _check_level(d, level):
    if not 1 <= level <= d:
        raise ValueError('level %s outside 1..%s' % (level, d))


def markov_level_bound(d, level):
    """
    Bound on ||Rad_l f||_inf / ||f||_inf for degree-d f: |coefficient of t^l| in T_d if
    d - l is even, else in T_{d-1}.
    """
    _check_level(d, level)
    poly = chebyshev(d if (d - level) % 2 == 0 else d - 1)
    return float(abs(poly.coefficient(level)))


def weak_level_bound(d, level):
    """d^l / l!"""
    _check_level(d, level)
    return float(Fraction(d ** level, math.factorial(level)))


def bh_exponent(d):
    if d < 1:
        raise ValueError('invalid degree: %s' % d)
    return 2 * d / (d + 1)


def dmp_constant_bound(d, kappa):
    """exp(kappa sqrt(d ln d)), which is 1 at d = 1"""
    if d < 1:
        raise ValueError('invalid degree: %s' % d)
    if kappa < 0:
        raise ValueError('kappa must be non-negative, got %s' % kappa)
    return math.exp(kappa * math.sqrt(d * math.log(d)))


class bh_model:
    """
    A model of the constant B_d: :code:`unit` (1 for all d), :code:`dmp:<kappa>`
    (exp(kappa sqrt(d ln d))) or :code:`explicit:<value>` (a fixed value >= 1).
    """
    KINDS = ('unit', 'dmp', 'explicit')

    def __init__(self, kind='unit', value=None):
        if kind not in self.KINDS:
            raise ValueError('unknown BH constant model: %s' % kind)
        if kind == 'unit':
            value = 1.0
        elif kind == 'dmp':
            value = repo.settings.kappa if value is None else float(value)
            if not value > 0:
                raise ValueError('kappa must be positive, got %s' % value)
        else:
            value = float(value)
            if not value >= 1:
                raise ValueError('an explicit BH constant must be at least 1, got %s' % value)
        self.kind = kind
        self.value = value

    @classmethod
    def parse(cls, text):
        kind, _, value = text.strip().partition(':')
        if kind == 'unit' and value or kind == 'explicit' and not value:
            raise ValueError('invalid BH constant model: %s' % text)
        try:
            return cls(kind, float(value) if value else None)
        except ValueError as ex:
            raise ValueError('invalid BH constant model: %s (%s)' % (text, ex))

    def __call__(self, d):
        if d < 1:
            raise ValueError('invalid degree: %s' % d)
        if self.kind == 'dmp':
            return dmp_constant_bound(d, self.value)
        return self.value

    def __eq__(self, other):
        return isinstance(other, bh_model) and (self.kind, self.value) == (other.kind, other.value)

    def __str__(self):
        return self.kind if self.kind == 'unit' else '%s:%s' % (self.kind, repr(self.value))

    __repr__ = __str__


def bh_ratio(c, f):
    """
    (sum_S |c(S)|^(2d/(d+1)))^((d+1)/(2d)) / ||f||_inf with d = degree(c), or 1 if
    that is 0.
    """
    if c.n != f.n:
        raise ValueError('dimension mismatch: %d != %d' % (c.n, f.n))
    top = cube.linf_norm(f)
    if top == 0:
        raise ZeroDivisionError('BH ratio of the zero function')
    d = max(1, cube.degree(c))
    return cube.lp_fourier_norm(c, bh_exponent(d)) / top


def _check_l1_range(n, d, level):
    if not 1 <= level <= d <= n:
        raise ValueError('need 1 <= l <= d <= n, got l=%s d=%s n=%s' % (level, d, n))


def _log_comb(n, k):
    return math.log(comb(n, k, exact=True))


def level_l1_bound(n, d, level, kappa):
    """C(n,l)^((l-1)/(2l)) exp(kappa sqrt(l ln l)) d^l / l!, computed in logs"""
    _check_l1_range(n, d, level)
    log_bound = (level - 1) / (2 * level) * _log_comb(n, level) \
                + kappa * math.sqrt(level * math.log(level)) \
                + level * math.log(d) - gammaln(level + 1)
    return math.exp(log_bound)


def prior_level_l1_bound(n, d, level):
    """The earlier level-l1 bound n^((l-1)/2) d^l e^(C(l+1,2))"""
    _check_l1_range(n, d, level)
    log_bound = (level - 1) / 2 * math.log(n) + level * math.log(d) + level * (level + 1) / 2
    return math.exp(log_bound)


def level_l1_asymptotic_ok(n, d, level):
    """C(n,l) <= (ne/l)^l, the step from the binomial to the simplified level-l1 form"""
    _check_l1_range(n, d, level)
    return _log_comb(n, level) <= level * (math.log(n) + 1 - math.log(level)) + 1e-12


def technical_inequality_check(d):
    """
    Both sides of (d+1)^(-d/(d+1)) + (2+sqrt(d+1))^(2/(d+1)) <= (e^4 (d+1))^(1/(d+1)),
    evaluated through logarithms.
    """
    if d < 1:
        raise ValueError('invalid degree: %s' % d)
    lhs = math.exp(-d / (d + 1) * math.log(d + 1)) \
          + math.exp(2 / (d + 1) * math.log(2 + math.sqrt(d + 1)))
    rhs = math.exp((4 + math.log(d + 1)) / (d + 1))
    return lhs, rhs


def _random_ratio(n, d, law):
    def job(keys):
        oracle = zoo.random_bounded_low_degree(n, d, keys, law)
        return bh_ratio(oracle.truth, oracle.table)

    return job


def estimate_bh_constant(n, d, trials, rng_seed, law='uniform', threads=None):
    """
    Empirical lower bound on B_d: the largest BH ratio over :code:`trials` random
    bounded degree-d functions, and at least 1 from any character.
    """
    if d < 1 or d > n:
        raise ValueError('need 1 <= d <= n, got d=%s n=%s' % (d, n))
    if trials < 0:
        raise ValueError('invalid number of trials: %s' % trials)
    cube._check_cap(n)
    ratios = repo.run_shares(_random_ratio(n, d, law), [(rng_seed, 0, t) for t in range(trials)], threads)
    best = max([1.0] + ratios)
    LOG.debug('BH constant estimate n=%d d=%d over %d trials: %f' % (n, d, trials, best))
    return best


def level_norms(c):
    """||Rad_l c||_inf and sum_{|S|=l} |c(S)| for l = 1..degree(c), as arrays."""
    top = cube.degree(c)
    linf, l1 = np.zeros(top), np.zeros(top)
    for level in range(1, top + 1):
        part = cube.rademacher_projection(c, level)
        linf[level - 1] = cube.linf_norm(cube.to_truth_table(part)) if len(part) else 0.0
        l1[level - 1] = math.fsum(abs(v) for v in part.values())
    return linf, l1
