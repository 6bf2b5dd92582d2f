# 2026 bhlearn developers

import math

import numpy as np
from hypothesis import given, settings
from hypothesis.strategies import integers
from pytest import mark, raises, approx

from bhlearn import cube, growth, zoo


@mark.parametrize('d, coefficients', [
    (0, [1]),
    (1, [0, 1]),
    (2, [-1, 0, 2]),
    (3, [0, -3, 0, 4]),
    (4, [1, 0, -8, 0, 8]),
])
def test_chebyshev(d, coefficients):
    assert list(growth.chebyshev(d).coefficients) == coefficients


def test_chebyshev_checks():
    with raises(ValueError):
        growth.chebyshev(-1)
    with raises(ValueError):
        growth.cheby_poly(2, [1, 0, 2])
    with raises(ValueError):
        growth.cheby_poly(2, [-1, 0])
    # wide integers, no overflow
    assert growth.chebyshev(200).coefficients[-1] == 2 ** 199


@mark.parametrize('d, coefficients', [
    (4, [3, 0, -10, 0, 8]),
    (6, [-1, 0, 20, 0, -50, 0, 32]),
])
def test_chebyshev_rejects_off_recurrence(d, coefficients):
    # same endpoint values, parity and leading coefficient as T_d
    with raises(ValueError):
        growth.cheby_poly(d, coefficients)


def test_chebyshev_recurrence():
    for d in range(2, 40):
        t2, t1, t0 = (growth.chebyshev(k) for k in (d, d - 1, d - 2))
        for k in range(d + 1):
            assert t2.coefficient(k) == 2 * t1.coefficient(k - 1) - t0.coefficient(k)
    assert growth.cheby_poly(4, [1, 0, -8, 0, 8]) == growth.chebyshev(4)


@mark.parametrize('d', range(31))
def test_chebyshev_cosine_identity(d):
    poly = growth.chebyshev(d)
    theta = np.linspace(0, math.pi, 1000)
    worst = max(abs(poly.evaluate(math.cos(t)) - math.cos(d * t)) for t in theta.tolist())
    assert worst <= 1e-9


def test_derivative_at_zero():
    poly = growth.chebyshev(4)
    assert poly.derivative_at_zero(4) == 8 * 24
    assert poly.derivative_at_zero(2) == -16
    assert poly.derivative_at_zero(1) == 0


@mark.parametrize('d, level, expected', [
    (3, 1, 3.0),
    (2, 1, 1.0),
    (4, 4, 8.0),
    (1, 1, 1.0),
])
def test_markov_level_bound(d, level, expected):
    assert growth.markov_level_bound(d, level) == expected


@mark.parametrize('d, level, expected', [(3, 2, 4.5), (1, 1, 1.0), (4, 1, 4.0)])
def test_weak_level_bound(d, level, expected):
    assert growth.weak_level_bound(d, level) == expected


def test_level_ranges():
    for bound in (growth.markov_level_bound, growth.weak_level_bound):
        with raises(ValueError):
            bound(3, 0)
        with raises(ValueError):
            bound(3, 4)


def test_markov_below_weak():
    for d in range(1, 21):
        for level in range(1, d + 1):
            assert growth.markov_level_bound(d, level) <= growth.weak_level_bound(d, level)


def test_bh_exponent():
    assert growth.bh_exponent(1) == 1
    assert growth.bh_exponent(3) == 1.5
    values = [growth.bh_exponent(d) for d in (1, 2, 10, 1000, 10 ** 6)]
    assert values == sorted(values) and values[-1] < 2
    with raises(ValueError):
        growth.bh_exponent(0)


def test_dmp_constant_bound():
    assert growth.dmp_constant_bound(1, 3.0) == 1
    assert growth.dmp_constant_bound(2, 1.0) == approx(math.exp(math.sqrt(2 * math.log(2))))
    assert growth.dmp_constant_bound(2, 1.0) == approx(3.25, abs=5e-3)
    assert all(growth.dmp_constant_bound(d, 0) == 1 for d in range(1, 50))
    with raises(ValueError):
        growth.dmp_constant_bound(0, 1.0)


def test_bh_model():
    assert growth.bh_model.parse('unit')(7) == 1
    assert growth.bh_model.parse('explicit:2.5')(3) == 2.5
    assert growth.bh_model.parse('dmp:1')(2) == growth.dmp_constant_bound(2, 1.0)
    assert growth.bh_model.parse('dmp:0.5')(1) == 1
    assert str(growth.bh_model.parse('dmp:0.5')) == 'dmp:0.5'
    for text in ('explicit:0.5', 'dmp:-1', 'dmp:x', 'unit:3', 'explicit', 'cubic:2'):
        with raises(ValueError):
            growth.bh_model.parse(text)


def test_bh_ratio_of_characters():
    for bits in (1, 0b11, 0b1011):
        c = cube.coeff_map(4, {bits: 1.0})
        assert growth.bh_ratio(c, cube.to_truth_table(c)) == approx(1.0, abs=1e-15)


def test_bh_ratio_zero_function():
    with raises(ZeroDivisionError):
        growth.bh_ratio(cube.coeff_map(3), cube.truth_table(3, np.zeros(8)))


@settings(max_examples=30, deadline=None)
@given(integers(min_value=1, max_value=10), integers(min_value=0, max_value=2 ** 32))
def test_bh_ratio_degree_one_certified(n, seed):
    oracle = zoo.random_bounded_low_degree(n, 1, seed)
    c = oracle.truth
    # the sup of an affine function sits at x_i = sign(c({i})) or its negation
    signs = [1.0 if c[1 << i] >= 0 else -1.0 for i in range(n)]
    x = cube.point_mask.from_signs([int(s) for s in signs])
    top = max(abs(cube.evaluate_expansion(c, x)),
              abs(cube.evaluate_expansion(c, cube.point_mask.from_signs([-int(s) for s in signs]))))
    assert sum(abs(v) for v in c.values()) <= top + 1e-9
    assert growth.bh_ratio(c, oracle.table) <= 1 + 1e-9


@mark.parametrize('n, d, level', [(5, 3, 1), (9, 1, 1), (20, 7, 1)])
def test_level_l1_bound_level_one(n, d, level):
    assert growth.level_l1_bound(n, d, level, 1.0) == approx(d, rel=1e-12)


def test_level_l1_bound_value():
    expected = 6 ** 0.25 * math.exp(math.sqrt(2 * math.log(2))) * 2
    assert growth.level_l1_bound(4, 2, 2, 1.0) == approx(expected, rel=1e-12)
    assert expected == approx(10.17, abs=0.01)
    with raises(ValueError):
        growth.level_l1_bound(4, 5, 2, 1.0)


@settings(max_examples=30, deadline=None)
@given(integers(min_value=3, max_value=10), integers(min_value=1, max_value=3),
       integers(min_value=0, max_value=2 ** 32))
def test_level_l1_bound_holds(n, d, seed):
    c = zoo.random_bounded_low_degree(n, d, seed).truth
    _, l1 = growth.level_norms(c)
    for level in range(1, len(l1) + 1):
        assert l1[level - 1] <= growth.level_l1_bound(n, d, level, 1.0) + 1e-9


def test_prior_bound_and_binomial_step():
    assert growth.prior_level_l1_bound(10, 3, 2) == approx(10 ** 0.5 * 9 * math.exp(3))
    for n in (3, 10, 100):
        for level in range(1, 4):
            assert growth.level_l1_asymptotic_ok(n, 3, level)


@mark.parametrize('d', [1, 3])
def test_technical_inequality_examples(d):
    lhs, rhs = growth.technical_inequality_check(d)
    assert lhs <= rhs
    if d == 1:
        assert lhs == approx(4.121, abs=1e-3)
        assert rhs == approx(10.45, abs=1e-2)


def test_technical_inequality_grid():
    for d in list(range(1, 1001)) + [10 ** 4, 10 ** 5, 10 ** 6]:
        lhs, rhs = growth.technical_inequality_check(d)
        assert lhs <= rhs, d


@settings(max_examples=10, deadline=None)
@given(integers(min_value=2, max_value=9), integers(min_value=1, max_value=4),
       integers(min_value=0, max_value=2 ** 32))
def test_level_infinity_bound(n, d, seed):
    d = min(d, n)
    oracle = zoo.random_bounded_low_degree(n, d, seed)
    linf, _ = growth.level_norms(oracle.truth)
    top = cube.linf_norm(oracle.table)
    for level in range(1, len(linf) + 1):
        assert linf[level - 1] <= growth.markov_level_bound(d, level) * top + 1e-9


def test_estimate_bh_constant():
    assert growth.estimate_bh_constant(6, 1, 0, 1) == 1
    assert growth.estimate_bh_constant(7, 1, 40, 3) == approx(1.0, abs=1e-9)
    first = growth.estimate_bh_constant(6, 2, 30, 42, threads=1)
    assert first >= 1
    assert growth.estimate_bh_constant(6, 2, 30, 42, threads=3) == first


def test_bh_inequality_dmp_never_violated():
    for d in (2, 3):
        ratio = growth.estimate_bh_constant(8, d, 50, d)
        assert ratio <= growth.dmp_constant_bound(d, 1.0)


@mark.slow
def test_bh_ratio_degree_one_corpus():
    n = 10
    for k in range(1000):
        oracle = zoo.random_bounded_low_degree(n, 1, (n, k))
        c = oracle.truth
        x = cube.point_mask.from_signs([1 if c[1 << i] >= 0 else -1 for i in range(n)])
        top = max(abs(c[0] + s * (cube.evaluate_expansion(c, x) - c[0])) for s in (1, -1))
        assert sum(abs(v) for v in c.values()) <= top + 1e-9
        assert top == approx(cube.linf_norm(oracle.table), abs=1e-12)
        assert growth.bh_ratio(c, oracle.table) <= 1 + 1e-9
