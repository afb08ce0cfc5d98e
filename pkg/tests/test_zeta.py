import math

import pytest
from hypothesis import given, settings, strategies as st

from harmonia.exactq import zeta_even_exact
from harmonia.oracle import digamma, euler_gamma, euler_sum_brute, zeta_series
from harmonia.zeta import (ZetaRepresentation, euler_sum_even_orders, euler_sum_odd_orders,
                           zeta_genfun_even, zeta_genfun_odd, zeta_odd)

# direct-series oracle values, frozen
ZETA3 = 1.2020569031595942
ZETA5 = 1.0369277551433699
ZETA7 = 1.0083492773819228
REPS = list(ZetaRepresentation)


def test_frozen_oracles():
    for s, v in ((3, ZETA3), (5, ZETA5), (7, ZETA7)):
        assert abs(zeta_series(s).value - v) <= 1e-15


@pytest.mark.parametrize("rep", REPS)
@pytest.mark.parametrize("k, expected", [(1, ZETA3), (2, ZETA5), (3, ZETA7)])
def test_odd_zeta(rep, k, expected):
    assert abs(zeta_odd(k, rep) - expected) <= 1e-9


@pytest.mark.parametrize("k", range(1, 8))
def test_representations_agree(k):
    vals = [zeta_odd(k, rep) for rep in REPS]
    assert max(vals) - min(vals) <= 1e-8
    assert abs(vals[0] - zeta_series(2 * k + 1).value) <= 1e-9


def test_odd_zeta_rejects_k0():
    with pytest.raises(ValueError):
        zeta_odd(0)


# --- generating functions

def _even_series(x):
    return math.fsum(float(zeta_even_exact(k)) * math.pi ** (2 * k) * x ** (2 * k)
                     for k in range(1, 200))


def _odd_series(x):
    return math.fsum(zeta_series(2 * k + 1, 2000).value * x ** (2 * k + 1) for k in range(1, 200))


def test_even_generating_function():
    assert zeta_genfun_even(0.5) == pytest.approx(0.5, abs=1e-15)
    assert zeta_genfun_even(0.0) == 0.0
    assert abs(zeta_genfun_even(0.25) - _even_series(0.25)) <= 1e-12
    with pytest.raises(ValueError):
        zeta_genfun_even(1.0)


@pytest.mark.parametrize("x", [0.1, 0.25, 0.5, 0.75])
def test_generating_functions_match_series(x):
    assert abs(zeta_genfun_even(x) - _even_series(x)) <= 1e-8
    assert abs(zeta_genfun_odd(x) - _odd_series(x)) <= 1e-8


def test_odd_generating_function_at_half():
    # sum zeta(2k+1) / 2^(2k+1) = ln 2 - 1/2
    assert abs(zeta_genfun_odd(0.5) - 0.19314718055994531) <= 1e-12
    assert abs(0.19314718055994531 - (math.log(2) - 0.5)) <= 1e-16


def test_odd_generating_function_limits():
    assert zeta_genfun_odd(0.0) == 0.0
    assert abs(zeta_genfun_odd(1e-6)) <= 2e-18
    with pytest.raises(ValueError):
        zeta_genfun_odd(-1.0)


@settings(max_examples=20, deadline=None)
@given(st.floats(-0.95, 0.95))
def test_odd_generating_function_is_odd(x):
    assert abs(zeta_genfun_odd(-x) + zeta_genfun_odd(x)) <= 1e-12


@pytest.mark.parametrize("x", [0.1, 0.3, 0.6])
def test_odd_generating_function_against_digamma(x):
    ref = -x * euler_gamma() - 0.5 * x * (digamma(1 + x).value + digamma(1 - x).value)
    assert abs(zeta_genfun_odd(x) - ref) <= 1e-7


# --- Euler sums

def test_first_order_over_squares_is_twice_zeta3():
    assert abs(euler_sum_odd_orders(0, 1) - 2 * ZETA3) <= 1e-8


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_zeroth_order_sums_vanish(r):
    assert abs(euler_sum_even_orders(0, r)) <= 1e-9


@pytest.mark.parametrize("k, r", [(1, 1), (1, 2), (2, 1)])
def test_even_order_sums_match_brute_force(k, r):
    assert abs(euler_sum_even_orders(k, r) - euler_sum_brute(2 * k, 2 * r + 1).value) <= 1e-6


@pytest.mark.parametrize("k, r", [(0, 2), (0, 3), (1, 1), (1, 2), (2, 1)])
def test_odd_order_sums_match_brute_force(k, r):
    assert abs(euler_sum_odd_orders(k, r) - euler_sum_brute(2 * k + 1, 2 * r).value) <= 1e-6


def test_classical_witness():
    # sum H(n) / n^4 = 3 zeta(5) - zeta(2) zeta(3)
    assert abs(euler_sum_odd_orders(0, 2) - (3 * ZETA5 - math.pi**2 / 6 * ZETA3)) <= 1e-9
    # pi^4 / 72 belongs to the cube denominator
    assert abs(euler_sum_brute(1, 3).value - math.pi**4 / 72) <= 1e-12


def test_euler_sum_argument_checks():
    with pytest.raises(ValueError):
        euler_sum_even_orders(1, 0)
    with pytest.raises(ValueError):
        euler_sum_odd_orders(-1, 1)
