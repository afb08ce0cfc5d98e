import math

import pytest
from hypothesis import given, settings, strategies as st

from harmonia.exactq import Variant
from harmonia.harmonic import (even_recurrence_residual, genfun_even, genfun_odd, h_integral,
                               h_value, h_zero_check, theorem3_integral, theorem4_integral)
from harmonia.oracle import direct_harmonic, harmonic_real

VARIANTS = list(Variant)


def test_second_order_at_two():
    assert abs(h_value(2, 2) - 1.25) <= 1e-12


@pytest.mark.parametrize("variant", VARIANTS)
def test_first_order_at_one(variant):
    assert abs(h_value(1, 1, variant) - 1.0) <= 1e-12


def test_eval_record_carries_quadrature_result():
    ev = h_integral(3, 7, Variant.COS_2PI_K)
    assert ev.k == 3 and ev.n == 7 and ev.variant is Variant.COS_2PI_K
    assert ev.quad.converged and ev.quad.err_estimate < 1e-9


def test_non_integer_n_is_evaluated_but_not_claimed():
    # measured only: the representation is not asserted to equal gamma + psi(n + 1)
    value = h_value(1, 0.5)
    continuation = harmonic_real(0.5).value
    assert math.isfinite(value)
    assert abs(continuation - (2 - 2 * math.log(2))) <= 1e-10


@pytest.mark.parametrize("n", [1, 7, 30])
def test_zeroth_order_vanishes_at_integers(n):
    assert h_zero_check(n) <= 1e-9


def test_zeroth_order_at_non_integer_is_finite():
    assert math.isfinite(h_value(0, 1.5))
    with pytest.raises(ValueError):
        h_zero_check(1.5)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(VARIANTS), st.integers(1, 6), st.integers(1, 30))
def test_integer_consistency(variant, k, n):
    assert abs(h_value(k, n, variant) - float(direct_harmonic(k, n))) <= 1e-8


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.integers(1, 30))
def test_variants_agree(k, n):
    a, b, c = (h_value(k, n, v) for v in VARIANTS)
    assert abs(a - b) <= 1e-8 and abs(b - c) <= 1e-8 and abs(a - c) <= 1e-8


@pytest.mark.parametrize("k, n", [(1, 500), (2, 500), (5, 321)])
def test_large_n(k, n):
    assert abs(h_value(k, n) - float(direct_harmonic(k, n))) <= 1e-8


@pytest.mark.parametrize("k", [1, 3, 5])
def test_odd_orders_accept_non_integer_n_in_cot_forms(k):
    assert math.isfinite(h_value(k, 2.5, Variant.SIN_2PI_K))
    assert math.isfinite(h_value(k, 2.5, Variant.COS_2PI_K))


def test_unsupported_combinations_raise():
    with pytest.raises(ValueError):
        h_value(0, 3, Variant.COS_2PI_K)
    with pytest.raises(ValueError):
        h_value(2, 2.5, Variant.SIN_2PI_K)
    with pytest.raises(ValueError):
        h_value(-1, 3)
    with pytest.raises(ValueError):
        h_value(2, 0)


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 7, 13, 20])
def test_even_recurrence_residual(k, n):
    assert even_recurrence_residual(k, n) <= 1e-7


# --- generating functions

def _series(n, x, start):
    # |x| <= 0.9: 600 terms leave a tail below 1e-25
    return math.fsum(math.fsum(i**-j for i in range(1, n + 1)) * x**j
                     for j in range(start, 600, 2))


def test_even_generating_function_at_two():
    x = 0.1
    expected = 5 * x**2 / 4 + 17 * x**4 / 16 + 65 * x**6 / 64 + 257 * x**8 / 256
    assert abs(genfun_even(2, x) - _series(2, x, 2)) <= 1e-8
    assert abs(genfun_even(2, x) - expected) <= 2e-10


def test_odd_generating_function_at_two():
    x = 0.1
    expected = 3 * x / 2 + 9 * x**3 / 8 + 33 * x**5 / 32 + 129 * x**7 / 128
    assert abs(genfun_odd(2, x) - _series(2, x, 1)) <= 1e-8
    assert abs(genfun_odd(2, x) - expected) <= 2e-9


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 12), st.floats(-0.9, 0.9))
def test_generating_functions_match_series(n, x):
    assert abs(genfun_even(n, x) - _series(n, x, 2)) <= 1e-8
    assert abs(genfun_odd(n, x) - _series(n, x, 1)) <= 1e-8


def test_generating_functions_at_origin():
    # the series has no constant term because H_0(n) = 0
    assert abs(genfun_even(1, 0.0)) <= 1e-12
    assert genfun_odd(1, 0.0) == 0.0


def test_generating_function_domain():
    with pytest.raises(ValueError):
        genfun_even(2, 1.0)
    with pytest.raises(ZeroDivisionError):
        genfun_odd(0.5, 0.5)


# --- limit integrals

@pytest.mark.parametrize("k", range(4))
def test_theorem3_near_limit(k):
    assert abs(theorem3_integral(k, 100) - 1) <= 0.05


def test_theorem4_near_limits():
    assert abs(theorem4_integral(0, 100) + 1) <= 0.05
    assert abs(theorem4_integral(2, 100) + 0.5) <= 0.05
    assert abs(theorem4_integral(1, 100, odd=True) + 0.5) <= 0.05
    with pytest.raises(ValueError):
        theorem4_integral(0, 2.5)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_theorem3_error_shrinks_as_n_doubles(k):
    errs = [abs(theorem3_integral(k, n) - 1) for n in (25, 50, 100, 200)]
    for a, b in zip(errs, errs[1:]):
        assert b <= a / 1.5


def test_even_order_tends_to_zeta():
    target = math.pi**4 / 90
    errs = [abs(h_value(4, n) - target) for n in (25, 50, 100, 200)]
    assert errs[-1] <= 2e-3
    assert all(b < a for a, b in zip(errs, errs[1:]))
