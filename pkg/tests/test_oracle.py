import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from harmonia.exactq import zeta_even_exact
from harmonia.oracle import (catalan_series, digamma, direct_harmonic, direct_trig_sum,
                             euler_gamma, euler_sum_brute, harmonic_real, zeta_series)


def test_direct_harmonic_examples():
    assert direct_harmonic(1, 3) == Fraction(11, 6)
    assert direct_harmonic(2, 2) == Fraction(5, 4)
    assert direct_harmonic(0, 7) == 7
    with pytest.raises(ValueError):
        direct_harmonic(1, 0)


@settings(max_examples=50)
@given(st.integers(0, 8), st.integers(1, 200))
def test_direct_harmonic_float_agrees_with_compensated_sum(k, n):
    exact = float(direct_harmonic(k, n))
    fs = math.fsum(j**-k for j in range(1, n + 1))
    assert abs(exact - fs) <= n * math.ulp(exact)


def test_direct_trig_sum_examples():
    assert direct_trig_sum(2, 1, 2, "cos") == pytest.approx(-0.5, abs=1e-15)
    assert direct_trig_sum(4, 1, 3, "sin") == pytest.approx(2 / 3, abs=1e-15)
    assert direct_trig_sum(1, 2, 5, "sin") == pytest.approx(0.0, abs=1e-15)


def test_direct_trig_sum_accepts_enum_and_exact_phases():
    from harmonia.fourier import Trig
    assert direct_trig_sum(4, 2, 9, Trig.SIN) == direct_trig_sum(4, 2, 9, "sin")
    # sin(2 pi j / 4) over j = 1..8 cycles 1, 0, -1, 0
    assert abs(direct_trig_sum(4, 2, 8, "sin") - (1 - 1 / 9 + 1 / 25 - 1 / 49)) <= 1e-15


@pytest.mark.parametrize("k", range(1, 6))
def test_zeta_series_matches_exact_even_values(k):
    s = zeta_series(2 * k)
    exact = float(zeta_even_exact(k)) * math.pi ** (2 * k)
    assert abs(s.value - exact) <= s.tail_bound + 4 * math.ulp(exact)
    assert s.tail_bound <= 1e-12


def test_zeta_series_domain():
    with pytest.raises(ValueError):
        zeta_series(1)


def test_harmonic_real():
    assert abs(harmonic_real(1).value - 1) <= 1e-12
    assert abs(harmonic_real(0.5).value - (2 - 2 * math.log(2))) <= 1e-10
    assert abs(harmonic_real(10).value - float(direct_harmonic(1, 10))) <= 1e-12
    with pytest.raises(ValueError):
        harmonic_real(0)


def test_digamma():
    assert abs(digamma(1).value + euler_gamma()) <= 1e-12
    assert abs(digamma(0.5).value - (-euler_gamma() - 2 * math.log(2))) <= 1e-12
    with pytest.raises(ValueError):
        digamma(-0.5)


@settings(max_examples=30, deadline=None)
@given(st.floats(0.05, 30))
def test_digamma_recurrence(x):
    # psi(x + 1) = psi(x) + 1/x
    assert abs(digamma(x + 1).value - digamma(x).value - 1 / x) <= 1e-11 * max(1, 1 / x)


def test_euler_sum_brute_classical_values():
    z3 = zeta_series(3).value
    z5 = zeta_series(5).value
    assert abs(euler_sum_brute(1, 2).value - 2 * z3) <= 1e-12
    assert abs(euler_sum_brute(1, 3).value - math.pi**4 / 72) <= 1e-12
    assert abs(euler_sum_brute(1, 4).value - (3 * z5 - math.pi**2 / 6 * z3)) <= 1e-12
    with pytest.raises(ValueError):
        euler_sum_brute(0, 3)


def test_catalan():
    assert abs(catalan_series().value - 0.915965594177219015) <= 1e-12
