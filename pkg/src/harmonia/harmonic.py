"""Generalized harmonic numbers H_k(n) from their integral representations."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from . import _trig as T
from .exactq import KernelFamily, Parity, Variant, kernel_poly
from .quad import QuadResult, QuadSpec, integrate_or_raise

__all__ = [
    "Variant",
    "HarmonicEval",
    "h_integral",
    "h_value",
    "h_zero_check",
    "genfun_even",
    "genfun_odd",
    "theorem3_integral",
    "theorem4_integral",
    "even_recurrence_residual",
]

PI = math.pi


@dataclass(frozen=True)
class HarmonicEval:
    k: int
    n: float
    variant: Variant
    value: float
    quad: QuadResult


def _is_integer(n: float) -> bool:
    return float(n).is_integer()


def _weight(variant: Variant, odd: bool, n: float, u: np.ndarray) -> np.ndarray:
    if variant is Variant.SIN_PI_K:
        theta = T.angle(0.5 * n, u, reflect=True)
        trig = T.one_minus_cos(theta) if odd else np.sin(theta)
        return trig * T.tan_half_pi(u)
    theta = T.angle(n, u, reflect=True)
    trig = T.one_minus_cos(theta) if odd else np.sin(theta)
    return trig * T.cot_pi_over(u)


def _multiplier(variant: Variant, k: int) -> float:
    if variant is Variant.SIN_PI_K:
        return PI**k / 2
    if variant is Variant.SIN_2PI_K:
        return -((2 * PI) ** k) / 2
    return PI**k


@lru_cache(maxsize=4096)
def _h_eval(k: int, n: float, variant: Variant, spec: QuadSpec) -> HarmonicEval:
    if k < 0:
        raise ValueError("k must be >= 0")
    if not n > 0:
        raise ValueError("n must be > 0")
    if variant is Variant.COS_2PI_K and k == 0:
        raise ValueError("the cos-2pi-k representation starts at k = 1")
    odd = k % 2 == 1
    poly = kernel_poly(KernelFamily(Parity.ODD if odd else Parity.EVEN, variant), k // 2)
    if variant is not Variant.SIN_PI_K and not _is_integer(n) and poly(0) != 0:
        # sin(2 pi n) != 0 leaves a 1/u pole at u = 0
        raise ValueError(f"{variant.value} with even k diverges at non-integer n={n}")

    coeffs = poly.float_coeffs()
    mult = _multiplier(variant, k)
    freq = n if variant is Variant.SIN_PI_K else 2 * n
    inner = spec.with_(abs_tol=spec.abs_tol / abs(mult), osc_frequency=freq)

    def f(u):
        return T.horner(coeffs, u) * _weight(variant, odd, n, u)

    res = integrate_or_raise(f, inner, what=f"H_{k}({n}) [{variant.value}]")
    value = 0.5 / n**k + mult * res.value
    scaled = QuadResult(mult * res.value, abs(mult) * res.err_estimate, res.evals, res.converged)
    return HarmonicEval(k, n, variant, value, scaled)


def h_integral(k: int, n: float, variant: Variant = Variant.SIN_PI_K,
               spec: Optional[QuadSpec] = None) -> HarmonicEval:
    """H_k(n) as 1/(2 n^k) plus the kernel-weighted integral of ``variant``.

    For integer n this is the partial sum of j**-k; with this convention
    H_0(n) = 0. Non-integer n is accepted and evaluated as written except
    for the even-order cot-weighted forms, which diverge there.
    """
    return _h_eval(int(k), float(n), variant, spec or QuadSpec())


def h_value(k: int, n: float, variant: Variant = Variant.SIN_PI_K,
            spec: Optional[QuadSpec] = None) -> float:
    return h_integral(k, n, variant, spec).value


def h_zero_check(n: int, spec: Optional[QuadSpec] = None) -> float:
    """|H_0(n)| from the sin(pi k) representation; zero for positive integer n."""
    if n < 1 or not _is_integer(n):
        raise ValueError("n must be a positive integer")
    return abs(h_integral(0, n, Variant.SIN_PI_K, spec).value)


def _check_genfun_args(n: float, x: float) -> None:
    if not n > 0:
        raise ValueError("n must be > 0")
    if not abs(x) < 1:
        raise ValueError("need |x| < 1")
    if abs(abs(x) - n) == 0:
        raise ZeroDivisionError(f"pole of the generating function at x = {x}")


def _pi_x_over_sin(x: float) -> float:
    return 1.0 if x == 0 else PI * x / math.sin(PI * x)


def genfun_even(n: float, x: float, spec: Optional[QuadSpec] = None) -> float:
    """sum_{k>=0} H_2k(n) x^2k through its closed integral form."""
    _check_genfun_args(n, x)
    spec = (spec or QuadSpec()).with_(osc_frequency=max(n, abs(x)))

    def f(u):
        return np.cos(PI * x * u) * _weight(Variant.SIN_PI_K, False, n, u)

    res = integrate_or_raise(f, spec, what="even generating function")
    return n * n / (2 * (n * n - x * x)) - 0.5 * _pi_x_over_sin(x) * res.value


def genfun_odd(n: float, x: float, spec: Optional[QuadSpec] = None) -> float:
    """sum_{k>=0} H_{2k+1}(n) x^{2k+1} through its closed integral form."""
    _check_genfun_args(n, x)
    if x == 0:
        return 0.0
    spec = (spec or QuadSpec()).with_(osc_frequency=max(n, abs(x)))

    def f(u):
        return np.sin(PI * x * u) * _weight(Variant.SIN_PI_K, True, n, u)

    res = integrate_or_raise(f, spec, what="odd generating function")
    return n * x / (2 * (n * n - x * x)) + 0.5 * _pi_x_over_sin(x) * res.value


def theorem3_integral(k: int, n: float, spec: Optional[QuadSpec] = None) -> float:
    """int_0^1 u^2k sin(pi n (1-u)) tan(pi u / 2) du; tends to 1."""
    if k < 0:
        raise ValueError("k must be >= 0")
    spec = (spec or QuadSpec()).with_(osc_frequency=n)
    p = 2 * k
    res = integrate_or_raise(lambda u: u**p * _weight(Variant.SIN_PI_K, False, n, u),
                             spec, what="theorem 3 integral")
    return res.value


def theorem4_integral(k: int, n: float, spec: Optional[QuadSpec] = None,
                      odd: bool = False) -> float:
    """int_0^1 u^p sin(2 pi n (1-u)) cot(pi u) du with p = 2k (or 2k+1 if ``odd``).

    Tends to -1 for p = 0 and to -1/2 otherwise.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    p = 2 * k + (1 if odd else 0)
    if p == 0 and not _is_integer(n):
        raise ValueError("p = 0 diverges at non-integer n")
    spec = (spec or QuadSpec()).with_(osc_frequency=2 * n)
    res = integrate_or_raise(lambda u: u**p * _weight(Variant.SIN_2PI_K, False, n, u),
                             spec, what="theorem 4 integral")
    return res.value


def even_recurrence_residual(k: int, n: int, spec: Optional[QuadSpec] = None) -> float:
    """|H_2k(n) - (recurrence in H_0 .. H_2k-2 and the u^2k moment)| for k >= 1.

    The moment is :func:`theorem3_integral`; the H values come from the
    sin(pi k) representation, so the residual tests the two against each other.
    """
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    spec = spec or QuadSpec()
    boundary = math.fsum((-1) ** j * (PI * n) ** (2 * j) / math.factorial(2 * j + 1)
                         for j in range(k + 1)) / (2 * n ** (2 * k))
    prior = math.fsum((-1) ** (k - j) * PI ** (2 * k - 2 * j) / math.factorial(2 * k + 1 - 2 * j)
                      * h_value(2 * j, n, Variant.SIN_PI_K, spec) for j in range(k))
    moment = (-1) ** k * PI ** (2 * k) / (2 * math.factorial(2 * k)) * theorem3_integral(k, n, spec)
    return abs(h_value(2 * k, n, Variant.SIN_PI_K, spec) - (boundary - prior - moment))
