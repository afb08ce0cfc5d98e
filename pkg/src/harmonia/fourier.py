"""Partial sums C^m_k(n) = sum cos(2 pi j / m) / j^k and S^m_k(n) (sine),
their n -> infinity limits, and the limit integrals behind them."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Optional, Union

import numpy as np

from . import _trig as T
from .exactq import Variant, zeta_even_exact
from .harmonic import h_value
from .quad import QuadSpec, integrate_or_raise

__all__ = [
    "Trig",
    "FourierSpec",
    "DivergentSumError",
    "TrivialZeroError",
    "partial_sum",
    "limit_closed_form",
    "bernoulli_fourier_limit",
    "regularized_integral",
    "theorem1_integral",
    "theorem2_integral",
    "corollary1_integral",
]

PI = math.pi
INF = math.inf


class Trig(enum.Enum):
    COS = "cos"
    SIN = "sin"


class DivergentSumError(ArithmeticError):
    """The requested infinite series diverges (C^1_1 is the harmonic series)."""


class TrivialZeroError(ArithmeticError):
    """S^1_1: every term is sin(2 pi j) = 0, outside the closed form's reach."""


@dataclass(frozen=True)
class FourierSpec:
    m: float
    k: int
    trig: Trig
    n: Union[int, float] = INF

    def __post_init__(self):
        if not self.m >= 1:
            raise ValueError("m must be a real number >= 1")
        if self.k < 1:
            raise ValueError("order k must be >= 1")
        if self.n != INF and (self.n < 1 or not float(self.n).is_integer()):
            raise ValueError("n must be a positive integer or infinity")


def _zeta_even(j: int) -> float:
    return -0.5 if j == 0 else float(zeta_even_exact(j)) * PI ** (2 * j)


@lru_cache(maxsize=None)
def _zeta_odd(j: int) -> float:
    from .zeta import ZetaRepresentation, zeta_odd

    return zeta_odd(j, ZetaRepresentation.TAN)


def _sine_kernel_integral(p: int, m: float, n: int, spec: QuadSpec) -> float:
    """int (1-u)^p sin(2 pi n u / m) cot(pi u / m) du."""
    freq = n / m
    spec = spec.with_(osc_frequency=2 * freq)

    def f(u):
        return (1.0 - u) ** p * np.sin(T.angle(freq, u)) * T.cot_pi_over(u, m)

    return integrate_or_raise(f, spec, what="sine kernel integral").value


def _one_minus_cos_kernel_integral(p: int, m: float, n: int, spec: QuadSpec) -> float:
    """int (1-u)^p (1 - cos(2 pi n u / m)) cot(pi u / m) du."""
    freq = n / m
    spec = spec.with_(osc_frequency=2 * freq)

    def f(u):
        return (1.0 - u) ** p * T.one_minus_cos(T.angle(freq, u)) * T.cot_pi_over(u, m)

    return integrate_or_raise(f, spec, what="cosine kernel integral").value


def _tol_for(spec: QuadSpec, mult: float) -> QuadSpec:
    return spec.with_(abs_tol=spec.abs_tol / max(abs(mult), 1.0))


def partial_sum(fs: FourierSpec, quad: Optional[QuadSpec] = None,
                variant: Variant = Variant.SIN_PI_K) -> float:
    """C^m_k(n) or S^m_k(n) from the closed recursion in H_j(n) plus one integral.

    The H_j(n) values come from :func:`harmonia.harmonic.h_value` in the
    given ``variant``.
    """
    if fs.n == INF:
        raise ValueError("use limit_closed_form for n = infinity")
    quad = quad or QuadSpec()
    m, k, n = fs.m, fs.k, int(fs.n)
    c = 2 * PI / m
    x = c * n

    def H(j: int) -> float:
        # the cos(2 pi k) representation starts at order 1; H_0 comes from sin(pi k)
        v = Variant.SIN_PI_K if (j == 0 and variant is Variant.COS_2PI_K) else variant
        return h_value(j, n, v, quad)

    if fs.trig is Trig.COS and k % 2 == 0:
        a = k // 2
        boundary = math.cos(x) - math.fsum((-1) ** j * x ** (2 * j) / factorial(2 * j)
                                           for j in range(a + 1))
        rec = [(-1) ** (a - j) * c ** (2 * a - 2 * j) / factorial(2 * a - 2 * j) * H(2 * j)
               for j in range(a + 1)]
        mult = (-1) ** a * c ** (2 * a) / (2 * factorial(2 * a - 1))
        integral = _sine_kernel_integral(2 * a - 1, m, n, _tol_for(quad, mult))
    elif fs.trig is Trig.SIN and k % 2 == 1:
        a = k // 2
        boundary = math.sin(x) - math.fsum((-1) ** j * x ** (2 * j + 1) / factorial(2 * j + 1)
                                           for j in range(a + 1))
        rec = [(-1) ** (a - j) * c ** (2 * a + 1 - 2 * j) / factorial(2 * a + 1 - 2 * j) * H(2 * j)
               for j in range(a + 1)]
        mult = (-1) ** a * c ** (2 * a + 1) / (2 * factorial(2 * a))
        integral = _sine_kernel_integral(2 * a, m, n, _tol_for(quad, mult))
    elif fs.trig is Trig.COS:
        a = k // 2
        boundary = math.cos(x) - math.fsum((-1) ** j * x ** (2 * j) / factorial(2 * j)
                                           for j in range(a + 1))
        rec = [(-1) ** (a - j) * c ** (2 * a - 2 * j) / factorial(2 * a - 2 * j) * H(2 * j + 1)
               for j in range(a + 1)]
        mult = -((-1) ** a) * c ** (2 * a + 1) / (2 * factorial(2 * a))
        integral = _one_minus_cos_kernel_integral(2 * a, m, n, _tol_for(quad, mult))
    else:
        a = k // 2
        boundary = math.sin(x) - math.fsum((-1) ** j * x ** (2 * j + 1) / factorial(2 * j + 1)
                                           for j in range(a))
        rec = [-((-1) ** (a - j)) * c ** (2 * a - 1 - 2 * j) / factorial(2 * a - 1 - 2 * j)
               * H(2 * j + 1) for j in range(a)]
        mult = (-1) ** a * c ** (2 * a) / (2 * factorial(2 * a - 1))
        integral = _one_minus_cos_kernel_integral(2 * a - 1, m, n, _tol_for(quad, mult))

    return math.fsum([boundary / (2 * n**k), *rec, mult * integral])


def _fused_difference(u: np.ndarray, p: int, m: float, freq_a: float, freq_b: float) -> np.ndarray:
    """(1-u)^p cos(2 pi a u) cot(pi u/m) - m (1-u) cos(2 pi b u) cot(pi u).

    Both terms carry an m/(pi u) pole at u = 0; below u = 1e-4 the poles are
    combined analytically and only the regular remainders are evaluated.
    """
    v = 1.0 - u
    ca = np.cos(T.angle(freq_a, u))
    cb = np.cos(T.angle(freq_b, u))
    direct = v**p * ca * T.cot_pi_over(u, m) - m * v * cb * T.cot_pi_over(u)

    small = u < 1e-4
    if not small.any():
        return direct
    us = np.where(small, u, 1e-4)
    vs = 1.0 - us
    # ((1-u)^p - (1-u)) / u = 1 - sum_{j<p} (1-u)^j
    poly_quot = 1.0 - sum(vs**j for j in range(p))
    alpha, beta = 2 * PI * freq_a, 2 * PI * freq_b
    cos_quot = -2.0 * np.sin(0.5 * (alpha + beta) * us) * np.sin(0.5 * (alpha - beta) * us) / us
    pole = (m / PI) * (poly_quot * np.cos(alpha * us) + vs * cos_quot)
    regular = (vs**p * np.cos(alpha * us) * T.cot_minus_pole(PI * us / m)
               - m * vs * np.cos(beta * us) * T.cot_minus_pole(PI * us))
    return np.where(small, pole + regular, direct)


def regularized_integral(p: int, m: float, quad: Optional[QuadSpec] = None) -> float:
    """int_0^1 (1-u)^p cot(pi u / m) - m (1-u) cot(pi u) du (n-independent)."""
    if m == 1 and p == 0:
        raise DivergentSumError("(p, m) = (0, 1) leaves a pole at u = 1")
    quad = quad or QuadSpec()
    res = integrate_or_raise(lambda u: _fused_difference(u, p, m, 0.0, 0.0),
                             quad.with_(osc_frequency=None), what="regularized integral")
    return res.value


def limit_closed_form(fs: FourierSpec, quad: Optional[QuadSpec] = None) -> float:
    """lim_{n->inf} of C^m_k(n) or S^m_k(n).

    Even cosine / odd sine orders are finite zeta(2j) combinations; odd
    cosine / even sine orders add zeta(2j+1), a log(m) term and the
    regularized integral.
    """
    m, k = fs.m, fs.k
    c = 2 * PI / m
    a = k // 2
    if fs.trig is Trig.COS and k % 2 == 0:
        terms = [(-1) ** (a - j) * c ** (2 * a - 2 * j) / factorial(2 * a - 2 * j) * _zeta_even(j)
                 for j in range(a + 1)]
        terms.append((-1) ** a * m / (4 * factorial(2 * a - 1)) * c ** (2 * a))
        return math.fsum(terms)
    if fs.trig is Trig.SIN and k % 2 == 1:
        if m == 1 and k == 1:
            raise TrivialZeroError("S^1_1 = 0 term by term")
        terms = [(-1) ** (a - j) * c ** (2 * a + 1 - 2 * j) / factorial(2 * a + 1 - 2 * j)
                 * _zeta_even(j) for j in range(a + 1)]
        terms.append((-1) ** a * m / (4 * factorial(2 * a)) * c ** (2 * a + 1))
        return math.fsum(terms)
    if fs.trig is Trig.COS:
        if m == 1 and k == 1:
            raise DivergentSumError("C^1_1 is the harmonic series")
        terms = [(-1) ** (a - j) * c ** (2 * a - 2 * j) / factorial(2 * a - 2 * j) * _zeta_odd(j)
                 for j in range(1, a + 1)]
        terms.append((-1) ** a * math.log(m) * c ** (2 * a) / factorial(2 * a))
        terms.append(-((-1) ** a) * c ** (2 * a + 1) / (2 * factorial(2 * a))
                     * regularized_integral(2 * a, m, quad))
        return math.fsum(terms)
    terms = [-((-1) ** (a - j)) * c ** (2 * a - 1 - 2 * j) / factorial(2 * a - 1 - 2 * j)
             * _zeta_odd(j) for j in range(1, a)]
    terms.append(-((-1) ** a) * math.log(m) * c ** (2 * a - 1) / factorial(2 * a - 1))
    terms.append((-1) ** a * c ** (2 * a) / (2 * factorial(2 * a - 1))
                 * regularized_integral(2 * a - 1, m, quad))
    return math.fsum(terms)


def bernoulli_fourier_limit(fs: FourierSpec) -> float:
    """The Bernoulli-polynomial closed form at x = 1/m (even cos / odd sin only)."""
    from .exactq import bernoulli_polynomial

    k = fs.k
    x = 1.0 / fs.m
    b = float(bernoulli_polynomial(k)(_frac(x)))
    if fs.trig is Trig.COS and k % 2 == 0:
        a = k // 2
        return -((-1) ** a) * (2 * PI) ** k / (2 * factorial(k)) * b
    if fs.trig is Trig.SIN and k % 2 == 1:
        a = k // 2
        return -((-1) ** a) * (2 * PI) ** k / (2 * factorial(k)) * b
    raise ValueError("Bernoulli closed form exists only for even cos / odd sin orders")


def _frac(x: float):
    from fractions import Fraction

    return Fraction(x).limit_denominator(10**12)


def theorem1_integral(k: int, m: float, n: float, quad: Optional[QuadSpec] = None) -> float:
    """int (1-u)^k sin(2 pi n u / m) cot(pi u / m) du -> m/2 (1 when k = 0, m = 1)."""
    if k < 0 or m < 1:
        raise ValueError("need k >= 0 and m >= 1")
    return _sine_kernel_integral(k, m, n, quad or QuadSpec())


def theorem2_integral(k: int, m: float, n: float, quad: Optional[QuadSpec] = None) -> float:
    """Fused int (1-u)^k cos(2 pi n u/m) cot(pi u/m) - m (1-u) cos(2 pi n u) cot(pi u) du.

    Tends to m log(m) / pi.
    """
    if k < 0 or m < 1:
        raise ValueError("need k >= 0 and m >= 1")
    if k == 0 and m == 1:
        raise ValueError("(k, m) = (0, 1) is excluded")
    quad = (quad or QuadSpec()).with_(osc_frequency=2 * n)
    res = integrate_or_raise(lambda u: _fused_difference(u, k, m, n / m, n), quad,
                             what="theorem 2 integral")
    return res.value


def corollary1_integral(k: int, n: float, quad: Optional[QuadSpec] = None) -> float:
    """int (u^k - u) cos(pi n (1-u)) tan(pi u / 2) du -> 0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 1:
        return 0.0
    quad = (quad or QuadSpec()).with_(osc_frequency=n)

    def f(u):
        # (u^k - u) = (1-u) q(u): q = 1 for k = 0, -u (1 + u + ... + u^{k-2}) for k >= 2
        q = np.ones_like(u) if k == 0 else -u * sum(u**j for j in range(k - 1))
        return q * np.cos(T.angle(0.5 * n, u, reflect=True)) * T.one_minus_u_tan_half_pi(u)

    return integrate_or_raise(f, quad, what="corollary 1 integral").value
