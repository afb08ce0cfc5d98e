"""zeta(2k+1) integral representations, zeta generating functions, Euler sums."""
from __future__ import annotations

import enum
import math
from fractions import Fraction
from math import factorial
from typing import Optional

import numpy as np

from . import _trig as T
from .exactq import (KernelFamily, Parity, PolyQ, Variant, bernoulli_polynomial,
                     kernel_poly, zeta_even_exact)
from .quad import QuadSpec, integrate_or_raise

__all__ = [
    "ZetaRepresentation",
    "zeta_odd",
    "zeta_even",
    "zeta_genfun_even",
    "zeta_genfun_odd",
    "euler_sum_even_orders",
    "euler_sum_odd_orders",
]

PI = math.pi
_ODD_SIN = KernelFamily(Parity.ODD, Variant.SIN_PI_K)


class ZetaRepresentation(enum.Enum):
    TAN = "tan"
    COT = "cot"
    BERNOULLI_COT = "bernoulli-cot"


def _deflate_both_ends(p: PolyQ) -> PolyQ:
    """p(u) / (u (1 - u)); p must vanish at 0 and 1."""
    return -p.deflate(Fraction(0)).deflate(Fraction(1))


def _integrate_cot(p: PolyQ, spec: QuadSpec, what: str) -> float:
    """int_0^1 p(u) cot(pi u) du for p vanishing at both ends."""
    c = _deflate_both_ends(p).float_coeffs()
    return integrate_or_raise(lambda u: T.horner(c, u) * T.u_one_minus_u_cot_pi(u),
                              spec, what=what).value


def _bernoulli_half_difference(k: int) -> PolyQ:
    """B_k(u) - 2^{k-1} B_k(u/2)."""
    b = bernoulli_polynomial(k)
    return b - b.scale_argument(Fraction(1, 2)) * Fraction(2) ** (k - 1)


def zeta_even(k: int) -> float:
    return float(zeta_even_exact(k)) * PI ** (2 * k)


def zeta_odd(k: int, rep: ZetaRepresentation = ZetaRepresentation.TAN,
             quad: Optional[QuadSpec] = None) -> float:
    """zeta(2k+1) for k >= 1 from one of three integral representations."""
    if k < 1:
        raise ValueError("k must be >= 1")
    quad = quad or QuadSpec()
    s = 2 * k + 1
    p = kernel_poly(_ODD_SIN, k)
    if rep is ZetaRepresentation.TAN:
        mult = PI**s / 2
        c = (-p.deflate(Fraction(1))).float_coeffs()  # p / (1 - u)
        spec = quad.with_(abs_tol=quad.abs_tol / mult)
        val = integrate_or_raise(lambda u: T.horner(c, u) * T.one_minus_u_tan_half_pi(u),
                                 spec, what=f"zeta({s}) [tan]").value
        return mult * val
    if rep is ZetaRepresentation.COT:
        mult = -((2 * PI) ** s) / 2
        return mult * _integrate_cot(p, quad.with_(abs_tol=quad.abs_tol / abs(mult)),
                                     f"zeta({s}) [cot]")
    mult = -((-1) ** k) * (2 * PI) ** s / (2 * factorial(s))
    return mult * _integrate_cot(bernoulli_polynomial(s),
                                 quad.with_(abs_tol=quad.abs_tol / abs(mult)),
                                 f"zeta({s}) [bernoulli-cot]")


def zeta_genfun_even(x: float) -> float:
    """sum_{k>=1} zeta(2k) x^2k = 1/2 - (pi x / 2) cot(pi x)."""
    if not abs(x) < 1:
        raise ValueError("need |x| < 1")
    if x == 0:
        return 0.0
    return 0.5 - 0.5 * PI * x / math.tan(PI * x)


def zeta_genfun_odd(x: float, quad: Optional[QuadSpec] = None) -> float:
    """sum_{k>=1} zeta(2k+1) x^{2k+1} as a tan-weighted integral."""
    if not abs(x) < 1:
        raise ValueError("need |x| < 1")
    if x == 0:
        return 0.0
    a = PI * x
    sa, cot_a = math.sin(a), math.cos(a) / math.sin(a)

    def f(u):
        v = 1.0 - u
        near0 = (np.sin(a * u) / sa - u) * T.tan_half_pi(np.minimum(u, 0.5))
        # sin(a(1-v))/sin(a) - (1-v) rewritten so the v -> 0 zero is explicit
        bracket1 = v - 2.0 * np.sin(0.5 * a * v) ** 2 - cot_a * np.sin(a * v)
        near1 = bracket1 / np.tan(0.5 * PI * np.minimum(v, 0.5))
        return np.where(u < 0.5, near0, near1)

    res = integrate_or_raise(f, quad or QuadSpec(), what="odd zeta generating function")
    return 0.5 * a * res.value


def euler_sum_even_orders(k: int, r: int, quad: Optional[QuadSpec] = None) -> float:
    """sum_{n>=1} H_2k(n) / n^{2r+1}, with H_0 = 0."""
    if k < 0 or r < 1:
        raise ValueError("need k >= 0 and r >= 1")
    quad = quad or QuadSpec()
    poly = _bernoulli_half_difference(2 * k) * bernoulli_polynomial(2 * r + 1)
    mult = (-1) ** (k + r) * (2 * PI) ** (2 * k + 2 * r + 1) / (
        2 * factorial(2 * k) * factorial(2 * r + 1))
    integral = _integrate_cot(poly, quad.with_(abs_tol=quad.abs_tol / abs(mult)),
                              f"Euler sum H_{2 * k}/n^{2 * r + 1}")
    return 0.5 * zeta_odd(k + r, quad=quad) + mult * integral


def euler_sum_odd_orders(k: int, r: int, quad: Optional[QuadSpec] = None) -> float:
    """sum_{n>=1} H_{2k+1}(n) / n^{2r}.

    k = 0 uses the form with the cosine series kept whole (the split form is
    invalid there); k >= 1 uses the split form with zeta(2k+1) zeta(2r).
    """
    if k < 0 or r < 1:
        raise ValueError("need k >= 0 and r >= 1")
    quad = quad or QuadSpec()
    s = 2 * k + 1
    diff = _bernoulli_half_difference(s)
    head = 0.5 * zeta_odd(k + r, quad=quad)
    if k == 0:
        # zeta(2r) + (-1)^r (2 pi)^{2r} B_2r(u) / (2 (2r)!) = pi^{2r} E(u), E exact
        E = (bernoulli_polynomial(2 * r) * (Fraction((-1) ** r * 2 ** (2 * r), 2 * factorial(2 * r)))
             + PolyQ((zeta_even_exact(r),)))
        mult = -((-1) ** k) * (2 * PI) ** s / factorial(s) * PI ** (2 * r)
        integral = _integrate_cot(diff * E, quad.with_(abs_tol=quad.abs_tol / abs(mult)),
                                  f"Euler sum H_1/n^{2 * r}")
        return head + mult * integral
    mult = -((-1) ** (k + r)) * (2 * PI) ** (s + 2 * r) / (2 * factorial(s) * factorial(2 * r))
    poly = diff * bernoulli_polynomial(2 * r)
    integral = _integrate_cot(poly, quad.with_(abs_tol=quad.abs_tol / abs(mult)),
                              f"Euler sum H_{s}/n^{2 * r}")
    return head + zeta_odd(k, quad=quad) * zeta_even(r) + mult * integral
