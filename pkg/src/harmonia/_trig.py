"""Endpoint-accurate trigonometric weights on (0, 1).

For u >= 1/2 the complement 1 - u is exact in binary floating point, so
every factor that is singular or vanishing at u = 1 is evaluated through
1 - u; factors singular or vanishing at u = 0 are evaluated through u.
"""
from __future__ import annotations

import math

import numpy as np

from .exactq import PolyQ

PI = math.pi


def angle(freq: float, u: np.ndarray, reflect: bool = False) -> np.ndarray:
    """2*pi*freq*w (mod 2*pi) with w = u, or w = 1 - u when ``reflect``.

    Near w = 0 the product is formed directly; near w = 1 the integer part
    of ``freq`` is dropped first so that the phase at w = 1 is exactly the
    fractional part of ``freq``.
    """
    v = 1.0 - u
    w, wc = (v, u) if reflect else (u, v)
    w_is_small = (u >= 0.5) if reflect else (u < 0.5)
    frac = math.fmod(freq, 1.0)
    return np.where(w_is_small, 2 * PI * freq * w, 2 * PI * (frac - freq * wc))


def one_minus_cos(theta: np.ndarray) -> np.ndarray:
    return 2.0 * np.sin(0.5 * theta) ** 2


def tan_half_pi(u: np.ndarray) -> np.ndarray:
    """tan(pi u / 2), pole at u = 1."""
    v = 1.0 - u
    return np.where(u < 0.5, np.tan(0.5 * PI * u), 1.0 / np.tan(0.5 * PI * v))


def cot_pi_over(u: np.ndarray, m: float = 1.0) -> np.ndarray:
    """cot(pi u / m); for m = 1 the pole at u = 1 is resolved through 1 - u."""
    if m == 1.0:
        v = 1.0 - u
        return np.where(u < 0.5, 1.0 / np.tan(PI * u), -1.0 / np.tan(PI * v))
    return 1.0 / np.tan(PI * u / m)


def one_minus_u_tan_half_pi(u: np.ndarray) -> np.ndarray:
    """(1 - u) tan(pi u / 2), finite on [0, 1] with value 2/pi at u = 1."""
    v = 1.0 - u
    return np.where(u < 0.5, v * np.tan(0.5 * PI * u), v / np.tan(0.5 * PI * v))


def u_one_minus_u_cot_pi(u: np.ndarray) -> np.ndarray:
    """u (1 - u) cot(pi u), finite on [0, 1]."""
    v = 1.0 - u
    return np.where(u < 0.5, v * (u / np.tan(PI * u)), -u * (v / np.tan(PI * v)))


def cot_minus_pole(x: np.ndarray) -> np.ndarray:
    """cot(x) - 1/x without cancellation for small |x|."""
    x2 = x * x
    series = -x * (1.0 / 3 + x2 * (1.0 / 45 + x2 * (2.0 / 945 + x2 * (1.0 / 4725))))
    small = np.abs(x) < 1e-2
    safe = np.where(small, 1.0, x)
    return np.where(small, series, 1.0 / np.tan(safe) - 1.0 / safe)


def horner(coeffs: list[float], u: np.ndarray) -> np.ndarray:
    acc = np.zeros_like(u)
    for c in reversed(coeffs):
        acc = acc * u + c
    return acc


def poly_eval(p: PolyQ, u: np.ndarray) -> np.ndarray:
    return horner(p.float_coeffs(), u)
