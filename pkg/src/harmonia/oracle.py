"""Brute-force and classical-series reference values.

Nothing here uses the integral representations tested elsewhere in the
package: sums are literal, tails come from Euler-Maclaurin, and floating
point accumulation is compensated (``math.fsum``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

__all__ = [
    "SeriesResult",
    "direct_harmonic",
    "direct_trig_sum",
    "zeta_series",
    "harmonic_real",
    "digamma",
    "euler_gamma",
    "euler_sum_brute",
    "catalan_series",
]

DEFAULT_TERMS = 100_000


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    tail_bound: float


def direct_harmonic(k: int, n: int) -> Fraction:
    """sum_{j=1}^n j^-k, exactly. For k = 0 this counts terms (returns n)."""
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    return sum((Fraction(1, j**k) for j in range(1, n + 1)), Fraction(0))


def direct_trig_sum(m: float, k: int, n: int, trig: str) -> float:
    """sum_{j=1}^n cos(2 pi j / m) / j^k (trig='cos') or the sine analogue."""
    if m <= 0 or n < 0:
        raise ValueError("need m > 0 and n >= 0")
    f = {"cos": math.cos, "sin": math.sin}[str(getattr(trig, "value", trig))]
    # reduce j mod m first so large j keep full phase accuracy
    return math.fsum(f(2 * math.pi * (math.fmod(j, m) / m)) / j**k for j in range(1, n + 1))


def _power_tail(s: float, N: int) -> tuple[float, float]:
    """sum_{j>=N} j^-s by Euler-Maclaurin, with a bound on the truncation."""
    t = (N ** (1 - s) / (s - 1) + 0.5 * N**-s + s * N ** (-s - 1) / 12
         - s * (s + 1) * (s + 2) * N ** (-s - 3) / 720)
    bound = s * (s + 1) * (s + 2) * (s + 3) * (s + 4) * N ** (-s - 5) / 30240
    return t, bound


def zeta_series(s: float, terms: int = DEFAULT_TERMS) -> SeriesResult:
    if not s > 1:
        raise ValueError("zeta series needs s > 1")
    j = np.arange(1, terms, dtype=float)
    head = math.fsum(j**-s)
    tail, bound = _power_tail(s, terms)
    rounding = 4e-16 * (head + tail)
    return SeriesResult(head + tail, terms - 1, bound + rounding)


def _shifted_harmonic(x: float, terms: int) -> SeriesResult:
    # sum_{j>=1} (1/j - 1/(j+x)), valid for x > -1
    j = np.arange(1, terms, dtype=float)
    head = math.fsum(x / (j * (j + x)))
    N = float(terms)
    f = 1 / N - 1 / (N + x)
    d1 = -1 / N**2 + 1 / (N + x) ** 2
    d3 = -6 / N**4 + 6 / (N + x) ** 4
    tail = math.log1p(x / N) + 0.5 * f - d1 / 12 + d3 / 720
    bound = abs(120 * (1 / N**6 - 1 / (N + x) ** 6)) / 30240 + 4e-16 * abs(head)
    return SeriesResult(head + tail, terms - 1, bound)


def harmonic_real(n: float, terms: int = DEFAULT_TERMS) -> SeriesResult:
    """gamma + psi(n + 1): the usual continuation of H(n) to real n > 0."""
    if not n > 0:
        raise ValueError("n must be > 0")
    return _shifted_harmonic(n, terms)


def euler_gamma() -> float:
    return float(np.euler_gamma)


def digamma(x: float, terms: int = DEFAULT_TERMS) -> SeriesResult:
    if not x > 0:
        raise ValueError("x must be > 0")
    h = _shifted_harmonic(x - 1.0, terms)
    return SeriesResult(h.value - euler_gamma(), h.terms_used, h.tail_bound)


def euler_sum_brute(k: int, s: int, terms: int = DEFAULT_TERMS) -> SeriesResult:
    """sum_{n>=1} H_k(n) / n^s for k >= 1, s >= 2 (k + s > 2).

    Partial sums use extended-precision running harmonic numbers; the tail
    replaces H_k(x) by its asymptotic expansion and integrates it.
    """
    if k < 1 or s < 2 or k + s <= 2:
        raise ValueError("need k >= 1, s >= 2")
    n = np.arange(1, terms + 1, dtype=np.longdouble)
    H = np.cumsum(n ** -k)
    head = math.fsum((H / n**s).astype(float))
    N = float(terms)
    HN = float(H[-1])
    if k == 1:
        g = euler_gamma()
        integral = (N ** (1 - s) * (math.log(N) / (s - 1) + 1 / (s - 1) ** 2)
                    + g * N ** (1 - s) / (s - 1) + N**-s / (2 * s)
                    - N ** (-s - 1) / (12 * (s + 1)))
        slope = (math.log(N) + 1) * N ** (-s - 1) * s
    else:
        zk = zeta_series(k).value
        integral = (zk * N ** (1 - s) / (s - 1)
                    - N ** (2 - k - s) / ((k - 1) * (k + s - 2))
                    + N ** (1 - k - s) / (2 * (k + s - 1)))
        slope = zk * s * N ** (-s - 1)
    # sum_{n>N} g(n) = int_N^inf g - g(N)/2 - g'(N)/12 + ...
    tail = integral - 0.5 * HN / N**s + slope / 12
    bound = slope + N ** (-s - 2) * 10
    return SeriesResult(head + tail, terms, bound)


def catalan_series(terms: int = DEFAULT_TERMS) -> SeriesResult:
    """sum (-1)^i / (2i+1)^2 with pairwise grouping and an averaged tail."""
    i = np.arange(0, 2 * terms, dtype=float)
    t = (1 - 2 * (i % 2)) / (2 * i + 1) ** 2
    head = math.fsum(t)
    # alternating tail ~ half the next term
    nxt = 1 / (4 * terms + 1) ** 2
    return SeriesResult(head + 0.5 * nxt, 2 * terms, nxt * 2 / (4 * terms))
