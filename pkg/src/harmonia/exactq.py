"""Exact rational layer: Bernoulli numbers and polynomials, power sums,
the kernel polynomial families and exact even zeta values.

Everything here is computed with :class:`fractions.Fraction`; the only
floating point in the module lives in the two indicator helpers at the
bottom, which are numeric by nature.
"""
from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence, Union

__all__ = [
    "Rational",
    "PolyQ",
    "Parity",
    "Variant",
    "KernelFamily",
    "RemovableSingularityError",
    "bernoulli_number",
    "bernoulli_polynomial",
    "faulhaber_sum",
    "kernel_poly",
    "zeta_even_exact",
    "kernel_vanishing_check",
    "double_convolution_sum",
    "indicator_divides",
    "indicator_series_check",
]

Rational = Fraction
Number = Union[int, Fraction]


class RemovableSingularityError(ValueError):
    """A closed form was evaluated exactly on one of its removable poles."""


class PolyQ:
    """Univariate polynomial in ``u`` with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of ``u**i``. Trailing zeros are trimmed,
    so two equal polynomials always have equal coefficient tuples.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: Number = 1) -> "PolyQ":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PolyQ):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == PolyQ([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "PolyQ(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(f"{c}" if i == 0 else f"{c}*u^{i}")
        return "PolyQ(" + " + ".join(terms) + ")"

    def __add__(self, other: "PolyQ | Number") -> "PolyQ":
        if not isinstance(other, PolyQ):
            other = PolyQ([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return PolyQ(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "PolyQ":
        return PolyQ(-c for c in self.coeffs)

    def __sub__(self, other: "PolyQ | Number") -> "PolyQ":
        if not isinstance(other, PolyQ):
            other = PolyQ([other])
        return self + (-other)

    def __rsub__(self, other: Number) -> "PolyQ":
        return PolyQ([other]) - self

    def __mul__(self, other: "PolyQ | Number") -> "PolyQ":
        if not isinstance(other, PolyQ):
            c = Fraction(other)
            return PolyQ(c * a for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return PolyQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __call__(self, u: Number) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * u + c
        return acc

    def scale_argument(self, s: Number) -> "PolyQ":
        """Return ``u -> p(s*u)``."""
        s = Fraction(s)
        return PolyQ(c * s**i for i, c in enumerate(self.coeffs))

    def deflate(self, root: Number) -> "PolyQ":
        """Exact quotient by ``(u - root)``; the division must be exact."""
        root = Fraction(root)
        if self(root) != 0:
            raise ValueError(f"{self!r} does not vanish at {root}")
        if not self.coeffs:
            return PolyQ()
        quotient = []
        acc = Fraction(0)
        for c in reversed(self.coeffs[1:]):
            acc = acc * root + c
            quotient.append(acc)
        return PolyQ(reversed(quotient))

    def float_coeffs(self) -> list[float]:
        return [float(c) for c in self.coeffs]


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"


class Variant(enum.Enum):
    """Which trigonometric identity seeds the harmonic-number integral."""

    SIN_PI_K = "sin-pi-k"
    SIN_2PI_K = "sin-2pi-k"
    COS_2PI_K = "cos-2pi-k"


@dataclass(frozen=True)
class KernelFamily:
    parity: Parity
    variant: Variant


# ---------------------------------------------------------------------------
# Bernoulli numbers

_bern_lock = threading.Lock()
_bern: list[Fraction] = [Fraction(1)]


def bernoulli_number(j: int) -> Fraction:
    """B_j with the B_1 = -1/2 convention, memoized.

    Uses sum_{i<=m} C(m+1, i) B_i = 0.
    """
    if j < 0:
        raise ValueError("j must be >= 0")
    if j < len(_bern):
        return _bern[j]
    with _bern_lock:
        while len(_bern) <= j:
            m = len(_bern)
            if m > 1 and m % 2 == 1:
                _bern.append(Fraction(0))
                continue
            s = sum(comb(m + 1, i) * _bern[i] for i in range(m))
            _bern.append(-s / (m + 1))
    return _bern[j]


@lru_cache(maxsize=None)
def bernoulli_polynomial(k: int) -> PolyQ:
    """B_k(u) = sum_j C(k, j) B_{k-j} u^j."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return PolyQ(comb(k, j) * bernoulli_number(k - j) for j in range(k + 1))


def faulhaber_sum(i: int, n: int) -> Fraction:
    """Sum of k**i for k = 1..n from the even/odd split of Faulhaber's formula."""
    if i < 0 or n < 1:
        raise ValueError("need i >= 0 and n >= 1")
    if i == 0:
        # the even-power form over-counts by 1/2 at i=0
        return Fraction(n)
    n = Fraction(n)
    total = n**i / 2
    half = i // 2
    top = i + 1
    for j in range(half + 1):
        total += (
            factorial(i)
            * bernoulli_number(2 * j)
            * n ** (top - 2 * j)
            / (factorial(2 * j) * factorial(top - 2 * j))
        )
    return total


# ---------------------------------------------------------------------------
# kernel polynomials


@lru_cache(maxsize=None)
def _csc_coeff(j: int) -> Fraction:
    # coefficient of x^{2j} in x/sin(x), up to the (-1)^j sign
    return bernoulli_number(2 * j) * (2 - 2 ** (2 * j)) / factorial(2 * j)


@lru_cache(maxsize=None)
def _csc2_coeff(i: int) -> Fraction:
    # x^{2i} coefficient of (x/sin x)^2 without the (-1)^i sign
    return sum(_csc_coeff(j) * _csc_coeff(i - j) for j in range(i + 1))


@lru_cache(maxsize=None)
def _kernel_sin_even(k: int) -> PolyQ:
    coeffs = [Fraction(0)] * (2 * k + 1)
    for j in range(k + 1):
        sign = (-1) ** (k + 1)  # (-1)^j * (-1)^{k-j+1}
        coeffs[2 * k - 2 * j] += sign * _csc_coeff(j) / factorial(2 * k - 2 * j)
    return PolyQ(coeffs)


@lru_cache(maxsize=None)
def _kernel_sin_odd(k: int) -> PolyQ:
    coeffs = [Fraction(0)] * (2 * k + 2)
    for j in range(k + 1):
        p = 2 * k + 1 - 2 * j
        coeffs[p] += (-1) ** k * _csc_coeff(j) / factorial(p)
    return PolyQ(coeffs)


@lru_cache(maxsize=None)
def _kernel_cos_odd(k: int) -> PolyQ:
    coeffs = [Fraction(0)] * (2 * k + 3)
    for i in range(k + 1):
        p = 2 * k + 2 - 2 * i
        sign = (-1) ** (k + 1)  # (-1)^i * (-1)^{k+1-i}
        coeffs[p] += sign * _csc2_coeff(i) * 2**p / (2 * factorial(p))
    return PolyQ(coeffs)


@lru_cache(maxsize=None)
def _kernel_cos_even(k: int) -> PolyQ:
    # normalized so that H_2k(n) = 1/(2n^2k) + pi^2k * int q(u) sin(2pi n(1-u)) cot(pi u)
    coeffs = [Fraction(0)] * (2 * k + 2)
    for i in range(k + 1):
        p = 2 * k + 1 - 2 * i
        coeffs[p] += (-1) ** k * _csc2_coeff(i) * 2**p / (2 * factorial(p))
    return PolyQ(coeffs)


def kernel_poly(family: KernelFamily, k: int) -> PolyQ:
    """Polynomial under the integral sign of the H_{2k} / H_{2k+1} formula.

    ``family.parity`` selects order 2k (EVEN) or 2k+1 (ODD). The sine
    variants share one family (the x*cos(xu)/sin(x) and x*sin(xu)/sin(x)
    expansions); the cosine variant uses the (x/sin x)^2 double convolution.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if family.variant in (Variant.SIN_PI_K, Variant.SIN_2PI_K):
        if family.parity is Parity.EVEN:
            return _kernel_sin_even(k)
        return _kernel_sin_odd(k)
    if family.variant is Variant.COS_2PI_K:
        if family.parity is Parity.ODD:
            return _kernel_cos_odd(k)
        if k == 0:
            raise ValueError("cos-2pi-k has no order-0 kernel")
        return _kernel_cos_even(k)
    raise ValueError(f"unsupported kernel family {family!r}")


def zeta_even_exact(k: int) -> Fraction:
    """Rational r with zeta(2k) = r * pi**(2k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return -((-1) ** k) * 2 ** (2 * k) * bernoulli_number(2 * k) / (2 * factorial(2 * k))


def double_convolution_sum(k: int) -> Fraction:
    """sum_i sum_j B_2j B_{2i-2j} (2-2^2j)(2-2^{2i-2j}) 2^{2k+2-2i} / (...)!"""
    total = Fraction(0)
    for i in range(k + 1):
        p = 2 * k + 2 - 2 * i
        total += _csc2_coeff(i) * Fraction(2**p, factorial(p))
    return total


def kernel_vanishing_check(kmax: int) -> bool:
    """True iff p_{2k+1}(1) = 0 and the double-convolution sum is 0 for 1 <= k <= kmax."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    odd = KernelFamily(Parity.ODD, Variant.SIN_PI_K)
    for k in range(1, kmax + 1):
        if kernel_poly(odd, k)(1) != 0 or double_convolution_sum(k) != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# indicator of k | n and its power-series closed forms


def indicator_divides(k: int, n: int) -> Fraction:
    """1 if k divides n else 0, from (1/k) * sum_j cos(2 pi n j / k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    r = n % k  # cos has period k in n; keeps the angles small
    s = math.fsum(math.cos(2 * math.pi * r * j / k) for j in range(1, k + 1)) / k
    value = round(s)
    if abs(s - value) > 1e-9 * k:
        raise ArithmeticError(f"cosine sum {s!r} is not close to an integer")
    return Fraction(value)


@lru_cache(maxsize=None)
def _indicator_coeffs(k: Fraction, terms: int, odd: bool) -> tuple[Fraction, ...]:
    shift = 2 if odd else 1
    out = []
    for i in range(terms):
        c = sum(
            bernoulli_number(2 * j)
            * k ** (-2 * j)
            / (factorial(2 * i + shift - 2 * j) * factorial(2 * j))
            for j in range(i + 1)
        )
        out.append((-1) ** i * c)
    return tuple(out)


def indicator_series_check(k: float, n: float, terms: int = 40, odd: bool = False) -> float:
    """|truncated power series - closed form| for the indicator identities.

    Even form: sum_i (-1)^i (pi n)^2i sum_j B_2j k^-2j / ((2i+1-2j)!(2j)!)
    against cot(pi n / 2k) sin(pi n) / (2k). Odd form (``odd=True``):
    sum_i (-1)^i (pi n)^{2i+1} sum_j B_2j k^-2j / ((2i+2-2j)!(2j)!) against
    cot(pi n / 2k) sin(pi n / 2)^2 / k.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    half_angle = math.pi * n / (2 * k)
    if math.sin(half_angle) == 0 or (n / (2 * k)).is_integer():
        raise RemovableSingularityError(f"sin(pi n / 2k) = 0 at n={n}, k={k}")
    coeffs = _indicator_coeffs(Fraction(k), terms, odd)
    x = math.pi * n
    if odd:
        series = math.fsum(float(c) * x ** (2 * i + 1) for i, c in enumerate(coeffs))
        closed = math.sin(x / 2) ** 2 / (k * math.tan(half_angle))
    else:
        series = math.fsum(float(c) * x ** (2 * i) for i, c in enumerate(coeffs))
        closed = math.sin(x) / (2 * k * math.tan(half_angle))
    return abs(series - closed)
