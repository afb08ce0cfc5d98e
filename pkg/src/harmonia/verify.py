"""Verification suites: every check compares a formula value with an
independent oracle (or a stated limit) and records the outcome."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional

from . import exactq as X
from . import oracle as O
from .fourier import (FourierSpec, Trig, bernoulli_fourier_limit, corollary1_integral,
                      limit_closed_form, partial_sum, theorem1_integral, theorem2_integral)
from .harmonic import (even_recurrence_residual, genfun_even, genfun_odd, h_value,
                       theorem3_integral, theorem4_integral)
from .quad import QuadSpec
from .zeta import (ZetaRepresentation, euler_sum_even_orders, euler_sum_odd_orders,
                   zeta_genfun_even, zeta_genfun_odd, zeta_odd)

__all__ = ["Check", "SUITES", "run_suite", "LIMIT_N", "NOISE_FLOOR", "limit_cases"]

LIMIT_N = (25, 50, 100, 200)
# errors below this are treated as already converged in trend checks
NOISE_FLOOR = 1e-9
TREND_FACTOR = 1.5


@dataclass(frozen=True)
class Check:
    id: str
    expected: float
    got: float
    tol: float
    passed: bool


def _close(cid: str, expected: float, got: float, tol: float) -> Check:
    return Check(cid, float(expected), float(got), tol, abs(got - expected) <= tol)


def _exact(cid: str, ok: bool) -> Check:
    return Check(cid, 1.0, 1.0 if ok else 0.0, 0.0, ok)


def _series(coeffs: Callable[[int], float], x: float, start: int, stop: int, step: int = 2) -> float:
    return math.fsum(coeffs(j) * x**j for j in range(start, stop, step))


def exact_suite(scale: float, quad: QuadSpec) -> Iterator[Check]:
    B = X.bernoulli_number
    yield _exact("exact.bernoulli.B2", B(2) == Fraction(1, 6))
    yield _exact("exact.bernoulli.B12", B(12) == Fraction(-691, 2730))
    yield _exact("exact.bernoulli.odd-vanish", all(B(2 * j + 1) == 0 for j in range(1, 15)))
    yield _exact("exact.bernoulli-poly.at-zero",
                 all(X.bernoulli_polynomial(k)(0) == B(k) for k in range(21)))
    yield _exact("exact.faulhaber.grid",
                 all(X.faulhaber_sum(i, n) == sum(j**i for j in range(1, n + 1))
                     for i in range(13) for n in range(1, 51)))
    u = X.PolyQ.monomial
    F = Fraction
    kp = X.kernel_poly
    fam = X.KernelFamily
    E, Od, S, C = X.Parity.EVEN, X.Parity.ODD, X.Variant.SIN_PI_K, X.Variant.COS_2PI_K
    yield _exact("exact.kernel.even-sin.k1", kp(fam(E, S), 1) == u(0, F(-1, 6)) + u(2, F(1, 2)))
    yield _exact("exact.kernel.odd-sin.k1", kp(fam(Od, S), 1) == u(1, F(1, 6)) - u(3, F(1, 6)))
    yield _exact("exact.kernel.odd-cos.k1", kp(fam(Od, C), 1) == u(4, F(1, 3)) - u(2, F(1, 3)))
    yield _exact("exact.kernel.vanishing.k8", X.kernel_vanishing_check(8))
    for k in range(1, 7):
        yield _exact(f"exact.kernel.bernoulli-form.even.k{k}",
                     kp(fam(E, S), k) == bernoulli_kernel_form(2 * k))
        yield _exact(f"exact.kernel.bernoulli-form.odd.k{k}",
                     kp(fam(Od, S), k) == bernoulli_kernel_form(2 * k + 1))
    yield _exact("exact.zeta2", X.zeta_even_exact(1) == Fraction(1, 6))
    yield _exact("exact.zeta4", X.zeta_even_exact(2) == Fraction(1, 90))
    for k, n in ((3, 9), (3, 10), (4, 12), (5, 7)):
        yield _exact(f"exact.indicator.k{k}.n{n}",
                     X.indicator_divides(k, n) == (1 if n % k == 0 else 0))
    for k, n in INDICATOR_POINTS:
        yield _close(f"exact.indicator-series.k{k}.n{n}", 0.0,
                     X.indicator_series_check(k, n, 40), 1e-12 * scale)
        yield _close(f"exact.indicator-series-odd.k{k}.n{n}", 0.0,
                     X.indicator_series_check(k, n, 40, odd=True), 1e-12 * scale)


INDICATOR_POINTS = ((2, 0.5), (3, 2.3), (4, 1.7), (5, 3.14), (2.5, 0.9))


def bernoulli_kernel_form(order: int) -> X.PolyQ:
    """The kernel polynomial of the given order rebuilt from B_order(u) and B_order(u/2)."""
    b = X.bernoulli_polynomial(order)
    diff = b - b.scale_argument(Fraction(1, 2)) * Fraction(2) ** (order - 1)
    k = order // 2
    sign = (-1) ** k
    if order % 2 == 0:
        return diff * Fraction(-2 * sign, math.factorial(order))
    return diff * Fraction(2 * sign, math.factorial(order))


def harmonic_suite(scale: float, quad: QuadSpec) -> Iterator[Check]:
    for variant in X.Variant:
        for k in range(1, 7):
            for n in range(1, 31):
                yield _close(f"harmonic.integer.{variant.value}.k{k}.n{n}",
                             float(O.direct_harmonic(k, n)), h_value(k, n, variant, quad),
                             1e-8 * scale)
    for k, val in H_AT_TWO:
        yield _close(f"harmonic.at-two.H{k}(2)", val, h_value(k, 2, spec=quad), 1e-9 * scale)
    for n in range(1, 11):
        yield _close(f"harmonic.H0.n{n}", 0.0, h_value(0, n, spec=quad), 1e-9 * scale)
    for k in (1, 2, 3):
        for n in (1, 5, 10, 20):
            yield _close(f"harmonic.recurrence.k{k}.n{n}", 0.0,
                         even_recurrence_residual(k, n, quad), 1e-7 * scale)
    x = 0.1
    yield _close("harmonic.genfun-even.n2", _series(lambda j: 1 + 2.0**-j, x, 2, 80),
                 genfun_even(2, x, quad), 1e-8 * scale)
    yield _close("harmonic.genfun-odd.n2", _series(lambda j: 1 + 2.0**-j, x, 1, 80),
                 genfun_odd(2, x, quad), 1e-8 * scale)


H_AT_TWO = ((2, 1.25), (4, 17 / 16), (6, 65 / 64), (3, 9 / 8), (5, 33 / 32))
FOURIER_MS = (1, 2, 3, 4, 6.5)


def fourier_suite(scale: float, quad: QuadSpec) -> Iterator[Check]:
    for m in FOURIER_MS:
        for k in range(1, 5):
            for trig in Trig:
                for n in range(1, 21):
                    yield _close(f"fourier.partial.{trig.value}.m{m}.k{k}.n{n}",
                                 O.direct_trig_sum(m, k, n, trig.value),
                                 partial_sum(FourierSpec(m, k, trig, n), quad), 1e-8 * scale)
    for cid, fs, oracle in (
        ("fourier.limit.S4_1", FourierSpec(4, 1, Trig.SIN), math.pi / 4),
        ("fourier.limit.C2_1", FourierSpec(2, 1, Trig.COS), -math.log(2)),
        ("fourier.limit.S4_2", FourierSpec(4, 2, Trig.SIN), O.catalan_series().value),
    ):
        yield _close(cid, oracle, limit_closed_form(fs, quad), 1e-8 * scale)
    for m in (2, 3, 4):
        for k in (1, 2):
            for fs in (FourierSpec(m, 2 * k, Trig.COS), FourierSpec(m, 2 * k + 1, Trig.SIN)):
                yield _close(f"fourier.limit-bernoulli.{fs.trig.value}.m{m}.k{fs.k}",
                             bernoulli_fourier_limit(fs), limit_closed_form(fs, quad), 1e-10 * scale)


def zeta_suite(scale: float, quad: QuadSpec) -> Iterator[Check]:
    for k in (1, 2, 3):
        oracle = O.zeta_series(2 * k + 1).value
        vals = {rep: zeta_odd(k, rep, quad) for rep in ZetaRepresentation}
        for rep, v in vals.items():
            yield _close(f"zeta.odd.k{k}.{rep.value}", oracle, v, 1e-9 * scale)
        tan = vals[ZetaRepresentation.TAN]
        for rep in (ZetaRepresentation.COT, ZetaRepresentation.BERNOULLI_COT):
            yield _close(f"zeta.agree.k{k}.tan-{rep.value}", tan, vals[rep], 1e-8 * scale)
    z_odd = [0.0] + [O.zeta_series(2 * j + 1, 2000).value for j in range(1, 120)]
    for x in (0.1, 0.25, 0.5, 0.75):
        even = _series(lambda j: float(X.zeta_even_exact(j // 2)) * math.pi**j, x, 2, 240)
        odd = _series(lambda j: z_odd[j // 2], x, 3, 240)
        yield _close(f"zeta.genfun-even.x{x}", even, zeta_genfun_even(x), 1e-8 * scale)
        yield _close(f"zeta.genfun-odd.x{x}", odd, zeta_genfun_odd(x, quad), 1e-8 * scale)
    z3 = O.zeta_series(3).value
    yield _close("zeta.euler.H1/n^2", 2 * z3, euler_sum_odd_orders(0, 1, quad), 1e-8 * scale)
    for r in (1, 2, 3):
        yield _close(f"zeta.euler.H0/n^{2 * r + 1}", 0.0, euler_sum_even_orders(0, r, quad),
                     1e-9 * scale)
    # (order of H, power of n, formula, formula's k, formula's r)
    for order, power, fn, k, r in ((2, 3, euler_sum_even_orders, 1, 1),
                                   (1, 4, euler_sum_odd_orders, 0, 2),
                                   (3, 2, euler_sum_odd_orders, 1, 1)):
        yield _close(f"zeta.euler.H{order}/n^{power}", O.euler_sum_brute(order, power).value,
                     fn(k, r, quad), 1e-6 * scale)


def limit_cases() -> list[tuple[str, Callable[[int], float], float, float]]:
    """(id, value-at-n, limit, scale m) for every limit theorem checked."""
    cases = []
    for k, m in ((0, 1), (1, 2), (2, 3), (3, 1), (1, 4)):
        lim = 1.0 if (k == 0 and m == 1) else m / 2
        cases.append((f"limits.theorem1.k{k}.m{m}",
                      lambda n, k=k, m=m: theorem1_integral(k, m, n), lim, m))
    for k, m in ((0, 2), (3, 1), (0, 4), (2, 3)):
        cases.append((f"limits.theorem2.k{k}.m{m}",
                      lambda n, k=k, m=m: theorem2_integral(k, m, n), m * math.log(m) / math.pi, m))
    for k in range(4):
        cases.append((f"limits.theorem3.k{k}", lambda n, k=k: theorem3_integral(k, n), 1.0, 1))
    for p in range(5):
        cases.append((f"limits.theorem4.p{p}",
                      lambda n, p=p: theorem4_integral(p // 2, n, odd=p % 2 == 1),
                      -1.0 if p == 0 else -0.5, 1))
    for k in (0, 2, 3):
        cases.append((f"limits.corollary1.k{k}", lambda n, k=k: corollary1_integral(k, n), 0.0, 1))
    return cases


def trend_ok(err_first: float, err_last: float) -> bool:
    return err_last <= NOISE_FLOOR or err_last * TREND_FACTOR <= err_first


def limits_suite(scale: float, quad: QuadSpec) -> Iterator[Check]:
    for cid, fn, lim, m in limit_cases():
        errs = {n: abs(fn(n) - lim) for n in LIMIT_N}
        e_last, e_ref = errs[LIMIT_N[-1]], errs[LIMIT_N[1]]
        tol = 0.05 * max(1.0, m) * scale
        yield Check(cid + ".bound", lim, lim + e_last, tol, e_last <= tol)
        yield Check(cid + ".trend", e_ref / TREND_FACTOR, e_last, NOISE_FLOOR,
                    trend_ok(e_ref, e_last))


SUITES: dict[str, Callable[[float, QuadSpec], Iterator[Check]]] = {
    "exact": exact_suite,
    "harmonic": harmonic_suite,
    "fourier": fourier_suite,
    "zeta": zeta_suite,
    "limits": limits_suite,
}


def run_suite(name: str, scale: float = 1.0, quad: Optional[QuadSpec] = None) -> list[Check]:
    quad = quad or QuadSpec()
    names = list(SUITES) if name == "all" else [name]
    out: list[Check] = []
    for n in names:
        out.extend(SUITES[n](scale, quad))
    return out
