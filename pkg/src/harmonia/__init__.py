"""Generalized harmonic numbers, partial Fourier sums and odd zeta values
from exact-kernel integral representations, with brute-force oracles."""
from .exactq import (KernelFamily, Parity, PolyQ, Rational, RemovableSingularityError, Variant,
                     bernoulli_number, bernoulli_polynomial, faulhaber_sum, indicator_divides,
                     indicator_series_check, kernel_poly, kernel_vanishing_check, zeta_even_exact)
from .fourier import (DivergentSumError, FourierSpec, Trig, TrivialZeroError,
                      corollary1_integral, limit_closed_form, partial_sum, theorem1_integral,
                      theorem2_integral)
from .harmonic import (HarmonicEval, genfun_even, genfun_odd, h_integral, h_value, h_zero_check,
                       theorem3_integral, theorem4_integral)
from .quad import (ConvergenceError, Endpoint, QuadratureError, QuadResult, QuadSpec, integrate,
                   integrate_or_raise)
from .zeta import (ZetaRepresentation, euler_sum_even_orders, euler_sum_odd_orders,
                   zeta_genfun_even, zeta_genfun_odd, zeta_odd)

__version__ = "0.1.0"

__all__ = [
    "Rational", "PolyQ", "Parity", "Variant", "KernelFamily", "RemovableSingularityError",
    "bernoulli_number", "bernoulli_polynomial", "faulhaber_sum", "kernel_poly",
    "kernel_vanishing_check", "zeta_even_exact", "indicator_divides", "indicator_series_check",
    "QuadSpec", "QuadResult", "Endpoint", "QuadratureError", "ConvergenceError", "integrate",
    "integrate_or_raise",
    "HarmonicEval", "h_integral", "h_value", "h_zero_check", "genfun_even", "genfun_odd",
    "theorem3_integral", "theorem4_integral",
    "Trig", "FourierSpec", "DivergentSumError", "TrivialZeroError", "partial_sum",
    "limit_closed_form", "theorem1_integral", "theorem2_integral", "corollary1_integral",
    "ZetaRepresentation", "zeta_odd", "zeta_genfun_even", "zeta_genfun_odd",
    "euler_sum_even_orders", "euler_sum_odd_orders",
]
