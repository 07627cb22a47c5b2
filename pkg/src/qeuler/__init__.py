"""Exact arithmetic for Carlitz q-Euler and degenerate q-Euler polynomials."""

from .combinatorics import binomial, stirling1, stirling2, stirling_table
from .degenerate import (
    DegenerateFamily,
    check_thm6,
    deg_qeuler_order,
    deg_qeuler_poly,
    deg_qeuler_poly_direct,
    s2_transform,
)
from .exact_arith import (
    Rational,
    RatFuncQ,
    UniPolyQ,
    ratfunc_arith,
    ratfunc_canonical,
    ratfunc_eval,
)
from .multipoly import MPoly, deg_falling, qbracket_int, qbracket_sym, shift_x, specialize
from .padic import (
    IntegrandSpec,
    PadicInt,
    convergence_report,
    fermionic_sum,
    finite_recurrence_check,
    padic_from_rational,
)
from .qeuler_core import (
    classical_euler_number,
    classical_euler_poly,
    qeuler_number,
    qeuler_poly,
    qeuler_poly_explicit,
    qeuler_poly_order,
)
from .qseries import (
    QSeries,
    qs_from_ratfunc,
    series_deg_qeuler,
    series_deg_qeuler_order,
    summability_scan,
)

__version__ = "0.1.0"

__all__ = [
    "DegenerateFamily",
    "IntegrandSpec",
    "MPoly",
    "PadicInt",
    "QSeries",
    "RatFuncQ",
    "Rational",
    "UniPolyQ",
    "binomial",
    "check_thm6",
    "classical_euler_number",
    "classical_euler_poly",
    "convergence_report",
    "deg_falling",
    "deg_qeuler_order",
    "deg_qeuler_poly",
    "deg_qeuler_poly_direct",
    "fermionic_sum",
    "finite_recurrence_check",
    "padic_from_rational",
    "qbracket_int",
    "qbracket_sym",
    "qeuler_number",
    "qeuler_poly",
    "qeuler_poly_explicit",
    "qeuler_poly_order",
    "qs_from_ratfunc",
    "ratfunc_arith",
    "ratfunc_canonical",
    "ratfunc_eval",
    "s2_transform",
    "series_deg_qeuler",
    "series_deg_qeuler_order",
    "shift_x",
    "specialize",
    "stirling1",
    "stirling2",
    "stirling_table",
    "summability_scan",
]
