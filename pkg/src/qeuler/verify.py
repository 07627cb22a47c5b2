"""Identity suites over a grid, producing sorted Report lists."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional

from . import degenerate as D
from .multipoly import MPoly
from .qeuler_core import carlitz_residual, classical_euler_number, qeuler_number
from .qseries import (
    DEFAULT_K,
    exact_series,
    series_deg_qeuler,
    series_deg_qeuler_order,
    summability_scan,
)
from .reports import Report

IDENTITIES = ("thm1", "thm2", "thm4", "thm5", "thm6", "thm7", "thm8", "thm9", "eq17", "limits")

# grid sizes used when --n-max is not given
DEFAULT_N = {
    "thm1": 12, "thm2": 12, "thm4": 6, "thm5": 8, "thm6": 10,
    "thm7": 5, "thm8": 8, "thm9": 8, "eq17": 12, "limits": 12,
}

SERIES_LAMBDAS = (Fraction(0), Fraction(1), Fraction(1, 2))

LITERAL_NOTE = "literal form non-summable at n=0; corrected form verified"


def _series_report(identity: str, n: int, r: int, x: int, lam0: Fraction, K: int) -> Report:
    if r == 1:
        got = series_deg_qeuler(n, x, lam0, K)
    else:
        got = series_deg_qeuler_order(n, r, x, lam0, K)
    want = exact_series(n, r, x, lam0, K)
    diff = got - want
    details = {"x": x, "lambda": str(lam0), "K": K}
    if diff.valuation() is not None:
        details["first_mismatch"] = diff.valuation()
    return Report(identity, n, r, got == want, None, details=details)


def carlitz_reports(n_max: int) -> list[Report]:
    vals = [qeuler_number(n) for n in range(n_max + 1)]
    out = []
    for n in range(1, n_max + 1):
        res = carlitz_residual(vals, n)
        q1 = vals[n](1) == classical_euler_number(n)
        out.append(Report("carlitz", n, 1, not res and q1, MPoly.const(res)))
    return out


def run_identity(
    identity: str,
    n_max: Optional[int] = None,
    r_max: int = 3,
    K: int = DEFAULT_K,
    literal: bool = False,
) -> list[Report]:
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}")
    n_max = DEFAULT_N[identity] if n_max is None else n_max
    ns = range(n_max + 1)
    rs = range(1, r_max + 1)
    out: list[Report] = []
    if identity == "thm1":
        out = [D.check_thm1(n) for n in ns]
    elif identity == "thm2":
        out = [D.check_thm2(n) for n in ns]
    elif identity == "thm5":
        out = [D.check_thm5(n) for n in ns]
    elif identity == "thm6":
        out = [D.check_thm6(n) for n in ns]
    elif identity == "thm8":
        out = [D.check_thm8(n, r) for n in ns for r in rs]
    elif identity == "thm9":
        out = [D.check_thm9(n, r) for n in ns for r in rs]
    elif identity == "eq17":
        out = [D.check_eq17(n) for n in ns]
    elif identity == "limits":
        out = [D.check_lambda_zero(n) for n in ns]
        out += [D.check_q_one(n, x0) for n in ns if n <= 10 for x0 in range(6)]
        out += [D.check_lambda_one(n) for n in ns]
        out += carlitz_reports(n_max)
    elif identity == "thm4":
        out = [
            _series_report("thm4", n, 1, x, lam0, K)
            for n in ns for x in (0, 1, 2) for lam0 in SERIES_LAMBDAS
        ]
        scan = summability_scan(0, "corrected")
        out.append(Report("thm4-summability", 0, 1, scan.summable,
                          details={"valuations": list(scan.valuations), "verdict": scan.verdict}))
        if literal:
            lit = summability_scan(0, "literal_thm4")
            out.append(Report(
                "thm4-literal", 0, 1, lit.verdict == "non-summable",
                note="documented discrepancy: " + LITERAL_NOTE,
                details={"valuations": list(lit.valuations), "verdict": lit.verdict},
            ))
    elif identity == "thm7":
        out = [
            _series_report("thm7", n, r, x, Fraction(lam0), K)
            for n in ns for r in rs for x in (0, 1) for lam0 in (0, 1)
        ]
    return sorted(out, key=Report.sort_key)


def run_suite(identities: Iterable[str], **kw) -> list[Report]:
    reports: list[Report] = []
    for ident in sorted(set(identities)):
        reports += run_identity(ident, **kw)
    return sorted(reports, key=Report.sort_key)
