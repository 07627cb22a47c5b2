"""Command-line front end.

Exit codes: 0 when every check passes, 1 on a mathematical counterexample or
an exhausted term budget, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional, Sequence

from . import serialize as S
from .degenerate import deg_qeuler_order, deg_qeuler_poly, deg_qeuler_poly_direct
from .errors import BudgetExceeded, DenominatorNotUnit
from .padic import (
    IntegrandSpec,
    convergence_report,
    finite_recurrence_check,
    is_odd_prime,
    shift_recurrence_report,
)
from .qeuler_core import (
    classical_euler_number,
    classical_euler_poly,
    qeuler_number,
    qeuler_poly,
    qeuler_poly_explicit,
    qeuler_poly_order,
)
from .qseries import DEFAULT_K, exact_series, series_deg_qeuler_order
from .verify import IDENTITIES, LITERAL_NOTE, run_suite

# family name -> (entry builder, LaTeX symbol)
FAMILIES: dict[str, tuple[Callable[[int, int], object], str]] = {
    "euler": (lambda n, r: classical_euler_number(n), "E"),
    "euler-poly": (lambda n, r: classical_euler_poly(n), "E"),
    "qnumbers": (lambda n, r: qeuler_number(n), "E"),
    "qpoly": (lambda n, r: qeuler_poly(n), "E"),
    "qpoly-explicit": (lambda n, r: qeuler_poly_explicit(n), "E"),
    "order": (lambda n, r: qeuler_poly_order(n, r), "E"),
    "degenerate": (lambda n, r: deg_qeuler_poly(n), "E"),
    "degenerate-direct": (lambda n, r: deg_qeuler_poly_direct(n), "E"),
    "degenerate-order": (lambda n, r: deg_qeuler_order(n, r), "E"),
}


def _rational(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}")


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {s}")
    return v


def _odd_prime(s: str) -> int:
    v = int(s)
    if not is_odd_prime(v):
        raise argparse.ArgumentTypeError(f"p must be an odd prime, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qeuler",
        description="Exact tables and identity checks for degenerate q-Euler polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", choices=S.FORMATS, default="json")
        p.add_argument("--out", type=Path, help="write to this file instead of stdout")

    t = sub.add_parser("table", help="tabulate a family for n = 0..n-max")
    t.add_argument("--family", choices=sorted(FAMILIES), required=True)
    t.add_argument("--n-max", type=_nonneg, required=True)
    t.add_argument("--r", type=_positive, default=1)
    common(t)

    v = sub.add_parser("verify", help="run identity suites")
    v.add_argument("--identity", action="append", choices=IDENTITIES + ("all",))
    v.add_argument("--n-max", type=_nonneg)
    v.add_argument("--r", type=_positive, default=3, help="largest order checked")
    v.add_argument("--K", type=_positive, default=DEFAULT_K)
    v.add_argument("--literal", action="store_true",
                   help="also scan the uncorrected series form (thm4)")
    common(v)

    s = sub.add_parser("series", help="q-series route against the exact route")
    s.add_argument("--n", type=_nonneg, required=True)
    s.add_argument("--x", type=_nonneg, default=0)
    s.add_argument("--lambda", dest="lam", type=_rational, default=Fraction(0))
    s.add_argument("--r", type=_positive, default=1)
    s.add_argument("--K", type=_positive, default=DEFAULT_K)
    common(s)

    pa = sub.add_parser("padic", help="fermionic p-adic q-integral checks")
    pa.add_argument("--p", type=_odd_prime, default=3)
    pa.add_argument("--q0", type=_rational)
    pa.add_argument("--n", type=_nonneg, required=True)
    pa.add_argument("--x", type=_nonneg, default=0)
    pa.add_argument("--lambda", dest="lam", type=_rational, default=Fraction(0))
    pa.add_argument("--r", type=_positive, default=1)
    pa.add_argument("--kind", choices=("power", "degenerate"), default="power")
    pa.add_argument("--check", choices=("integral", "recurrence", "shift"), default="integral")
    pa.add_argument("--N-max", dest="N_max", type=_positive, default=6)
    pa.add_argument("--M", type=_positive, help="precision; default N-max + 6")
    common(pa)
    return parser


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def cmd_table(args) -> int:
    build, symbol = FAMILIES[args.family]
    values = [build(n, args.r) for n in range(args.n_max + 1)]
    entries = [str(v) if isinstance(v, Fraction) else v.to_json() for v in values]
    if args.output == "json":
        text = S.dump_json(entries)
    elif args.output == "csv":
        text = S.table_csv(entries)
    elif args.output == "latex":
        text = S.table_latex(entries, symbol)
    else:
        text = "".join(f"{n}: {v}\n" for n, v in enumerate(values))
    _emit(text, args.out)
    return 0


def _render_reports(reports: list[dict], fmt: str, summary: str = "") -> str:
    if fmt == "json":
        return S.dump_json(reports)
    if fmt == "csv":
        return S.reports_csv(reports)
    if fmt == "latex":
        return S.reports_latex(reports)
    lines = []
    for r in reports:
        status = "PASS" if r["pass"] else "FAIL"
        extra = f"  {r['note']}" if r.get("note") else ""
        lines.append(f"{status} {r['identity']} n={r['n']} r={r['r']}{extra}")
    if summary:
        lines.append(summary)
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    idents = args.identity or ["all"]
    if "all" in idents:
        idents = list(IDENTITIES)
    reports = run_suite(idents, n_max=args.n_max, r_max=args.r, K=args.K,
                        literal=args.literal)
    data = [r.to_json() for r in reports]
    failed = [r for r in data if not r["pass"]]
    summary = ""
    if "thm4" in idents and args.literal and not failed:
        summary = f"thm4: {LITERAL_NOTE}"
    _emit(_render_reports(data, args.output, summary), args.out)
    if failed:
        sys.stderr.write("first failing report:\n" + S.dump_json(failed[0]))
        return 1
    return 0


def cmd_series(args) -> int:
    got = series_deg_qeuler_order(args.n, args.r, args.x, args.lam, args.K)
    want = exact_series(args.n, args.r, args.x, args.lam, args.K)
    data = {
        "identity": "thm4" if args.r == 1 else "thm7",
        "n": args.n, "r": args.r, "x": args.x, "lambda": str(args.lam),
        "series": got.to_json(), "exact": want.to_json(), "pass": got == want,
    }
    if args.output == "json":
        text = S.dump_json(data)
    elif args.output == "csv":
        rows = [{"k": k, "series": a, "exact": b}
                for k, (a, b) in enumerate(zip(data["series"]["coeffs"], data["exact"]["coeffs"]))]
        text = S.rows_csv(rows)
    elif args.output == "latex":
        text = S.latex_poly(data["series"]["coeffs"]) + f" + O(q^{{{args.K}}})\n"
    else:
        status = "PASS" if data["pass"] else "FAIL"
        text = f"{status} {data['identity']} n={args.n} r={args.r} x={args.x} " \
               f"lambda={args.lam} K={args.K}\n"
    _emit(text, args.out)
    return 0 if data["pass"] else 1


def cmd_padic(args, parser) -> int:
    p = args.p
    q0 = args.q0 if args.q0 is not None else Fraction(1 + p)
    M = args.M if args.M is not None else args.N_max + 6
    kind = "power_bracket" if args.kind == "power" else "deg_falling_bracket"
    try:
        spec = IntegrandSpec(kind, args.n, args.x, args.lam, args.r)
        if args.check == "integral":
            rep = convergence_report(spec, q0, range(1, args.N_max + 1), p, M)
        elif args.check == "shift":
            rep = shift_recurrence_report(spec, q0, range(1, args.N_max + 1), p, M)
        else:
            rep = finite_recurrence_check(spec, q0, args.N_max, p, M)
    except BudgetExceeded as exc:
        sys.stderr.write(f"qeuler padic: {exc}\n")
        return 1
    except (ValueError, DenominatorNotUnit) as exc:
        parser.error(str(exc))
    data = rep.to_json()
    if args.output == "json":
        text = S.dump_json(data)
    elif args.output == "csv":
        text = S.rows_csv(data["rows"])
    elif args.output == "latex":
        body = " \\\\\n".join(f"{r['N']} & {r['valuation']}" for r in data["rows"])
        text = "\\begin{tabular}{rr}\n$N$ & valuation \\\\\n\\hline\n" + body + "\n\\end{tabular}\n"
    else:
        lines = [f"N={r['N']} valuation={r['valuation']}" + (" (saturated)" if r["saturated"] else "")
                 for r in data["rows"]]
        lines.append("PASS" if data["pass"] else "FAIL")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if data["pass"] else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "table":
        return cmd_table(args)
    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "series":
        return cmd_series(args)
    return cmd_padic(args, parser)


if __name__ == "__main__":
    sys.exit(main())
