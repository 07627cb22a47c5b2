"""Output formats.  CSV and LaTeX are rendered from the canonical JSON form,
never from the live objects, so the formats cannot disagree.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Iterable

FORMATS = ("json", "csv", "latex", "text")


def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# -- LaTeX ------------------------------------------------------------------


def _latex_rational(s: str) -> str:
    a = Fraction(s)
    if a.denominator == 1:
        return str(a.numerator)
    sign = "-" if a < 0 else ""
    return f"{sign}\\frac{{{abs(a.numerator)}}}{{{a.denominator}}}"


def _latex_monomial(var_powers: Iterable[tuple[str, int]]) -> str:
    out = ""
    for var, k in var_powers:
        if k == 1:
            out += var
        elif k > 1:
            out += f"{var}^{{{k}}}"
    return out


def latex_poly(coeffs: list[str], var: str = "q") -> str:
    parts = []
    for k, s in enumerate(coeffs):
        a = Fraction(s)
        if not a:
            continue
        mono = _latex_monomial([(var, k)])
        if mono and abs(a) == 1:
            body = mono
        else:
            body = _latex_rational(str(abs(a))) + mono
        parts.append(("-" if a < 0 else "+", body))
    if not parts:
        return "0"
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return head + "".join(f" {sign} {body}" for sign, body in parts[1:])


def latex_ratfunc(data: dict) -> str:
    num = latex_poly(data["num"])
    if data["den"] == ["1"]:
        return num
    return f"\\frac{{{num}}}{{{latex_poly(data['den'])}}}"


def latex_mpoly(data: dict) -> str:
    parts = []
    for t in data["terms"]:
        mono = _latex_monomial([("\\lambda", t["dl"]), ("X", t["dx"])])
        c = latex_ratfunc(t["c"])
        if mono and c == "1":
            parts.append(mono)
        elif mono:
            parts.append(f"\\left({c}\\right){mono}")
        else:
            parts.append(f"\\left({c}\\right)" if len(data["terms"]) > 1 else c)
    return " + ".join(parts) if parts else "0"


def latex_value(data: Any) -> str:
    if isinstance(data, str):
        return _latex_rational(data)
    if isinstance(data, list):
        return latex_poly(data, "x")
    if "terms" in data:
        return latex_mpoly(data)
    if "num" in data:
        return latex_ratfunc(data)
    raise TypeError(f"no LaTeX form for {data!r}")


# -- CSV --------------------------------------------------------------------


def _csv_text(header: list[str], rows: Iterable[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


def _join(coeffs: list[str]) -> str:
    return " ".join(coeffs)


def table_csv(entries: list) -> str:
    """One row per stored coefficient; polynomials in q are space-separated
    ascending coefficient lists."""
    rows = []
    for n, data in enumerate(entries):
        if isinstance(data, str):
            rows.append([n, "", "", data, "1"])
        elif isinstance(data, list):
            for k, c in enumerate(data):
                rows.append([n, "", k, c, "1"])
        elif "terms" in data:
            for t in data["terms"]:
                rows.append([n, t["dl"], t["dx"], _join(t["c"]["num"]), _join(t["c"]["den"])])
        else:
            rows.append([n, "", "", _join(data["num"]), _join(data["den"])])
    return _csv_text(["n", "dl", "dx", "num", "den"], rows)


def table_latex(entries: list, symbol: str) -> str:
    lines = ["\\begin{align*}"]
    for n, data in enumerate(entries):
        end = " \\\\" if n + 1 < len(entries) else ""
        lines.append(f"{symbol}_{{{n}}} &= {latex_value(data)}{end}")
    lines.append("\\end{align*}")
    return "\n".join(lines) + "\n"


def reports_csv(reports: list[dict]) -> str:
    rows = [
        [r["identity"], r["n"], r["r"], "pass" if r["pass"] else "fail", r.get("note", "")]
        for r in reports
    ]
    return _csv_text(["identity", "n", "r", "result", "note"], rows)


def reports_latex(reports: list[dict]) -> str:
    lines = ["\\begin{tabular}{lrrl}", "identity & $n$ & $r$ & result \\\\", "\\hline"]
    for r in reports:
        ident = r["identity"].replace("_", "\\_")
        lines.append(f"{ident} & {r['n']} & {r['r']} & {'pass' if r['pass'] else 'fail'} \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def rows_csv(rows: list[dict]) -> str:
    keys = list(rows[0]) if rows else ["N", "valuation"]
    return _csv_text(keys, ([r[k] for k in keys] for r in rows))
