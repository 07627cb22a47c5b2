"""Power series in q truncated at q^K, and the infinite m-sums for the
degenerate q-Euler polynomials evaluated through them.

The sums implemented here are

    E_{n,q}(x|lambda)     = [2]_q   sum_m (-1)^m q^m ([x+m]_q)_{n,lambda}
    E^{(r)}_{n,q}(x|lambda) = [2]_q^r sum_m (-1)^m C(r+m-1, m) q^m ([x+m]_q)_{n,lambda}

Term m is divisible by q^m, so summing m < K is exact modulo q^K.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence

from .combinatorics import binomial
from .errors import PoleAtZero
from .exact_arith import RatFuncQ, Scalar, rational_to_str
from .multipoly import specialize
from .degenerate import deg_qeuler_order, deg_qeuler_poly

DEFAULT_K = 30


@dataclass(frozen=True)
class QSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def K(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, K: int) -> QSeries:
        return cls((Fraction(0),) * K)

    @classmethod
    def from_poly(cls, coeffs: Sequence[Scalar], K: int) -> QSeries:
        cs = list(coeffs[:K]) + [0] * max(0, K - len(coeffs))
        return cls(tuple(cs))

    def valuation(self) -> Optional[int]:
        """Order of vanishing in q; None if zero to this precision."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def truncate(self, K: int) -> QSeries:
        return QSeries(self.coeffs[:K])

    def __add__(self, other: QSeries) -> QSeries:
        K = min(self.K, other.K)
        return QSeries(tuple(a + b for a, b in zip(self.coeffs[:K], other.coeffs[:K])))

    def __neg__(self) -> QSeries:
        return QSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other: QSeries) -> QSeries:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QSeries(tuple(c * other for c in self.coeffs))
        K = min(self.K, other.K)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * K
        for i in range(K):
            if a[i]:
                for j in range(K - i):
                    out[i + j] += a[i] * b[j]
        return QSeries(tuple(out))

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"K": self.K, "coeffs": [rational_to_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> QSeries:
        coeffs = tuple(Fraction(s) for s in data["coeffs"])
        if len(coeffs) != data["K"]:
            raise ValueError("K does not match the coefficient count")
        return cls(coeffs)


def _series_div(num: Sequence[Fraction], den: Sequence[Fraction], K: int) -> QSeries:
    out = [Fraction(0)] * K
    d0 = den[0]
    for i in range(K):
        acc = num[i] if i < len(num) else Fraction(0)
        for j in range(max(0, i - len(den) + 1), i):
            acc -= out[j] * den[i - j]
        out[i] = acc / d0
    return QSeries(tuple(out))


def qs_from_ratfunc(f: RatFuncQ, K: int) -> QSeries:
    den = f.den.coeffs
    if not den[0]:
        raise PoleAtZero(f"{f} has a pole at q = 0")
    return _series_div(f.num.coeffs, den, K)


def _bracket_series(k: int, K: int) -> QSeries:
    return QSeries.from_poly([1] * k, K)


def _term_falling(x: int, m: int, n: int, lam0: Fraction, K: int) -> QSeries:
    b = _bracket_series(x + m, K)
    out = QSeries.from_poly([1], K)
    for j in range(n):
        shifted = list(b.coeffs)
        shifted[0] -= j * lam0
        out = out * QSeries(tuple(shifted))
    return out


def _shift(s: QSeries, m: int) -> QSeries:
    """Multiply by q^m, keeping the truncation order."""
    if m >= s.K:
        return QSeries.zero(s.K)
    return QSeries((Fraction(0),) * m + s.coeffs[: s.K - m])


def series_deg_qeuler_order(n: int, r: int, x: int, lam0: Scalar, K: int = DEFAULT_K) -> QSeries:
    if n < 0 or x < 0 or K < 1 or r < 1:
        raise ValueError("need n >= 0, r >= 1, x >= 0, K >= 1")
    lam0 = Fraction(lam0)
    total = QSeries.zero(K)
    for m in range(K):
        w = (-1) ** m * binomial(r + m - 1, m)
        # ([x+m]_q)_{n,lambda} only matters modulo q^{K-m}
        t = _term_falling(x, m, n, lam0, K - m)
        total = total + w * _shift(QSeries.from_poly(t.coeffs, K), m)
    two_q = QSeries.from_poly([1, 1], K)
    for _ in range(r):
        total = two_q * total
    return total


def series_deg_qeuler(n: int, x: int, lam0: Scalar, K: int = DEFAULT_K) -> QSeries:
    return series_deg_qeuler_order(n, 1, x, lam0, K)


def exact_series(n: int, r: int, x: int, lam0: Scalar, K: int = DEFAULT_K) -> QSeries:
    """Series of the exact value, from the Stirling construction."""
    poly = deg_qeuler_poly(n) if r == 1 else deg_qeuler_order(n, r)
    v = specialize(poly, X0=RatFuncQ.qpow(x), lam0=Fraction(lam0))
    return qs_from_ratfunc(v, K)


# -- summability ------------------------------------------------------------

Form = Literal["literal_thm4", "corrected"]


@dataclass(frozen=True)
class SummabilityReport:
    n: int
    form: Form
    valuations: tuple[Optional[int], ...]
    verdict: Literal["summable", "non-summable", "inconclusive"]

    @property
    def summable(self) -> bool:
        return self.verdict == "summable"

    def to_json(self) -> dict:
        return {
            "identity": f"thm4-{self.form}",
            "n": self.n,
            "form": self.form,
            "valuations": list(self.valuations),
            "verdict": self.verdict,
        }


def _term_series(n: int, m: int, form: Form, x: int, lam0: Fraction, K: int) -> QSeries:
    two_q = QSeries.from_poly([1, 1], K)
    sign = (-1) ** m
    if form == "literal_thm4":
        return sign * (two_q * _term_falling(x + 1, m, n, lam0, K))
    if form == "corrected":
        return sign * (two_q * _shift(_term_falling(x, m, n, lam0, K), m))
    raise ValueError(f"unknown form {form!r}")


def summability_scan(
    n: int, form: Form, m_max: int = 20, x: int = 0, lam0: Scalar = 0, K: int = 64
) -> SummabilityReport:
    """q-adic valuations of the first m_max+1 terms of the m-series.

    Summable: every tail from index m on has valuation >= m.  Non-summable:
    the tail minimum never grows over the scanned window.
    """
    lam0 = Fraction(lam0)
    vals = tuple(
        _term_series(n, m, form, x, lam0, K).valuation() for m in range(m_max + 1)
    )
    inf = K
    finite = [inf if v is None else v for v in vals]
    tail_min = [min(finite[m:]) for m in range(len(finite))]
    if all(t >= m for m, t in enumerate(tail_min)):
        verdict = "summable"
    elif tail_min[0] == tail_min[-1]:
        verdict = "non-summable"
    else:
        verdict = "inconclusive"
    return SummabilityReport(n, form, vals, verdict)
