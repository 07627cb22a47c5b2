"""p-adic integers to finite precision and the fermionic q-integral on Z_p.

The integral is approximated by its level-N Riemann sum

    I_N(f) = 1/[p^N]_{-q} * sum_{y=0}^{p^N-1} f(y) (-q)^y,

computed exactly in Z/p^M.  q0 must be congruent to 1 mod p.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Literal, Optional

from .errors import BudgetExceeded, DenominatorNotUnit
from .exact_arith import RatFuncQ, Scalar, rational_to_str
from .multipoly import specialize
from .qeuler_core import qeuler_poly, qeuler_poly_order
from .degenerate import deg_qeuler_order, deg_qeuler_poly

DEFAULT_BUDGET = 10**7


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _check_prime(p: int) -> None:
    if not is_odd_prime(p):
        raise ValueError(f"p = {p} is not an odd prime")


@dataclass(frozen=True)
class PadicInt:
    """An element of Z_p known modulo p^M."""

    p: int
    M: int
    residue: int

    def __post_init__(self):
        _check_prime(self.p)
        if self.M < 1:
            raise ValueError("precision M must be >= 1")
        object.__setattr__(self, "residue", self.residue % self.p**self.M)

    @property
    def modulus(self) -> int:
        return self.p**self.M

    def valuation(self) -> int:
        """Largest v <= M with p^v dividing the residue (M means zero)."""
        r = self.residue
        if r == 0:
            return self.M
        v = 0
        while r % self.p == 0:
            r //= self.p
            v += 1
        return v

    def is_unit(self) -> bool:
        return self.residue % self.p != 0

    def _other(self, other) -> int:
        if isinstance(other, PadicInt):
            if (other.p, other.M) != (self.p, self.M):
                raise ValueError("mismatched p-adic rings")
            return other.residue
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return padic_from_rational(other, self.p, self.M).residue
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return PadicInt(self.p, self.M, self.residue + o)

    __radd__ = __add__

    def __neg__(self):
        return PadicInt(self.p, self.M, -self.residue)

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return PadicInt(self.p, self.M, self.residue - o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return PadicInt(self.p, self.M, self.residue * o)

    __rmul__ = __mul__

    def inverse(self) -> PadicInt:
        if not self.is_unit():
            raise DenominatorNotUnit(f"{self.residue} is not a unit mod {self.p}")
        return PadicInt(self.p, self.M, pow(self.residue, -1, self.modulus))

    def __truediv__(self, other):
        if not isinstance(other, PadicInt):
            other = PadicInt(self.p, self.M, self._other(other))
        return self * other.inverse()


def padic_from_rational(a: Scalar, p: int, M: int) -> PadicInt:
    a = Fraction(a)
    _check_prime(p)
    if a.denominator % p == 0:
        raise DenominatorNotUnit(f"{a} has denominator divisible by {p}")
    mod = p**M
    return PadicInt(p, M, a.numerator * pow(a.denominator, -1, mod))


Kind = Literal["power_bracket", "deg_falling_bracket"]


@dataclass(frozen=True)
class IntegrandSpec:
    """Integrand [x+y]_q^n or ([x+y]_q)_{n,lambda}, integrated r-fold in y."""

    kind: Kind
    n: int
    x: int = 0
    lam0: Fraction = Fraction(0)
    r: int = 1

    def __post_init__(self):
        if self.kind not in ("power_bracket", "deg_falling_bracket"):
            raise ValueError(f"unknown integrand kind {self.kind!r}")
        if self.n < 0 or self.x < 0:
            raise ValueError("n and x must be >= 0")
        if self.r < 1:
            raise ValueError("fold count r must be >= 1")
        object.__setattr__(self, "lam0", Fraction(self.lam0))

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "x": self.x,
            "lambda": rational_to_str(self.lam0),
            "r": self.r,
        }


def budget_from_env() -> int:
    raw = os.environ.get("QEULER_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def _validate(spec: IntegrandSpec, q0: Fraction, N: int, p: int, M: int, budget: Optional[int]):
    _check_prime(p)
    if N < 1:
        raise ValueError("level N must be >= 1")
    if M < N + 2:
        raise ValueError(f"precision M = {M} needs at least N + 2 = {N + 2} digits")
    qr = padic_from_rational(q0, p, M)
    if qr.residue % p != 1:
        raise ValueError(f"q0 = {q0} is not congruent to 1 mod {p}")
    if spec.kind == "deg_falling_bracket" and spec.lam0.denominator % p == 0:
        raise DenominatorNotUnit(f"lambda = {spec.lam0} is not p-integral")
    budget = budget_from_env() if budget is None else budget
    if p ** (spec.r * N) > budget:
        raise BudgetExceeded(f"{p}^{spec.r * N} terms exceed the budget of {budget}")
    return qr


class _Ring:
    """Precomputed residues for one (q0, p, M)."""

    def __init__(self, q0: Fraction, p: int, M: int):
        self.mod = p**M
        self.q = padic_from_rational(q0, p, M).residue

    def brackets(self, upto: int) -> list[int]:
        # [k]_q = 1 + q + ... + q^{k-1}, avoiding a division by 1 - q
        out = [0] * (upto + 1)
        for k in range(1, upto + 1):
            out[k] = (1 + self.q * out[k - 1]) % self.mod
        return out

    def integrand(self, spec: IntegrandSpec, lam: int, bracket: int) -> int:
        mod = self.mod
        acc = 1
        if spec.kind == "power_bracket":
            return pow(bracket, spec.n, mod)
        for j in range(spec.n):
            acc = acc * (bracket - j * lam) % mod
        return acc


def _fold_counts(P: int, r: int) -> list[int]:
    # number of r-tuples in [0, P) with a given sum; the integrand and the
    # weight (-q)^{y1+...+yr} depend on the tuple only through that sum
    counts = [1] * P
    for _ in range(r - 1):
        new = [0] * (len(counts) + P - 1)
        run = 0
        for s in range(len(new)):
            if s < len(counts):
                run += counts[s]
            if s - P >= 0:
                run -= counts[s - P]
            new[s] = run
        counts = new
    return counts


def fermionic_sum(
    spec: IntegrandSpec,
    q0: Scalar,
    N: int,
    p: int,
    M: int,
    budget: Optional[int] = None,
) -> PadicInt:
    q0 = Fraction(q0)
    _validate(spec, q0, N, p, M, budget)
    ring = _Ring(q0, p, M)
    mod = ring.mod
    P = p**N
    lam = padic_from_rational(spec.lam0, p, M).residue
    counts = _fold_counts(P, spec.r)
    br = ring.brackets(spec.x + len(counts))
    mq = (-ring.q) % mod
    total = 0
    w = 1
    for s, c in enumerate(counts):
        total = (total + c * w * ring.integrand(spec, lam, br[spec.x + s])) % mod
        w = w * mq % mod
    norm = 0
    w = 1
    for _ in range(P):
        norm = (norm + w) % mod
        w = w * mq % mod
    return PadicInt(p, M, total) / PadicInt(p, M, pow(norm, spec.r, mod))


def exact_target(spec: IntegrandSpec, q0: Scalar) -> Fraction:
    """The exact-route value the level-N sums should converge to."""
    if spec.kind == "power_bracket":
        poly = qeuler_poly(spec.n) if spec.r == 1 else qeuler_poly_order(spec.n, spec.r)
    else:
        poly = deg_qeuler_poly(spec.n) if spec.r == 1 else deg_qeuler_order(spec.n, spec.r)
    v = specialize(poly, X0=RatFuncQ.qpow(spec.x), lam0=spec.lam0)
    return v(Fraction(q0))


@dataclass(frozen=True)
class PadicReport:
    identity: str
    spec: IntegrandSpec
    q0: Fraction
    p: int
    M: int
    rows: tuple[dict, ...]
    passed: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "spec": self.spec.to_json(),
            "q0": rational_to_str(self.q0),
            "p": self.p,
            "M": self.M,
            "rows": [dict(r) for r in self.rows],
            "pass": self.passed,
        }
        if self.details:
            out["details"] = self.details
        return out

    def sort_key(self):
        return (self.identity, self.spec.n, self.spec.r)


def _row(N: int, value: PadicInt, **extra) -> dict:
    v = value.valuation()
    return {"N": N, "valuation": v, "saturated": v >= value.M, **extra}


def _eval_integrand(spec: IntegrandSpec, q0: Fraction, y: int, p: int, M: int) -> PadicInt:
    ring = _Ring(q0, p, M)
    lam = padic_from_rational(spec.lam0, p, M).residue
    b = ring.brackets(spec.x + y)[spec.x + y]
    return PadicInt(p, M, ring.integrand(spec, lam, b))


def finite_recurrence_check(
    spec: IntegrandSpec, q0: Scalar, N: int, p: int, M: int, budget: Optional[int] = None
) -> PadicReport:
    """q I_N(f_1) + I_N(f) = [2]_q (f(0) + q^P f(P)) / (1 + q^P), P = p^N.

    This finite-level identity is exact; the row also records the valuation
    of the deviation from the limiting right side [2]_q f(0).
    """
    if spec.r != 1:
        raise ValueError("the shift recurrence is for single integrals")
    q0 = Fraction(q0)
    P = p**N
    shifted = replace(spec, x=spec.x + 1)
    lhs = padic_from_rational(q0, p, M) * fermionic_sum(shifted, q0, N, p, M, budget) \
        + fermionic_sum(spec, q0, N, p, M, budget)
    qP = PadicInt(p, M, pow(padic_from_rational(q0, p, M).residue, P, p**M))
    two_q = padic_from_rational(1 + q0, p, M)
    f0 = _eval_integrand(spec, q0, 0, p, M)
    fP = _eval_integrand(spec, q0, P, p, M)
    finite_rhs = two_q * (f0 + qP * fP) / (qP + 1)
    residual = lhs - finite_rhs
    deviation = lhs - two_q * f0
    row = _row(N, residual, deviation_valuation=deviation.valuation())
    return PadicReport(
        "fermionic_recurrence", spec, q0, p, M, (row,), residual.valuation() == M
    )


def convergence_report(
    spec: IntegrandSpec,
    q0: Scalar,
    N_range: Iterable[int],
    p: int,
    M: int,
    budget: Optional[int] = None,
) -> PadicReport:
    """Valuation of I_N - exact for each N.

    Passes when the valuations are nondecreasing in N and the last one is at
    least max(N) - 1.
    """
    q0 = Fraction(q0)
    Ns = sorted(N_range)
    exact = exact_target(spec, q0)
    target = padic_from_rational(exact, p, M)
    rows = tuple(_row(N, fermionic_sum(spec, q0, N, p, M, budget) - target) for N in Ns)
    vals = [r["valuation"] for r in rows]
    ok = all(a <= b for a, b in zip(vals, vals[1:])) and vals[-1] >= Ns[-1] - 1
    return PadicReport(
        "integral", spec, q0, p, M, rows, ok,
        {"exact": rational_to_str(exact)},
    )


def shift_recurrence_report(
    spec: IntegrandSpec,
    q0: Scalar,
    N_range: Iterable[int],
    p: int,
    M: int,
    budget: Optional[int] = None,
) -> PadicReport:
    """q I_N(g(x+y+1)) + I_N(g(x+y)) - [2]_q g(x) for g the integrand.

    Passes when the valuation at level N is at least N - 1 for every N.
    """
    q0 = Fraction(q0)
    Ns = sorted(N_range)
    rows = []
    for N in Ns:
        rep = finite_recurrence_check(spec, q0, N, p, M, budget)
        v = rep.rows[0]["deviation_valuation"]
        rows.append({"N": N, "valuation": v, "saturated": v >= M,
                     "finite_identity_exact": rep.passed})
    ok = all(r["valuation"] >= r["N"] - 1 and r["finite_identity_exact"] for r in rows)
    return PadicReport("shift_recurrence", spec, q0, p, M, tuple(rows), ok)
