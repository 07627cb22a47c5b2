"""Sparse polynomials in lambda and X over Q(q).

X stands for q**x, so x itself never appears: q**(l*x) is X**l, [x]_q is
(1 - X)/(1 - q) and the shift x -> x+1 is X -> qX.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from .exact_arith import RatFuncQ, UniPolyQ, _coerce

Key = tuple[int, int]  # (degree in lambda, degree in X)


class MPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Key, object] | Iterable[tuple[Key, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Key, RatFuncQ] = {}
        for key, c in items:
            dl, dx = key
            if dl < 0 or dx < 0:
                raise ValueError(f"negative exponent in monomial {key}")
            c = _coerce(c)
            if c is NotImplemented:
                raise TypeError(f"cannot use {type(c).__name__} as a coefficient")
            if key in acc:
                c = acc[key] + c
            acc[key] = c
        self._terms = {k: acc[k] for k in sorted(acc) if acc[k]}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Key, RatFuncQ]) -> MPoly:
        obj = object.__new__(cls)
        obj._terms = {k: terms[k] for k in sorted(terms) if terms[k]}
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> MPoly:
        return cls({(0, 0): c})

    @classmethod
    def lam(cls) -> MPoly:
        return cls({(1, 0): 1})

    @classmethod
    def X(cls) -> MPoly:
        return cls({(0, 1): 1})

    @property
    def terms(self) -> dict[Key, RatFuncQ]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, dl: int, dx: int) -> RatFuncQ:
        return self._terms.get((dl, dx), RatFuncQ.const(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def degree_lambda(self) -> int:
        return max((k[0] for k in self._terms), default=-1)

    @property
    def degree_x(self) -> int:
        return max((k[1] for k in self._terms), default=-1)

    def lambda_part(self, dl: int) -> MPoly:
        """Coefficient of lambda**dl, as a polynomial in X."""
        return MPoly._raw({(0, dx): c for (l, dx), c in self._terms.items() if l == dl})

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> MPoly:
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction, RatFuncQ, UniPolyQ)):
            return MPoly.const(other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out[k] + c if k in out else c
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        # group products per output monomial, then sum each group once
        groups: dict[Key, list[RatFuncQ]] = {}
        for (la, xa), ca in self._terms.items():
            for (lb, xb), cb in other._terms.items():
                groups.setdefault((la + lb, xa + xb), []).append(ca * cb)
        return MPoly._raw({k: _sum(v) for k, v in groups.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MPoly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = MPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __repr__(self) -> str:
        return f"MPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (dl, dx), c in self._terms.items():
            mono = "*".join(
                s for s in (_pow("lambda", dl), _pow("X", dx)) if s
            )
            cs = str(c)
            if not mono:
                parts.append(cs if len(self._terms) == 1 else f"({cs})")
            else:
                parts.append(mono if cs == "1" else f"({cs})*{mono}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "terms": [
                {"dl": dl, "dx": dx, "c": c.to_json()}
                for (dl, dx), c in self._terms.items()
            ]
        }

    @classmethod
    def from_json(cls, data: dict) -> MPoly:
        return cls(
            ((t["dl"], t["dx"]), RatFuncQ.from_json(t["c"])) for t in data["terms"]
        )


def _pow(name: str, k: int) -> str:
    if k == 0:
        return ""
    return name if k == 1 else f"{name}^{k}"


def _sum(values: list[RatFuncQ]) -> RatFuncQ:
    # pairwise summation keeps intermediate denominators small
    while len(values) > 1:
        values = [
            values[i] + values[i + 1] if i + 1 < len(values) else values[i]
            for i in range(0, len(values), 2)
        ]
    return values[0] if values else RatFuncQ.const(0)


LAMBDA = MPoly.lam()
X = MPoly.X()


def qbracket_int(x: int) -> UniPolyQ:
    """[x]_q = 1 + q + ... + q**(x-1) for integer x >= 0."""
    if x < 0:
        raise ValueError("qbracket_int expects x >= 0")
    return UniPolyQ([1] * x)


def qbracket_sym() -> MPoly:
    """[x]_q = (1 - X)/(1 - q) with X = q**x."""
    c = RatFuncQ(1, UniPolyQ((1, -1)))
    return MPoly({(0, 0): c, (0, 1): -c})


def shift_x(p: MPoly) -> MPoly:
    """Apply x -> x + 1, i.e. X -> qX."""
    return MPoly._raw(
        {(dl, dx): c * RatFuncQ.qpow(dx) for (dl, dx), c in p.items()}
    )


def deg_falling(a: MPoly, n: int) -> MPoly:
    """(a)_{n,lambda} = a (a - lambda) ... (a - (n-1) lambda)."""
    if n < 0:
        raise ValueError("deg_falling expects n >= 0")
    out = MPoly.const(1)
    for j in range(n):
        out = out * (a - j * LAMBDA)
    return out


def specialize(
    p: MPoly,
    X0: Optional[Union[RatFuncQ, int, Fraction]] = None,
    lam0: Optional[Union[RatFuncQ, int, Fraction]] = None,
) -> Union[MPoly, RatFuncQ]:
    """Substitute X -> X0 and/or lambda -> lam0.

    The result is a RatFuncQ once no lambda or X is left, otherwise an MPoly.
    """
    X0 = None if X0 is None else _coerce(X0)
    lam0 = None if lam0 is None else _coerce(lam0)
    powers: dict[tuple[str, int], RatFuncQ] = {}

    def power(tag, base, k):
        key = (tag, k)
        if key not in powers:
            powers[key] = base ** k
        return powers[key]

    groups: dict[Key, list[RatFuncQ]] = {}
    for (dl, dx), c in p.items():
        if lam0 is not None and dl:
            c = c * power("l", lam0, dl)
            dl = 0
        if X0 is not None and dx:
            c = c * power("x", X0, dx)
            dx = 0
        groups.setdefault((dl, dx), []).append(c)
    out = MPoly._raw({k: _sum(v) for k, v in groups.items()})
    if out.degree_lambda <= 0 and out.degree_x <= 0:
        return out.coeff(0, 0)
    return out


def as_mpoly(v: Union[MPoly, RatFuncQ]) -> MPoly:
    return v if isinstance(v, MPoly) else MPoly.const(v)
