"""Exact scalars, dense polynomials in q over Q, and the field Q(q).

``Rational`` is :class:`fractions.Fraction`.  :class:`RatFuncQ` keeps every
value in canonical form (numerator and denominator coprime, denominator
monic), so equality of rational functions is equality of fields.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Union

from . import _zpoly as Z
from .errors import DivisionByZero, PoleAtPoint, ZeroDenominator

Rational = Fraction

Scalar = Union[int, Fraction]


def rational_to_str(a: Fraction) -> str:
    return str(Fraction(a))


def rational_from_str(s: str) -> Fraction:
    return Fraction(s)


def _term_str(c: Fraction, k: int, var: str) -> str:
    mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    if c.denominator != 1:
        return f"({c})*{mono}"
    return f"{c}*{mono}"


def format_coeffs(coeffs: Iterable[Fraction], var: str = "q") -> str:
    parts = [_term_str(c, k, var) for k, c in enumerate(coeffs) if c]
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


class UniPolyQ:
    """Dense polynomial over Q.  ``coeffs[i]`` is the coefficient of q**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def q(cls) -> UniPolyQ:
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> UniPolyQ:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPolyQ((other,))
        if not isinstance(other, UniPolyQ):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPolyQ({format_coeffs(self.coeffs)})"

    def __str__(self) -> str:
        return format_coeffs(self.coeffs)

    @staticmethod
    def _coerce(other) -> UniPolyQ:
        if isinstance(other, UniPolyQ):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPolyQ((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return UniPolyQ(res)

    __radd__ = __add__

    def __neg__(self) -> UniPolyQ:
        return UniPolyQ(-c for c in self.coeffs)

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
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPolyQ()
        res = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    res[i + j] += ai * bj
        return UniPolyQ(res)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> UniPolyQ:
        out = UniPolyQ((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_zpoly(self) -> tuple[Fraction, tuple]:
        """Split into (rational content, primitive integer polynomial)."""
        if not self.coeffs:
            return Fraction(0), ()
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = tuple(int(c * den) for c in self.coeffs)
        c, pp = Z.primitive(ints)
        return Fraction(c, den), pp

    def to_json(self) -> list[str]:
        return [rational_to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list[str]) -> UniPolyQ:
        return cls(rational_from_str(s) for s in data)


class RatFuncQ:
    """Element of Q(q) in canonical form.

    Internally the value is ``scale * N(q) / D(q)`` where ``N`` and ``D`` are
    coprime primitive integer polynomials with positive leading coefficient.
    That triple is unique, so it doubles as the equality key.  The public
    ``num``/``den`` pair (den monic over Q) is derived from it.
    """

    __slots__ = ("_c", "_n", "_d", "_hash")

    def __init__(self, num: UniPolyQ | Scalar = 0, den: UniPolyQ | Scalar = 1):
        num = UniPolyQ._coerce(num)
        den = UniPolyQ._coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RatFuncQ expects polynomials or rationals")
        if den.is_zero():
            raise ZeroDenominator("denominator is the zero polynomial")
        cn, n = num.to_zpoly()
        cd, d = den.to_zpoly()
        if not n:
            self._set(Fraction(0), (), Z.ONE)
            return
        g = Z.pgcd(n, d)
        if g != Z.ONE:
            n = Z.divexact(n, g)
            d = Z.divexact(d, g)
        self._set(cn / cd, n, d)

    def _set(self, c, n, d):
        self._c = c
        self._n = n
        self._d = d
        self._hash = None

    @classmethod
    def _raw(cls, c: Fraction, n: tuple, d: tuple) -> RatFuncQ:
        # caller guarantees canonical (n, d); only the sign may need moving
        obj = object.__new__(cls)
        if not n or not c:
            obj._set(Fraction(0), (), Z.ONE)
            return obj
        if n[-1] < 0:
            n = Z.neg(n)
            c = -c
        obj._set(c, n, d)
        return obj

    @classmethod
    def const(cls, c: Scalar) -> RatFuncQ:
        return cls._raw(Fraction(c), Z.ONE, Z.ONE)

    @classmethod
    def qpow(cls, k: int) -> RatFuncQ:
        """q**k for any integer k."""
        if k >= 0:
            return cls._raw(Fraction(1), Z.shift(Z.ONE, k), Z.ONE)
        return cls._raw(Fraction(1), Z.ONE, Z.shift(Z.ONE, -k))

    @classmethod
    def from_poly(cls, p: UniPolyQ) -> RatFuncQ:
        c, n = p.to_zpoly()
        return cls._raw(c, n, Z.ONE)

    # -- public canonical fields ------------------------------------------

    @property
    def num(self) -> UniPolyQ:
        lead = self._d[-1]
        return UniPolyQ(self._c * x / lead for x in self._n)

    @property
    def den(self) -> UniPolyQ:
        lead = self._d[-1]
        return UniPolyQ(Fraction(x, lead) for x in self._d)

    def is_zero(self) -> bool:
        return not self._n

    def is_const(self) -> bool:
        return len(self._n) <= 1 and len(self._d) == 1

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError(f"{self} is not a constant")
        if not self._n:
            return Fraction(0)
        return self._c * self._n[0] / self._d[0]

    def __bool__(self) -> bool:
        return bool(self._n)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, UniPolyQ)):
            other = _coerce(other)
        if not isinstance(other, RatFuncQ):
            return NotImplemented
        return (self._c, self._n, self._d) == (other._c, other._n, other._d)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._c, self._n, self._d))
        return self._hash

    # -- field operations -------------------------------------------------

    def __neg__(self) -> RatFuncQ:
        return RatFuncQ._raw(-self._c, self._n, self._d)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._n:
            return other
        if not other._n:
            return self
        a, b = self, other
        # Henrici: only the gcd of the two denominators can cancel
        g = Z.pgcd(a._d, b._d)
        da = Z.divexact(a._d, g) if g != Z.ONE else a._d
        db = Z.divexact(b._d, g) if g != Z.ONE else b._d
        ca, cb = a._c, b._c
        t = Z.add(
            Z.scale(Z.mul(a._n, db), ca.numerator * cb.denominator),
            Z.scale(Z.mul(b._n, da), cb.numerator * ca.denominator),
        )
        if not t:
            return RatFuncQ._raw(Fraction(0), (), Z.ONE)
        ct, t = Z.primitive(t)
        scale = Fraction(ct, ca.denominator * cb.denominator)
        if g == Z.ONE:
            return RatFuncQ._raw(scale, t, Z.mul(da, b._d))
        g2 = Z.pgcd(t, g)
        if g2 != Z.ONE:
            t = Z.divexact(t, g2)
            g = Z.divexact(g, g2)
        return RatFuncQ._raw(scale, t, Z.mul(Z.mul(da, db), g))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self, other
        if not a._n or not b._n:
            return RatFuncQ._raw(Fraction(0), (), Z.ONE)
        an, ad, bn, bd = a._n, a._d, b._n, b._d
        g1 = Z.pgcd(an, bd)
        if g1 != Z.ONE:
            an, bd = Z.divexact(an, g1), Z.divexact(bd, g1)
        g2 = Z.pgcd(bn, ad)
        if g2 != Z.ONE:
            bn, ad = Z.divexact(bn, g2), Z.divexact(ad, g2)
        return RatFuncQ._raw(a._c * b._c, Z.mul(an, bn), Z.mul(ad, bd))

    __rmul__ = __mul__

    def inverse(self) -> RatFuncQ:
        if not self._n:
            raise DivisionByZero("inverse of zero in Q(q)")
        return RatFuncQ._raw(1 / self._c, self._d, self._n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int) -> RatFuncQ:
        if k < 0:
            return self.inverse() ** (-k)
        out = RatFuncQ.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    # -- evaluation -------------------------------------------------------

    def __call__(self, q0: Scalar) -> Fraction:
        return ratfunc_eval(self, q0)

    def substitute(self, g: RatFuncQ) -> RatFuncQ:
        """Composition f(g(q))."""
        def horner(p):
            acc = RatFuncQ.const(0)
            for c in reversed(p):
                acc = acc * g + c
            return acc
        return self._c * horner(self._n) / horner(self._d)

    def __repr__(self) -> str:
        return f"RatFuncQ({self})"

    def __str__(self) -> str:
        num = format_coeffs(self.num.coeffs)
        if len(self._d) == 1:
            return num
        return f"({num})/({format_coeffs(self.den.coeffs)})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> RatFuncQ:
        return cls(UniPolyQ.from_json(data["num"]), UniPolyQ.from_json(data["den"]))


def _coerce(x) -> RatFuncQ:
    if isinstance(x, RatFuncQ):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFuncQ.const(x)
    if isinstance(x, UniPolyQ):
        return RatFuncQ.from_poly(x)
    return NotImplemented


Q = RatFuncQ.qpow(1)


def ratfunc_canonical(num: UniPolyQ, den: UniPolyQ) -> RatFuncQ:
    return RatFuncQ(num, den)


def ratfunc_arith(a: RatFuncQ, b: RatFuncQ, op: str) -> RatFuncQ:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def ratfunc_eval(f: RatFuncQ, q0: Scalar) -> Fraction:
    q0 = Fraction(q0)
    d = Z.evaluate(f._d, q0)
    if not d:
        raise PoleAtPoint(f"{f} has a pole at q = {q0}")
    return f._c * Z.evaluate(f._n, q0) / d
