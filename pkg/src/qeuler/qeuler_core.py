"""Classical Euler numbers and polynomials, Carlitz q-Euler numbers and
polynomials, and the order-r q-Euler polynomials.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinatorics import binomial
from .exact_arith import RatFuncQ, UniPolyQ
from .multipoly import X, MPoly, qbracket_sym

_lock = threading.Lock()
_classical: list[Fraction] = [Fraction(1)]
_qnumbers: list[RatFuncQ] = [RatFuncQ.const(1)]


def classical_euler_number(n: int) -> Fraction:
    """E_n from (E+1)^n + E_n = 2*delta(0, n)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    with _lock:
        while len(_classical) <= n:
            m = len(_classical)
            s = sum(binomial(m, l) * _classical[l] for l in range(m))
            _classical.append(-s / 2)
        return _classical[n]


def classical_euler_poly(n: int) -> UniPolyQ:
    """E_n(x) as a polynomial in x (the UniPolyQ variable plays the role of x)."""
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = binomial(n, k) * classical_euler_number(k)
    return UniPolyQ(coeffs)


def carlitz_residual(values: list[RatFuncQ], n: int) -> RatFuncQ:
    """q * sum_l C(n,l) q^l E_{l,q} + E_{n,q}; vanishes for n >= 1."""
    q = RatFuncQ.qpow(1)
    s = RatFuncQ.const(0)
    for l in range(n + 1):
        s = s + binomial(n, l) * RatFuncQ.qpow(l) * values[l]
    return q * s + values[n]


def qeuler_number(n: int) -> RatFuncQ:
    """Carlitz q-Euler number E_{n,q}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    with _lock:
        while len(_qnumbers) <= n:
            m = len(_qnumbers)
            s = RatFuncQ.const(0)
            for l in range(m):
                s = s + binomial(m, l) * RatFuncQ.qpow(l) * _qnumbers[l]
            denom = RatFuncQ(UniPolyQ.monomial(m + 1) + 1)
            _qnumbers.append(-RatFuncQ.qpow(1) * s / denom)
        return _qnumbers[n]


@dataclass(frozen=True)
class QEulerNumberSeq:
    values: tuple[RatFuncQ, ...]

    def __post_init__(self):
        if not self.values or self.values[0] != 1:
            raise ValueError("E_{0,q} must be 1")
        for n in range(1, len(self.values)):
            if carlitz_residual(list(self.values), n):
                raise ValueError(f"E_{{{n},q}} violates the Carlitz recurrence")

    @classmethod
    def build(cls, n_max: int) -> QEulerNumberSeq:
        return cls(tuple(qeuler_number(n) for n in range(n_max + 1)))


@dataclass(frozen=True)
class ClassicalEulerSeq:
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = self.values
        for n in range(1, len(vals)):
            lhs = sum(binomial(n, l) * vals[l] for l in range(n + 1)) + vals[n]
            if lhs != 0:
                raise ValueError(f"E_{n} violates (E+1)^n + E_n = 0")

    @classmethod
    def build(cls, n_max: int) -> ClassicalEulerSeq:
        return cls(tuple(classical_euler_number(n) for n in range(n_max + 1)))


@lru_cache(maxsize=None)
def _bracket_power(k: int) -> MPoly:
    return qbracket_sym() ** k


@lru_cache(maxsize=None)
def qeuler_poly(n: int) -> MPoly:
    """E_{n,q}(x) = sum_l C(n,l) q^{lx} E_{l,q} [x]_q^{n-l}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = MPoly()
    for l in range(n + 1):
        term = (X ** l) * _bracket_power(n - l)
        out = out + binomial(n, l) * qeuler_number(l) * term
    return out


def _explicit(n: int, r: int) -> MPoly:
    one_minus_q = RatFuncQ(UniPolyQ((1, -1)))
    two_q = RatFuncQ(UniPolyQ((1, 1)))
    front = two_q ** r / one_minus_q ** n
    terms = {}
    for l in range(n + 1):
        w = RatFuncQ(1, UniPolyQ.monomial(l + 1) + 1) ** r
        terms[(0, l)] = front * ((-1) ** l * binomial(n, l)) * w
    return MPoly(terms)


@lru_cache(maxsize=None)
def qeuler_poly_explicit(n: int) -> MPoly:
    """[2]_q/(1-q)^n * sum_l C(n,l) (-1)^l q^{lx} / (1 + q^{l+1})."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _explicit(n, 1)


@lru_cache(maxsize=None)
def qeuler_poly_order(n: int, r: int) -> MPoly:
    """E^{(r)}_{n,q}(x) from the finite sum with weights (1 + q^{l+1})^{-r}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if r < 1:
        raise ValueError("order r must be >= 1")
    return _explicit(n, r)
