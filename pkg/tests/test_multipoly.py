from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qeuler.combinatorics import stirling1
from qeuler.degenerate import deg_qeuler_poly
from qeuler.exact_arith import RatFuncQ, UniPolyQ
from qeuler.multipoly import (
    LAMBDA,
    X,
    MPoly,
    deg_falling,
    qbracket_int,
    qbracket_sym,
    shift_x,
    specialize,
)
from qeuler.qeuler_core import qeuler_poly

q = RatFuncQ.qpow(1)


def test_qbracket_int():
    assert qbracket_int(0) == UniPolyQ()
    assert qbracket_int(1) == UniPolyQ((1,))
    assert qbracket_int(3) == UniPolyQ((1, 1, 1))


def test_qbracket_sym_substitutions():
    b = qbracket_sym()
    assert specialize(b, X0=q ** 3) == RatFuncQ(qbracket_int(3))
    assert specialize(b, X0=1) == 0
    assert specialize(b, X0=q ** 2) == RatFuncQ(UniPolyQ((1, 1)))


def test_qbracket_shift_identity():
    # [x+1]_q = 1 + q [x]_q
    b = qbracket_sym()
    assert shift_x(b) - q * b == 1
    assert shift_x(b) == MPoly({(0, 0): RatFuncQ(1, UniPolyQ((1, -1))),
                                (0, 1): -q / RatFuncQ(UniPolyQ((1, -1)))})


def test_shift_x_examples():
    assert shift_x(X) == q * X
    c = MPoly.const(RatFuncQ(1, UniPolyQ((1, 1))))
    assert shift_x(c) == c


def test_deg_falling_examples():
    assert deg_falling(X, 0) == 1
    assert deg_falling(qbracket_sym(), 0) == 1
    assert deg_falling(X, 2) == X * X - LAMBDA * X
    ordinary = X * (X - 1) * (X - 2)
    assert specialize(deg_falling(X, 3), lam0=1) == ordinary


def test_specialize_examples():
    assert specialize(X * X - LAMBDA * X, X0=1, lam0=0) == 1
    for n in range(13):
        assert specialize(deg_qeuler_poly(n), lam0=0) == qeuler_poly(n)


def test_specialize_partial_returns_mpoly():
    p = X * X - LAMBDA * X
    out = specialize(p, lam0=2)
    assert isinstance(out, MPoly)
    assert out == X * X - 2 * X


def test_json_round_trip_and_order():
    p = deg_qeuler_poly(3)
    data = p.to_json()
    keys = [(t["dl"], t["dx"]) for t in data["terms"]]
    assert keys == sorted(keys)
    assert MPoly.from_json(data) == p


def test_deg_falling_recursion():
    a = qbracket_sym() + LAMBDA * X
    for n in range(11):
        assert deg_falling(a, n + 1) == deg_falling(a, n) * (a - n * LAMBDA)


def test_stirling_expansion_of_deg_falling():
    for n in range(13):
        expansion = sum(
            (stirling1(n, m) * LAMBDA ** (n - m) * X ** m for m in range(n + 1)),
            MPoly(),
        )
        assert deg_falling(X, n) == expansion


def test_lambda_one_gives_ordinary_falling_factorial():
    b = qbracket_sym()
    for n in range(8):
        ordinary = MPoly.const(1)
        for j in range(n):
            ordinary = ordinary * (b - j)
        assert specialize(deg_falling(b, n), lam0=1) == ordinary


coef = st.sampled_from([
    RatFuncQ(1), RatFuncQ(F(-2, 3)), q, RatFuncQ(1, UniPolyQ((1, 1))),
    RatFuncQ(UniPolyQ((1, -1)), UniPolyQ((1, 0, 1))),
])
mpoly = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 3)), coef, max_size=4
).map(MPoly)


@settings(max_examples=40, deadline=None)
@given(mpoly, mpoly)
def test_shift_is_ring_homomorphism(a, b):
    assert shift_x(a * b) == shift_x(a) * shift_x(b)
    assert shift_x(a + b) == shift_x(a) + shift_x(b)


@settings(max_examples=40, deadline=None)
@given(mpoly, mpoly, mpoly)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == 0


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        MPoly({(-1, 0): 1})
