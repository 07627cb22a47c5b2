
import pytest

from qeuler.degenerate import (
    DegenerateFamily,
    check_lambda_one,
    check_lambda_zero,
    check_q_one,
    check_thm1,
    check_thm6,
    check_thm8,
    deg_qeuler_order,
    deg_qeuler_poly,
    deg_qeuler_poly_direct,
    s2_transform,
)
from qeuler.errors import LambdaResidue
from qeuler.exact_arith import RatFuncQ
from qeuler.multipoly import LAMBDA, X, MPoly, qbracket_sym, shift_x, specialize
from qeuler.qeuler_core import qeuler_number, qeuler_poly, qeuler_poly_order

q = RatFuncQ.qpow(1)


def test_deg_qeuler_examples():
    assert deg_qeuler_poly(0) == 1
    assert deg_qeuler_poly(1) == qeuler_poly(1)
    assert deg_qeuler_poly(2) == qeuler_poly(2) - LAMBDA * qeuler_poly(1)


def test_lambda_degree_bound():
    for n in range(1, 13):
        assert deg_qeuler_poly(n).degree_lambda <= n - 1


def test_s2_transform_examples():
    fam = [deg_qeuler_poly(m) for m in range(13)]
    assert s2_transform(fam, 0) == fam[0]
    assert s2_transform(fam, 2) == qeuler_poly(2)
    for n in range(13):
        assert s2_transform(fam, n) == qeuler_poly(n)


def test_s2_transform_order_two():
    fam = [deg_qeuler_order(m, 2) for m in range(9)]
    for n in range(9):
        assert s2_transform(fam, n) == qeuler_poly_order(n, 2)


def test_s2_transform_rejects_lambda_residue():
    bogus = [MPoly.const(1), X, X * X]  # not a degenerate family
    with pytest.raises(LambdaResidue):
        s2_transform(bogus, 2)


def test_direct_route_examples():
    assert deg_qeuler_poly_direct(0) == 1
    assert deg_qeuler_poly_direct(1) == qbracket_sym() + X * qeuler_number(1)
    assert deg_qeuler_poly_direct(1) == deg_qeuler_poly(1)
    for n in range(9):
        assert deg_qeuler_poly_direct(n) == deg_qeuler_poly(n)


def test_order_examples():
    for n in range(11):
        assert deg_qeuler_order(n, 1) == deg_qeuler_poly(n)
    for r in (1, 2, 3):
        assert deg_qeuler_order(0, r) == 1
    assert deg_qeuler_order(2, 2) == qeuler_poly_order(2, 2) - LAMBDA * qeuler_poly_order(1, 2)


def test_thm6_hand_case():
    # n = 1 worked by hand: E_{1,q}(x) = [x]_q - q^{x+1}/(1+q^2)
    e1 = qbracket_sym() - (q / (1 + q ** 2)) * X
    assert e1 == deg_qeuler_poly(1)
    lhs = q * shift_x(e1) + e1
    assert lhs == (1 + q) * qbracket_sym()


@pytest.mark.parametrize("n", range(11))
def test_thm6_residual_vanishes(n):
    rep = check_thm6(n)
    assert rep.passed and rep.residual.is_zero()


def test_thm1_moment_route():
    for n in range(13):
        assert check_thm1(n).passed


def test_thm8_moment_route():
    for r in (1, 2, 3):
        for n in range(9):
            assert check_thm8(n, r).passed


def test_limits():
    for n in range(13):
        assert check_lambda_zero(n).passed
        assert check_lambda_one(n).passed
    for n in range(11):
        for x0 in range(6):
            assert check_q_one(n, x0).passed


def test_specialized_value_at_a_point():
    # E_{2,q}(1|lambda=1) at q = 4 from the definition through S1 and Eq.(4)
    v = specialize(deg_qeuler_poly(2), X0=q, lam0=1)
    e1 = qeuler_number(1)
    e2 = qeuler_number(2)
    # E_{2,q}(1) = [1]^2 + 2 q E_1 [1] + q^2 E_2, E_{1,q}(1) = 1 + q E_1
    e2x = 1 + 2 * q * e1 + q ** 2 * e2
    e1x = 1 + q * e1
    assert v == e2x - e1x
    assert v(4) == (e2x - e1x)(4)


def test_family_invariants():
    fam = DegenerateFamily.build(6)
    assert fam.polys[0] == 1 and fam.provenance == "thm1_transform"
    fam5 = DegenerateFamily.build(6, route="thm5_direct")
    assert fam5.polys == fam.polys
    fam8 = DegenerateFamily.build(4, r=2, route="thm8_transform")
    assert fam8.order == 2
    with pytest.raises(ValueError):
        DegenerateFamily(1, (MPoly.const(1), LAMBDA), "thm1_transform")
    with pytest.raises(ValueError):
        DegenerateFamily.build(3, r=2, route="thm1_transform")


def test_report_json_shape():
    data = check_thm6(2).to_json()
    assert set(data) == {"identity", "n", "r", "pass", "residual"}
    assert data["residual"] == {"terms": []}
    assert data["pass"] is True and data["identity"] == "thm6"
