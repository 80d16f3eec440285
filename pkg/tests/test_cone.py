from fractions import Fraction

import pytest

from qdisc.calculus import V, OneForm, d0, oneform_left_mul, oneform_right_mul, wedge
from qdisc.cone import (
    ConeError, ConeParams, PolyX, check_cone_relations, crit_unsolvable, crit_values,
    dy_closed_form, dy_formula, dy_ystar, dy_ystar_closed, ext_gcd_x,
    is_cone_element, is_cone_one_form, is_cone_two_form, verify_cone,
    witness_volume, witness_zN2_omega, witness_zstar2_omega, ystar_dy, ystar_dy_closed,
)
from qdisc.disc import X, Z, ZS, DiscElement, monomial
from qdisc.scalar import Scalar, q_int, q_pow

q = Scalar.q()


def test_params():
    P = ConeParams(3)
    assert P.y == Z ** 3 and P.y_star == ZS ** 3
    with pytest.raises(ConeError):
        ConeParams(1)


def test_membership():
    assert is_cone_element(X * Z ** 2, ConeParams(2))
    assert not is_cone_element(Z, ConeParams(2))
    assert is_cone_one_form(OneForm(ZS ** 2, DiscElement()), ConeParams(3))
    assert not is_cone_one_form(OneForm(ZS, DiscElement()), ConeParams(3))
    for n in range(2, 7):
        assert is_cone_two_form(V, ConeParams(n))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_membership_is_closed_under_products(n):
    P = ConeParams(n)
    gens = [X, P.y, P.y_star]
    for a in gens:
        for b in gens:
            assert is_cone_element(a * b, P)


def test_relations_examples():
    P2, P3 = ConeParams(2), ConeParams(3)
    assert P2.y * P2.y_star == (1 - X) * (1 - X.scale(q_pow(-2)))
    assert P2.y_star * P2.y == (1 - X.scale(q**2)) * (1 - X.scale(q**4))
    assert X * P3.y == (P3.y * X).scale(q**6)


@pytest.mark.parametrize("n", range(2, 7))
def test_cone_relations(n):
    assert check_cone_relations(ConeParams(n)).ok


def test_dy_examples():
    assert dy_closed_form(ConeParams(2)) == OneForm(
        DiscElement.scalar(q**2 + 1) - X.scale(q**4 + 1), DiscElement())
    expected = (DiscElement.scalar(q_int(3, 2)) - X.scale(q_pow(-2) * q_int(3, 4))) * Z
    assert dy_closed_form(ConeParams(3)) == OneForm(expected, DiscElement())


@pytest.mark.parametrize("n", range(2, 7))
def test_dy_matches_d0(n):
    form, record = dy_formula(ConeParams(n))
    assert record.passed
    assert form == d0(Z ** n)


@pytest.mark.parametrize("n", range(2, 6))
def test_ystar_dy_closed_forms(n):
    P = ConeParams(n)
    assert ystar_dy(P) == OneForm(ystar_dy_closed(P).to_disc(-2), DiscElement())
    assert dy_ystar(P) == OneForm(dy_ystar_closed(P).to_disc(-2), DiscElement())


def test_ext_gcd_example():
    p = PolyX([1, -1])
    r = PolyX([1, -q**2])
    g, a, b = ext_gcd_x(p, r)
    assert g == PolyX([1])
    assert a == PolyX([-q**2 / (1 - q**2)])
    assert b == PolyX([1 / (1 - q**2)])
    assert a * p + b * r == g


def test_ext_gcd_degenerate():
    p = PolyX([2, 0, q])
    g, a, b = ext_gcd_x(p, PolyX())
    assert g == p.monic() and a == PolyX([q.inv()]) and b.is_zero()
    g, a, b = ext_gcd_x(p, p)
    assert g == p.monic() and g != PolyX([1])
    assert a * p + b * p == g
    with pytest.raises(ConeError):
        ext_gcd_x(PolyX(), PolyX())


def test_ext_gcd_common_factor():
    common = PolyX.from_roots_form([3])
    p = common * PolyX.from_roots_form([1, 2])
    r = common * PolyX.from_roots_form([5])
    g, a, b = ext_gcd_x(p, r)
    assert g == common.monic()
    assert a * p + b * r == g


def test_root_sets_are_disjoint():
    # roots of prod(1 - q^e x) are x = q^-e; compare exponents
    for n in range(2, 12):
        first = {-2, -4}
        second = {2 * n - 4, 2 * n - 2}
        assert not first & second


@pytest.mark.parametrize("n", range(2, 7))
def test_witnesses(n):
    P = ConeParams(n)
    w1 = witness_zstar2_omega(P)
    assert not w1.residual()
    assert w1.combination() == OneForm(ZS ** 2, DiscElement())
    w2 = witness_zN2_omega(P)
    assert not w2.residual()
    expected = oneform_left_mul(w2.a.to_disc(), oneform_right_mul(OneForm(ZS ** 2, DiscElement()), P.y)) \
        + oneform_left_mul(w2.b.to_disc(), oneform_left_mul(P.y, OneForm(ZS ** 2, DiscElement())))
    assert expected == OneForm(monomial(0, n - 2), DiscElement())


def test_volume_witness():
    value = witness_volume(ConeParams(2))
    assert value == V.scale(-q**2)
    lhs = wedge(OneForm(DiscElement(), Z ** 2), OneForm(ZS ** 2, DiscElement()))
    half = Fraction(1, 2)
    assert lhs.coeff.terms[0].eval_at(half) == (-q**2).eval_at(half)


@pytest.mark.parametrize("n", range(2, 11))
def test_crit_has_no_solution(n):
    assert crit_unsolvable(n)
    assert all(v for _, v in crit_values(n))


def test_crit_range():
    ks = [k for k, _ in crit_values(4)]
    assert ks == [-6, -5, 2, 3]


def test_verify_cone_report():
    report = verify_cone(ConeParams(3), [Fraction(1, 2)])
    assert report.ok
    assert all(c.name.startswith("cone[N=3]") for c in report.checks)
