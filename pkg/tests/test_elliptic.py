from __future__ import annotations

import random
from fractions import Fraction

import pytest

from cayleymc.elliptic import (INF, ECPoint, LegendreCurve, OffCurveError, division_poly,
                               division_poly_squared, flow_check, is_torsion_x, mult_x_map, point_add,
                               point_order, psi_p_map, scalar_mul, scalar_mul_x,
                               torsion_x_poly)
from cayleymc.exactalg import QQ
from cayleymc.finitefield import GF
from cayleymc.poly import Poly, roots_in_field


def _naive_points(E: LegendreCurve) -> list[ECPoint]:
    F = E.field
    pts = [INF]
    for x in F.elements():
        for y in F.elements():
            if y * y == E.rhs(x):
                pts.append(ECPoint(x, y))
    return pts


def test_group_law_basics():
    E = LegendreCurve(QQ, 2)
    O = E.point(0, 0)
    assert point_add(E, O, INF) == O
    assert point_add(E, O, O) == INF
    with pytest.raises(OffCurveError):
        E.point(1, 1)
    with pytest.raises(ValueError):
        LegendreCurve(QQ, 1)


@pytest.mark.parametrize("q,lam", [(11, 2), (13, 5), (17, 3)])
def test_group_law_against_enumeration(q, lam):
    E = LegendreCurve(GF(q), lam)
    pts = _naive_points(E)
    assert E.group_order() == len(pts)
    rng = random.Random(q)
    for _ in range(30):
        P, Q, R = (rng.choice(pts) for _ in range(3))
        assert point_add(E, P, Q) == point_add(E, Q, P)
        assert point_add(E, point_add(E, P, Q), R) == point_add(E, P, point_add(E, Q, R))
        assert E.contains(point_add(E, P, Q))
        assert scalar_mul(E, len(pts), P) == INF
        assert scalar_mul(E, point_order(E, P), P) == INF


def test_group_order_over_quadratic_extension():
    E = LegendreCurve(GF(7, 2), 3)
    assert E.group_order() == len(_naive_points(E))


def test_division_polynomial_examples():
    E = LegendreCurve(QQ, 2)
    assert division_poly(E, 1) == Poly(QQ, [1])
    assert division_poly(E, 3) == Poly(QQ, [-4, 0, 12, -12, 3])
    assert division_poly_squared(E, 2) == E.cubic * 4


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_division_polynomial_degrees(m):
    E = LegendreCurve(QQ, Fraction(-3, 2))
    assert division_poly_squared(E, m).degree == m * m - 1


def test_mult_x_map_examples():
    E = LegendreCurve(QQ, 2)
    g1 = mult_x_map(E, 1)
    assert g1.degree == 1 and g1(Fraction(5, 3)) == Fraction(5, 3)
    g3 = psi_p_map(E, 3)
    assert g3.degree == 9
    for t in (0, 1, 2, None):
        assert g3(None if t is None else Fraction(t)) == (None if t is None else t)
    with pytest.raises(ValueError):
        psi_p_map(E, 9)
    with pytest.raises(ValueError):
        psi_p_map(E, 2)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 7])
def test_mult_x_map_agrees_with_scalar_multiplication(m):
    E = LegendreCurve(GF(101), 2)
    g = mult_x_map(E, m)
    assert g.degree == m * m
    rng = random.Random(m)
    for _ in range(40):
        P = E.random_point(rng)
        R = scalar_mul(E, m, P)
        assert g(P.x) == (None if R.is_infinity else R.x)


def test_composition_of_multiplication_maps():
    E = LegendreCurve(GF(31), 5)
    assert mult_x_map(E, 2).compose(mult_x_map(E, 3)) == mult_x_map(E, 6)


def test_torsion_polynomial_examples():
    E = LegendreCurve(QQ, 2)
    assert torsion_x_poly(E, 2) == E.cubic
    assert torsion_x_poly(E, 3) == division_poly(E, 3).monic()
    # 3 two-torsion roots plus (16 - 4) / 2 x-coordinates of exact order 4
    assert torsion_x_poly(E, 4).degree == 3 + 6


def test_torsion_polynomial_roots_have_small_order():
    E = LegendreCurve(QQ, 2)
    Ef = E.over(GF(13))
    assert is_torsion_x(Ef, 0, 10).order == 2
    F2 = GF(13, 2)
    E2 = E.over(F2)
    roots = roots_in_field(torsion_x_poly(E, 3).map_coeffs(F2))
    assert len(roots) == 4
    for r in roots:
        assert is_torsion_x(E2, r, 10).order == 3


@pytest.mark.parametrize("q,k,lam", [(13, 1, 2), (13, 2, 2), (11, 2, 3), (17, 1, 5)])
def test_twisted_multiplication_matches_division_polynomials(q, k, lam):
    E = LegendreCurve(GF(q, k), lam)
    rng = random.Random(q + k)
    twisted = 0
    for m in (2, 3, 5, 6):
        g = mult_x_map(E, m)
        for _ in range(25):
            x = E.field.random(rng)
            twisted += E.lift_x(x) is None
            assert scalar_mul_x(E, m, x) == g(x)
    assert twisted > 0


def test_flow_check_reference_case():
    r = flow_check(6, 5, 13, 100)
    assert r.passed and r.diagram_ok == 100 and r.degree == 25 and r.reduction_agrees


def test_flow_in_characteristic_p_is_inseparable():
    r = flow_check(2, 5, 5, 30)
    assert not r.separable
    assert r.diagram_ok == 30
