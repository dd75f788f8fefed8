from __future__ import annotations

import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayleymc.exactalg import (CycNum, GaloisElement, _poly_inverse_mod, conductor, cyclotomic_poly,
                               galois_apply, subfield_degree, totient, two_cos, two_sin, zeta)


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    for n in range(1, 40):
        assert len(cyclotomic_poly(n)) - 1 == totient(n)


def test_sums_and_products_of_roots():
    assert zeta(3) + zeta(3, 2) == -1
    x = zeta(7, 3) + Fraction(2, 5)
    assert x + 0 == x
    assert zeta(4) + zeta(4) == 2 * zeta(4)
    assert zeta(5) * zeta(5, 4) == 1
    assert CycNum.rational(2).inverse() == Fraction(1, 2)
    assert zeta(8) ** 2 == zeta(4)


def test_two_cos_two_sin():
    assert two_cos(1, 3) == 1
    assert two_cos(1, 2) == 0
    assert two_sin(1, 6) == 1
    for k, n in [(1, 5), (2, 7), (3, 8), (5, 12)]:
        assert abs(two_cos(k, n).to_complex() - 2 * cmath.cos(cmath.pi * k / n)) < 1e-12
        assert abs(two_sin(k, n).to_complex() - 2 * cmath.sin(cmath.pi * k / n)) < 1e-12


def test_galois_action():
    assert galois_apply(GaloisElement(5, 2), zeta(5)) == zeta(5, 2)
    assert galois_apply(GaloisElement(7, 3), CycNum.rational(Fraction(3, 4))) == Fraction(3, 4)
    c = two_cos(1, 5)
    assert galois_apply(GaloisElement(10, -1), c) == c


def test_subfield_degree_and_conductor():
    assert subfield_degree([CycNum.rational(Fraction(1, 2))]) == 1
    assert subfield_degree([zeta(5) + zeta(5, 4)]) == 2
    assert subfield_degree([zeta(7)]) == 6
    assert conductor([zeta(12, 3)]) == 4
    assert conductor([CycNum.rational(5)]) == 1


def test_descend_finds_the_smallest_order():
    x = zeta(5).lift(60)
    assert x.order == 60
    assert x.descend().order == 5
    assert x.descend() == x


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        CycNum.rational(0, 7).inverse()


def _random_element(rng: random.Random, n: int, size: int) -> CycNum:
    return CycNum(n, [rng.randint(-size, size) for _ in range(totient(n))], rng.randint(1, 9))


@pytest.mark.parametrize("n", [3, 8, 12, 15, 21, 35, 60, 84])
def test_inverse_agrees_with_polynomial_euclid(n):
    rng = random.Random(n)
    for _ in range(4):
        a = _random_element(rng, n, 40)
        if not a:
            continue
        ref = _poly_inverse_mod([Fraction(c, a.den) for c in a.num], list(cyclotomic_poly(n)))
        ref += [Fraction(0)] * (totient(n) - len(ref))
        assert a.inverse() == CycNum.from_coeffs(n, ref)


@pytest.mark.parametrize("n", [120, 180, 240])
def test_inverse_of_large_elements(n):
    a = _random_element(random.Random(n), n, 10**6)
    assert a * a.inverse() == 1


orders = st.sampled_from([1, 2, 3, 4, 5, 7, 8, 9, 12, 15])


@st.composite
def elements(draw):
    n = draw(orders)
    num = draw(st.lists(st.integers(-20, 20), min_size=totient(n), max_size=totient(n)))
    return CycNum(n, num, draw(st.integers(1, 6)))


@settings(max_examples=60, deadline=None)
@given(elements(), elements(), elements())
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if b:
        assert (a / b) * b == a


@settings(max_examples=60, deadline=None)
@given(elements(), elements())
def test_complex_embedding_is_a_ring_map(a, b):
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-6 * (1 + abs(a.to_complex() * b.to_complex()))
    assert abs((a + b).to_complex() - a.to_complex() - b.to_complex()) < 1e-9 * (1 + abs(a.to_complex()) + abs(b.to_complex()))


@settings(max_examples=40, deadline=None)
@given(elements())
def test_json_round_trip(a):
    assert CycNum.from_json(a.to_json()) == a
