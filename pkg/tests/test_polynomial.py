import json

import pytest
from hypothesis import given, strategies as st

from matkls.errors import DegreeExceedsRank, NonIntegralCoefficient, ZeroPolynomial
from matkls.polynomial import (
    NEG_INF,
    ONE,
    ZERO,
    Polynomial,
    count_real_roots,
    is_log_concave_no_internal_zeros,
    poly_bar,
    poly_mul,
)

P = Polynomial
coeff_lists = st.lists(st.integers(-50, 50), max_size=6)
polys = coeff_lists.map(Polynomial)


def test_mul_examples():
    assert poly_mul(P([1, 1]), P([1, -1])) == P([1, 0, -1])
    assert poly_mul(P([-1, 1]), P([-2, 1])) == P([2, -3, 1])
    assert poly_mul(ZERO, P([5, 0, 0, 1])) == ZERO


def test_canonical_form_and_zero_degree():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert P([0, 0]).coeffs == ()
    assert ZERO.degree == NEG_INF
    assert ZERO.degree < 0 and 2 * ZERO.degree < 1


def test_bar_examples():
    assert poly_bar(P([1, 1]), 3) == P([0, 0, 1, 1])
    assert poly_bar(ONE, 0) == ONE
    assert poly_bar(P([-1, 1]), 1) == P([1, -1])


def test_bar_rejects_high_degree():
    with pytest.raises(DegreeExceedsRank):
        poly_bar(P([1, 1, 1]), 1)


def test_log_concavity_examples():
    assert is_log_concave_no_internal_zeros(P([15, 35, 21]))
    assert not is_log_concave_no_internal_zeros(P([1, 0, 1]))
    assert is_log_concave_no_internal_zeros(P([1]))
    assert is_log_concave_no_internal_zeros(ZERO)
    # zeros at the ends are not internal
    assert is_log_concave_no_internal_zeros(P([0, 0, 1, 2, 1]))
    assert not is_log_concave_no_internal_zeros(P([1, 1, 5]))


def test_real_root_examples():
    assert count_real_roots(P([2, -3, 1])) == 2
    assert count_real_roots(P([15, 35, 21])) == 0
    assert count_real_roots(P([-1, 1])) == 1
    with pytest.raises(ZeroPolynomial):
        count_real_roots(ZERO)


def test_real_roots_repeated():
    # (t - 1)^3 (t + 2): two distinct roots, four with multiplicity
    f = P([-1, 1]) ** 3 * P([2, 1])
    assert count_real_roots(f) == 2
    assert count_real_roots(f, multiplicity=True) == 4
    g = P([1, 0, 1]) ** 2 * P([0, 1])
    assert count_real_roots(g, multiplicity=True) == 1


@given(polys, st.integers(0, 3))
def test_bar_is_involution(f, extra):
    r = max(len(f) - 1, 0) + extra
    assert poly_bar(poly_bar(f, r), r) == f


@given(polys, polys, st.integers(0, 2), st.integers(0, 2))
def test_bar_is_multiplicative(f, g, e1, e2):
    r1 = max(len(f) - 1, 0) + e1
    r2 = max(len(g) - 1, 0) + e2
    assert poly_bar(f * g, r1 + r2) == poly_bar(f, r1) * poly_bar(g, r2)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, polys, st.integers(-5, 5))
def test_evaluation_is_a_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


@given(st.integers(-30, 30).filter(bool), st.integers(-30, 30), st.integers(-30, 30))
def test_real_roots_match_discriminant(a, b, c):
    f = P([c, b, a])
    disc = b * b - 4 * a * c
    expected = 2 if disc > 0 else (1 if disc == 0 else 0)
    assert count_real_roots(f) == expected


def test_json_round_trip_and_big_coefficients():
    f = P([6, 5])
    assert f.to_json() == ["6", "5"]
    big = P([2**80 + 1, -(3**60)])
    text = json.dumps(big.to_json())
    assert Polynomial.from_json(text) == big
    with pytest.raises(ValueError):
        Polynomial.from_json([6, 5])


def test_from_fractions_checks_integrality():
    from fractions import Fraction

    assert Polynomial.from_fractions([Fraction(4, 2), Fraction(0)]) == P([2])
    with pytest.raises(NonIntegralCoefficient):
        Polynomial.from_fractions([Fraction(1, 3)])


def test_str():
    assert str(P([1, 5])) == "1 + 5t"
    assert str(P([-6, 10, -5, 1])) == "-6 + 10t - 5t^2 + t^3"
    assert str(ZERO) == "0"
