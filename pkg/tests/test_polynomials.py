from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from geompoly.polynomials import (
    RationalPolynomial,
    X,
    exponential_poly,
    geometric_poly,
    geometric_poly_recursive,
    p_poly,
    poly_derivative,
    poly_eval,
)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
degrees = st.integers(min_value=0, max_value=8)


def coeffs(*cs):
    return tuple(Fraction(c) for c in cs)


def test_exponential_examples():
    assert exponential_poly(4).coeffs == coeffs(0, 1, 7, 6, 1)
    assert exponential_poly(0).coeffs == coeffs(1)
    assert exponential_poly(3).coeffs == coeffs(0, 1, 3, 1)


def test_geometric_examples():
    assert geometric_poly(4, 2).coeffs == coeffs(0, 2, 42, 144, 120)
    assert geometric_poly(0, 0).coeffs == coeffs(1)
    assert geometric_poly(3, 0).is_zero()
    assert geometric_poly(3, -1) == -X
    assert geometric_poly_recursive(2, 3).coeffs == coeffs(0, 3, 12)


def test_p_poly_examples():
    assert p_poly(2, 1).coeffs == coeffs(2)
    assert p_poly(3, 2).coeffs == coeffs(6, 6)
    assert p_poly(4, 3).coeffs == coeffs(24, 36, 12)
    assert p_poly(5, 0).is_zero()
    with pytest.raises(ValueError):
        p_poly(3, -1)


def test_eval_examples():
    assert poly_eval(geometric_poly(4), 1) == 75
    assert poly_eval(geometric_poly(3, 2), -1) == -8
    assert poly_eval(exponential_poly(0), 0) == 1
    assert poly_eval(exponential_poly(5), 0) == 0


def test_derivative_examples():
    assert poly_derivative(geometric_poly(2)).coeffs == coeffs(1, 4)
    assert poly_derivative(RationalPolynomial([7])).is_zero()
    assert poly_derivative(X ** 3).coeffs == coeffs(0, 0, 3)


def test_canonical_form_and_str():
    p = RationalPolynomial([1, 0, Fraction(1, 2), 0, 0])
    assert p.degree == 2
    assert str(p) == "(1/2)*x^2 + 1"
    assert RationalPolynomial([0, 0]).coeffs == ()
    assert str(RationalPolynomial()) == "0"


@given(degrees, rationals)
def test_two_constructions_agree(n, r):
    assert geometric_poly(n, r) == geometric_poly_recursive(n, r)


@given(degrees, rationals)
def test_value_at_minus_one(n, r):
    assert poly_eval(geometric_poly(n, r), -1) == (-r) ** n


@given(st.lists(rationals, max_size=6), st.lists(rationals, max_size=6), rationals)
def test_ring_homomorphism(a, b, q):
    pa, pb = RationalPolynomial(a), RationalPolynomial(b)
    assert poly_eval(pa * pb, q) == poly_eval(pa, q) * poly_eval(pb, q)
    assert poly_eval(pa + pb, q) == poly_eval(pa, q) + poly_eval(pb, q)


@given(st.lists(rationals, max_size=5), st.lists(rationals, max_size=4), rationals)
def test_compose(a, b, q):
    pa, pb = RationalPolynomial(a), RationalPolynomial(b)
    assert poly_eval(pa.compose(pb), q) == poly_eval(pa, poly_eval(pb, q))


@given(st.lists(rationals, max_size=6), st.lists(rationals, max_size=6))
def test_leibniz(a, b):
    pa, pb = RationalPolynomial(a), RationalPolynomial(b)
    assert (pa * pb).derivative() == pa.derivative() * pb + pa * pb.derivative()
