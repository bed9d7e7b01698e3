import math
from fractions import Fraction

import pytest

from geompoly._numeric import DomainError, mp
from geompoly.quadrature import (
    QuadScheme,
    expm1_lhs,
    gauss_laguerre,
    laguerre_check,
    sine_expm1_integral,
    sine_sinh_integral,
    sinh_lhs,
)


def test_laguerre_examples():
    assert abs(laguerre_check(2, 1, 1).value.value - 3) < 1e-20
    assert abs(laguerre_check(1, Fraction(1, 2), 1).value.value - mp.mpf(1) / 2) < 1e-20
    for r in (Fraction(1, 3), 2, 5):
        q = laguerre_check(0, r, 7)
        assert abs(q.value.value - 1) < 1e-20
        assert q.scheme is QuadScheme.LAGUERRE


def test_laguerre_rule_moments():
    nodes, weights = gauss_laguerre(Fraction(3, 2), 6)
    # normalized moments of lam^a e^-lam are (a+1)_k
    for k in range(12):
        got = sum(w * x ** k for x, w in zip(nodes, weights))
        want = mp.rf(mp.mpf(5) / 2, k)
        assert abs(got - want) <= 1e-20 * want


def test_laguerre_errors():
    with pytest.raises(DomainError):
        laguerre_check(2, 0, 1)
    with pytest.raises(DomainError):
        laguerre_check(30, 1, 1, max_nodes=12)


def test_sinh_examples():
    q = sine_sinh_integral(1, 0, 1e-11)
    assert abs(q.value.value + mp.mpf(1) / 4) < 1e-10
    assert abs(float(sine_sinh_integral(1, 1).value.value) + math.e / (math.e + 1) ** 2) < 1e-9
    assert abs(sine_sinh_integral(2, 0).value.value) < 1e-12


def test_expm1_examples():
    e = math.e
    assert abs(float(sine_expm1_integral(1, 1).value.value) - e / (e - 1) ** 2) < 1e-9
    assert abs(sine_expm1_integral(2, 2).value.value - expm1_lhs(2, 2)) < 1e-9
    assert abs(sine_expm1_integral(3, 20).value.value - expm1_lhs(3, 20)) < 1e-8


def test_sine_errors():
    with pytest.raises(DomainError):
        sine_expm1_integral(1, 0)
    with pytest.raises(DomainError):
        sine_sinh_integral(0, 1)
    with pytest.raises(DomainError):
        sine_sinh_integral(1, -1)
    with pytest.raises(DomainError):
        sine_sinh_integral(1, 1, 1e-16)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("x", [0.25, 1.5, 3.0])
def test_sinh_representation(n, x):
    q = sine_sinh_integral(n, x, 1e-10)
    assert abs(q.value.value - sinh_lhs(n, x)) <= q.value.tol
