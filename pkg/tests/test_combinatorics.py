import threading
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from geompoly.combinatorics import (
    TriangleCache,
    TriangleKind,
    bell,
    bernoulli,
    binomial_coeff,
    falling_factorial,
    lah,
    rising_factorial,
    stirling1,
    stirling2,
)

small = st.integers(min_value=0, max_value=14)
rationals = st.fractions(min_value=-6, max_value=6, max_denominator=9)


def test_stirling2_rows():
    assert [stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
    assert [stirling2(5, k) for k in range(6)] == [0, 1, 15, 25, 10, 1]


def test_stirling1_signed_rows():
    assert [stirling1(4, k) for k in range(5)] == [0, -6, 11, -6, 1]
    assert stirling1(0, 0) == 1


def test_lah_values():
    assert [lah(4, k) for k in range(5)] == [0, 24, 36, 12, 1]
    assert [lah(3, k) for k in range(4)] == [0, 6, 6, 1]


def test_k_above_n_is_zero_without_growing():
    cache = TriangleCache(TriangleKind.STIRLING2)
    assert cache.get(3, 7) == 0
    assert cache.max_n < 3 or cache.get(3, 3) == 1


def test_bell_numbers():
    assert [bell(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]


def test_bernoulli_convention():
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert all(bernoulli(n) == 0 for n in range(3, 21, 2))


def test_factorials_exact():
    assert rising_factorial(Fraction(1, 2), 3) == Fraction(15, 8)
    assert falling_factorial(Fraction(1, 2), 3) == Fraction(3, 8)
    assert binomial_coeff(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert rising_factorial(5, 0) == 1


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        stirling2(-1, 0)


def test_concurrent_growth_is_consistent():
    cache = TriangleCache(TriangleKind.LAH)
    out = []

    def work(n):
        out.append((n, tuple(cache.row(n))))

    threads = [threading.Thread(target=work, args=(n,)) for n in range(40, 0, -3)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for n, row in out:
        assert row == tuple(lah(n, k) for k in range(n + 1))


@given(small, small)
def test_lah_closed_form(n, k):
    if 1 <= k <= n:
        assert lah(n, k) == factorial(n) // factorial(k) * comb(n - 1, k - 1)
    elif k > n:
        assert lah(n, k) == 0


@given(small)
def test_stirling_orthogonality_rows(p):
    for k in range(p + 1):
        assert sum(stirling1(p, m) * stirling2(m, k) for m in range(p + 1)) == (p == k)


@given(rationals, st.integers(min_value=0, max_value=9))
def test_rising_falling_reflection(q, k):
    assert rising_factorial(q, k) == (-1) ** k * falling_factorial(-q, k)


@given(rationals, st.integers(min_value=0, max_value=9))
def test_binomial_is_falling_over_factorial(q, k):
    assert binomial_coeff(q, k) == falling_factorial(q, k) / factorial(k)
