"""Exact combinatorial numbers: Stirling (both kinds), Lah, Bernoulli,
rising factorials and generalized binomial coefficients.

Triangles are memoized row by row; everything is returned as ``int`` or
``fractions.Fraction`` so callers never see rounding.
"""
from __future__ import annotations

import threading
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = [
    "TriangleKind",
    "TriangleCache",
    "stirling1",
    "stirling2",
    "lah",
    "bernoulli",
    "rising_factorial",
    "falling_factorial",
    "binomial_coeff",
    "bell",
]


class TriangleKind(Enum):
    STIRLING1 = "stirling1"
    STIRLING2 = "stirling2"
    LAH = "lah"


def _next_row(kind: TriangleKind, prev: tuple[int, ...], n: int) -> tuple[int, ...]:
    # prev is row n-1 (length n); returns row n (length n+1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        left = prev[k - 1]
        up = prev[k] if k < n else 0
        if kind is TriangleKind.STIRLING2:
            row[k] = k * up + left
        elif kind is TriangleKind.STIRLING1:
            row[k] = left - (n - 1) * up
        else:
            row[k] = (n - 1 + k) * up + left
    return tuple(row)


class TriangleCache:
    """Lazily grown triangle of exact integers.

    Row ``n`` holds entries for ``k = 0..n``. Growth happens under a lock and
    a row only becomes visible once fully built, so concurrent readers never
    see a partial row.
    """

    def __init__(self, kind: TriangleKind):
        self.kind = kind
        self.rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    @property
    def max_n(self) -> int:
        return len(self.rows) - 1

    def _grow(self, n: int) -> None:
        with self._lock:
            while len(self.rows) <= n:
                m = len(self.rows)
                self.rows.append(_next_row(self.kind, self.rows[m - 1], m))

    def row(self, n: int) -> tuple[int, ...]:
        if n < 0:
            raise ValueError(f"row index must be nonnegative, got {n}")
        if n >= len(self.rows):
            self._grow(n)
        return self.rows[n]

    def get(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError(f"indices must be nonnegative, got ({n}, {k})")
        if k > n:
            return 0
        return self.row(n)[k]


_STIRLING1 = TriangleCache(TriangleKind.STIRLING1)
_STIRLING2 = TriangleCache(TriangleKind.STIRLING2)
_LAH = TriangleCache(TriangleKind.LAH)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    return _STIRLING2.get(n, k)


def stirling1(n: int, k: int) -> int:
    """Signed Stirling number of the first kind s(n, k).

    Defined by x(x-1)...(x-n+1) = sum_k s(n, k) x^k, so s(2, 1) = -1.
    """
    return _STIRLING1.get(n, k)


def lah(n: int, k: int) -> int:
    """Unsigned Lah number L(n, k) = n!/k! * C(n-1, k-1)."""
    return _LAH.get(n, k)


def bell(n: int) -> int:
    """Bell number via the Bell triangle (independent of the Stirling cache)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple[Fraction, ...]:
    # sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, which yields B_1 = -1/2
    from math import comb

    table = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum((comb(m + 1, j) * table[j] for j in range(m)), Fraction(0))
        table.append(-acc / (m + 1))
    return tuple(table)


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2 (generating function t/(e^t - 1))."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    # grow in blocks so repeated small queries share one table
    size = max(32, 1 << (n.bit_length()))
    return _bernoulli_table(size)[n]


def _as_exact(q):
    if isinstance(q, (int, Fraction)):
        return Fraction(q)
    if isinstance(q, Rational):
        return Fraction(q.numerator, q.denominator)
    return q


def rising_factorial(q, k: int):
    """Pochhammer symbol (q)_k = q(q+1)...(q+k-1).

    Exact (``Fraction``) for int/Fraction input; any other numeric type is
    multiplied through in its own arithmetic.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    q = _as_exact(q)
    out = Fraction(1) if isinstance(q, Fraction) else q * 0 + 1
    for i in range(k):
        out *= q + i
    return out


def falling_factorial(q, k: int):
    """q(q-1)...(q-k+1)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    q = _as_exact(q)
    out = Fraction(1) if isinstance(q, Fraction) else q * 0 + 1
    for i in range(k):
        out *= q - i
    return out


def binomial_coeff(q, k: int):
    """Generalized binomial coefficient q(q-1)...(q-k+1)/k!."""
    from math import factorial

    out = falling_factorial(q, k)
    return out / factorial(k)
