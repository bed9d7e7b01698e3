"""Exact univariate polynomials and the geometric/exponential families.

``geometric_poly(n, r)`` builds sum_k S(n,k) (r)_k x^k for any rational r;
for r = 1 it is the classical geometric polynomial, for negative r the same
product formula gives the "negative-order" polynomials used in binomial
series, and r = 0 collapses to the Kronecker delta in n.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable

from .combinatorics import rising_factorial, stirling1, stirling2

__all__ = [
    "RationalPolynomial",
    "exponential_poly",
    "geometric_poly",
    "geometric_poly_recursive",
    "geometric_poly_stirling_form",
    "p_poly",
    "poly_eval",
    "poly_derivative",
    "X",
]


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    if isinstance(c, float):
        # exact binary value, no rounding
        return Fraction(c)
    return Fraction(c.numerator, c.denominator)


class RationalPolynomial:
    """Dense polynomial with ``Fraction`` coefficients, index = exponent.

    Canonical form trims trailing zeros; the zero polynomial has no
    coefficients. Instances are immutable and hashable.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def constant(cls, c) -> "RationalPolynomial":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "RationalPolynomial":
        return cls([0] * k + [c])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._c):
            return self._c[k]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPolynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == RationalPolynomial([other])._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"RationalPolynomial({[str(c) for c in self._c]})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            else:
                coef = str(c) if c.denominator == 1 else f"({c})"
                parts.append(coef + ("*" + mono if mono else ""))
        return " + ".join(parts).replace("+ -", "- ")

    def _coerce(self, other) -> "RationalPolynomial":
        if isinstance(other, RationalPolynomial):
            return other
        return RationalPolynomial([other])

    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self._c), len(o._c))
        return RationalPolynomial(self[k] + o[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-c for c in self._c)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, RationalPolynomial):
            s = _frac(other)
            return RationalPolynomial(c * s for c in self._c)
        if not self._c or not other._c:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = RationalPolynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(k * self._c[k] for k in range(1, len(self._c)))

    def __call__(self, x):
        return poly_eval(self, x)

    def compose(self, inner: "RationalPolynomial") -> "RationalPolynomial":
        out = RationalPolynomial()
        for c in reversed(self._c):
            out = out * inner + c
        return out


X = RationalPolynomial([0, 1])


def poly_eval(p: RationalPolynomial, q):
    """Horner evaluation; exact for rational ``q``, otherwise in q's arithmetic.

    Works for anything supporting ``*`` and ``+`` with Fractions, including
    truncated series.
    """
    if isinstance(q, (int, float)) and not isinstance(q, bool):
        q = _frac(q) if isinstance(q, int) else q
    coeffs = p.coeffs
    if not coeffs:
        return q * 0
    acc = q * 0 + coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * q + c
    return acc


def poly_derivative(p: RationalPolynomial) -> RationalPolynomial:
    return p.derivative()


def exponential_poly(n: int) -> RationalPolynomial:
    """Touchard/exponential polynomial phi_n(x) = sum_k S(n,k) x^k."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return RationalPolynomial(stirling2(n, k) for k in range(n + 1))


def geometric_poly(n: int, r=1) -> RationalPolynomial:
    """omega_{n,r}(x) = sum_k S(n,k) r(r+1)...(r+k-1) x^k for rational r."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    r = _frac(r)
    return RationalPolynomial(stirling2(n, k) * rising_factorial(r, k) for k in range(n + 1))


def geometric_poly_recursive(n: int, r=1) -> RationalPolynomial:
    """Same polynomial built from omega_{n+1,r} = (x^2+x) omega'_{n,r} + r x omega_{n,r}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    r = _frac(r)
    x2x = RationalPolynomial([0, 1, 1])
    rx = RationalPolynomial([0, r])
    w = RationalPolynomial([1])
    for _ in range(n):
        w = x2x * w.derivative() + rx * w
    return w


def geometric_poly_stirling_form(n: int, r=1) -> RationalPolynomial:
    """Double-sum form sum_{k,i} S(n,k) s(k,i) (-r)^i (-x)^k, first kind signed."""
    r = _frac(r)
    coeffs = []
    for k in range(n + 1):
        inner = sum((stirling1(k, i) * (-r) ** i for i in range(k + 1)), Fraction(0))
        coeffs.append(stirling2(n, k) * inner * (-1) ** k)
    return RationalPolynomial(coeffs)


def p_poly(n: int, k: int) -> RationalPolynomial:
    """P_k^n(x) = sum_{j<k} [prod_{m=0}^{k-j-1} (n-m)] C(k, j) x^j.

    The inner factor is a product (a falling factorial of length k-j), which
    makes P_{k-1}^k(t) equal the Lah partial sum sum_{j>=1} L(k,j) t^(j-1).
    ``k = 0`` gives the empty sum.
    """
    if k < 0:
        raise ValueError(f"P_k^n needs k >= 0, got k={k}")
    coeffs = []
    for j in range(k):
        prod = 1
        for m in range(k - j):
            prod *= n - m
        coeffs.append(prod * comb(k, j))
    return RationalPolynomial(coeffs)


def coefficients_str(p: RationalPolynomial) -> list[str]:
    """Coefficients as exact ``p/q`` strings (integers without denominator)."""
    return [str(c) for c in p.coeffs]


