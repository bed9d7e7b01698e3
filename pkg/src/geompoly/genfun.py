"""Truncated Laurent series over the rationals and the generating-function
identities they certify.

A ``LaurentSeries`` stores coefficients for exponents ``low .. order-1``;
everything at or above ``order`` is unknown. Arithmetic propagates ``order``
conservatively, so a coefficient is never reported that the inputs do not
determine.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from math import factorial
from typing import Iterable

from ._numeric import DomainError
from .combinatorics import bernoulli, lah, rising_factorial, stirling2
from .polynomials import (
    RationalPolynomial,
    _frac,
    exponential_poly,
    geometric_poly,
    p_poly,
    poly_eval,
)

__all__ = [
    "LaurentSeries",
    "SeriesOp",
    "series_arith",
    "series_exp_log_pow",
    "egf_geometric",
    "ogf_in_r",
    "egf_in_r",
    "EgfForm",
    "boundary_laurent",
    "power_sum_expansion",
    "binomial_operator_expansion",
    "pochhammer_egf",
]


class LaurentSeries:
    """Truncated Laurent series sum_{e=low}^{order-1} c_e t^e + O(t^order)."""

    __slots__ = ("low", "coeffs", "order")

    def __init__(self, low: int, coeffs: Iterable, order: int | None = None):
        c = [_frac(v) for v in coeffs]
        if order is None:
            order = low + len(c)
        if low + len(c) > order:
            c = c[: max(0, order - low)]
        c = c + [Fraction(0)] * (order - low - len(c))
        # strip leading zeros so that low is the valuation
        i = 0
        while i < len(c) and c[i] == 0:
            i += 1
        self.low = low + i if i < len(c) else order
        self.coeffs = tuple(c[i:])
        self.order = order

    # constructors -----------------------------------------------------
    @classmethod
    def from_poly(cls, p: RationalPolynomial, order: int) -> "LaurentSeries":
        return cls(0, p.coeffs, order)

    @classmethod
    def constant(cls, c, order: int) -> "LaurentSeries":
        return cls(0, [c], order)

    @classmethod
    def variable(cls, order: int) -> "LaurentSeries":
        """The series t, known to O(t^order)."""
        return cls(0, [0, 1], order)

    @classmethod
    def exp_series(cls, order: int) -> "LaurentSeries":
        return cls(0, [Fraction(1, factorial(k)) for k in range(order)], order)

    # queries ----------------------------------------------------------
    @property
    def valuation(self) -> int:
        return self.low

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, e: int) -> Fraction:
        if e >= self.order:
            raise IndexError(f"coefficient of t^{e} is truncated (order {self.order})")
        if e < self.low:
            return Fraction(0)
        return self.coeffs[e - self.low]

    def __getitem__(self, e: int) -> Fraction:
        return self.coefficient(e)

    def coefficient_list(self, start: int, stop: int) -> list[Fraction]:
        return [self.coefficient(e) for e in range(start, stop)]

    def truncate(self, order: int) -> "LaurentSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series known to O(t^{self.order}) to O(t^{order})")
        return LaurentSeries(self.low, self.coeffs, order)

    def principal_part(self) -> dict[int, Fraction]:
        return {e: self.coefficient(e) for e in range(self.low, min(0, self.order))
                if self.coefficient(e) != 0}

    def __eq__(self, other) -> bool:
        # equality on the common known range
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        top = min(self.order, other.order)
        lo = min(self.low, other.low, top)
        return all(self.coefficient(e) == other.coefficient(e) for e in range(lo, top))

    def __hash__(self):
        return hash((self.low, self.coeffs, self.order))

    def __repr__(self) -> str:
        body = " + ".join(f"({c})t^{self.low + i}" for i, c in enumerate(self.coeffs) if c)
        return f"LaurentSeries({body or '0'} + O(t^{self.order}))"

    # arithmetic -------------------------------------------------------
    def _lift(self, other) -> "LaurentSeries":
        if isinstance(other, LaurentSeries):
            return other
        # exact scalar: known to every order this series is
        return LaurentSeries(0, [other], max(self.order, 1))

    def __add__(self, other):
        o = self._lift(other)
        order = min(self.order, o.order)
        low = min(self.low, o.low, order)
        return LaurentSeries(low, [self.coefficient(e) + o.coefficient(e)
                                   for e in range(low, order)], order)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.low, [-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            s = _frac(other)
            if s == 0:
                return LaurentSeries(0, [], self.order)
            return LaurentSeries(self.low, [c * s for c in self.coeffs], self.order)
        a, b = self, other
        order = min(a.order + b.low, b.order + a.low)
        low = a.low + b.low
        n = max(0, order - low)
        out = [Fraction(0)] * n
        for i, ca in enumerate(a.coeffs[:n]):
            if ca == 0:
                continue
            for j, cb in enumerate(b.coeffs[: n - i]):
                out[i + j] += ca * cb
        return LaurentSeries(low, out, order)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return reciprocal(self) ** (-k)
        if k == 0:
            return LaurentSeries(0, [1], max(self.order - self.low, 1))
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by t^k."""
        return LaurentSeries(self.low + k, self.coeffs, self.order + k)


class SeriesOp(Enum):
    ADD = "add"
    MUL = "mul"
    RECIP = "recip"
    COMPOSE = "compose"
    EXP = "exp"
    LOG = "log"
    POW = "pow"


def reciprocal(a: LaurentSeries) -> LaurentSeries:
    if a.is_zero():
        raise DomainError("reciprocal of a series with no known nonzero term")
    v = a.low
    m = a.order - v
    c0 = a.coeffs[0]
    inv0 = 1 / c0
    b = [inv0]
    for n in range(1, m):
        acc = Fraction(0)
        for k in range(1, min(n, len(a.coeffs) - 1) + 1):
            acc += a.coeffs[k] * b[n - k]
        b.append(-acc * inv0)
    return LaurentSeries(-v, b, -v + m)


def compose(outer: LaurentSeries, inner: LaurentSeries) -> LaurentSeries:
    """outer(inner(t)); needs outer.low >= 0 and inner valuation >= 1."""
    if outer.low < 0:
        raise DomainError("composition needs an outer power series (low >= 0)")
    if inner.low < 1:
        raise DomainError("composition needs an inner series with valuation >= 1")
    v = inner.low
    order = min(outer.order * v, inner.order)
    acc = LaurentSeries(0, [], order)
    # Horner on the known outer coefficients
    for e in range(outer.order - 1, -1, -1):
        acc = acc * inner + outer.coefficient(e)
        acc = acc.truncate(min(acc.order, order)) if acc.order > order else acc
    return LaurentSeries(acc.low, acc.coeffs, min(acc.order, order))


def series_exp(a: LaurentSeries) -> LaurentSeries:
    if a.low < 1:
        raise DomainError("exp needs a series with valuation >= 1")
    order = a.order
    b = [Fraction(1)]
    for n in range(1, order):
        acc = Fraction(0)
        for k in range(max(1, a.low), n + 1):
            ak = a.coefficient(k)
            if ak:
                acc += k * ak * b[n - k]
        b.append(acc / n)
    return LaurentSeries(0, b, order)


def series_log(a: LaurentSeries) -> LaurentSeries:
    if a.low != 0 or a.coefficient(0) != 1:
        raise DomainError("log needs a series with constant term 1")
    order = a.order
    c = [Fraction(0)]
    for n in range(1, order):
        acc = n * a.coefficient(n)
        for k in range(1, n):
            acc -= k * c[k] * a.coefficient(n - k)
        c.append(acc / n)
    return LaurentSeries(0, c, order)


def series_pow(a: LaurentSeries, q) -> LaurentSeries:
    """a^q = exp(q log a) for rational q; needs constant term 1."""
    q = _frac(q)
    return series_exp(series_log(a) * q)


def series_arith(op: SeriesOp, a: LaurentSeries, b: LaurentSeries | None = None) -> LaurentSeries:
    if op is SeriesOp.ADD:
        return a + b
    if op is SeriesOp.MUL:
        return a * b
    if op is SeriesOp.RECIP:
        return reciprocal(a)
    if op is SeriesOp.COMPOSE:
        return compose(a, b)
    raise ValueError(f"not an arithmetic op: {op}")


def series_exp_log_pow(op: SeriesOp, a: LaurentSeries, q=None) -> LaurentSeries:
    if op is SeriesOp.EXP:
        return series_exp(a)
    if op is SeriesOp.LOG:
        return series_log(a)
    if op is SeriesOp.POW:
        if q is None:
            raise ValueError("POW needs an exponent")
        return series_pow(a, q)
    raise ValueError(f"not an exp/log/pow op: {op}")


# identities -----------------------------------------------------------------

def egf_geometric(x, r, order: int) -> LaurentSeries:
    """t-expansion of (1 - x(e^t - 1))^(-r); [t^n] equals omega_{n,r}(x)/n!."""
    if order < 1:
        raise ValueError("order must be >= 1")
    x = _frac(x)
    em1 = LaurentSeries.exp_series(order) - 1
    base = 1 - em1 * x
    return series_pow(base, -_frac(r))


def ogf_in_r(n: int, x, order: int) -> tuple[LaurentSeries, LaurentSeries]:
    """Both sides of sum_r omega_{n,r}(x) t^r = t/(1-t) omega_n(x/(1-t)).

    Only valid for n >= 1: at n = 0 the left side is 1/(1-t).
    """
    if n < 1:
        raise DomainError("the ordinary generating function in r needs n >= 1")
    x = _frac(x)
    lhs = LaurentSeries(0, [poly_eval(geometric_poly(n, r), x) for r in range(order)], order)
    t = LaurentSeries.variable(order + 1)
    inv = reciprocal(1 - t)
    rhs = t * inv * poly_eval(geometric_poly(n, 1), inv * x)
    return lhs, rhs.truncate(order)


class EgfForm(Enum):
    K1 = "K1"  # e^t [phi_n(xt) + t sum_k S(n,k) P_{k-1}^k(t) x^k]
    K2 = "K2"  # e^t sum_k (sum_j S(n,k) L(k,j) t^j) x^k


def egf_in_r(n: int, x, order: int, form: EgfForm = EgfForm.K2) -> tuple[LaurentSeries, LaurentSeries]:
    """Both sides of the exponential generating function in r."""
    if order < 1:
        raise ValueError("order must be >= 1")
    x = _frac(x)
    lhs = LaurentSeries(0, [poly_eval(geometric_poly(n, r), x) / factorial(r)
                            for r in range(order)], order)
    et = LaurentSeries.exp_series(order)
    if form is EgfForm.K2:
        poly = RationalPolynomial()
        for k in range(n + 1):
            inner = RationalPolynomial([stirling2(n, k) * lah(k, j) for j in range(k + 1)])
            poly = poly + inner * x ** k
    else:
        phi = exponential_poly(n)
        poly = RationalPolynomial([c * x ** k for k, c in enumerate(phi.coeffs)])
        tail = RationalPolynomial()
        # k = 0 has no P_{-1}^0; S(n, 0) x^0 only enters through phi_n
        for k in range(1, n + 1):
            tail = tail + p_poly(k, k - 1) * (stirling2(n, k) * x ** k)
        poly = poly + RationalPolynomial([0, 1]) * tail
    rhs = et * LaurentSeries.from_poly(poly, order)
    return lhs, rhs.truncate(order)


def pochhammer_egf(k: int, order: int) -> tuple[LaurentSeries, LaurentSeries]:
    """sum_r (r)_k t^r / r!  versus  e^t sum_j L(k,j) t^j."""
    lhs = LaurentSeries(0, [rising_factorial(r, k) / factorial(r) for r in range(order)], order)
    rhs = LaurentSeries.exp_series(order) * LaurentSeries(0, [lah(k, j) for j in range(k + 1)], order)
    return lhs, rhs.truncate(order)


def boundary_laurent(n: int, order: int) -> LaurentSeries:
    """Laurent expansion about x = 0 of e^x/(e^x - 1) * omega_n(1/(e^x - 1)).

    The principal part is n!/x^(n+1) and the constant term is -B_{n+1}/(n+1).
    """
    if n < 1:
        raise DomainError("boundary_laurent needs n >= 1")
    if order < 1:
        raise ValueError("order must be >= 1")
    work = order + 2 * n + 4
    while True:
        em1 = LaurentSeries.exp_series(work) - 1
        u = reciprocal(em1)
        g = (u + 1) * poly_eval(geometric_poly(n, 1), u)
        if g.order >= order:
            return g.truncate(order)
        work += n + 2


def boundary_constant_term(n: int) -> Fraction:
    """-B_{n+1}/(n+1), the value the constant term must take."""
    return -bernoulli(n + 1) / (n + 1)


def power_sum_expansion(m: int, r: int, order: int) -> LaurentSeries:
    """x-expansion of omega_{m,r+1}(x/(1-x)) / (1-x)^(r+1).

    The coefficient of x^k should be C(k+r, k) k^m.
    """
    x = LaurentSeries.variable(order)
    inv = reciprocal(1 - x)
    y = x * inv
    w = poly_eval(geometric_poly(m, r + 1), y)
    return (w * inv ** (r + 1)).truncate(order)


def binomial_operator_expansion(p: int, r, order: int) -> LaurentSeries:
    """x-expansion of (1+x)^r omega_{p,-r}(-x/(1+x)) for rational r.

    Coefficient of x^k should be C(r, k) k^p (the binomial series with the
    extra n^p weight).
    """
    r = _frac(r)
    x = LaurentSeries.variable(order)
    one_plus = 1 + x
    inv = reciprocal(one_plus)
    y = -(x * inv)
    w = poly_eval(geometric_poly(p, -r), y)
    return (series_pow(one_plus, r) * w).truncate(order)
