"""Closed-form evaluation of power series with zeta, eta and Lerch
coefficients, each paired with a brute-force oracle over the defining series.

Every left-hand side is summed from n = 0 with n^p read as 1 at n = p = 0;
for p > 0 the n = 0 term vanishes, and for p = 0 this is the only indexing
under which the closed forms hold.

Closed forms weight special-function values by S(p,j) (r+1)_j, i.e. the
Gamma ratio Gamma(r+j+1)/Gamma(r+1) written as a rising factorial; it is
exact for rational r and a short product otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb, factorial
from typing import Callable

from ._numeric import REL_FLOOR, DomainError, is_integer, mp, to_mpf
from .combinatorics import (
    binomial_coeff,
    falling_factorial,
    rising_factorial,
    stirling1,
    stirling2,
)
from .polynomials import RationalPolynomial, _frac, geometric_poly, poly_eval
from .special import (
    RealScalar,
    digamma,
    eta_fn,
    hurwitz_zeta,
    lerch_phi,
    zeta_upper_bound,
)

__all__ = [
    "Method",
    "Identity",
    "ZetaVariant",
    "EtaVariant",
    "SeriesEvalReport",
    "zeta_series_closed",
    "zeta_series_p0",
    "eta_series_closed",
    "lerch_series_closed",
    "binom_product_identity",
    "binomial_power_series",
    "dirichlet_gf",
    "power_sum_closed",
    "direct_oracle",
    "closed_form",
    "evaluate",
]

CLOSED_TOL = mp.mpf("1e-13")
DIRECT_TOL = 1e-10
DIRECT_MAX_TERMS = 200_000


class Method(str, Enum):
    CLOSED = "CLOSED"
    DIRECT = "DIRECT"


class ZetaVariant(str, Enum):
    FULL_SHIFT_MINUS1 = "FULL_SHIFT_MINUS1"  # {zeta(n+r+1) - 1}, |x| < 2
    FULL_SHIFT = "FULL_SHIFT"                # zeta(n+r+1), |x| < 1
    UNIT_SHIFT_MINUS1 = "UNIT_SHIFT_MINUS1"  # {zeta(n+1) - 1}, |x| < 2
    UNIT_SHIFT = "UNIT_SHIFT"                # zeta(n+1), |x| < 1


class EtaVariant(str, Enum):
    ONE_MINUS = "ONE_MINUS"    # {1 - eta(n+r+1)}, |x| < 2
    FULL_SHIFT = "FULL_SHIFT"  # eta(n+r+1), |x| < 1
    UNIT_SHIFT = "UNIT_SHIFT"  # eta(n+1), |x| < 1


class Identity(str, Enum):
    FULL_SHIFT_MINUS1 = "FULL_SHIFT_MINUS1"
    FULL_SHIFT = "FULL_SHIFT"
    UNIT_SHIFT_MINUS1 = "UNIT_SHIFT_MINUS1"
    UNIT_SHIFT = "UNIT_SHIFT"
    P11 = "P11"
    ETA_ONE_MINUS = "ETA_ONE_MINUS"
    ETA_FULL_SHIFT = "ETA_FULL_SHIFT"
    ETA_UNIT_SHIFT = "ETA_UNIT_SHIFT"
    LERCH = "LERCH"
    BINOM = "BINOM"
    BINOMIAL_SERIES = "BINOMIAL_SERIES"
    DIRICHLET = "DIRICHLET"


@dataclass(frozen=True)
class SeriesEvalReport:
    value: RealScalar
    method: Method
    terms_used: int
    special_evals: int
    tail_bound: object = 0
    identity: str = ""
    params: dict = field(default_factory=dict)

    def __float__(self) -> float:
        return float(self.value.value)

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": {k: str(v) for k, v in self.params.items()},
            "method": self.method.value,
            "value": float(self.value.value),
            "value_digits": mp.nstr(self.value.value, 25),
            "tol": float(self.value.tol),
            "terms_used": self.terms_used,
            "special_evals": self.special_evals,
            "tail_bound": float(self.tail_bound),
        }


# helpers --------------------------------------------------------------------

def _param(v):
    """Exact Fraction for int/Fraction/"p/q" input, working mpf otherwise."""
    if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except ValueError:
            return to_mpf(v)
    return to_mpf(v)


def _nonneg_int(v, name: str) -> int:
    if not is_integer(v) or to_mpf(v) < 0:
        raise DomainError(f"{name} must be a nonnegative integer, got {v}")
    return int(to_mpf(v))


def _weights(r, p: int) -> list[tuple[int, object]]:
    """(j, S(p,j) (r+1)_j) for the nonzero Stirling entries."""
    out = []
    for j in range(p + 1):
        s = stirling2(p, j)
        if s:
            out.append((j, s * rising_factorial(r + 1, j)))
    return out


def _safe_tol(target, magnitude):
    return max(to_mpf(target), 64 * REL_FLOOR * to_mpf(magnitude))


class _Closed:
    """Accumulates weight * special-value terms with their certified errors."""

    def __init__(self, budget=CLOSED_TOL):
        self.budget = to_mpf(budget)
        self.terms = []
        self.err = mp.zero
        self.evals = 0

    def add_special(self, weight, fn: Callable, magnitude, *args, share: int = 1):
        w = to_mpf(weight)
        if w == 0:
            return
        tol = _safe_tol(self.budget / (share * abs(w)), magnitude)
        v = fn(*args, tol)
        self.evals += 1
        self.terms.append(w * v.value)
        self.err += abs(w) * v.tol

    def add_exact(self, value):
        self.terms.append(to_mpf(value))

    def report(self, identity, params) -> SeriesEvalReport:
        value = mp.fsum(self.terms)
        err = self.err + 8 * (len(self.terms) + 2) * mp.eps * sum(abs(t) for t in self.terms)
        return SeriesEvalReport(RealScalar(value, err), Method.CLOSED, len(self.terms),
                                self.evals, 0, identity, params)


def _check_abs(x, bound, what):
    if not abs(to_mpf(x)) < bound:
        raise DomainError(f"{what} needs |x| < {bound}, got x={x}")


# closed forms -----------------------------------------------------------------

def zeta_series_closed(r, p: int, x, variant: ZetaVariant | str) -> SeriesEvalReport:
    """Closed form of sum_n C(n+r,n) n^p c_n x^n with zeta-type coefficients c_n.

    FULL_SHIFT_MINUS1: c_n = zeta(n+r+1) - 1,  |x| < 2, r + p > 0.
    FULL_SHIFT:        c_n = zeta(n+r+1),      |x| < 1, r + p > 0.
    UNIT_SHIFT_MINUS1: c_n = zeta(n+1) - 1,    |x| < 2, integer r, p > 0.
    UNIT_SHIFT:        c_n = zeta(n+1),        |x| < 1, integer r, p > 0.
    """
    variant = ZetaVariant(variant)
    r = _param(r)
    p = _nonneg_int(p, "p")
    x = _param(x)
    xm = to_mpf(x)
    if to_mpf(r) < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    minus1 = variant in (ZetaVariant.FULL_SHIFT_MINUS1, ZetaVariant.UNIT_SHIFT_MINUS1)
    _check_abs(x, 2 if minus1 else 1, variant.value)
    shift = 2 - xm if minus1 else 1 - xm
    params = {"r": r, "p": p, "x": x}
    acc = _Closed()
    if variant in (ZetaVariant.FULL_SHIFT_MINUS1, ZetaVariant.FULL_SHIFT):
        if to_mpf(r) + p <= 0:
            raise DomainError("needs r + p > 0 (zeta(1, .) diverges)")
        ws = _weights(r, p)
        for j, w in ws:
            s = to_mpf(r) + j + 1
            acc.add_special(w * xm ** j, hurwitz_zeta, zeta_upper_bound(s, shift),
                            s, shift, share=len(ws))
    else:
        r = _nonneg_int(r, "r")
        if p < 1:
            raise DomainError("unit-shift variants need p > 0 (zeta(1, .) diverges)")
        ws = _weights(r, p)
        for j, w in ws:
            for m in range(r + 1):
                s = m + j + 1
                acc.add_special(w * comb(r, m) * xm ** (j + m), hurwitz_zeta,
                                zeta_upper_bound(s, shift), s, shift,
                                share=len(ws) * (r + 1))
    return acc.report(variant.value, params)


def zeta_series_p0(r: int, x) -> SeriesEvalReport:
    """sum_{n>=1} C(n+r,n) zeta(n+1) x^n for integer r >= 0, |x| < 1.

    Equals sum_{m=1}^r C(r,m) zeta(m+1, 1-x) x^m - psi(1-x) - gamma.
    """
    r = _nonneg_int(r, "r")
    x = _param(x)
    _check_abs(x, 1, "P11")
    xm = to_mpf(x)
    acc = _Closed()
    for m in range(1, r + 1):
        acc.add_special(comb(r, m) * xm ** m, hurwitz_zeta,
                        zeta_upper_bound(m + 1, 1 - xm), m + 1, 1 - xm, share=r + 1)
    acc.add_special(-1, digamma, 1 + abs(mp.log(1 - xm)) + 1 / (1 - xm), 1 - xm, share=r + 1)
    acc.add_exact(-mp.euler)
    return acc.report(Identity.P11.value, {"r": r, "x": x})


def eta_series_closed(r, p: int, x, variant: EtaVariant | str) -> SeriesEvalReport:
    """Eta analogues.

    ONE_MINUS:  c_n = 1 - eta(n+r+1), |x| < 2 -> eta(r+j+1, 2-x).
    FULL_SHIFT: c_n = eta(n+r+1),     |x| < 1 -> eta(r+j+1, 1-x).
    UNIT_SHIFT: c_n = eta(n+1),       |x| < 1, integer r -> C(r, x, j) sums.
    """
    variant = EtaVariant(variant)
    r = _param(r)
    p = _nonneg_int(p, "p")
    x = _param(x)
    xm = to_mpf(x)
    if to_mpf(r) < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    one_minus = variant is EtaVariant.ONE_MINUS
    _check_abs(x, 2 if one_minus else 1, "ETA_" + variant.value)
    shift = 2 - xm if one_minus else 1 - xm
    params = {"r": r, "p": p, "x": x}
    acc = _Closed()
    if variant is not EtaVariant.UNIT_SHIFT:
        ws = _weights(r, p)
        for j, w in ws:
            s = to_mpf(r) + j + 1
            acc.add_special(w * xm ** j, eta_fn, mp.power(shift, -s), s, shift, share=len(ws))
    else:
        r = _nonneg_int(r, "r")
        ws = _weights(r, p)
        for j, w in ws:
            for m in range(r + 1):
                s = m + j + 1
                acc.add_special(w * comb(r, m) * xm ** (j + m), eta_fn,
                                mp.power(shift, -s), s, shift, share=len(ws) * (r + 1))
    return acc.report("ETA_" + variant.value, params)


def _lerch_magnitude(s, z, a):
    z = to_mpf(z)
    k = 1 if z == -1 else 1 / (1 - abs(z))
    return k * mp.power(a, -s)


def lerch_series_closed(r: int, p: int, x, z, a) -> SeriesEvalReport:
    """sum_{n>=0} C(n+r,n) n^p Phi(n+r+1, z, a) x^n
    = sum_j S(p,j) (r+1)_j x^j Phi(r+j+1, z, a-x), for |x| < a, |z| <= 1, z != 1."""
    r = _nonneg_int(r, "r")
    p = _nonneg_int(p, "p")
    x = _param(x)
    z = _param(z)
    a = _param(a)
    xm, zm, am = to_mpf(x), to_mpf(z), to_mpf(a)
    if not am > 0:
        raise DomainError(f"LERCH needs a > 0, got a={a}")
    _check_abs(x, am, "LERCH")
    if zm == 1 or abs(zm) > 1:
        raise DomainError(f"LERCH needs |z| <= 1 and z != 1, got z={z}")
    acc = _Closed()
    ws = _weights(r, p)
    for j, w in ws:
        s = r + j + 1
        acc.add_special(w * xm ** j, lerch_phi, _lerch_magnitude(s, zm, am - xm),
                        s, zm, am - xm, share=len(ws))
    return acc.report(Identity.LERCH.value, {"r": r, "p": p, "x": x, "z": z, "a": a})


def binom_product_identity(r: int, p: int, x) -> SeriesEvalReport:
    """sum_k C(k+r,k) C(k,p) x^k = C(p+r,p) x^p / (1-x)^(p+r+1), |x| < 1."""
    r = _nonneg_int(r, "r")
    p = _nonneg_int(p, "p")
    x = _param(x)
    _check_abs(x, 1, "BINOM")
    xm = to_mpf(x)
    value = comb(p + r, p) * xm ** p / (1 - xm) ** (p + r + 1)
    err = 16 * (p + r + 2) * mp.eps * abs(value)
    return SeriesEvalReport(RealScalar(value, err), Method.CLOSED, 1, 0, 0,
                            Identity.BINOM.value, {"r": r, "p": p, "x": x})


def binomial_power_series(r, p: int, x) -> SeriesEvalReport:
    """sum_n C(r,n) n^p x^n = (1+x)^r sum_k S(p,k) r(r-1)...(r-k+1) (x/(1+x))^k."""
    r = _param(r)
    p = _nonneg_int(p, "p")
    x = _param(x)
    _check_abs(x, 1, "BINOMIAL_SERIES")
    xm = to_mpf(x)
    y = xm / (1 + xm)
    terms = [stirling2(p, k) * to_mpf(falling_factorial(r, k)) * y ** k for k in range(p + 1)]
    pref = mp.power(1 + xm, to_mpf(r))
    value = pref * mp.fsum(terms)
    err = 16 * (p + 4) * mp.eps * pref * sum(abs(t) for t in terms)
    return SeriesEvalReport(RealScalar(value, err), Method.CLOSED, p + 1, 0, 0,
                            Identity.BINOMIAL_SERIES.value, {"r": r, "p": p, "x": x})


def dirichlet_coefficients(n: int, x) -> list:
    """d_j = sum_k (-1)^(j+k) S(n,k) s(k,j) x^k, so omega_{n,r}(x) = sum_j d_j r^j."""
    x = _param(x)
    return [sum(((-1) ** (j + k) * stirling2(n, k) * stirling1(k, j) * x ** k
                 for k in range(j, n + 1)), Fraction(0) if isinstance(x, Fraction) else mp.zero)
            for j in range(n + 1)]


def dirichlet_gf(n: int, x, sigma) -> SeriesEvalReport:
    """sum_{r>=1} omega_{n,r}(x) / r^sigma = sum_j d_j zeta(sigma - j), sigma > n+1."""
    n = _nonneg_int(n, "n")
    if n < 1:
        raise DomainError("DIRICHLET needs n >= 1 (at n = 0 the identity fails)")
    sig = to_mpf(_param(sigma))
    if not sig > n + 1:
        raise DomainError(f"DIRICHLET needs sigma > n+1 = {n + 1}, got {sigma}")
    x = _param(x)
    d = dirichlet_coefficients(n, x)
    acc = _Closed()
    for j in range(1, n + 1):
        acc.add_special(d[j], hurwitz_zeta, zeta_upper_bound(sig - j, 1), sig - j, 1, share=n)
    return acc.report(Identity.DIRICHLET.value, {"n": n, "x": x, "sigma": sigma})


def power_sum_closed(r, p: int, x):
    """sum_{n>=0} C(n+r,n) n^p x^n = omega_{p,r+1}(x/(1-x)) / (1-x)^(r+1), |x| < 1.

    Rational r gives an exact Fraction when x is rational.
    """
    r = _param(r)
    x = _param(x)
    _check_abs(x, 1, "power sum")
    exact = isinstance(r, Fraction) and isinstance(x, Fraction)
    if exact and r.denominator == 1:
        return poly_eval(geometric_poly(p, r + 1), x / (1 - x)) / (1 - x) ** int(r + 1)
    xm = to_mpf(x)
    rm = to_mpf(r)
    y = xm / (1 - xm)
    total = mp.fsum(stirling2(p, k) * to_mpf(rising_factorial(rm + 1, k)) * y ** k
                    for k in range(p + 1))
    return total / mp.power(1 - xm, rm + 1)


# direct oracles -----------------------------------------------------------------

def _weight_ratio_sup(r, p, ax):
    """sup_{n>=N} C(n+1+r,n+1)(n+1)^p / (C(n+r,n) n^p) * |x|, valid for N >= 1, r >= 0."""
    rm = to_mpf(r)

    def sup(N):
        return (N + rm + 1) / (N + 1) * ((mp.mpf(N) + 1) / N) ** p * ax
    return sup


def _sum_direct(weight: Callable, coef: Callable, bound: Callable, q, wsup: Callable,
                start: int, tol, identity: str, params: dict,
                max_terms: int = DIRECT_MAX_TERMS) -> SeriesEvalReport:
    """Sum weight(n) * coef(n) from n = start with a certified ratio tail.

    ``bound(n)`` majorizes |coef(n)| with bound(n+1) <= q * bound(n); ``wsup(N)``
    bounds |weight(n+1)/weight(n)| for all n >= N. The tail after the last
    summed index n is then at most |w(n+1)| bound(n+1) / (1 - q wsup(n+1)).
    """
    tol = to_mpf(tol)
    terms = []
    err = mp.zero
    evals = 0
    n = start
    while True:
        w = weight(n)
        if w != 0:
            b = bound(n)
            ctol = _safe_tol(tol / (4 * abs(w) * (n + 1) * (n + 2)), b)
            c = coef(n, ctol)
            evals += 1
            terms.append(w * c.value)
            err += abs(w) * c.tol
        n += 1
        if n >= 1:
            rho = q * wsup(n)
            if rho < 1:
                tail = abs(weight(n)) * bound(n) / (1 - rho)
                if tail <= tol / 2:
                    break
        if n - start > max_terms:
            raise DomainError(f"{identity}: direct summation exceeded {max_terms} terms")
    value = mp.fsum(terms)
    err += 8 * (len(terms) + 2) * mp.eps * sum(abs(t) for t in terms)
    return SeriesEvalReport(RealScalar(value, err + tail), Method.DIRECT, n - start, evals,
                            tail, identity, params)


def _binom_weight(r, p, x):
    """n -> C(n+r, n) n^p x^n in working precision."""
    rm = to_mpf(r)
    xm = to_mpf(x)

    def w(n):
        if n == 0:
            return mp.one if p == 0 else mp.zero
        return mp.binomial(n + rm, n) * mp.mpf(n) ** p * xm ** n
    return w


def _direct_zeta_family(identity: Identity, params: dict, tol) -> SeriesEvalReport:
    r = _param(params["r"])
    x = _param(params["x"])
    p = _nonneg_int(params.get("p", 0), "p")
    xm = to_mpf(x)
    rm = to_mpf(r)
    if rm < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    start = 0 if p == 0 else 1
    half = mp.mpf(1) / 2
    two = mp.mpf(2)

    if identity is Identity.FULL_SHIFT_MINUS1:
        _check_abs(x, 2, identity.value)
        if rm + p <= 0:
            raise DomainError("needs r + p > 0")
        coef = lambda n, t: hurwitz_zeta(n + rm + 1, two, t)
        bound = lambda n: zeta_upper_bound(n + rm + 1, two)
        q = half
    elif identity is Identity.FULL_SHIFT:
        _check_abs(x, 1, identity.value)
        if rm + p <= 0:
            raise DomainError("needs r + p > 0")
        coef = lambda n, t: hurwitz_zeta(n + rm + 1, 1, t)
        bound = lambda n: 1 + zeta_upper_bound(n + rm + 1, two)
        q = mp.one
    elif identity is Identity.UNIT_SHIFT_MINUS1:
        _check_abs(x, 2, identity.value)
        _nonneg_int(r, "r")
        if p < 1:
            raise DomainError("needs p > 0")
        coef = lambda n, t: hurwitz_zeta(n + 1, two, t)
        bound = lambda n: zeta_upper_bound(n + 1, two)
        q = half
    elif identity in (Identity.UNIT_SHIFT, Identity.P11):
        _check_abs(x, 1, identity.value)
        _nonneg_int(r, "r")
        if identity is Identity.UNIT_SHIFT and p < 1:
            raise DomainError("needs p > 0")
        if identity is Identity.P11:
            p = 0
            start = 1
        coef = lambda n, t: hurwitz_zeta(n + 1, 1, t)
        bound = lambda n: 1 + zeta_upper_bound(n + 1, two)
        q = mp.one
    elif identity is Identity.ETA_ONE_MINUS:
        _check_abs(x, 2, identity.value)
        # 1 - eta(s) = eta(s, 2), an alternating tail bounded by 2^-s
        coef = lambda n, t: eta_fn(n + rm + 1, two, t)
        bound = lambda n: mp.power(2, -(n + rm + 1))
        q = half
    elif identity is Identity.ETA_FULL_SHIFT:
        _check_abs(x, 1, identity.value)
        coef = lambda n, t: eta_fn(n + rm + 1, 1, t)
        bound = lambda n: mp.one
        q = mp.one
    elif identity is Identity.ETA_UNIT_SHIFT:
        _check_abs(x, 1, identity.value)
        _nonneg_int(r, "r")
        coef = lambda n, t: eta_fn(n + 1, 1, t)
        bound = lambda n: mp.one
        q = mp.one
    else:
        raise ValueError(identity)
    out_params = {"r": r, "x": x} if identity is Identity.P11 else {"r": r, "p": p, "x": x}
    return _sum_direct(_binom_weight(r, p, x), coef, bound, q,
                       _weight_ratio_sup(r, p, abs(xm)), start, tol, identity.value, out_params)


def _direct_lerch(params: dict, tol) -> SeriesEvalReport:
    r = _nonneg_int(params["r"], "r")
    p = _nonneg_int(params.get("p", 0), "p")
    x, z, a = _param(params["x"]), _param(params["z"]), _param(params["a"])
    xm, zm, am = to_mpf(x), to_mpf(z), to_mpf(a)
    if not am > 0:
        raise DomainError("LERCH needs a > 0")
    _check_abs(x, am, "LERCH")
    if zm == 1 or abs(zm) > 1:
        raise DomainError("LERCH needs |z| <= 1 and z != 1")
    k = mp.one if zm == -1 else 1 / (1 - abs(zm))
    return _sum_direct(
        _binom_weight(r, p, x),
        lambda n, t: lerch_phi(n + r + 1, zm, am, t),
        lambda n: k * mp.power(am, -(n + r + 1)),
        1 / am,
        _weight_ratio_sup(r, p, abs(xm)),
        0 if p == 0 else 1, tol, Identity.LERCH.value,
        {"r": r, "p": p, "x": x, "z": z, "a": a})


def _direct_binom(params: dict, tol) -> SeriesEvalReport:
    r = _nonneg_int(params["r"], "r")
    p = _nonneg_int(params["p"], "p")
    x = _param(params["x"])
    _check_abs(x, 1, "BINOM")
    xm = to_mpf(x)
    ax = abs(xm)
    tol = to_mpf(tol)
    terms = []
    k = p
    while True:
        terms.append(comb(k + r, k) * comb(k, p) * xm ** k)
        k += 1
        # ratio of consecutive terms is decreasing in k
        rho = mp.mpf(k + r + 1) / (k + 1) * (k + 1) / (k + 1 - p) * ax
        if rho < 1:
            tail = abs(comb(k + r, k) * comb(k, p) * xm ** k) / (1 - rho)
            if tail <= tol / 2:
                break
    value = mp.fsum(terms)
    err = 8 * len(terms) * mp.eps * sum(abs(t) for t in terms)
    return SeriesEvalReport(RealScalar(value, err + tail), Method.DIRECT, len(terms), 0, tail,
                            Identity.BINOM.value, {"r": r, "p": p, "x": x})


def _direct_binomial_series(params: dict, tol) -> SeriesEvalReport:
    r = _param(params["r"])
    p = _nonneg_int(params["p"], "p")
    x = _param(params["x"])
    _check_abs(x, 1, "BINOMIAL_SERIES")
    xm = to_mpf(x)
    rm = to_mpf(r)
    ax = abs(xm)
    tol = to_mpf(tol)
    terminating = is_integer(rm) and rm >= 0
    terms = []
    n = 0
    tail = mp.zero
    while True:
        c = binomial_coeff(r, n) if isinstance(r, Fraction) else mp.binomial(rm, n)
        terms.append(to_mpf(c) * mp.mpf(n) ** p * xm ** n if (n or p == 0) else mp.zero)
        n += 1
        if terminating and n > rm:
            break
        if n > rm + 1:
            # sup_{m>=n} |r-m|/(m+1) is max(1, (n-r)/(n+1)) once n >= r
            rho = max(mp.one, (n - rm) / (n + 1)) * ((mp.mpf(n) + 1) / n) ** p * ax
            if rho < 1:
                head = abs(to_mpf(binomial_coeff(r, n)) if isinstance(r, Fraction)
                           else mp.binomial(rm, n)) * mp.mpf(n) ** p * ax ** n
                tail = head / (1 - rho)
                if tail <= tol / 2:
                    break
        if n > DIRECT_MAX_TERMS:
            raise DomainError("BINOMIAL_SERIES: term budget exhausted")
    value = mp.fsum(terms)
    err = 8 * len(terms) * mp.eps * sum(abs(t) for t in terms)
    return SeriesEvalReport(RealScalar(value, err + tail), Method.DIRECT, len(terms), 0, tail,
                            Identity.BINOMIAL_SERIES.value, {"r": r, "p": p, "x": x})


def _omega_in_r(n: int, x: Fraction) -> RationalPolynomial:
    """omega_{n,r}(x) as a polynomial in r, from sum_k S(n,k) x^k (r)_k."""
    out = RationalPolynomial()
    for k in range(n + 1):
        rising = RationalPolynomial([1])
        for i in range(k):
            rising = rising * RationalPolynomial([i, 1])
        out = out + rising * (stirling2(n, k) * x ** k)
    return out


def _direct_dirichlet(params: dict, tol) -> SeriesEvalReport:
    n = _nonneg_int(params["n"], "n")
    if n < 1:
        raise DomainError("DIRICHLET needs n >= 1")
    x = _param(params["x"])
    if not isinstance(x, Fraction):
        x = Fraction(float(x))
    sig = to_mpf(_param(params["sigma"]))
    if not sig > n + 1:
        raise DomainError(f"DIRICHLET needs sigma > n+1, got {params['sigma']}")
    tol = to_mpf(tol)
    poly = _omega_in_r(n, x)
    cm = [to_mpf(c) for c in poly.coeffs]
    # midpoint-integral correction for sum_{r>R}; error <= sum_i |c_i| |f_i'(R+1/2)| / 24
    def corr_err(R):
        return sum(abs(c) * (sig - i) * mp.power(R - mp.mpf(1) / 2, i - sig - 1)
                   for i, c in enumerate(cm)) / 24 * 2
    R = 64
    while corr_err(R) > tol / 2:
        R *= 2
    terms = []
    for rr in range(1, R + 1):
        rm = mp.mpf(rr)
        acc = mp.zero
        for c in reversed(cm):
            acc = acc * rm + c
        terms.append(acc * mp.power(rm, -sig))
    mid = mp.mpf(R) + mp.mpf(1) / 2
    correction = mp.fsum(c * mp.power(mid, i + 1 - sig) / (sig - i - 1) for i, c in enumerate(cm))
    value = mp.fsum(terms) + correction
    tail = corr_err(R)
    err = 8 * R * mp.eps * sum(abs(t) for t in terms)
    return SeriesEvalReport(RealScalar(value, err + tail), Method.DIRECT, R, 0, tail,
                            Identity.DIRICHLET.value, {"n": n, "x": params["x"], "sigma": params["sigma"]})


def direct_oracle(kind: Identity | str, params: dict, tol=DIRECT_TOL) -> SeriesEvalReport:
    """Brute-force sum of the left-hand side of an identity, certified to ``tol``."""
    kind = Identity(kind)
    if kind in (Identity.FULL_SHIFT_MINUS1, Identity.FULL_SHIFT, Identity.UNIT_SHIFT_MINUS1,
                Identity.UNIT_SHIFT, Identity.P11, Identity.ETA_ONE_MINUS,
                Identity.ETA_FULL_SHIFT, Identity.ETA_UNIT_SHIFT):
        return _direct_zeta_family(kind, params, tol)
    if kind is Identity.LERCH:
        return _direct_lerch(params, tol)
    if kind is Identity.BINOM:
        return _direct_binom(params, tol)
    if kind is Identity.BINOMIAL_SERIES:
        return _direct_binomial_series(params, tol)
    if kind is Identity.DIRICHLET:
        return _direct_dirichlet(params, tol)
    raise ValueError(kind)


def closed_form(kind: Identity | str, params: dict) -> SeriesEvalReport:
    kind = Identity(kind)
    g = params.get
    if kind.value in ZetaVariant.__members__:
        return zeta_series_closed(g("r"), g("p", 0), g("x"), kind.value)
    if kind is Identity.P11:
        return zeta_series_p0(g("r"), g("x"))
    if kind.value.startswith("ETA_"):
        return eta_series_closed(g("r"), g("p", 0), g("x"), kind.value[4:])
    if kind is Identity.LERCH:
        return lerch_series_closed(g("r"), g("p", 0), g("x"), g("z"), g("a"))
    if kind is Identity.BINOM:
        return binom_product_identity(g("r"), g("p"), g("x"))
    if kind is Identity.BINOMIAL_SERIES:
        return binomial_power_series(g("r"), g("p"), g("x"))
    if kind is Identity.DIRICHLET:
        return dirichlet_gf(g("n"), g("x"), g("sigma"))
    raise ValueError(kind)


def evaluate(kind: Identity | str, params: dict, mode: str = "both", tol=DIRECT_TOL):
    """Run the closed form, the oracle, or both; returns a dict of reports."""
    out = {}
    if mode in ("closed", "both"):
        out["closed"] = closed_form(kind, params)
    if mode in ("direct", "both"):
        out["direct"] = direct_oracle(kind, params, tol)
    if mode == "both":
        out["abs_diff"] = abs(out["closed"].value.value - out["direct"].value.value)
    return out
