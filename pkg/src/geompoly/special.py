"""Gamma, digamma, Hurwitz/Riemann zeta, Lerch eta and the Lerch transcendent.

Every routine takes an absolute error target and returns a ``RealScalar``
carrying the error bound it can actually certify (truncation bound plus a
rounding allowance). If that bound would exceed the request, ``DomainError``
is raised instead of returning a weaker answer.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from ._numeric import REL_FLOOR, DomainError, mp, to_mpf
from .combinatorics import bernoulli

__all__ = [
    "RealScalar",
    "gamma_real",
    "log_gamma",
    "digamma",
    "hurwitz_zeta",
    "riemann_zeta",
    "eta_fn",
    "lerch_phi",
    "zeta_upper_bound",
]

DEFAULT_TOL = 1e-15
_EM_MAX_J = 10
_ASYM_MAX_J = 40
# Every routine works to this accuracy whatever tol is asked for; tol is only
# the ceiling the certified error must meet. Results therefore never depend
# on tol, so tightening it cannot make them worse.
_ABS_TARGET = REL_FLOOR / 8


@dataclass(frozen=True)
class RealScalar:
    """A working-precision real together with its certified absolute error."""

    value: object
    tol: object

    def __post_init__(self):
        object.__setattr__(self, "value", to_mpf(self.value))
        tol = to_mpf(self.tol)
        if not tol > 0:
            tol = mp.eps * max(abs(self.value), 1)
        object.__setattr__(self, "tol", tol)

    def __float__(self) -> float:
        return float(self.value)

    def __repr__(self) -> str:
        return f"RealScalar({mp.nstr(self.value, 20)}, tol={mp.nstr(self.tol, 3)})"


@lru_cache(maxsize=None)
def _bern_even(j: int):
    """B_{2j} as mpf."""
    return to_mpf(bernoulli(2 * j))


@lru_cache(maxsize=None)
def _log_abs_bern_over_fact(j: int) -> float:
    # log |B_{2j} / (2j)!| as a float, for parameter selection only
    b = bernoulli(2 * j)
    return (math.log(abs(b.numerator)) - math.log(b.denominator)
            - math.lgamma(2 * j + 1))


def _check_tol(tol):
    tol = to_mpf(tol)
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    return tol


def _finish(value, err, tol, what: str) -> RealScalar:
    if err > tol:
        raise DomainError(
            f"{what}: requested tolerance {mp.nstr(tol, 3)} is unattainable "
            f"(best certified {mp.nstr(err, 3)})")
    return RealScalar(value, err)


def log_gamma(x):
    """log Gamma(x) for x > 0 with its certified absolute error, as (value, err)."""
    x = to_mpf(x)
    if not x > 0:
        raise DomainError(f"log_gamma needs x > 0, got {x}")
    shift = mp.zero
    y = x
    factors = []
    while y < 20:
        factors.append(y)
        y += 1
    if factors:
        shift = mp.log(mp.fprod(factors))
    # Stirling series; remainder bounded by the first omitted term
    terms = [(y - mp.mpf(1) / 2) * mp.log(y) - y + mp.log(2 * mp.pi) / 2]
    ypow = y
    y2 = y * y
    rem = None
    for j in range(1, _ASYM_MAX_J + 1):
        t = _bern_even(j) / (2 * j * (2 * j - 1) * ypow)
        if abs(t) < mp.eps * abs(terms[0]):
            rem = abs(t)
            break
        terms.append(t)
        ypow *= y2
    if rem is None:
        rem = abs(_bern_even(_ASYM_MAX_J + 1)) / ypow
    value = mp.fsum(terms) - shift
    err = rem + 8 * (len(terms) + len(factors)) * mp.eps * (abs(terms[0]) + abs(shift))
    return value, err


def gamma_real(x) -> RealScalar:
    """Gamma(x) for real x > 0, via the shifted Stirling series."""
    x = to_mpf(x)
    if not x > 0:
        raise DomainError(f"gamma_real needs x > 0, got {x}")
    if x == mp.floor(x) and x < 200:
        # exact factorial
        return RealScalar(mp.factorial(int(x) - 1), mp.eps * mp.factorial(int(x) - 1))
    lg, lerr = log_gamma(x)
    value = mp.exp(lg)
    # |exp(e) - 1| <= 2|e| for tiny e
    return RealScalar(value, value * (2 * lerr + 4 * mp.eps))


def digamma(x, tol=DEFAULT_TOL) -> RealScalar:
    """psi(x) by upward recurrence to y >= 10, then the asymptotic series."""
    x = to_mpf(x)
    tol = _check_tol(tol)
    if x <= 0 and x == mp.floor(x):
        raise DomainError(f"digamma has a pole at {x}")
    if tol < REL_FLOOR:
        raise DomainError(f"digamma: tolerance {mp.nstr(tol, 3)} is unattainable")
    y = x
    recips = []
    y_min = 10
    while True:
        while y < y_min:
            recips.append(1 / y)
            y += 1
        terms = [mp.log(y), -1 / (2 * y)]
        y2 = y * y
        ypow = y2
        rem = None
        for j in range(1, _ASYM_MAX_J + 1):
            t = _bern_even(j) / (2 * j * ypow)
            if abs(t) <= _ABS_TARGET:
                rem = abs(t)
                break
            terms.append(-t)
            ypow *= y2
        if rem is not None:
            break
        y_min *= 2
    shift = mp.fsum(recips)
    value = mp.fsum(terms) - shift
    scale = sum(abs(t) for t in terms) + sum(abs(v) for v in recips)
    err = rem + 8 * (len(terms) + len(recips)) * mp.eps * scale
    return _finish(value, err, tol, "digamma")


def zeta_upper_bound(s, a):
    """Upper bound a^-s + a^(1-s)/(s-1) on zeta(s, a), s > 1, a > 0."""
    s = to_mpf(s)
    a = to_mpf(a)
    return mp.power(a, -s) + mp.power(a, 1 - s) / (s - 1)


def _em_parameters(s, a, tol) -> tuple[int, int]:
    """Smallest N (with some J <= 10) whose Euler-Maclaurin bound meets tol/2."""
    sf = float(s)
    af = float(a)
    target = float(mp.log(tol / 2))
    lg_s = math.lgamma(sf)
    for n in range(0, 2_000_000):
        lb = math.log(n + af)
        for j in range(0, _EM_MAX_J + 1):
            # 2 |B_{2j+2}/(2j+2)!| (s)_{2j+1} b^{-s-2j-1}
            k = 2 * j + 1
            lbound = (math.log(2) + _log_abs_bern_over_fact(j + 1)
                      + math.lgamma(sf + k) - lg_s - (sf + k) * lb)
            if lbound <= target:
                return n, j
    raise DomainError("Euler-Maclaurin parameter search exhausted")


def hurwitz_zeta(s, a, tol=DEFAULT_TOL) -> RealScalar:
    """zeta(s, a) = sum_{k>=0} (k+a)^-s for s > 1, a > 0 (Euler-Maclaurin)."""
    s = to_mpf(s)
    a = to_mpf(a)
    tol = _check_tol(tol)
    if not s > 1:
        raise DomainError(f"hurwitz_zeta needs s > 1, got s={s}")
    if not a > 0:
        raise DomainError(f"hurwitz_zeta needs a > 0, got a={a}")
    bound = zeta_upper_bound(s, a)
    if tol < REL_FLOOR * bound:
        raise DomainError(f"hurwitz_zeta: tolerance {mp.nstr(tol, 3)} is unattainable")
    n, jmax = _em_parameters(s, a, REL_FLOOR * bound / 8)
    terms = [mp.power(a + k, -s) for k in range(n)]
    b = a + n
    bs = mp.power(b, -s)
    terms.append(b * bs / (s - 1))
    terms.append(bs / 2)
    # B_{2j}/(2j)! (s)_{2j-1} b^{-s-2j+1}
    poch = s
    bpow = bs / b
    for j in range(1, jmax + 1):
        terms.append(_bern_even(j) / mp.factorial(2 * j) * poch * bpow)
        poch *= (s + 2 * j - 1) * (s + 2 * j)
        bpow /= b * b
    rem = 2 * abs(_bern_even(jmax + 1)) / mp.factorial(2 * jmax + 2) * poch * bpow
    value = mp.fsum(terms)
    err = rem + 4 * (len(terms) + 4) * mp.eps * abs(value)
    return _finish(value, err, tol, "hurwitz_zeta")


def riemann_zeta(s, tol=DEFAULT_TOL) -> RealScalar:
    return hurwitz_zeta(s, 1, tol)


def _cvz_alternating(f, n: int):
    """Cohen-Rodriguez Villegas-Zagier sum of sum_k (-1)^k f(k) with n terms."""
    d = (3 + mp.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b = -mp.one
    c = -d
    acc = []
    for k in range(n):
        c = b - c
        acc.append(c * f(k))
        b = (k + n) * (k - n) * b / ((k + mp.mpf(1) / 2) * (k + 1))
    return mp.fsum(acc) / d, sum(abs(v) for v in acc) / d


def eta_fn(s, a, tol=DEFAULT_TOL) -> RealScalar:
    """Lerch eta eta(s, a) = sum_{n>=0} (-1)^n (n+a)^-s for s > 0, a > 0."""
    s = to_mpf(s)
    a = to_mpf(a)
    tol = _check_tol(tol)
    if not s > 0:
        raise DomainError(f"eta_fn needs s > 0, got s={s}")
    if not a > 0:
        raise DomainError(f"eta_fn needs a > 0, got a={a}")
    if s == 1:
        hi = digamma((a + 1) / 2, tol)
        lo = digamma(a / 2, tol)
        return _finish((hi.value - lo.value) / 2, (hi.tol + lo.tol) / 2, tol, "eta_fn")
    if s > 1:
        scale = mp.power(2, -s)
        sub = tol / (2 * scale)
        z1 = hurwitz_zeta(s, a / 2, sub)
        z2 = hurwitz_zeta(s, (a + 1) / 2, sub)
        value = scale * (z1.value - z2.value)
        err = scale * (z1.tol + z2.tol) + 4 * mp.eps * scale * (abs(z1.value) + abs(z2.value))
        return _finish(value, err, tol, "eta_fn")
    # 0 < s < 1: (k+a)^-s is a moment sequence, so the CVZ error is <= 2 f(0)/5.83^n
    head = mp.power(a, -s)
    n = 1
    while 2 / (3 + mp.sqrt(8)) ** n > REL_FLOOR / 8:
        n += 1
    value, mag = _cvz_alternating(lambda k: mp.power(k + a, -s), n)
    err = 2 * head / (3 + mp.sqrt(8)) ** n + 8 * n * mp.eps * (mag + abs(value))
    return _finish(value, err, tol, "eta_fn")


def lerch_phi(s, z, a, tol=DEFAULT_TOL) -> RealScalar:
    """Lerch transcendent Phi(s, z, a) = sum_{n>=0} z^n (n+a)^-s for real z.

    Needs a > 0 and either |z| < 1, or z = -1 with s > 0.
    """
    s = to_mpf(s)
    z = to_mpf(z)
    a = to_mpf(a)
    tol = _check_tol(tol)
    if not a > 0:
        raise DomainError(f"lerch_phi needs a > 0, got a={a}")
    if z == 1:
        raise DomainError("lerch_phi: z = 1 is excluded (use hurwitz_zeta)")
    if abs(z) > 1:
        raise DomainError(f"lerch_phi needs |z| <= 1, got z={z}")
    if z == -1:
        if not s > 0:
            raise DomainError(f"lerch_phi at z = -1 diverges for s = {s} <= 0")
        return eta_fn(s, a, tol)
    if z == 0:
        v = mp.power(a, -s)
        return RealScalar(v, 2 * mp.eps * abs(v))
    az = abs(z)
    terms = []
    n = 0
    zn = mp.one
    biggest = mp.zero
    while True:
        t = zn * mp.power(n + a, -s)
        terms.append(t)
        biggest = max(biggest, abs(t))
        n += 1
        zn *= z
        head = abs(zn) * mp.power(n + a, -s)
        if s >= 0:
            rho = az
        else:
            rho = az * mp.power(1 + 1 / (n + a), -s)
        if rho < 1:
            tail = head / (1 - rho)
            if tail <= REL_FLOOR * biggest / 8:
                break
        if n > 10_000_000:
            raise DomainError("lerch_phi: term budget exhausted")
    value = mp.fsum(terms)
    err = tail + 4 * (n + 2) * mp.eps * sum(abs(t) for t in terms)
    return _finish(value, err, tol, "lerch_phi")
