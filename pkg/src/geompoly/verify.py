"""Named verification suites shared by the CLI and the test-suite.

Each check returns ``(passed, detail)``; exceptions count as failures. Checks
are tagged with the acceptance criterion they witness (``None`` for module
invariants that are not themselves criteria) and run in declaration order.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterable

import mpmath
import numpy as np

from . import genfun, quadrature, series, special
from ._numeric import mp, to_mpf
from .combinatorics import (
    bell,
    bernoulli,
    binomial_coeff,
    lah,
    rising_factorial,
    stirling1,
    stirling2,
)
from .polynomials import (
    RationalPolynomial,
    X,
    exponential_poly,
    geometric_poly,
    geometric_poly_recursive,
    geometric_poly_stirling_form,
    p_poly,
    poly_eval,
)

__all__ = ["CheckResult", "SUITES", "CHECKS", "run_suite", "run_criterion", "series_grid"]

SUITES = ("combinatorics", "polynomials", "genfun", "special", "series", "quadrature")
R_SAMPLE = (Fraction(1), Fraction(2), Fraction(3), Fraction(5), Fraction(1, 2), Fraction(7, 3))


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    criterion: int | None
    passed: bool
    detail: str

    def to_dict(self) -> dict:
        return {"suite": self.suite, "name": self.name, "criterion": self.criterion,
                "status": "pass" if self.passed else "fail", "detail": self.detail}


@dataclass(frozen=True)
class _Check:
    suite: str
    name: str
    criterion: int | None
    fn: Callable
    uses_tol: bool


CHECKS: list[_Check] = []


def _check(suite: str, name: str, criterion: int | None = None, uses_tol: bool = False):
    def deco(fn):
        CHECKS.append(_Check(suite, name, criterion, fn, uses_tol))
        return fn
    return deco


def _first_mismatch(pairs: Iterable[tuple[object, object, object]]):
    """(label, got, want) triples -> (ok, detail) for exact comparisons."""
    n = 0
    for label, got, want in pairs:
        n += 1
        if got != want:
            return False, f"mismatch at {label}: {got} != {want}"
    return True, f"{n} exact comparisons"


def _zeta(s):
    return special.hurwitz_zeta(s, 1, mp.mpf("1e-25")).value


# combinatorics -----------------------------------------------------------------

@_check("combinatorics", "stirling orthogonality p,k <= 12", 5)
def _orthogonality():
    return _first_mismatch(
        ((p, k), sum(stirling1(p, m) * stirling2(m, k) for m in range(p + 1)), int(p == k))
        for p in range(13) for k in range(13))


@_check("combinatorics", "lah from stirling composition k,j <= 10", 5)
def _lah_composition():
    return _first_mismatch(
        ((k, j), (-1) ** k * sum(stirling1(k, i) * stirling2(i, j) * (-1) ** i for i in range(k + 1)),
         lah(k, j))
        for k in range(11) for j in range(11))


@_check("combinatorics", "stirling2 row sums equal bell triangle, n <= 12")
def _bell_rows():
    return _first_mismatch((n, sum(stirling2(n, k) for k in range(n + 1)), bell(n))
                           for n in range(13))


@_check("combinatorics", "rising factorial via signed stirling1, k <= 8")
def _rising_expansion():
    qs = (Fraction(-2), Fraction(-1, 2), Fraction(1, 3), Fraction(5))
    return _first_mismatch(
        ((q, k), rising_factorial(q, k),
         sum((-1) ** (k - i) * stirling1(k, i) * q ** i for i in range(k + 1)))
        for q in qs for k in range(9))


@_check("combinatorics", "binomial_coeff matches integer binomials")
def _binomials():
    return _first_mismatch(((n, k), binomial_coeff(n, k), comb(n, k))
                           for n in range(15) for k in range(n + 1))


@_check("combinatorics", "bernoulli numbers B_0..B_12 (B_1 = -1/2)")
def _bernoulli_values():
    want = ["1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66", "0", "-691/2730"]
    return _first_mismatch((n, bernoulli(n), Fraction(w)) for n, w in enumerate(want))


# polynomials -----------------------------------------------------------------

def _P(*coeffs) -> RationalPolynomial:
    return RationalPolynomial(coeffs)


OMEGA_TABLE = {
    0: _P(1),
    1: _P(0, 1),
    2: _P(0, 1, 2),
    3: _P(0, 1, 6, 6),
    4: _P(0, 1, 14, 36, 24),
}
PHI_TABLE = {
    0: _P(1),
    1: _P(0, 1),
    2: _P(0, 1, 1),
    3: _P(0, 1, 3, 1),
    4: _P(0, 1, 7, 6, 1),
}


def _omega_r_table(n: int, r: Fraction) -> RationalPolynomial:
    """Hand-expanded omega_{n,r}(x) for n <= 4 with symbolic r substituted."""
    r1, r2, r3 = r * (r + 1), r * (r + 1) * (r + 2), r * (r + 1) * (r + 2) * (r + 3)
    return {
        0: _P(1),
        1: _P(0, r),
        2: _P(0, r, r1),
        3: _P(0, r, 3 * r1, r2),
        4: _P(0, r, 7 * r1, 6 * r2, r3),
    }[n]


@_check("polynomials", "omega_n, omega_{n,r}, phi_n tables for n <= 4", 1)
def _tables():
    pairs = [(("omega", n), geometric_poly(n, 1), OMEGA_TABLE[n]) for n in range(5)]
    pairs += [(("phi", n), exponential_poly(n), PHI_TABLE[n]) for n in range(5)]
    pairs += [(("omega_r", n, r), geometric_poly(n, r), _omega_r_table(n, r))
              for r in R_SAMPLE for n in range(5)]
    return _first_mismatch(pairs)


@_check("polynomials", "special values: omega_{n,0}, omega_{n,-1}, omega_{n,r}(-1)")
def _special_values():
    pairs = [(("r=0", n), geometric_poly(n, 0), _P(int(n == 0))) for n in range(8)]
    pairs += [(("r=-1", n), geometric_poly(n, -1), -X) for n in range(1, 8)]
    pairs += [(("x=-1", n, r), poly_eval(geometric_poly(n, r), -1), (-r) ** n)
              for n in range(8) for r in R_SAMPLE]
    return _first_mismatch(pairs)


@_check("polynomials", "recursive and double-sum constructions agree, n <= 10", 4)
def _constructions():
    pairs = []
    for r in R_SAMPLE + (Fraction(0), Fraction(-1), Fraction(-5, 2)):
        for n in range(11):
            w = geometric_poly(n, r)
            pairs.append((("recursive", n, r), geometric_poly_recursive(n, r), w))
            pairs.append((("stirling form", n, r), geometric_poly_stirling_form(n, r), w))
    return _first_mismatch(pairs)


@_check("polynomials", "differential equation in r, n <= 10", 4)
def _diffeq():
    return _first_mismatch(
        ((n, r), geometric_poly(n, r + 1),
         X * geometric_poly(n, r).derivative() * (1 / r) + geometric_poly(n, r))
        for r in R_SAMPLE for n in range(11))


@_check("polynomials", "two first-order recurrences, n <= 10", 4)
def _recurrences():
    pairs = []
    for r in R_SAMPLE:
        for n in range(10):
            w, w1 = geometric_poly(n, r), geometric_poly(n + 1, r)
            pairs.append((("shift", n, r), w1, (geometric_poly(n, r + 1) * (X + 1) - w) * r))
            pairs.append((("derivative", n, r), w1, _P(0, 1, 1) * w.derivative() + X * w * r))
    return _first_mismatch(pairs)


@_check("polynomials", "convolution recurrence, n <= 10", 4)
def _convolution():
    pairs = []
    for r in R_SAMPLE:
        for n in range(10):
            lhs = geometric_poly(n + 1, r) + geometric_poly(n, r) * r
            conv = RationalPolynomial()
            for k in range(n + 1):
                conv = conv + geometric_poly(k, r) * geometric_poly(n - k, 1) * comb(n, k)
            pairs.append(((n, r), lhs, conv * (X + 1) * r))
    return _first_mismatch(pairs)


@_check("polynomials", "addition formula, n,m <= 5", 4)
def _addition():
    pairs = []
    for r in R_SAMPLE:
        for n in range(6):
            for m in range(6):
                rhs = RationalPolynomial()
                for k in range(n + 1):
                    for j in range(m + 1):
                        c = comb(n, k) * stirling2(m, j) * rising_factorial(r, j) * j ** (n - k)
                        if c:
                            rhs = rhs + RationalPolynomial.monomial(j, c) * geometric_poly(k, r + j)
                pairs.append(((n, m, r), geometric_poly(n + m, r), rhs))
    return _first_mismatch(pairs)


@_check("polynomials", "binomial transform, n <= 10", 4)
def _binomial_transform():
    pairs = []
    for r in R_SAMPLE:
        if r < 1:
            continue
        for n in range(11):
            lhs = RationalPolynomial()
            for k in range(n + 1):
                lhs = lhs + geometric_poly(k, r) * comb(n, k)
            pairs.append(((n, r), X * lhs, geometric_poly(n, r) * (X + 1) - geometric_poly(n, r - 1)))
    return _first_mismatch(pairs)


@_check("polynomials", "corrected P_{k-1}^k equals the Lah partial sum, k <= 10", 5)
def _p_poly_lah():
    pairs = [(k, p_poly(k, k - 1), RationalPolynomial([lah(k, j) for j in range(1, k + 1)])
              - RationalPolynomial.monomial(k - 1, lah(k, k)))
             for k in range(1, 11)]
    pairs += [("(2,1)", p_poly(2, 1), _P(2)), ("(3,2)", p_poly(3, 2), _P(6, 6)),
              ("(4,3)", p_poly(4, 3), _P(24, 36, 12))]
    return _first_mismatch(pairs)


@_check("polynomials", "omega_n(-1/2): zero for even n, zeta formula for odd n", 7)
def _omega_minus_half():
    half = Fraction(-1, 2)
    for n in range(2, 13, 2):
        v = poly_eval(geometric_poly(n), half)
        if v != 0:
            return False, f"omega_{n}(-1/2) = {v}, expected 0"
    worst = 0.0
    for n in range(1, 12, 2):
        exact = to_mpf(poly_eval(geometric_poly(n), half))
        approx = (4 * (-1) ** n * factorial(n) * mp.pi ** (-(n + 1))
                  * (1 - mp.mpf(2) ** (-(n + 1))) * mp.sin(mp.pi * n / 2) * _zeta(n + 1))
        rel = abs(exact - approx) / abs(exact)
        worst = max(worst, float(rel))
        if rel > 1e-12:
            return False, f"n={n}: relative error {float(rel):.2e}"
    spot = (poly_eval(geometric_poly(1), half), poly_eval(geometric_poly(3), half))
    if spot != (Fraction(-1, 2), Fraction(1, 4)):
        return False, f"spot values {spot}"
    return True, f"even n exact zero; odd n worst relative error {worst:.1e}"


# genfun -----------------------------------------------------------------

def _series_equal(a, b, upto: int):
    for e in range(upto):
        if a.coefficient(e) != b.coefficient(e):
            return False, e
    return True, None


@_check("genfun", "EGF of omega_{n,r}(x), n <= 12", 2)
def _egf():
    count = 0
    for r in (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(5, 3)):
        for x in (Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-3)):
            s = genfun.egf_geometric(x, r, 13)
            for n in range(13):
                got = s.coefficient(n) * factorial(n)
                want = poly_eval(geometric_poly(n, r), x)
                count += 1
                if got != want:
                    return False, f"r={r}, x={x}, n={n}: {got} != {want}"
    return True, f"{count} exact coefficients"


@_check("genfun", "power-sum expansion coefficients C(k+r,k) k^m", 3)
def _power_sum():
    count = 0
    for r in range(4):
        for m in range(7):
            s = genfun.power_sum_expansion(m, r, 12)
            for k in range(12):
                count += 1
                want = comb(k + r, k) * k ** m
                if s.coefficient(k) != want:
                    return False, f"r={r}, m={m}, k={k}: {s.coefficient(k)} != {want}"
    return True, f"{count} exact coefficients"


@_check("genfun", "binomial operator expansion coefficients C(r,k) k^p")
def _binomial_operator():
    for r in (Fraction(1, 2), Fraction(5, 2)):
        for p in range(5):
            s = genfun.binomial_operator_expansion(p, r, 11)
            for k in range(11):
                want = binomial_coeff(r, k) * k ** p
                if s.coefficient(k) != want:
                    return False, f"r={r}, p={p}, k={k}"
    return True, "110 exact coefficients"


@_check("genfun", "ordinary and exponential generating functions in r")
def _gf_in_r():
    for n in range(1, 7):
        for x in (Fraction(1), Fraction(-2), Fraction(1, 3)):
            lhs, rhs = genfun.ogf_in_r(n, x, 10)
            ok, e = _series_equal(lhs, rhs, 10)
            if not ok:
                return False, f"OGF n={n}, x={x}, t^{e}"
    for n in range(0, 7):
        for x in (Fraction(1), Fraction(-2), Fraction(1, 3)):
            for form in genfun.EgfForm:
                lhs, rhs = genfun.egf_in_r(n, x, 10, form)
                ok, e = _series_equal(lhs, rhs, 10)
                if not ok:
                    return False, f"EGF {form.value} n={n}, x={x}, t^{e}"
    return True, "OGF n=1..6, EGF n=0..6 in both forms, 10 coefficients each"


@_check("genfun", "Pochhammer EGF equals e^t times Lah polynomial, k <= 8", 5)
def _pochhammer():
    for k in range(9):
        lhs, rhs = genfun.pochhammer_egf(k, 12)
        ok, e = _series_equal(lhs, rhs, 12)
        if not ok:
            return False, f"k={k}, t^{e}"
    return True, "k=0..8 to order 12"


@_check("genfun", "boundary Laurent expansion: principal part and constant term, n <= 11", 6)
def _boundary():
    worst = 0.0
    for n in range(1, 12):
        g = genfun.boundary_laurent(n, 2)
        principal = g.principal_part()
        if principal != {-(n + 1): factorial(n)}:
            return False, f"n={n}: principal part {principal}"
        c0 = g.coefficient(0)
        if c0 != genfun.boundary_constant_term(n):
            return False, f"n={n}: constant {c0}"
        target = (2 * factorial(n) * (-1) ** n * (2 * mp.pi) ** (-(n + 1))
                  * mp.sin(mp.pi * n / 2) * _zeta(n + 1))
        diff = abs(to_mpf(c0) - target)
        worst = max(worst, float(diff))
        if diff > 1e-12:
            return False, f"n={n}: |constant - zeta value| = {float(diff):.2e}"
    spot = [genfun.boundary_laurent(n, 1).coefficient(0) for n in (1, 2, 3)]
    if spot != [Fraction(-1, 12), 0, Fraction(1, 120)]:
        return False, f"spot constants {spot}"
    return True, f"n=1..11 exact; worst zeta-value difference {worst:.1e}"


# special -----------------------------------------------------------------

@_check("special", "Hurwitz shift zeta(s,a) - zeta(s,a+1) = a^-s", uses_tol=True)
def _hurwitz_shift(tol):
    worst = 0.0
    for s in (2, 3.5, 6):
        for a in (Fraction(1, 10), Fraction(1, 2), 1, Fraction(27, 10)):
            am = to_mpf(a)
            d = special.hurwitz_zeta(s, am, tol).value - special.hurwitz_zeta(s, am + 1, tol).value
            err = abs(d - am ** (-s))
            worst = max(worst, float(err))
            if err > 2 * tol:
                return False, f"s={s}, a={a}: {float(err):.2e}"
    return True, f"worst {worst:.1e} (tol {float(tol):g})"


@_check("special", "eta/zeta bridge eta(s) = (1 - 2^(1-s)) zeta(s)", uses_tol=True)
def _eta_bridge(tol):
    for s in (2, 3, 4, 6):
        lhs = special.eta_fn(s, 1, tol).value
        rhs = (1 - mp.mpf(2) ** (1 - s)) * special.riemann_zeta(s, tol).value
        if abs(lhs - rhs) > 2 * tol:
            return False, f"s={s}: {float(abs(lhs - rhs)):.2e}"
    return True, "s in {2,3,4,6}"


@_check("special", "Lerch degenerations and contraction identity", uses_tol=True)
def _lerch_identities(tol):
    for s in (1, 2, 3.5):
        for a in (Fraction(1, 2), 1, 3):
            phi = special.lerch_phi(s, -1, a, tol).value
            eta = special.eta_fn(s, a, tol).value
            if abs(phi - eta) > 3 * tol:
                return False, f"Phi(s,-1,a) vs eta at s={s}, a={a}"
            for z in (Fraction(1, 2), Fraction(-7, 10), -1, 0):
                zm, am = to_mpf(z), to_mpf(a)
                lhs = special.lerch_phi(s, zm, am, tol).value - zm * special.lerch_phi(s, zm, am + 1, tol).value
                if abs(lhs - am ** (-s)) > 3 * tol:
                    return False, f"contraction at s={s}, z={z}, a={a}"
    spot = special.lerch_phi(1, Fraction(1, 2), 1, tol).value
    if abs(spot - 2 * mp.log(2)) > tol:
        return False, "Phi(1, 1/2, 1) != 2 ln 2"
    return True, "s in {1,2,3.5}, a in {1/2,1,3}, z in {1/2,-7/10,-1,0}"


@_check("special", "digamma against the direct sum sum_k x/(k(k-x))")
def _digamma_sum():
    N = 10 ** 6
    k = np.arange(1, N + 1, dtype=float)
    worst = 0.0
    for x in (-0.9, -0.3, 0.3, 0.9):
        partial = math.fsum(x / (k * (k - x)))
        # midpoint tail: integral of x/(t(t-x)) from N+1/2 to infinity
        tail = math.log((N + 0.5) / (N + 0.5 - x))
        closed = -special.digamma(1 - x, 1e-15).value - mp.euler
        err = abs(float(closed) - (partial + tail))
        worst = max(worst, err)
        if err > 1e-8:
            return False, f"x={x}: {err:.2e}"
    return True, f"worst {worst:.1e} with 1e6 terms"


def _ref_eta(s, a):
    if s == 1:
        return (mpmath.digamma((a + 1) / 2) - mpmath.digamma(a / 2)) / 2
    return mpmath.mpf(2) ** (-s) * (mpmath.zeta(s, a / 2) - mpmath.zeta(s, (a + 1) / 2))


@_check("special", "halving tol never worsens the error against a 60-digit reference")
def _monotone_accuracy():
    rng = random.Random(20240917)
    noise = mp.mpf(10) ** (2 - mp.dps)
    routines = {
        "hurwitz_zeta": (lambda p, t: special.hurwitz_zeta(p[0], p[1], t),
                         lambda p: mpmath.zeta(p[0], p[1]),
                         lambda: (rng.uniform(1.1, 12), rng.uniform(0.05, 6))),
        "eta_fn": (lambda p, t: special.eta_fn(p[0], p[1], t),
                   lambda p: _ref_eta(p[0], p[1]),
                   lambda: (rng.choice([1, rng.uniform(0.3, 0.95), rng.uniform(1.05, 10)]),
                            rng.uniform(0.2, 5))),
        "lerch_phi": (lambda p, t: special.lerch_phi(p[0], p[1], p[2], t),
                      lambda p: mpmath.lerchphi(p[1], p[0], p[2]),
                      lambda: (rng.uniform(1, 8), rng.uniform(-0.9, 0.9), rng.uniform(0.3, 4))),
        "digamma": (lambda p, t: special.digamma(p[0], t),
                    lambda p: mpmath.digamma(p[0]),
                    lambda: (rng.uniform(-4.9, 20),)),
    }
    with mpmath.workdps(60):
        for name, (fn, ref, draw) in routines.items():
            for _ in range(20):
                params = tuple(mp.mpf(repr(v)) for v in draw())
                want = ref(tuple(mpmath.mpf(str(v)) for v in params))
                tol = mp.mpf("1e-12") * max(1, abs(mp.mpf(want)))
                e1 = abs(mp.mpf(fn(params, tol).value) - want)
                e2 = abs(mp.mpf(fn(params, tol / 2).value) - want)
                if e1 > tol or e2 > tol / 2 or e2 > e1 + noise * max(1, abs(want)):
                    return False, f"{name}{tuple(float(v) for v in params)}: {float(e1):.1e} -> {float(e2):.1e}"
    return True, "20 random points for each of 4 routines"


# series -----------------------------------------------------------------

X_WIDE = (Fraction(-3, 2), Fraction(-1, 2), Fraction(1, 2), Fraction(1), Fraction(19, 10))
X_UNIT = (Fraction(-9, 10), Fraction(-1, 2), Fraction(1, 4), Fraction(1, 2), Fraction(9, 10))


def series_grid(kind: str) -> list[dict]:
    """Parameter grid for one identity tag."""
    g = []
    if kind == "P11":
        return [dict(r=r, x=x) for r in range(3) for x in X_UNIT]
    if kind == "LERCH":
        return [dict(r=r, p=p, z=z, a=a, x=s * Fraction(a) / 2)
                for r in range(3) for p in range(3)
                for z in (Fraction(1, 2), -1, Fraction(-7, 10))
                for a in (1, 2, Fraction(7, 2)) for s in (1, -1)]
    if kind == "DIRICHLET":
        return [dict(n=n, x=x, sigma=n + 3) for n in (1, 2, 3) for x in (Fraction(1, 2), 1)]
    wide = kind in ("FULL_SHIFT_MINUS1", "UNIT_SHIFT_MINUS1", "ETA_ONE_MINUS")
    for r in range(3):
        for p in range(4):
            if kind in ("FULL_SHIFT_MINUS1", "FULL_SHIFT") and r + p == 0:
                continue
            if kind in ("UNIT_SHIFT_MINUS1", "UNIT_SHIFT") and p == 0:
                continue
            for x in (X_WIDE if wide else X_UNIT):
                g.append(dict(r=r, p=p, x=x))
    return g


@lru_cache(maxsize=None)
def _grid_results(kind: str):
    out = []
    for params in series_grid(kind):
        closed = series.closed_form(kind, params)
        direct = series.direct_oracle(kind, params)
        out.append((params, closed, direct))
    return tuple(out)


def _grid_check(kind: str, tol_for: Callable[[dict], float]):
    worst = 0.0
    for params, c, d in _grid_results(kind):
        diff = abs(c.value.value - d.value.value)
        worst = max(worst, float(diff))
        if diff > tol_for(params):
            return False, f"{params}: |closed - direct| = {float(diff):.2e}"
        if diff > c.value.tol + d.value.tol:
            return False, f"{params}: difference exceeds the certified errors"
        if d.tail_bound > series.DIRECT_TOL or c.value.tol > 1e-11:
            return False, f"{params}: certification budget exceeded"
    return True, f"{len(_grid_results(kind))} points, worst {worst:.1e}"


def _zeta_tol(params):
    return 1e-7 if params.get("x") == Fraction(19, 10) else 1e-8


for _kind in ("FULL_SHIFT_MINUS1", "FULL_SHIFT", "UNIT_SHIFT_MINUS1", "UNIT_SHIFT", "P11"):
    _check("series", f"{_kind} closed form vs direct oracle", 9)(
        lambda k=_kind: _grid_check(k, _zeta_tol))
for _kind in ("ETA_ONE_MINUS", "ETA_FULL_SHIFT", "ETA_UNIT_SHIFT", "LERCH"):
    _check("series", f"{_kind} closed form vs direct oracle", 10)(
        lambda k=_kind: _grid_check(k, lambda p: 1e-8))
_check("series", "DIRICHLET closed form vs direct r-sum", 11)(
    lambda: _grid_check("DIRICHLET", lambda p: 1e-6))


def _spots(items):
    worst = 0.0
    for label, kind, params, target, tol in items:
        for rep in (series.closed_form(kind, params), series.direct_oracle(kind, params)):
            diff = abs(rep.value.value - target)
            worst = max(worst, float(diff))
            if diff > tol:
                return False, f"{label} ({rep.method.value}): off by {float(diff):.2e}"
    return True, f"{len(items)} spot values, closed and direct, worst {worst:.1e}"


@_check("series", "zeta-series spot values", 9)
def _zeta_spots():
    return _spots([
        ("sum zeta(n+1) 2^-n = 2 ln 2", "P11", dict(r=0, x=Fraction(1, 2)), 2 * mp.log(2), 1e-10),
        ("sum (n+1)(zeta(n+2)-1) = pi^2/6", "FULL_SHIFT_MINUS1", dict(r=1, p=0, x=1), mp.pi ** 2 / 6, 1e-8),
        ("x = 1 case 2 zeta(3)", "FULL_SHIFT_MINUS1", dict(r=1, p=1, x=1), 2 * _zeta(3), 1e-8),
        ("zeta(2,3/2)/2 = pi^2/4 - 2", "FULL_SHIFT_MINUS1", dict(r=0, p=1, x=Fraction(1, 2)),
         mp.pi ** 2 / 4 - 2, 1e-8),
        ("P11 r=1 x=1/2", "P11", dict(r=1, x=Fraction(1, 2)), mp.pi ** 2 / 4 + 2 * mp.log(2), 1e-8),
    ])


@_check("series", "eta and Lerch spot values", 10)
def _eta_spots():
    return _spots([
        ("eta(1,2) = 1 - ln 2", "ETA_ONE_MINUS", dict(r=0, p=0, x=0), 1 - mp.log(2), 1e-10),
        ("eta(2,1/2)/2 = 2 Catalan", "ETA_FULL_SHIFT", dict(r=0, p=1, x=Fraction(1, 2)),
         2 * mp.catalan, 1e-8),
        ("Phi(1,1/2,1) = 2 ln 2", "LERCH", dict(r=0, p=0, z=Fraction(1, 2), a=2, x=1),
         2 * mp.log(2), 1e-10),
        ("Phi(1,-1,1) = ln 2", "LERCH", dict(r=0, p=0, z=-1, a=1, x=0), mp.log(2), 1e-10),
    ])


@_check("series", "Dirichlet spot values", 11)
def _dirichlet_spots():
    z3 = _zeta(3)
    return _spots([
        (f"n=1 x={x} gives x zeta(3)", "DIRICHLET", dict(n=1, x=x, sigma=4), to_mpf(x) * z3, 1e-6)
        for x in (Fraction(1, 2), 1)
    ] + [("n=2 x=1 sigma=5", "DIRICHLET", dict(n=2, x=1, sigma=5), z3 + 2 * _zeta(4), 1e-6)])


@_check("series", "binomial series with r = 1/2 and the product identity", 12)
def _binomial_series():
    worst = 0.0
    for p in range(4):
        for x in (Fraction(3, 10), Fraction(-3, 10)):
            params = dict(r=Fraction(1, 2), p=p, x=x)
            diff = abs(series.closed_form("BINOMIAL_SERIES", params).value.value
                       - series.direct_oracle("BINOMIAL_SERIES", params, 1e-12).value.value)
            worst = max(worst, float(diff))
            if diff > 1e-10:
                return False, f"p={p}, x={x}: {float(diff):.2e}"
    checks = [
        ("BINOMIAL_SERIES", dict(r=Fraction(1, 2), p=0, x=Fraction(3, 10)), mp.sqrt(mp.mpf("1.3")), 1e-10),
        ("BINOMIAL_SERIES", dict(r=Fraction(1, 2), p=1, x=Fraction(3, 10)),
         mp.sqrt(mp.mpf("1.3")) * mp.mpf("0.15") / mp.mpf("1.3"), 1e-10),
        ("BINOMIAL_SERIES", dict(r=2, p=1, x=Fraction(1, 4)), mp.mpf("0.625"), 1e-12),
        ("BINOM", dict(r=1, p=1, x=Fraction(1, 2)), mp.mpf(8), 1e-12),
        ("BINOM", dict(r=0, p=2, x=Fraction(1, 2)), mp.mpf(2), 1e-12),
    ]
    for kind, params, target, tol in checks:
        for rep in (series.closed_form(kind, params), series.direct_oracle(kind, params, 1e-13)):
            if abs(rep.value.value - target) > tol:
                return False, f"{kind} {params} ({rep.method.value})"
    return True, f"8 grid points worst {worst:.1e}; 5 spot values"


@_check("series", "FULL_SHIFT_MINUS1 minus FULL_SHIFT equals minus the power sum")
def _variant_consistency():
    for r in range(3):
        for p in range(4):
            if r + p == 0:
                continue
            for x in X_UNIT:
                a = series.zeta_series_closed(r, p, x, "FULL_SHIFT_MINUS1").value.value
                b = series.zeta_series_closed(r, p, x, "FULL_SHIFT").value.value
                ps = to_mpf(series.power_sum_closed(r, p, x))
                if abs((a - b) + ps) > 1e-9:
                    return False, f"r={r}, p={p}, x={x}"
    return True, "55 points"


# quadrature -----------------------------------------------------------------

@_check("quadrature", "Gauss-Laguerre reproduces omega_{n,r}(x), n <= 8", 8)
def _laguerre():
    worst = 0.0
    for n in range(9):
        for r in (Fraction(1), Fraction(2), Fraction(7, 2)):
            for x in (Fraction(-1), Fraction(1, 2), Fraction(2)):
                q = quadrature.laguerre_check(n, r, x, max_nodes=12)
                diff = abs(q.value.value - to_mpf(poly_eval(geometric_poly(n, r), x)))
                worst = max(worst, float(diff))
                if diff > 1e-9 or q.nodes_used > 12:
                    return False, f"n={n}, r={r}, x={x}: {float(diff):.2e}"
    return True, f"81 points, worst {worst:.1e}"


@_check("quadrature", "sine transforms match their exact left-hand sides", 8)
def _sine_transforms():
    worst = 0.0
    for n in (1, 2, 3):
        for x in (0.5, 1.0, 2.0):
            a = quadrature.sine_sinh_integral(n, x, 1e-10)
            b = quadrature.sine_expm1_integral(n, x, 1e-10)
            for got, want in ((a, quadrature.sinh_lhs(n, x)), (b, quadrature.expm1_lhs(n, x))):
                diff = abs(got.value.value - want)
                worst = max(worst, float(diff))
                if diff > 1e-8:
                    return False, f"n={n}, x={x}: {float(diff):.2e}"
    return True, f"18 integrals, worst {worst:.1e}"


@_check("quadrature", "integral of t/sinh(pi t) is 1/4", 8)
def _quarter():
    v = -quadrature.sine_sinh_integral(1, 0, 1e-11).value.value
    return abs(v - mp.mpf(1) / 4) <= 1e-9, f"{mp.nstr(v, 15)}"


@_check("quadrature", "moments of 1/sinh(pi t) against zeta values")
def _moments():
    for n in (1, 3, 5):
        v = quadrature.sine_sinh_integral(n, 0, 1e-10).value.value
        integral = v / ((-1) ** n * mp.sin(mp.pi * n / 2))
        want = (4 * factorial(n) * mp.pi ** (-(n + 1))
                * (1 - mp.mpf(2) ** (-(n + 1))) * _zeta(n + 1))
        if abs(2 * integral - want) > 1e-8:
            return False, f"n={n}: {float(abs(2 * integral - want)):.2e}"
    return True, "n in {1,3,5}"


# running -----------------------------------------------------------------

def _run(check: _Check, tol) -> CheckResult:
    try:
        ok, detail = check.fn(tol) if check.uses_tol else check.fn()
    except Exception as exc:  # a crash is a failed check, not a crashed run
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(check.suite, check.name, check.criterion, bool(ok), detail)


def run_suite(suite: str = "all", tol: float = 1e-12) -> list[CheckResult]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return [_run(c, mp.mpf(tol)) for c in CHECKS if suite in ("all", c.suite)]


def run_criterion(n: int, tol: float = 1e-12) -> list[CheckResult]:
    return [_run(c, mp.mpf(tol)) for c in CHECKS if c.criterion == n]
