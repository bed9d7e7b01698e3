"""Quadrature checks of the integral representations of geometric polynomials.

``laguerre_check`` integrates phi_n(x*lam) against lam^(r-1) e^(-lam) / Gamma(r)
with a generalized Gauss-Laguerre rule, which is exact for polynomial
integrands once enough nodes are used. The two sine transforms are
oscillatory with exponentially decaying envelopes, so they are truncated at a
certified point T and integrated panel by panel in double precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from ._numeric import DomainError, mp, to_mpf
from .polynomials import exponential_poly, geometric_poly, poly_eval
from .special import RealScalar

__all__ = [
    "QuadScheme",
    "QuadratureResult",
    "gauss_laguerre",
    "laguerre_check",
    "sine_sinh_integral",
    "sine_expm1_integral",
    "sinh_lhs",
    "expm1_lhs",
]


class QuadScheme(str, Enum):
    LAGUERRE = "LAGUERRE"
    TRUNCATED_ADAPTIVE = "TRUNCATED_ADAPTIVE"


@dataclass(frozen=True)
class QuadratureResult:
    value: RealScalar
    nodes_used: int
    scheme: QuadScheme

    def __float__(self) -> float:
        return float(self.value.value)


@lru_cache(maxsize=64)
def _laguerre_rule(alpha_str: str, m: int):
    alpha = mp.mpf(alpha_str)
    # Jacobi matrix of the monic generalized Laguerre recurrence
    J = mp.zeros(m, m)
    for i in range(m):
        J[i, i] = 2 * i + alpha + 1
        if i + 1 < m:
            off = mp.sqrt((i + 1) * (i + 1 + alpha))
            J[i, i + 1] = off
            J[i + 1, i] = off
    evals, evecs = mp.eigsy(J)
    nodes = tuple(evals[i] for i in range(m))
    # weights normalized to total mass 1, i.e. already divided by Gamma(alpha+1)
    weights = tuple(evecs[0, i] ** 2 for i in range(m))
    return nodes, weights


def gauss_laguerre(alpha, m: int):
    """Nodes and normalized weights for lam^alpha e^-lam on (0, inf), alpha > -1."""
    if m < 1:
        raise ValueError("need at least one node")
    a = to_mpf(alpha)
    if not a > -1:
        raise DomainError(f"Gauss-Laguerre needs alpha > -1, got {alpha}")
    return _laguerre_rule(mp.nstr(a, mp.dps + 5), m)


def laguerre_check(n: int, r, x, max_nodes: int = 12) -> QuadratureResult:
    """(1/Gamma(r)) int_0^inf lam^(r-1) phi_n(x lam) e^-lam dlam, which equals omega_{n,r}(x)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    rm = to_mpf(r)
    if not rm > 0:
        raise DomainError(f"laguerre_check needs r > 0, got {r}")
    m = n // 2 + 1
    if m > max_nodes:
        raise DomainError(f"degree {n} needs {m} nodes for exactness, max_nodes={max_nodes}")
    nodes, weights = gauss_laguerre(rm - 1, m)
    phi = exponential_poly(n)
    xm = to_mpf(x)
    terms = [w * poly_eval(phi, xm * lam) for lam, w in zip(nodes, weights)]
    value = mp.fsum(terms)
    # the rule is exact for this degree; the error is eigen-solver and summation rounding
    err = 1000 * m * mp.eps * (1 + sum(abs(t) for t in terms))
    return QuadratureResult(RealScalar(value, err), m, QuadScheme.LAGUERRE)


_GL20 = np.polynomial.legendre.leggauss(20)
_GL40 = np.polynomial.legendre.leggauss(40)


def _panel_integrate(f, T: float, h: float):
    """Integrate f over [0, T] on panels of length <= h; returns (value, error estimate, nodes)."""
    k = max(1, math.ceil(T / h))
    edges = np.linspace(0.0, T, k + 1)
    total = 0.0
    err = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        mid, half = (a + b) / 2, (b - a) / 2
        q20 = half * float(np.dot(_GL20[1], f(mid + half * _GL20[0])))
        q40 = half * float(np.dot(_GL40[1], f(mid + half * _GL40[0])))
        total += q40
        err += abs(q40 - q20) + 4 * np.finfo(float).eps * abs(q40)
    return total, err, 60 * k


def _truncation_point(n: int, c: float, scale: float, tol: float) -> tuple[float, float]:
    """T with scale * int_T^inf t^n e^(-ct) dt <= tol/2, using T^n e^(-cT) / (c - n/T)."""
    T = max(1.0, 2.0 * n / c)
    while True:
        bound = scale * T ** n * math.exp(-c * T) / (c - n / T)
        if bound <= tol / 2:
            return T, bound
        T += 0.5


def sine_sinh_integral(n: int, x, tol: float = 1e-10) -> QuadratureResult:
    """(-1)^n int_0^inf sin(x t + pi n / 2) t^n / sinh(pi t) dt, for x >= 0."""
    if n < 1:
        raise DomainError("n must be >= 1")
    xf = float(x)
    if xf < 0:
        raise DomainError(f"x must be >= 0, got {x}")
    if tol < 1e-14:
        raise DomainError(f"tolerance {tol} unattainable in double precision")
    phase = math.pi * n / 2

    def f(t):
        return np.sin(xf * t + phase) * t ** n / np.sinh(math.pi * t)

    # 1/sinh(pi t) <= 2 e^(-pi t) / (1 - e^(-2 pi)) for t >= 1
    T, trunc = _truncation_point(n, math.pi, 2 / (1 - math.exp(-2 * math.pi)), tol)
    h = 1.0 if xf == 0 else min(1.0, math.pi / (2 * xf))
    val, err, used = _panel_integrate(f, T, h)
    total_err = err + trunc
    if total_err > tol:
        raise DomainError(f"sine_sinh_integral: error estimate {total_err:.2e} exceeds tol {tol}")
    return QuadratureResult(RealScalar((-1) ** n * val, total_err), used,
                            QuadScheme.TRUNCATED_ADAPTIVE)


def sine_expm1_integral(n: int, x, tol: float = 1e-10) -> QuadratureResult:
    """n!/x^(n+1) + 2 (-1)^n int_0^inf sin(x t + pi n / 2) t^n / (e^(2 pi t) - 1) dt, x > 0."""
    if n < 1:
        raise DomainError("n must be >= 1")
    xf = float(x)
    if not xf > 0:
        raise DomainError(f"x must be > 0, got {x}")
    if tol < 1e-14:
        raise DomainError(f"tolerance {tol} unattainable in double precision")
    phase = math.pi * n / 2

    def f(t):
        return np.sin(xf * t + phase) * t ** n / np.expm1(2 * math.pi * t)

    # the integral is doubled, so its truncation budget is halved
    T, trunc = _truncation_point(n, 2 * math.pi, 2 / (1 - math.exp(-2 * math.pi)), tol)
    h = min(1.0, math.pi / (2 * xf))
    val, err, used = _panel_integrate(f, T, h)
    lead = math.factorial(n) / xf ** (n + 1)
    total_err = 2 * (err + trunc) + 4 * np.finfo(float).eps * abs(lead)
    if total_err > tol:
        raise DomainError(f"sine_expm1_integral: error estimate {total_err:.2e} exceeds tol {tol}")
    return QuadratureResult(RealScalar(lead + 2 * (-1) ** n * val, total_err), used,
                            QuadScheme.TRUNCATED_ADAPTIVE)


def sinh_lhs(n: int, x):
    """e^x/(e^x+1) * omega_n(-1/(e^x+1)) in working precision."""
    e = mp.exp(to_mpf(x))
    return e / (e + 1) * poly_eval(geometric_poly(n, 1), -1 / (e + 1))


def expm1_lhs(n: int, x):
    """e^x/(e^x-1) * omega_n(1/(e^x-1)) in working precision."""
    xm = to_mpf(x)
    em1 = mp.expm1(xm)
    return (em1 + 1) / em1 * poly_eval(geometric_poly(n, 1), 1 / em1)
