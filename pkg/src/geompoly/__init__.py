"""Generalized geometric polynomials, their generating functions, and
closed-form sums of zeta, eta and Lerch series."""
from ._numeric import DomainError
from .combinatorics import (
    bell,
    bernoulli,
    binomial_coeff,
    falling_factorial,
    lah,
    rising_factorial,
    stirling1,
    stirling2,
)
from .genfun import LaurentSeries, boundary_laurent, egf_geometric
from .polynomials import (
    RationalPolynomial,
    exponential_poly,
    geometric_poly,
    p_poly,
    poly_eval,
)
from .quadrature import laguerre_check, sine_expm1_integral, sine_sinh_integral
from .series import SeriesEvalReport, closed_form, direct_oracle
from .special import RealScalar, digamma, eta_fn, hurwitz_zeta, lerch_phi

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "LaurentSeries",
    "RationalPolynomial",
    "RealScalar",
    "SeriesEvalReport",
    "bell",
    "bernoulli",
    "binomial_coeff",
    "boundary_laurent",
    "closed_form",
    "digamma",
    "direct_oracle",
    "egf_geometric",
    "eta_fn",
    "exponential_poly",
    "falling_factorial",
    "geometric_poly",
    "hurwitz_zeta",
    "lah",
    "laguerre_check",
    "lerch_phi",
    "p_poly",
    "poly_eval",
    "rising_factorial",
    "sine_expm1_integral",
    "sine_sinh_integral",
    "stirling1",
    "stirling2",
]
