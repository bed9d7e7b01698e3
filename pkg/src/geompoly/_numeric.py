"""Shared working-precision context for the numeric layer.

The closed forms on the outer edge of their domains (Hurwitz parameter 0.1)
produce values near 1e9 that must be matched to 1e-8 absolute, which is below
one double-precision ulp. All numeric routines therefore run on a private
mpmath context so the global ``mpmath.mp`` settings are never touched.
"""
from __future__ import annotations

from fractions import Fraction

import mpmath

WORKING_DPS = 30

mp = mpmath.MPContext()
mp.dps = WORKING_DPS

# smallest relative accuracy any routine will certify
REL_FLOOR = mp.mpf(10) ** (4 - WORKING_DPS)


class DomainError(ValueError):
    """Argument outside the mathematical domain, or an unattainable tolerance."""


def to_mpf(v):
    """Convert int/Fraction/float/str/mpf to a working-precision mpf.

    Strings may be ``"p/q"`` rationals or decimal literals; rationals are
    divided in working precision, never round-tripped through a double.
    """
    if isinstance(v, Fraction):
        return mp.mpf(v.numerator) / v.denominator
    if isinstance(v, str):
        if "/" in v:
            return to_mpf(Fraction(v))
        return mp.mpf(v)
    return mp.mpf(v)


def is_integer(v) -> bool:
    v = to_mpf(v)
    return v == mp.floor(v)
