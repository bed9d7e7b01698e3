"""Reference values below were frozen from a 40-digit mpmath run."""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from geompoly._numeric import DomainError, mp
from geompoly.special import (
    RealScalar,
    digamma,
    eta_fn,
    gamma_real,
    hurwitz_zeta,
    lerch_phi,
    riemann_zeta,
    zeta_upper_bound,
)

REF = {
    "zeta(2)": "1.644934066848226436472415166646025189219",
    "zeta(6,1/10)": "1000000.577562591408102818384110032484601",
    "zeta(3.5,27/10)": "0.05202725101017962516909822192488827763487",
    "psi(1)": "-0.5772156649015328606065120900824024310422",
    "psi(-9/10)": "-9.31264382929996568405710510789891429318",
    "psi(1/2)": "-1.963510026021423479440976332998755567193",
    "eta(1/2)": "0.6048986434216303702472659142359554997598",
    "catalan": "0.9159655941772190150546035149323841107742",
    "ln2": "0.6931471805599453094172321214581765680755",
    "Phi(2,-7/10,3/2)": "0.360824177467603714473283019256546668023",
    "eta(3,1/2)": "7.751569170074955043869078766775348800556",
    "gamma(7/2)": "3.323350970447842551184064031264647217745",
}


def close(v, key, tol):
    return abs(v.value - mp.mpf(REF[key])) <= tol


def test_hurwitz_reference_values():
    assert close(hurwitz_zeta(2, 1, 1e-20), "zeta(2)", 1e-20)
    assert close(hurwitz_zeta(6, Fraction(1, 10), 1e-18), "zeta(6,1/10)", 1e-18)
    assert close(hurwitz_zeta(3.5, Fraction(27, 10), 1e-20), "zeta(3.5,27/10)", 1e-20)
    assert close(riemann_zeta(2), "zeta(2)", 1e-15)


def test_digamma_reference_values():
    assert close(digamma(1, 1e-20), "psi(1)", 1e-20)
    assert close(digamma(Fraction(-9, 10), 1e-20), "psi(-9/10)", 1e-20)
    assert close(digamma(Fraction(1, 2), 1e-20), "psi(1/2)", 1e-20)


def test_eta_reference_values():
    assert close(eta_fn(1, 1, 1e-20), "ln2", 1e-20)
    assert close(eta_fn(Fraction(1, 2), 1, 1e-20), "eta(1/2)", 1e-20)
    assert abs(eta_fn(2, Fraction(1, 2), 1e-20).value - 4 * mp.mpf(REF["catalan"])) <= 1e-20
    assert close(eta_fn(3, Fraction(1, 2), 1e-20), "eta(3,1/2)", 1e-20)


def test_lerch_reference_values():
    assert abs(lerch_phi(1, Fraction(1, 2), 1, 1e-20).value - 2 * mp.mpf(REF["ln2"])) <= 1e-20
    assert close(lerch_phi(2, Fraction(-7, 10), Fraction(3, 2), 1e-20), "Phi(2,-7/10,3/2)", 1e-20)
    assert lerch_phi(3, 0, 2).value == mp.mpf(1) / 8
    assert abs(lerch_phi(2, -1, 1).value - mp.pi ** 2 / 12) <= 1e-15


def test_gamma_reference_value():
    assert close(gamma_real(Fraction(7, 2)), "gamma(7/2)", 1e-25)
    assert gamma_real(5).value == 24


def test_returned_error_never_exceeds_request():
    for tol in (1e-6, 1e-12, 1e-20):
        r = hurwitz_zeta(3, Fraction(1, 3), tol)
        assert r.tol <= tol


@pytest.mark.parametrize("call", [
    lambda: hurwitz_zeta(1, 1),
    lambda: hurwitz_zeta(2, 0),
    lambda: hurwitz_zeta(2, 1, 1e-40),
    lambda: digamma(-3),
    lambda: digamma(2, 1e-40),
    lambda: eta_fn(0, 1),
    lambda: eta_fn(2, -1),
    lambda: lerch_phi(2, 1, 1),
    lambda: lerch_phi(2, Fraction(3, 2), 1),
    lambda: lerch_phi(0, -1, 1),
    lambda: gamma_real(0),
])
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call()


def test_realscalar_coerces():
    r = RealScalar(Fraction(1, 3), 0)
    assert r.tol > 0
    assert abs(float(r) - 1 / 3) < 1e-16


positive_a = st.fractions(min_value=Fraction(1, 20), max_value=8, max_denominator=40)


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=1.2, max_value=15), positive_a)
def test_hurwitz_shift_property(s, a):
    tol = 1e-12 * zeta_upper_bound(s, a)
    d = hurwitz_zeta(s, a, tol).value - hurwitz_zeta(s, a + 1, tol).value
    assert abs(d - mp.power(mp.mpf(a.numerator) / a.denominator, -s)) <= 2 * tol


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=-8.9, max_value=30).filter(lambda v: abs(v - round(v)) > 1e-3))
def test_digamma_recurrence(x):
    assert abs(digamma(x + 1).value - digamma(x).value - 1 / mp.mpf(x)) <= 1e-13


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=0.5, max_value=6), st.fractions(min_value=Fraction(-9, 10), max_value=Fraction(9, 10), max_denominator=10),
       positive_a)
def test_lerch_contraction(s, z, a):
    am = mp.mpf(a.numerator) / a.denominator
    zm = mp.mpf(z.numerator) / z.denominator
    lhs = lerch_phi(s, zm, am).value - zm * lerch_phi(s, zm, am + 1).value
    assert abs(lhs - mp.power(am, -s)) <= 3e-15 * max(1, abs(lhs))
