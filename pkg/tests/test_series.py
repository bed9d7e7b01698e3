from fractions import Fraction as F

import pytest

from geompoly._numeric import DomainError, mp
from geompoly.series import (
    DIRECT_TOL,
    Method,
    binom_product_identity,
    binomial_power_series,
    closed_form,
    dirichlet_gf,
    direct_oracle,
    eta_series_closed,
    lerch_series_closed,
    power_sum_closed,
    zeta_series_closed,
    zeta_series_p0,
)
from geompoly.verify import _grid_results, series_grid

LN2 = mp.log(2)
ZETA3 = mp.mpf("1.202056903159594285399738161511449990765")
LERCH_DOUBLE_SUM = mp.mpf("0.07949831196880994065085794652893247294054")


def near(report, target, tol):
    return abs(report.value.value - target) <= tol


def test_zeta_examples():
    assert near(zeta_series_closed(1, 0, 0, "FULL_SHIFT_MINUS1"), mp.pi ** 2 / 6 - 1, 1e-11)
    assert near(zeta_series_closed(0, 1, F(1, 2), "FULL_SHIFT_MINUS1"), mp.pi ** 2 / 4 - 2, 1e-11)
    assert near(zeta_series_closed(1, 1, 1, "FULL_SHIFT_MINUS1"), 2 * ZETA3, 1e-11)


def test_p11_examples():
    assert near(zeta_series_p0(0, F(1, 2)), 2 * LN2, 1e-11)
    assert near(zeta_series_p0(2, 0), 0, 1e-11)
    assert near(zeta_series_p0(1, F(1, 2)), mp.pi ** 2 / 4 + 2 * LN2, 1e-11)


def test_eta_examples():
    assert near(eta_series_closed(0, 0, 0, "ONE_MINUS"), 1 - LN2, 1e-11)
    assert near(eta_series_closed(0, 1, F(1, 2), "FULL_SHIFT"), 2 * mp.catalan, 1e-11)
    for variant in ("ONE_MINUS", "FULL_SHIFT", "UNIT_SHIFT"):
        assert near(eta_series_closed(0, 1, 0, variant), 0, 1e-11)


def test_lerch_examples():
    assert near(lerch_series_closed(0, 0, 1, F(1, 2), 2), 2 * LN2, 1e-11)
    assert near(lerch_series_closed(0, 0, 0, -1, 1), LN2, 1e-11)
    assert near(lerch_series_closed(1, 1, F(1, 2), F(1, 2), 3), LERCH_DOUBLE_SUM, 1e-9)


def test_binomial_examples():
    x = F(3, 10)
    assert near(binom_product_identity(0, 0, x), 1 / (1 - mp.mpf(3) / 10), 1e-12)
    assert near(binom_product_identity(1, 1, F(1, 2)), 8, 1e-12)
    assert near(binom_product_identity(0, 2, F(1, 2)), 2, 1e-12)
    assert near(binomial_power_series(F(1, 2), 0, x), mp.sqrt(mp.mpf("1.3")), 1e-12)
    assert near(binomial_power_series(F(1, 2), 1, x), mp.mpf("0.1315587029"), 1e-10)
    assert near(binomial_power_series(2, 1, F(1, 4)), mp.mpf("0.625"), 1e-12)


def test_dirichlet_examples():
    assert near(dirichlet_gf(1, 1, 4), ZETA3, 1e-11)
    z4 = mp.pi ** 4 / 90
    assert near(dirichlet_gf(2, 1, 5), ZETA3 + 2 * z4, 1e-11)
    assert near(dirichlet_gf(1, 0, 5), 0, 1e-11)


def test_direct_examples():
    r = direct_oracle("FULL_SHIFT_MINUS1", dict(r=1, p=0, x=1))
    assert r.method is Method.DIRECT and near(r, mp.pi ** 2 / 6, DIRECT_TOL)
    assert r.tail_bound <= DIRECT_TOL
    assert near(direct_oracle("P11", dict(r=0, x=F(1, 2))), 2 * LN2, DIRECT_TOL)
    assert near(direct_oracle("BINOM", dict(r=1, p=1, x=F(1, 2))), 8, DIRECT_TOL)


def test_power_sum_exact():
    assert power_sum_closed(1, 2, F(1, 2)) == 32
    assert power_sum_closed(0, 0, F(1, 3)) == F(3, 2)


@pytest.mark.parametrize("call", [
    lambda: zeta_series_closed(0, 0, F(1, 2), "FULL_SHIFT_MINUS1"),
    lambda: zeta_series_closed(1, 1, 2, "FULL_SHIFT_MINUS1"),
    lambda: zeta_series_closed(1, 1, 1, "FULL_SHIFT"),
    lambda: zeta_series_closed(1, 0, F(1, 2), "UNIT_SHIFT"),
    lambda: zeta_series_p0(1, 1),
    lambda: eta_series_closed(0, 0, -2, "ONE_MINUS"),
    lambda: lerch_series_closed(0, 0, F(1, 2), 1, 2),
    lambda: lerch_series_closed(0, 0, 3, F(1, 2), 2),
    lambda: binom_product_identity(1, 1, 1),
    lambda: binomial_power_series(F(1, 2), 1, -1),
    lambda: dirichlet_gf(0, 1, 5),
    lambda: dirichlet_gf(2, 1, 3),
    lambda: direct_oracle("UNIT_SHIFT", dict(r=1, p=0, x=F(1, 2))),
])
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call()


def test_real_r_is_accepted():
    r = F(3, 2)
    closed = zeta_series_closed(r, 1, F(1, 2), "FULL_SHIFT_MINUS1")
    direct = direct_oracle("FULL_SHIFT_MINUS1", dict(r=r, p=1, x=F(1, 2)))
    assert abs(closed.value.value - direct.value.value) <= closed.value.tol + direct.value.tol


def test_report_serialization():
    d = closed_form("P11", dict(r=0, x=F(1, 2))).to_dict()
    for key in ("value", "tol", "method", "terms_used", "tail_bound", "special_evals"):
        assert key in d
    assert d["params"]["x"] == "1/2"


WIDE = ("FULL_SHIFT_MINUS1", "FULL_SHIFT", "UNIT_SHIFT_MINUS1", "UNIT_SHIFT", "P11",
        "ETA_ONE_MINUS", "ETA_FULL_SHIFT", "ETA_UNIT_SHIFT", "LERCH")


def _efficiency_violations():
    bad = []
    for kind in WIDE:
        for params, closed, direct in _grid_results(kind):
            if abs(params["x"]) >= F(1, 2) and not direct.terms_used > 10 * closed.special_evals:
                bad.append((kind, params, direct.terms_used, closed.special_evals))
    return bad


@pytest.mark.xfail(strict=True, reason=(
    "at |x| = 1/2 with the coefficient tails decaying like 2^-n the oracle meets 1e-10 "
    "in about 25 terms, while the closed form needs up to 9 special values"))
def test_efficiency_dominance():
    assert _efficiency_violations() == []


def test_efficiency_dominance_holds_near_the_boundary():
    # where convergence is slow the closed form is always the cheaper route
    for kind in WIDE:
        for params, closed, direct in _grid_results(kind):
            radius = {"FULL_SHIFT_MINUS1": 2, "UNIT_SHIFT_MINUS1": 2, "ETA_ONE_MINUS": 2,
                      "LERCH": F(params.get("a", 1))}.get(kind, 1)
            if abs(params["x"]) >= F(9, 10) * radius:
                assert direct.terms_used > 10 * closed.special_evals, (kind, params)


def test_grid_sizes():
    assert len(series_grid("FULL_SHIFT_MINUS1")) == 55
    assert len(series_grid("UNIT_SHIFT")) == 45
    assert len(series_grid("LERCH")) == 162
    assert len(series_grid("DIRICHLET")) == 6
