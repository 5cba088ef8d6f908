"""The identity registry: frozen examples, sweeps, numeric grids, reports."""

import json
from dataclasses import replace
from fractions import Fraction

import pytest

from pie.exact import C, CPolynomial, WeightParams, divisors
from pie.identities import (
    NUMERIC_CAPABLE,
    CheckConfig,
    IdentityId,
    check_agl,
    check_cor25,
    check_cor27,
    check_identity,
    check_thm22,
    lhs_rhs_thm21,
    lhs_rhs_thm23,
    lhs_rhs_thm26,
    run_all,
)

EXACT_CFG = CheckConfig(n_max=30, q_order=20, m_max=3)

# module-level sampling grid; the acceptance suite runs the wider one
Z_GRID = (1.5 + 0j, -1 + 0j, 0.5 + 0.5j, 2 - 1j)
C_GRID = (0.4 + 0j, -0.3 + 0j, 0.4 - 0.3j, 0.2 + 0.7j)
NUMERIC_CFG = CheckConfig(n_max=25, mode="numeric", z_grid=Z_GRID, c_grid=C_GRID)


# -- frozen single-point examples ----------------------------------------------


def test_thm21_exact_example():
    lhs, rhs = lhs_rhs_thm21(4, WeightParams(1, C))
    assert lhs == CPolynomial({1: 1, 2: 2, 4: 4})
    assert rhs == lhs


def test_thm21_trivial_n1():
    for z in (0, 1, 2):
        lhs, rhs = lhs_rhs_thm21(1, WeightParams(z, C))
        assert lhs == C and rhs == C


def test_thm21_divisor_count_specialization():
    lhs, rhs = lhs_rhs_thm21(6, WeightParams(0, C))
    assert lhs.evaluate(Fraction(1)) == 4
    assert rhs.evaluate(Fraction(1)) == 4


def test_thm23_examples():
    assert lhs_rhs_thm23(2, 2, 1) == (4, 4)
    lhs, rhs = lhs_rhs_thm23(1, 3, C)
    assert lhs == C and rhs == C
    for n in range(1, 31):
        lhs, rhs = lhs_rhs_thm23(n, 1, 1)
        assert lhs == rhs == len(divisors(n))


def test_thm26_examples():
    lhs, rhs = lhs_rhs_thm26(6, 0, C)
    assert lhs.evaluate(Fraction(1)) == 4
    assert rhs.evaluate(Fraction(1)) == 4
    lhs, rhs = lhs_rhs_thm26(1, 2, C)
    assert lhs == C and rhs == C
    lhs, rhs = lhs_rhs_thm26(6, 1, C)
    assert lhs.evaluate(Fraction(1)) == 18
    assert rhs.evaluate(Fraction(1)) == 18


def test_cor27_examples():
    assert check_cor27(6) == (6, 6)
    assert check_cor27(1) == (0, 0)
    assert check_cor27(2) == (0, 0)


def test_cor25_examples():
    assert check_cor25(6) == (6, 6)
    assert check_cor25(1) == (0, 0)
    assert check_cor25(2) == (0, 0)


def test_agl_examples():
    lhs, rhs = check_agl(3, scaled=False)
    assert lhs == CPolynomial({1: 1, 2: 1})
    assert rhs == lhs
    lhs, rhs = check_agl(1, scaled=False)
    assert lhs == 1 and rhs == 1
    lhs, rhs = check_agl(5, scaled=True)
    assert lhs.evaluate(Fraction(1)) == 0
    assert rhs.evaluate(Fraction(1)) == 0


def test_check_thm22_report():
    rep = check_thm22(3, 15, Fraction(1))
    assert rep.status == "pass"
    assert rep.id is IdentityId.THM_2_2_EXP
    with pytest.raises(ValueError):
        check_thm22(0, 15, Fraction(1))
    with pytest.raises(ValueError):
        check_thm22(3, 5, Fraction(1))


# -- exact sweeps ----------------------------------------------------------------


@pytest.mark.parametrize("ident", list(IdentityId))
def test_every_identity_passes_exact(ident):
    rep = check_identity(ident, EXACT_CFG)
    assert rep.status == "pass", rep.first_failure
    assert rep.mode == "exact"
    assert rep.first_failure is None


def test_bs_int_wide_sweep():
    rep = check_identity(
        IdentityId.BS_INT, CheckConfig(n_max=60, exponents=(0, 1, 2, 3, 4))
    )
    assert rep.passed


def test_agl_wide_sweep():
    cfg = CheckConfig(n_max=60)
    assert check_identity(IdentityId.AGL_PTI, cfg).passed
    assert check_identity(IdentityId.AGL_SCALED, cfg).passed


def test_eq_1_13_bridge():
    rep = check_identity(IdentityId.EQ_1_13, CheckConfig(n_max=30, m_max=4))
    assert rep.passed


# -- numeric mode ------------------------------------------------------------------


@pytest.mark.parametrize("ident", sorted(NUMERIC_CAPABLE, key=lambda i: i.value))
def test_numeric_grid_within_tolerance(ident):
    rep = check_identity(ident, NUMERIC_CFG)
    assert rep.status == "pass", rep.first_failure
    assert rep.mode == "numeric"
    assert rep.condition is not None and rep.condition > 0.0


def test_numeric_negative_integer_exponents():
    cfg = replace(NUMERIC_CFG, z_grid=(-1 + 0j, -2 + 0j), n_max=30)
    rep = check_identity(IdentityId.BS_ONEVAR, cfg)
    assert rep.passed


def test_numeric_rejected_for_exact_only_identities():
    with pytest.raises(ValueError):
        check_identity(IdentityId.CLASS_SUM, replace(NUMERIC_CFG, n_max=10))


def test_numeric_failure_is_reported_not_raised():
    cfg = replace(NUMERIC_CFG, n_max=25, tolerance=1e-300)
    rep = check_identity(IdentityId.THM_2_3, cfg)
    assert rep.status == "fail"
    assert rep.first_failure is not None
    assert "n" in rep.first_failure


# -- dispatch and reports ------------------------------------------------------------


def test_check_identity_accepts_tag_strings():
    rep = check_identity("class_sum", CheckConfig(n_max=12))
    assert rep.id is IdentityId.CLASS_SUM
    assert rep.passed


def test_unknown_tag_is_a_usage_error():
    with pytest.raises(ValueError):
        check_identity("no_such_identity")
    with pytest.raises(ValueError):
        check_identity(IdentityId.BS_BASIC, CheckConfig(mode="fuzzy"))


def test_registry_is_closed_and_total():
    reports = run_all(CheckConfig(n_max=12, q_order=12, m_max=2))
    exact = [r for r in reports if r.mode == "exact"]
    numeric = [r for r in reports if r.mode == "numeric"]
    assert {r.id for r in exact} == set(IdentityId)
    assert {r.id for r in numeric} == set(NUMERIC_CAPABLE)
    assert all(r.passed for r in reports)


def test_report_json_shape():
    rep = check_identity(IdentityId.BS_BASIC, CheckConfig(n_max=10))
    d = rep.to_json_dict()
    assert d["id"] == "bs_basic"
    assert d["mode"] == "exact"
    assert d["status"] == "pass"
    assert d["first_failure"] is None
    assert d["elapsed_ms"] is None  # timings are opt-in
    timed = rep.to_json_dict(include_timing=True)
    assert isinstance(timed["elapsed_ms"], float)
    json.dumps(d)  # serializable as-is


def test_report_values_render_as_strings():
    rep = check_identity(IdentityId.THM_2_3, replace(NUMERIC_CFG, tolerance=1e-300))
    d = rep.to_json_dict()
    assert d["status"] == "fail"
    assert isinstance(d["first_failure"]["lhs"], str)
    assert isinstance(d["first_failure"]["rhs"], str)
    json.dumps(d)
