from __future__ import annotations

from fractions import Fraction

import pytest

from eisentype import verify
from eisentype.eisenstein import SeriesBank
from eisentype.qseries import QSeries


@pytest.mark.parametrize("name", verify.check_names())
def test_every_check_passes_at_defaults(name):
    report = verify.run_check(name)
    assert report.passed, report.line()
    assert report.verified_to
    assert report.comparisons > 0


def test_unknown_check_and_bounds():
    with pytest.raises(KeyError):
        verify.run_check("nope")
    with pytest.raises(ValueError):
        verify.run_check("ramanujan", order=10 ** 6)
    with pytest.raises(ValueError):
        verify.run_check("rank_lerch", order=61)
    with pytest.raises(ValueError):
        verify.run_check("ramanujan", degree=3)


def test_determinism():
    a = verify.run_check("d_f", max_weight=6, order=12).to_dict()
    b = verify.run_check("d_f", max_weight=6, order=12).to_dict()
    a.pop("elapsed"), b.pop("elapsed")
    assert a == b


def test_pde_fault_is_localized():
    base = SeriesBank(20)
    bad = base.with_overrides(G4=base.G(4) + QSeries.monomial(5, 1, 20))
    report = verify.run_check("rank_crank_pde", bank=bad)
    assert not report.passed
    assert report.mismatch["w_degree"] == 4
    assert report.mismatch["exponent"] == "5"
    assert report.verified_to == {}


@pytest.mark.parametrize("exponent,delta", [(3, Fraction(2, 7)), (7, Fraction(-1)), (12, Fraction(5, 3))])
def test_f_fault_hits_table_and_derivative_checks(exponent, delta):
    base = SeriesBank(20)
    bad = SeriesBank(20, {("f", 4): base.f(4) + QSeries.monomial(exponent, delta, 20)})
    if exponent < 9:
        r = verify.run_check("examples_table", bank=bad)
        assert not r.passed and r.mismatch["exponent"] == str(exponent)
        assert "f_4" in r.mismatch["label"]
    r = verify.run_check("d_f_examples", bank=bad)
    assert not r.passed
    # D multiplies the perturbation by its exponent, and D(f_2) involves f_4 linearly
    assert r.mismatch["exponent"] == str(exponent)


def test_g_fault_hits_recursions():
    base = SeriesBank(25)
    bad = SeriesBank(25, {("g", 6): base.g(6) + QSeries.monomial(9, 1, 25)})
    r = verify.run_check("recursions_agree", bank=bad)
    assert not r.passed and r.mismatch["label"].startswith("f_6") and r.mismatch["exponent"] == "9"


def test_rank_moment_fault():
    base = SeriesBank(25)
    bad = SeriesBank(25, {("R", 4, "brute"): base.R(4, "brute") + QSeries.monomial(7, Fraction(3, 5), 25)})
    r = verify.run_check("rank_moment_routes", bank=bad)
    assert not r.passed and r.mismatch["label"].startswith("R_4") and r.mismatch["exponent"] == "7"


def test_crank_fault():
    base = SeriesBank(20)
    bad = base.with_overrides(C2=base.C(2) + QSeries.monomial(4, 1, 20))
    r = verify.run_check("crank_exp", bank=bad)
    assert not r.passed and r.mismatch["w_degree"] == 2 and r.mismatch["exponent"] == "4"


def test_small_bank_rejected():
    with pytest.raises(ValueError):
        verify.run_check("ramanujan", bank=SeriesBank(10))


def test_run_checks_keeps_order_in_parallel():
    names = ["integrality", "bernoulli_exp", "rank_lerch", "eta_lemma"]
    reports = verify.run_checks(names, jobs=3, order=20)
    assert [r.name for r in reports] == names
    assert all(r.passed for r in reports)
    assert reports[0].params["order"] == 20


def test_report_line():
    line = verify.run_check("bernoulli_exp", degree=6).line()
    assert line.startswith("PASS") and "w_degree=6" in line
