"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Every criterion builds its series from a fresh bank so the measured runtime
includes all construction work.
"""

from __future__ import annotations

import time
from fractions import Fraction


from eisentype import verify
from eisentype.eisenstein import SeriesBank
from eisentype.partitions import crank_counts_brute, rank_counts
from eisentype.qseries import QSeries
from eisentype.relations import default_generators, find_relations, monomial_basis

from oracles import partition_numbers

F8_TABLE = [Fraction(1, 480), 0, 1, 255, 6179, 53179, 253815, 844966, 2234875]


def _report(capsys, number: int, title: str, ok: bool, elapsed: float, limit: float, detail: str = ""):
    verdict = "PASS" if ok and elapsed < limit else "FAIL"
    line = f"[criterion {number:>2}] {verdict}  {title}  ({elapsed:.2f}s, limit {limit:g}s)"
    if detail:
        line += f"  {detail}"
    with capsys.disabled():
        print("\n" + line)
    assert ok, detail
    assert elapsed < limit, f"runtime {elapsed:.2f}s exceeds {limit}s"


def _checks(specs):
    """Run (name, order, params) triples on fresh banks; return reports."""
    out = []
    for name, order, params in specs:
        out.append(verify.run_check(name, bank=SeriesBank(order), order=order, **params))
    return out


def _summary(reports):
    bad = [r for r in reports if not r.passed]
    if bad:
        return False, "; ".join(r.line() for r in bad)
    return True, "; ".join(f"{r.name} {r.verified_to}" for r in reports)


def test_criterion_01_coefficient_tables(capsys):
    start = time.perf_counter()
    reports = _checks([("examples_table", 9, {})])
    ok, detail = _summary(reports)
    ok = ok and SeriesBank(9).f(8).dense(9) == F8_TABLE
    _report(capsys, 1, "f_2, f_4, f_6, f_8 through q^8 match the reference tables", ok,
            time.perf_counter() - start, 5, detail)


def test_criterion_02_three_routes(capsys):
    start = time.perf_counter()
    reports = _checks([("recursions_agree", 25, {"max_weight": 16})])
    ok, detail = _summary(reports)
    _report(capsys, 2, "log route and both recursions agree for n <= 16 at q-order 25", ok,
            time.perf_counter() - start, 60, detail)


def test_criterion_03_integrality(capsys):
    start = time.perf_counter()
    reports = _checks([("integrality", 41, {"max_weight": 16})])
    ok, detail = _summary(reports)
    _report(capsys, 3, "f_k + B_k/(2k) integral at exponents 1..40, even k <= 16", ok,
            time.perf_counter() - start, 30, detail)


def test_criterion_04_derivative_formula(capsys):
    start = time.perf_counter()
    bank = SeriesBank(20)
    reports = [verify.run_check("d_f", bank=bank, order=20, max_weight=12),
               verify.run_check("d_f_examples", bank=bank, order=20)]
    ok, detail = _summary(reports)
    _report(capsys, 4, "D(f_k) formula for even k <= 12 and displayed D(f_2), D(f_4) at q-order 20", ok,
            time.perf_counter() - start, 60, detail)


def test_criterion_05_rank_crank_pde(capsys):
    start = time.perf_counter()
    reports = _checks([("rank_crank_pde", 20, {"degree": 10})])
    ok, detail = _summary(reports)
    _report(capsys, 5, "rank-crank PDE to (w-degree, q-order) = (10, 20)", ok,
            time.perf_counter() - start, 60, detail)


def test_criterion_06_crank_identities(capsys):
    start = time.perf_counter()
    bank = SeriesBank(20)
    reports = [verify.run_check("crank_trace", bank=bank, order=20, degree=10),
               verify.run_check("crank_exp", bank=bank, order=20, degree=10)]
    ok, detail = _summary(reports)
    _report(capsys, 6, "crank trace and crank exponential identities to (10, 20)", ok,
            time.perf_counter() - start, 30, detail)


def test_criterion_07_rank_moment_identities(capsys):
    start = time.perf_counter()
    reports = _checks([("r_k_via_g", 25, {"max_weight": 14}),
                       ("g_generating", 20, {"degree": 10}),
                       ("fk_leading", 10, {"max_weight": 16})])
    ok, detail = _summary(reports)
    _report(capsys, 7, "R_k via g_l, g-generating identity, leading coefficients of f_k", ok,
            time.perf_counter() - start, 30, detail)


def test_criterion_08_route_cross_validation(capsys):
    start = time.perf_counter()
    reports = _checks([("rank_moment_routes", 25, {"max_weight": 10}),
                       ("crank_anomaly", 26, {})])
    ok, detail = _summary(reports)
    _report(capsys, 8, "closed rank-moment formula vs enumeration; crank generating function vs crank", ok,
            time.perf_counter() - start, 60, detail)


def test_criterion_09_relation_search(capsys):
    start = time.perf_counter()
    gens = default_generators(12)
    notes = []
    ok = True
    for weight in range(2, 13, 2):
        count = len(monomial_basis(weight, gens))
        order = count + 5
        res = find_relations(weight, order, gens)
        notes.append(f"W={weight}:{count} monomials@N={order}")
        ok = ok and not res.found and res.order >= count + 5
    control8 = find_relations(8, 12, ["G4", "G8"])
    control12 = find_relations(12, 20, ["G4", "G6", "G12"])
    ok = ok and len(control8.nullspace) == 1 and len(control12.nullspace) == 1
    notes.append("controls: weight 8 and weight 12 relations found")
    _report(capsys, 9, "no relation up to weight 12; positive controls detect classical relations", ok,
            time.perf_counter() - start, 600, ", ".join(notes))


def test_criterion_10_property_suites(capsys):
    import test_qseries
    import test_wgraded

    start = time.perf_counter()
    failures = []

    def attempt(label, fn):
        try:
            fn()
        except Exception as exc:  # report every failing suite, not only the first
            failures.append(f"{label}: {exc!r}")

    attempt("ring laws", test_qseries.test_ring_laws)
    attempt("w ring laws", test_wgraded.test_ring_laws)
    attempt("exp/log", test_qseries.test_exp_log_round_trip)
    attempt("log/exp", test_qseries.test_log_exp_round_trip)
    attempt("w exp/log", test_wgraded.test_exp_log_round_trip)
    attempt("Leibniz", test_qseries.test_leibniz)

    for name, params in (("cycle_index", {"trials": 20}), ("multinomial_div", {"trials": 10000})):
        r = verify.run_check(name, **params)
        if not r.passed:
            failures.append(r.line())

    p = partition_numbers(30)
    for n in range(31):
        counts = rank_counts(n)
        if sum(counts.values()) != p[n] or any(counts.get(-m, 0) != c for m, c in counts.items()):
            failures.append(f"rank counts at n={n}")
        if n >= 2:
            cc = crank_counts_brute(n)
            if sum(cc.values()) != p[n] or any(cc.get(-m, 0) != c for m, c in cc.items()):
                failures.append(f"crank counts at n={n}")

    base = SeriesBank(20)
    bad = base.with_overrides(G4=base.G(4) + QSeries.monomial(5, 1, 20))
    r = verify.run_check("rank_crank_pde", bank=bad)
    if r.passed or (r.mismatch["w_degree"], r.mismatch["exponent"]) != (4, "5"):
        failures.append(f"fault injection not localized: {r.mismatch}")
    bad = SeriesBank(9, {("f", 6): base.f(6).truncate(9) + QSeries.monomial(4, Fraction(1, 3), 9)})
    r = verify.run_check("examples_table", bank=bad)
    if r.passed or r.mismatch["exponent"] != "4" or "f_6" not in r.mismatch["label"]:
        failures.append(f"table fault not localized: {r.mismatch}")

    _report(capsys, 10, "property suites, symmetry and count checks, fault injection", not failures,
            time.perf_counter() - start, 60, "; ".join(failures))
