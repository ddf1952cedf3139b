"""Catalog of named identity checks with structured, deterministic verdicts.

Every check compares two independently computed objects coefficient by
coefficient up to a stated w-degree and q-order. A pass records exactly how
far equality was established; a fail records the first mismatching
(w-degree, q-exponent) together with both values.
"""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import eisenstein
from .arith import (
    bernoulli,
    bernoulli_polynomial,
    check_multinomial_divisibility,
    poly_eval,
)
from .eisenstein import SeriesBank
from .partitions import (
    crank_counts_brute,
    crank_table_brute,
    iter_partitions,
    partition_trace,
    phi,
    rank_counts_gf,
    rank_counts_lerch,
)
from .qseries import QSeries, max_denominator
from .wgraded import (
    WSeries,
    bernoulli_exponent,
    egf,
    q_derivative_w,
    sinh_half_kernel,
    w_derivative,
    w_exp,
)

MAX_ORDER = 200
MAX_BRUTE_ORDER = 60
MAX_DEGREE = 40
MAX_WEIGHT = 40


class CheckFailed(Exception):
    """Raised inside a check at the first mismatch; carries the location."""

    def __init__(self, label: str, w_degree=None, exponent=None, left=None, right=None, note: str = ""):
        super().__init__(label)
        self.info = {
            "label": label,
            "w_degree": w_degree,
            "exponent": None if exponent is None else str(exponent),
            "left": None if left is None else str(left),
            "right": None if right is None else str(right),
        }
        if note:
            self.info["note"] = note


@dataclass
class CheckReport:
    name: str
    params: dict
    passed: bool
    verified_to: dict = field(default_factory=dict)
    mismatch: Optional[dict] = None
    elapsed: float = 0.0
    gating: bool = True
    comparisons: int = 0

    def to_dict(self) -> dict:
        return asdict(self)

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        scope = ", ".join(f"{k}={v}" for k, v in self.verified_to.items())
        tag = "" if self.gating else " [informational]"
        text = f"{verdict}  {self.name:<20} {scope}  ({self.elapsed:.2f}s){tag}"
        if self.mismatch:
            m = self.mismatch
            where = []
            if m.get("w_degree") is not None:
                where.append(f"w^{m['w_degree']}")
            if m.get("exponent") is not None:
                where.append(f"q^{m['exponent']}")
            text += f"\n      first mismatch in {m['label']} at {' '.join(where) or '-'}: {m['left']} != {m['right']}"
            if m.get("note"):
                text += f" ({m['note']})"
        return text


class _Ledger:
    """Runs comparisons in order and stops at the first disagreement."""

    def __init__(self):
        self.count = 0

    def series(self, label: str, left: QSeries, right: QSeries):
        self.count += 1
        hit = left.first_mismatch(right)
        if hit is not None:
            exp, a, b = hit
            raise CheckFailed(label, None, exp, a, b)

    def wseries(self, label: str, left: WSeries, right: WSeries):
        self.count += 1
        hit = left.first_mismatch(right)
        if hit is not None:
            k, exp, a, b = hit
            raise CheckFailed(label, k, exp, a, b)

    def value(self, label: str, left, right, exponent=None, w_degree=None):
        self.count += 1
        if left != right:
            raise CheckFailed(label, w_degree, exponent, left, right)

    def truth(self, label: str, ok: bool, note: str = ""):
        self.count += 1
        if not ok:
            raise CheckFailed(label, note=note, left=False, right=True)


@dataclass(frozen=True)
class Check:
    name: str
    fn: Callable
    defaults: dict
    scope: Callable[[dict], dict]
    description: str
    gating: bool = True
    max_order: int = MAX_ORDER


CATALOG: dict[str, Check] = {}


def _register(name: str, defaults: dict, scope, description: str, gating: bool = True, max_order: int = MAX_ORDER):
    def deco(fn):
        CATALOG[name] = Check(name, fn, defaults, scope, description, gating, max_order)
        return fn

    return deco


def _wq(p):
    return {"w_degree": p["degree"], "q_order": p["order"]}


def _q(p):
    return {"q_order": p["order"]}


def _kq(p):
    return {"max_weight": p["max_weight"], "q_order": p["order"]}


def _bank(p, bank: Optional[SeriesBank]) -> SeriesBank:
    if bank is not None:
        if bank.order < p["order"]:
            raise ValueError(f"supplied bank has order {bank.order} < {p['order']}")
        return bank
    return eisenstein.bank(p["order"])


def _traces(weight, h, degree: int, order: int) -> WSeries:
    return WSeries([partition_trace(k, weight, h, order=order) for k in range(degree + 1)], degree)


# -- generating-function identities -----------------------------------------


@_register("crank_trace", {"degree": 10, "order": 20}, _wq,
           "crank moments as partition traces of Eisenstein series", max_order=MAX_BRUTE_ORDER)
def _crank_trace(L: _Ledger, p, bank):
    B = _bank(p, bank)
    Z, N = p["degree"], p["order"]
    lhs = egf([B.C(k) for k in range(Z + 1)], Z)
    rhs = _traces(phi, B.G, Z, N) * sinh_half_kernel(Z) * B.partitions()
    L.wseries("sum C_k w^k/k! vs kernel * Tr(phi, G) / (q)_inf", lhs, rhs)


@_register("rank_trace", {"degree": 10, "order": 20, "f_route": "recursion1"}, _wq,
           "rank moments as partition traces of f", max_order=MAX_BRUTE_ORDER)
def _rank_trace(L: _Ledger, p, bank):
    B = _bank(p, bank)
    Z, N = p["degree"], p["order"]
    f = lambda j: B.f(j, p["f_route"])
    traces = _traces(phi, f, Z, N)
    lhs = egf([B.R(k, "brute") for k in range(Z + 1)], Z)
    L.wseries("sum R_k w^k/k! vs kernel * Tr(phi, f) / (q)_inf", lhs, traces * sinh_half_kernel(Z) * B.partitions())
    expo = w_exp(WSeries([QSeries.zero(N)] + [f(k) * Fraction(2, math.factorial(k)) for k in range(1, Z + 1)], Z))
    L.wseries("sum Tr_k(phi, f) w^k vs exp(2 sum f_k w^k/k!)", traces, expo)


@_register("crank_exp", {"degree": 10, "order": 20}, _wq,
           "crank generating function as an exponential of Eisenstein series", max_order=MAX_BRUTE_ORDER)
def _crank_exp(L: _Ledger, p, bank):
    B = _bank(p, bank)
    Z, N = p["degree"], p["order"]
    lhs = egf([B.C(k) for k in range(Z + 1)], Z).scale(B.euler()) * sinh_half_kernel(Z, reciprocal=True)
    rhs = w_exp(WSeries([QSeries.zero(N)] + [B.G(k) * Fraction(2, math.factorial(k)) for k in range(1, Z + 1)], Z))
    L.wseries("(q)_inf C(w) / kernel vs exp(2 sum G_k w^k/k!)", lhs, rhs)


@_register("bernoulli_exp", {"degree": 20}, lambda p: {"w_degree": p["degree"]},
           "reciprocal kernel as an exponential of Bernoulli numbers")
def _bernoulli_exp(L: _Ledger, p, bank):
    Z = p["degree"]
    kernel = sinh_half_kernel(Z)
    recip = sinh_half_kernel(Z, reciprocal=True)
    L.wseries("kernel * reciprocal vs 1", kernel * recip, WSeries.constant(1, Z))
    L.wseries("reciprocal kernel vs exp(-sum B_k w^k/(k k!))", recip, w_exp(bernoulli_exponent(Z)))


@_register("eta_lemma", {"order": 20}, _q, "eta-derivative lemma on the 1/24 lattice")
def _eta_lemma(L: _Ledger, p, bank):
    B = _bank(p, bank)
    eta = B.eta()
    G2 = B.G(2)
    L.series("D(eta) + G_2 eta vs 0", eta.derivative() + G2 * eta, QSeries.zero(eta.order))
    for label, f in (("1", QSeries.one(p["order"])), ("G_4", B.G(4))):
        lhs = eta * (f / eta).derivative()
        rhs = G2 * f + f.derivative()
        L.series(f"eta D(f/eta) vs G_2 f + D(f) for f = {label}", lhs, rhs)


@_register("ramanujan", {"order": 60}, _q, "Ramanujan's differential equations and Serre derivatives")
def _ramanujan(L: _Ledger, p, bank):
    B = _bank(p, bank)
    G2, G4, G6 = B.G(2), B.G(4), B.G(6)
    L.series("D(G_2) vs -2 G_2^2 + 5/6 G_4", G2.derivative(), G2 * G2 * -2 + G4 * Fraction(5, 6))
    L.series("D(G_4) vs -8 G_2 G_4 + 7/10 G_6", G4.derivative(), G2 * G4 * -8 + G6 * Fraction(7, 10))
    L.series("D(G_6) vs -12 G_2 G_6 + 400/7 G_4^2", G6.derivative(), G2 * G6 * -12 + G4 * G4 * Fraction(400, 7))
    L.series("Serre derivative of G_4", B.serre_derivative(G4, 4), G6 * Fraction(7, 10))
    L.series("Serre derivative of G_6", B.serre_derivative(G6, 6), G4 * G4 * Fraction(400, 7))


@_register("rank_crank_pde", {"degree": 10, "order": 20}, _wq,
           "rank-crank PDE in w-graded form", max_order=MAX_BRUTE_ORDER)
def _rank_crank_pde(L: _Ledger, p, bank):
    """Both sides of the PDE multiplied by w^3.

    Crank side: 2 exp(6 sum G_k w^k/k!). Rank side, with E the normalized rank
    generating function (q)_inf R(w) / kernel(w):
    w^3 (6D + d^2/dw^2 + 6 G_2)(E / w) = 2E - 2wE' + w^2 E'' + 6 w^2 (D E + G_2 E).
    """
    B = _bank(p, bank)
    Z, N = p["degree"], p["order"]
    crank_side = w_exp(
        WSeries([QSeries.zero(N)] + [B.G(k) * Fraction(6, math.factorial(k)) for k in range(1, Z + 1)], Z)
    ).scale(2)
    E = egf([B.R(k, "brute") for k in range(Z + 1)], Z).scale(B.euler()) * sinh_half_kernel(Z, reciprocal=True)
    dE = w_derivative(E)
    d2E = w_derivative(dE)
    heat = (q_derivative_w(E) + E.scale(B.G(2))).scale(6).shift(2)
    rank_side = E.scale(2) - dE.shift(1, grow=True).scale(2) + d2E.shift(2, grow=True) + heat
    L.wseries("2 (crank kernel)^3 vs (H + 6 G_2)(rank kernel), times w^3", crank_side, rank_side)


@_register("g_generating", {"degree": 10, "order": 20}, _wq,
           "generating function of the g_l", max_order=MAX_BRUTE_ORDER)
def _g_generating(L: _Ledger, p, bank):
    B = _bank(p, bank)
    Z, N = p["degree"], p["order"]
    lhs = egf([B.R(k, "brute") for k in range(Z + 1)], Z).scale(B.euler()) * sinh_half_kernel(Z, reciprocal=True)
    rhs = WSeries([QSeries.one(N)] + [B.g(k) * Fraction(k * 4, 2 ** k * math.factorial(k)) for k in range(1, Z + 1)], Z)
    L.wseries("(q)_inf R(w) / kernel vs 1 + sum k 2^(2-k) g_k w^k/k!", lhs, rhs)


# -- Eisenstein-type series ----------------------------------------------------

REFERENCE_TABLE = {
    2: (Fraction(-1, 24), [0, 1, 3, 5, 7, 9, 10, 13]),
    4: (Fraction(1, 240), [0, 1, 15, 59, 139, 255, 406, 595]),
    6: (Fraction(-1, 504), [0, 1, 63, 635, 2827, 8199, 18550, 36043]),
    8: (Fraction(1, 480), [0, 1, 255, 6179, 53179, 253815, 844966, 2234875]),
}


@_register("examples_table", {"order": 9}, _q, "reference coefficients of f_2, f_4, f_6, f_8")
def _examples_table(L: _Ledger, p, bank):
    B = _bank(p, bank)
    for k, (const, rest) in REFERENCE_TABLE.items():
        expected = QSeries({0: const, **{n + 1: c for n, c in enumerate(rest)}}, min(9, p["order"]))
        L.series(f"f_{k} vs reference table", B.f(k), expected)


@_register("recursions_agree", {"max_weight": 16, "order": 25}, _kq,
           "f_n from the logarithm vs both recursions")
def _recursions_agree(L: _Ledger, p, bank):
    B = _bank(p, bank)
    for n in range(1, p["max_weight"] + 1):
        via_log = B.f(n, "log")
        L.series(f"f_{n}: log route vs recursion 1", via_log, B.f(n, "recursion1"))
        L.series(f"f_{n}: log route vs recursion 2", via_log, B.f(n, "recursion2"))


@_register("integrality", {"max_weight": 16, "order": 41}, _kq, "f_k + B_k/(2k) has integer coefficients")
def _integrality(L: _Ledger, p, bank):
    B = _bank(p, bank)
    for k in range(2, p["max_weight"] + 1, 2):
        shifted = B.f(k) + bernoulli(k) / (2 * k)
        if max_denominator(shifted, 1) != 1:
            exp, c = next((e, c) for e, c in shifted.terms() if e >= 1 and c.denominator != 1)
            raise CheckFailed(f"f_{k} + B_{k}/{2 * k} integral", None, exp, c, "an integer")
        L.count += 1


@_register("fk_leading", {"max_weight": 16, "order": 10}, _kq, "leading coefficients of f_k and (q)_inf R_k")
def _fk_leading(L: _Ledger, p, bank):
    B = _bank(p, bank)
    for k in range(2, p["max_weight"] + 1, 2):
        f = B.f(k)
        expected = [-bernoulli(k) / (2 * k), 0, 1, 2 ** k - 1]
        for e, want in enumerate(expected):
            L.value(f"coefficient of f_{k}", f[e], Fraction(want), exponent=e)
        normalized = B.euler() * B.R(k, "formula")
        for e, want in enumerate([0, 0, 2, 2 * (2 ** k - 1)]):
            L.value(f"coefficient of (q)_inf R_{k}", normalized[e], Fraction(want), exponent=e)


@_register("d_f", {"max_weight": 12, "order": 20}, _kq, "explicit formula for D(f_k)")
def _d_f(L: _Ledger, p, bank):
    B = _bank(p, bank)
    for k in range(2, p["max_weight"] + 1, 2):
        L.series(f"D(f_{k}) vs trace formula", B.f(k).derivative(), B.d_f_rhs(k))


def _displayed_df(B: SeriesBank, k: int) -> QSeries:
    F = Fraction
    f2, f4, f6, f8 = (B.f(j) for j in (2, 4, 6, 8))
    G2, G4, G6, G8 = (B.G(j) for j in (2, 4, 6, 8))
    if k == 2:
        return -f2 * G2 - f2 * f2 * F(1, 2) - f4 * F(1, 12) + G2 * G2 * F(3, 2) + G4 * F(1, 12)
    if k == 4:
        return (6 * f2 ** 2 * G2 - 18 * f2 * G2 ** 2 - f2 * G4 - f4 * G2 - F(2, 3) * f2 ** 3 - F(7, 3) * f4 * f2
                - F(1, 9) * f6 + 18 * G2 ** 3 + 3 * G2 * G4 + F(1, 30) * G6)
    if k == 6:
        return (-60 * f2 ** 3 * G2 + 270 * f2 ** 2 * G2 ** 2 + 15 * f2 ** 2 * G4 - 540 * f2 * G2 ** 3
                + 30 * f4 * f2 * G2 - 90 * f2 * G2 * G4 - f2 * G6 - 45 * f4 * G2 ** 2 - f6 * G2
                - F(5, 2) * f4 * G4 + 5 * f2 ** 4 - 5 * f4 * f2 ** 2 - F(11, 3) * f6 * f2 - F(25, 4) * f4 ** 2
                - F(1, 8) * f8 + 405 * G2 ** 4 + F(21855, 3652) * G4 ** 2 + 135 * G2 ** 2 * G4 + 3 * G2 * G6
                - F(39, 51128) * G8)
    if k == 8:
        f10, G10 = B.f(10), B.G(10)
        return (840 * f2 ** 4 * G2 - 5040 * f2 ** 3 * G2 ** 2 - 280 * f2 ** 3 * G4 + 15120 * f2 ** 2 * G2 ** 3
                - 840 * f4 * f2 ** 2 * G2 + 2520 * f2 ** 2 * G2 * G4 + 28 * f2 ** 2 * G6 - 22680 * f2 * G2 ** 4
                + 2520 * f4 * f2 * G2 ** 2 - F(305970, 913) * f2 * G4 ** 2 + 56 * f6 * f2 * G2
                - 7560 * f2 * G2 ** 2 * G4 + 140 * f4 * f2 * G4 - 168 * f2 * G2 * G6 + F(39, 913) * f2 * G8
                - 2520 * f4 * G2 ** 3 - 84 * f6 * G2 ** 2 + 70 * f4 ** 2 * G2 - f8 * G2 - 420 * f4 * G2 * G4
                - F(14, 3) * f6 * G4 - F(14, 3) * f4 * G6 - 56 * f2 ** 5 + F(280, 3) * f4 * f2 ** 3
                - F(28, 3) * f6 * f2 ** 2 - F(70, 3) * f4 ** 2 * f2 - 5 * f8 * f2 - F(322, 9) * f4 * f6
                - F(2, 15) * f10 + 13608 * G2 ** 5 + F(917910, 913) * G2 * G4 ** 2 + 7560 * G2 ** 3 * G4
                + 252 * G2 ** 2 * G6 + F(19352886, 1983949) * G4 * G6 + F(36751, 1803590) * G10
                - F(117, 913) * G2 * G8)
    raise ValueError(f"no displayed expression for D(f_{k})")


@_register("d_f_examples", {"order": 20}, _q, "displayed expressions for D(f_2) and D(f_4)")
def _d_f_examples(L: _Ledger, p, bank):
    B = _bank(p, bank)
    for k in (2, 4):
        L.series(f"D(f_{k}) vs displayed expression", B.f(k).derivative(), _displayed_df(B, k))


@_register("d_f_examples_extended", {"order": 20}, _q,
           "displayed expressions for D(f_6) and D(f_8) (non-gating)", gating=False)
def _d_f_examples_extended(L: _Ledger, p, bank):
    B = _bank(p, bank)
    for k in (6, 8):
        L.series(f"D(f_{k}) vs displayed expression", B.f(k).derivative(), _displayed_df(B, k))


# -- rank and crank moments ----------------------------------------------------


@_register("r_k_via_g", {"max_weight": 14, "order": 25}, _kq,
           "rank moments in terms of the g_l", max_order=MAX_BRUTE_ORDER)
def _r_k_via_g(L: _Ledger, p, bank):
    B = _bank(p, bank)
    N = p["order"]
    for k in range(1, p["max_weight"] + 1):
        acc = QSeries.zero(N)
        for ell in range(2, k + 1):
            if (ell - k) % 2:
                continue
            shift = (2 ** (ell - 1) - 1) * bernoulli(ell) / (2 * ell)
            acc = acc + (B.g(ell) + shift) * math.comb(k, ell - 1)
        rhs = acc * B.partitions() * Fraction(4, 2 ** k)
        L.series(f"R_{k} (enumeration) vs g-expansion", B.R(k, "brute"), rhs)


@_register("rank_moment_routes", {"max_weight": 10, "order": 25}, _kq,
           "closed rank-moment formula vs enumeration", max_order=MAX_BRUTE_ORDER)
def _rank_moment_routes(L: _Ledger, p, bank):
    B = _bank(p, bank)
    for k in range(1, p["max_weight"] + 1):
        L.series(f"R_{k}: formula vs enumeration", B.R(k, "formula"), B.R(k, "brute"))


@_register("rank_lerch", {"order": 20}, _q, "rank generating function: Lerch sum and product vs enumeration",
           max_order=MAX_BRUTE_ORDER)
def _rank_lerch(L: _Ledger, p, bank):
    B = _bank(p, bank)
    brute = B.rank_table()
    for label, other in (("Lerch sum", rank_counts_lerch(p["order"])), ("q-product sum", rank_counts_gf(p["order"]))):
        L.count += 1
        hit = other.first_mismatch(brute)
        if hit is not None:
            n, m, a, b = hit
            raise CheckFailed(f"N(m, n): {label} vs enumeration", None, n, a, b, note=f"zeta^{m}")


@_register("crank_anomaly", {"order": 26}, _q, "crank generating function vs combinatorial crank",
           max_order=MAX_BRUTE_ORDER)
def _crank_anomaly(L: _Ledger, p, bank):
    B = _bank(p, bank)
    gf = B.crank_table()
    convention = {Fraction(-1): Fraction(1), Fraction(0): Fraction(-1), Fraction(1): Fraction(1)}
    L.value("M(m, 1) vs generating-function convention", gf.row(1), convention, exponent=1)
    L.value("combinatorial crank counts at n = 1", crank_counts_brute(1), {0: 1}, exponent=1)
    brute = crank_table_brute(p["order"])
    for n in range(2, p["order"]):
        L.value(f"M(m, {n}): generating function vs enumeration", gf.row(n), brute.row(n), exponent=n)


# -- combinatorial and scalar lemmas ---------------------------------------------


@_register("cycle_index", {"degree": 6, "trials": 20, "seed": 0}, lambda p: {"w_degree": p["degree"], "trials": p["trials"]},
           "cycle index identity with random rational weights")
def _cycle_index(L: _Ledger, p, bank):
    rng = random.Random(p["seed"])
    Z = p["degree"]
    for _ in range(p["trials"]):
        xs = {k: Fraction(rng.randint(-20, 20), rng.randint(1, 20)) for k in range(1, Z + 1)}
        lhs = []
        for n in range(Z + 1):
            acc = Fraction(0)
            for parts in iter_partitions(n):
                term = Fraction(1)
                for j in set(parts):
                    m = parts.count(j)
                    term *= xs[j] ** m / math.factorial(m)
                acc += term
            lhs.append(acc)
        rhs = w_exp(WSeries([0] + [xs[k] for k in range(1, Z + 1)], Z))
        L.wseries("partition sum vs exp(sum x_k w^k)", WSeries(lhs, Z), rhs)


@_register("multinomial_div", {"trials": 10000, "seed": 0}, lambda p: {"trials": p["trials"]},
           "n / gcd(a) divides the multinomial coefficient")
def _multinomial_div(L: _Ledger, p, bank):
    rng = random.Random(p["seed"])
    for _ in range(p["trials"]):
        parts = [rng.randint(1, 30) for _ in range(rng.randint(1, 6))]
        L.truth("multinomial divisibility", check_multinomial_divisibility(parts), note=f"parts={parts}")


@_register("bernoulli_poly", {"max_n": 12, "seed": 0}, lambda p: {"max_n": p["max_n"]},
           "Bernoulli polynomial generating function, translation and derivative identities")
def _bernoulli_poly(L: _Ledger, p, bank):
    rng = random.Random(p["seed"])
    top = p["max_n"]
    polys = [bernoulli_polynomial(n) for n in range(top + 1)]
    samples = [Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(4)] + [Fraction(1, 2), Fraction(0)]
    for n in range(1, top + 1):
        derived = [c * i for i, c in enumerate(polys[n])][1:]
        L.value(f"B_{n}'(X) vs {n} B_{n - 1}(X)", derived, [c * n for c in polys[n - 1]], w_degree=n)
    for X in samples:
        for Y in samples:
            for n in range(top + 1):
                lhs = poly_eval(polys[n], X + Y)
                rhs = sum((math.comb(n, k) * poly_eval(polys[n - k], X) * Y ** k for k in range(n + 1)), Fraction(0))
                L.value(f"B_{n}(X+Y) translation at X={X}, Y={Y}", lhs, rhs, w_degree=n)
        # (e^t - 1)/t * sum B_n(X) t^n/n! = e^{Xt}
        gf = [poly_eval(polys[n], X) / math.factorial(n) for n in range(top + 1)]
        for n in range(top + 1):
            lhs = sum((gf[j] / math.factorial(n - j + 1) for j in range(n + 1)), Fraction(0))
            L.value(f"generating function at X={X}", lhs, X ** n / math.factorial(n), w_degree=n)
    for n in range(top + 1):
        L.value(f"B_{n}(1/2) vs -(1 - 2^(1-n)) B_{n}", poly_eval(polys[n], Fraction(1, 2)),
                -(1 - Fraction(2) ** (1 - n)) * bernoulli(n), w_degree=n)


# -- driver ---------------------------------------------------------------------------

_BOUNDS = {"order": (1, MAX_ORDER), "degree": (0, MAX_DEGREE), "max_weight": (1, MAX_WEIGHT),
           "trials": (1, 10 ** 6), "max_n": (0, 200)}


def check_names(include_informational: bool = True) -> list[str]:
    return [n for n, c in CATALOG.items() if include_informational or c.gating]


def resolve_params(name: str, **params) -> dict:
    if name not in CATALOG:
        raise KeyError(f"unknown check {name!r}; known: {', '.join(CATALOG)}")
    check = CATALOG[name]
    merged = dict(check.defaults)
    for key, value in params.items():
        if value is None:
            continue
        if key not in merged:
            raise ValueError(f"check {name!r} takes no parameter {key!r}")
        merged[key] = value
    for key, (lo, hi) in _BOUNDS.items():
        if key in merged:
            if key == "order":
                hi = check.max_order
            if not lo <= merged[key] <= hi:
                raise ValueError(f"{name}: {key}={merged[key]} outside [{lo}, {hi}]")
    return merged


def run_check(name: str, bank: Optional[SeriesBank] = None, **params) -> CheckReport:
    """Run one catalog entry; ``bank`` substitutes inputs (e.g. perturbed series)."""
    merged = resolve_params(name, **params)
    check = CATALOG[name]
    ledger = _Ledger()
    start = time.perf_counter()
    mismatch = None
    try:
        check.fn(ledger, merged, bank)
    except CheckFailed as exc:
        mismatch = exc.info
    elapsed = time.perf_counter() - start
    return CheckReport(
        name=name,
        params=merged,
        passed=mismatch is None,
        verified_to=check.scope(merged) if mismatch is None else {},
        mismatch=mismatch,
        elapsed=elapsed,
        gating=check.gating,
        comparisons=ledger.count,
    )


def _run_for_pool(args) -> CheckReport:
    name, params = args
    return run_check(name, **params)


def applicable_params(name: str, **params) -> dict:
    """Keep only the parameters a given check accepts (for CLI-wide flags)."""
    defaults = CATALOG[name].defaults
    return {k: v for k, v in params.items() if k in defaults and v is not None}


def run_checks(names: list[str], jobs: int = 1, **params) -> list[CheckReport]:
    """Run several checks; output order follows ``names`` regardless of completion order."""
    tasks = [(n, applicable_params(n, **params)) for n in names]
    for n, p in tasks:
        resolve_params(n, **p)
    if jobs <= 1 or len(tasks) <= 1:
        return [run_check(n, **p) for n, p in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_for_pool, tasks))
