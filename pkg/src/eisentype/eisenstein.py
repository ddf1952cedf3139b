"""Eisenstein series, the Eisenstein-type series f_k and g_l, and rank/crank moments.

Everything is built on a :class:`SeriesBank`, a per-order cache. Routes that
compute the same object differently (f_k from the rank generating function or
from either recursion, R_k from the closed formula or from enumeration) share
the bank's cached inputs. A bank can carry overrides that replace individual
inputs, which is how fault-injection tests perturb a single series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Optional

from .arith import bernoulli
from .partitions import (
    crank_counts_gf,
    partition_trace,
    phi,
    psi,
    rank_counts_brute,
)
from .qseries import QSeries, divisor_sum, euler_product, eta_series, partition_series
from .wgraded import egf, sinh_half_kernel, w_log

F_ROUTES = ("log", "recursion1", "recursion2")
R_ROUTES = ("formula", "brute")


class ConsistencyError(RuntimeError):
    """An internal invariant of a construction failed (e.g. a w^0 coefficient is not 1)."""


def eisenstein_G(k: int, order: int) -> QSeries:
    """-B_k/(2k) + sum_{n,m >= 1} m^{k-1} q^{nm}; zero for odd k."""
    if k < 1 or order < 1:
        raise ValueError("need k >= 1 and order >= 1")
    if k % 2:
        return QSeries.zero(order)
    return divisor_sum(k - 1, order) + (-bernoulli(k) / (2 * k))


def g_series(ell: int, order: int) -> QSeries:
    """The divisor-like sums g_l: g_0 = 1, zero for odd l, else

    (1 - 2^{l-1}) B_l / (2l) + sum_{2n-1 >= 3m >= 3} (2n-3m)^{l-1} q^{nm}
                             - sum_{n-1 >= 6m >= 6} (n-6m)^{l-1} q^{nm}.
    """
    if ell < 0 or order < 1:
        raise ValueError("need l >= 0 and order >= 1")
    if ell == 0:
        return QSeries.one(order)
    if ell % 2:
        return QSeries.zero(order)
    const = (1 - 2 ** (ell - 1)) * bernoulli(ell) / (2 * ell)
    return g_general(2, 3, ell, order) + const


def g_general(a: int, b: int, ell: int, order: int) -> QSeries:
    """sum_{an-1 >= bm >= b} (an-bm)^{l-1} q^{nm} - sum_{n-1 >= abm >= ab} (n-abm)^{l-1} q^{nm}.

    No constant term is added.
    """
    if a < 1 or b < 1:
        raise ValueError("need a, b >= 1")
    if ell < 0 or order < 1:
        raise ValueError("need l >= 0 and order >= 1")
    dense: list = [0] * order
    power = (lambda x: Fraction(1, x)) if ell == 0 else (lambda x: x ** (ell - 1))
    for m in range(1, order):
        # first sum: a n - 1 >= b m  <=>  n >= (b m + 1) / a
        n = -(-(b * m + 1) // a)
        while n * m < order:
            dense[n * m] += power(a * n - b * m)
            n += 1
        # second sum: n >= a b m + 1
        n = a * b * m + 1
        while n * m < order:
            dense[n * m] -= power(n - a * b * m)
            n += 1
    return QSeries({e: c for e, c in enumerate(dense) if c}, order)


def _rank_moment_formula_numerator(k: int, order: int) -> QSeries:
    """sum_{n>=1} (-1)^{n+1} q^{n(3n-1)/2} (1 - q^n) sum_{m>=0} m^k q^{nm}."""
    dense = [0] * order
    n = 1
    while n * (3 * n - 1) // 2 < order:
        sign = 1 if n % 2 else -1
        base = n * (3 * n - 1) // 2
        m = 1
        while base + n * m < order:
            mk = sign * m ** k
            dense[base + n * m] += mk
            if base + n * (m + 1) < order:
                dense[base + n * (m + 1)] -= mk
            m += 1
        n += 1
    return QSeries({e: c for e, c in enumerate(dense) if c}, order)


class SeriesBank:
    """Memoized construction of every named series at one q-order.

    ``overrides`` maps keys such as ``("G", 4)``, ``("g", 6)``, ``("R", 2)``,
    ``("C", 2)`` or ``("f", 4)`` to replacement series; anything derived
    through the bank then sees the replacement.
    """

    def __init__(self, order: int, overrides: Optional[Mapping[tuple, QSeries]] = None, f_route: str = "log",
                 r_route: str = "formula"):
        if order < 1:
            raise ValueError("order must be >= 1")
        if f_route not in F_ROUTES:
            raise ValueError(f"unknown f route {f_route!r}")
        if r_route not in R_ROUTES:
            raise ValueError(f"unknown R route {r_route!r}")
        self.order = int(order)
        self.overrides = dict(overrides or {})
        self.f_route = f_route
        self.r_route = r_route
        self._cache: dict = {}

    def with_overrides(self, **kw) -> "SeriesBank":
        """A fresh bank at the same order with extra ``key=series`` overrides, e.g. G4=..."""
        extra = {}
        for name, series in kw.items():
            extra[(name[0], int(name[1:]))] = series
        return SeriesBank(self.order, {**self.overrides, **extra}, self.f_route, self.r_route)

    def _memo(self, key, build):
        if key in self.overrides:
            return self.overrides[key]
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    # classical objects

    def G(self, k: int) -> QSeries:
        return self._memo(("G", k), lambda: eisenstein_G(k, self.order))

    def euler(self) -> QSeries:
        return self._memo(("euler", 0), lambda: euler_product(self.order))

    def partitions(self) -> QSeries:
        return self._memo(("P", 0), lambda: partition_series(self.order))

    def eta(self) -> QSeries:
        return self._memo(("eta", 0), lambda: eta_series(self.order))

    def g(self, ell: int) -> QSeries:
        return self._memo(("g", ell), lambda: g_series(ell, self.order))

    # moments

    def rank_table(self):
        return self._memo(("rank_table", 0), lambda: rank_counts_brute(self.order, bound=max(60, self.order)))

    def crank_table(self):
        return self._memo(("crank_table", 0), lambda: crank_counts_gf(self.order))

    def R(self, k: int, route: Optional[str] = None) -> QSeries:
        route = route or self.r_route
        for key in (("R", k, route), ("R", k)):
            if key in self.overrides:
                return self.overrides[key]
        return self._memo(("R", k, route), lambda: self._rank_moment(k, route))

    def _rank_moment(self, k: int, route: str) -> QSeries:
        if route == "brute":
            return self.rank_table().moment(k)
        if k == 0:
            return self.partitions()
        if k % 2:
            return QSeries.zero(self.order)
        return _rank_moment_formula_numerator(k, self.order) * self.partitions() * 2

    def C(self, k: int) -> QSeries:
        return self._memo(("C", k), lambda: self.crank_table().moment(k))

    # Eisenstein-type series

    def f(self, k: int, route: Optional[str] = None) -> QSeries:
        route = route or self.f_route
        if ("f", k) in self.overrides:
            return self.overrides[("f", k)]
        if k < 1:
            raise ValueError("f_k is defined for k >= 1")
        if k % 2:
            return QSeries.zero(self.order)
        if route == "log":
            key = ("f", k, "log")
            if key not in self._cache:
                for j, series in self.f_family_log(k).items():
                    self._cache.setdefault(("f", j, "log"), series)
            return self._cache[key]
        if route == "recursion1":
            return self._memo(("f", k, "recursion1"), lambda: self._f_recursion1(k))
        return self._memo(("f", k, "recursion2"), lambda: self._f_recursion2(k))

    def f_family_log(self, K: int) -> dict[int, QSeries]:
        """f_1..f_K read off log((q)_inf R(w) / kernel(w)) = 2 sum f_k w^k / k!."""
        rs = [self.R(k) for k in range(K + 1)]
        A = egf(rs, K).scale(self.euler()) * sinh_half_kernel(K, reciprocal=True)
        head = A[0].first_mismatch(QSeries.one(None))
        if head is not None:
            exp, got, _ = head
            raise ConsistencyError(f"w^0 coefficient of the rank side is not 1: q^{exp} has {got}")
        L = w_log(A)
        return {k: L[k] * Fraction(math.factorial(k), 2) for k in range(1, K + 1)}

    def _f_recursion1(self, n: int) -> QSeries:
        total = self.g(n) * Fraction(n, 2 ** (n - 1))
        for ell in range(2, n - 1, 2):
            c = Fraction(ell * math.comb(n - 1, ell), 2 ** (ell - 2))
            total = total - self.f(n - ell, "recursion1") * self.g(ell) * c
        return total

    def _f_recursion2(self, n: int) -> QSeries:
        total = QSeries.zero(self.order)
        lower = lambda j: self.f(j, "recursion2")
        for ell in range(2, n + 1, 2):
            c = Fraction(math.factorial(n - 1) * ell, math.factorial(ell - 1) * 2 ** (ell - 1))
            trace = partition_trace(n - ell, psi, lower, order=self.order)
            if trace.is_zero():
                continue
            total = total + self.g(ell) * trace * c
        return total

    # derivative algebra

    def d_f_rhs(self, k: int) -> QSeries:
        """k!/6 Tr_{k+2}(phi, 3G - f) - (k-1)/(6(k+1)) f_{k+2} - 1/3 sum_a C(k,a) f_{a+1} f_{k-a+1}."""
        if k < 2 or k % 2:
            raise ValueError("d_f_rhs needs even k >= 2")
        h = lambda j: self.G(j) * 3 - self.f(j)
        total = partition_trace(k + 2, phi, h, order=self.order) * Fraction(math.factorial(k), 6)
        total = total - self.f(k + 2) * Fraction(k - 1, 6 * (k + 1))
        for a in range(1, k):
            if (a + 1) % 2 or (k - a + 1) % 2:
                continue
            total = total - self.f(a + 1) * self.f(k - a + 1) * Fraction(math.comb(k, a), 3)
        return total

    def serre_derivative(self, a: QSeries, k: int) -> QSeries:
        return a.derivative() + self.G(2) * a * (2 * k)


@lru_cache(maxsize=16)
def bank(order: int) -> SeriesBank:
    """Shared default bank per order."""
    return SeriesBank(order)


# functional surface ----------------------------------------------------------


def rank_moment(k: int, order: int, route: str = "formula") -> QSeries:
    """R_k to the given order; the closed formula is stated for even k >= 2."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if route == "formula" and k == 0:
        raise ValueError("the closed rank-moment formula applies to even k >= 2")
    if route not in R_ROUTES:
        raise ValueError(f"unknown route {route!r}")
    return bank(order).R(k, route)


def crank_moment(k: int, order: int) -> QSeries:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return bank(order).C(k)


def f_via_log(K: int, order: int) -> dict[int, QSeries]:
    """{k: f_k} for 1 <= k <= K from the logarithm of the normalized rank generating function."""
    return SeriesBank(order).f_family_log(K)


def f_via_recursion1(n: int, order: int) -> QSeries:
    return bank(order).f(n, "recursion1")


def f_via_recursion2(n: int, order: int) -> QSeries:
    return bank(order).f(n, "recursion2")


def d_f_rhs(k: int, order: int) -> QSeries:
    return bank(order).d_f_rhs(k)


def serre_derivative(a: QSeries, k: int) -> QSeries:
    """D(a) + 2k G_2 a at the order of ``a``."""
    if a.order is None:
        raise ValueError("serre_derivative needs a truncated series")
    order = math.ceil(a.order)
    return (a.derivative() + eisenstein_G(2, order) * a * (2 * k)).truncate(a.order)


SERIES_KINDS = ("G", "g", "g_general", "f", "R", "C")


@dataclass(frozen=True)
class SeriesFamily:
    """A named member of one of the series families at a given q-order."""

    kind: str
    k: int
    q_order: int
    value: QSeries
    a: Optional[int] = None
    b: Optional[int] = None

    @property
    def label(self) -> str:
        if self.kind == "g_general":
            return f"g^({self.a},{self.b})_{self.k}"
        return f"{self.kind}_{self.k}"


def series_family(kind: str, k: int, order: int, a: Optional[int] = None, b: Optional[int] = None,
                  route: Optional[str] = None) -> SeriesFamily:
    """Construct any family member by name."""
    if order < 1 or k < 0:
        raise ValueError("need order >= 1 and k >= 0")
    B = bank(order)
    if kind == "G":
        value = B.G(k) if k >= 1 else QSeries.zero(order)
    elif kind == "g":
        value = B.g(k)
    elif kind == "g_general":
        if a is None or b is None:
            raise ValueError("g_general needs a and b")
        value = g_general(a, b, k, order)
    elif kind == "f":
        value = B.f(k, route) if k >= 1 else QSeries.zero(order)
    elif kind == "R":
        value = B.R(k, route)
    elif kind == "C":
        value = B.C(k)
    else:
        raise ValueError(f"unknown series kind {kind!r}")
    return SeriesFamily(kind, k, order, value, a, b)
