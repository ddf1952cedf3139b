"""Integer partitions, rank and crank statistics, and partition traces."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Iterator, Mapping, Optional, Sequence, Union

from .qseries import QSeries

DEFAULT_BOUND = 60


class BoundExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_multiplicities(cls, mult: Mapping[int, int]) -> "Partition":
        parts = []
        for j in sorted(mult, reverse=True):
            parts.extend([j] * mult[j])
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    @cached_property
    def multiplicities(self) -> dict[int, int]:
        """m_j, the number of parts equal to j (only j that occur)."""
        return dict(sorted(Counter(self.parts).items()))

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0


def iter_partitions(n: int, parts: Optional[Iterable[int]] = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n as tuples, reverse-lexicographic (largest first part first).

    ``parts`` restricts the allowed part sizes.
    """
    allowed = sorted(set(parts) if parts is not None else range(1, n + 1), reverse=True)
    allowed = [p for p in allowed if 1 <= p <= n]

    def rec(rest: int, start: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for i in range(start, len(allowed)):
            p = allowed[i]
            if p > rest:
                continue
            for tail in rec(rest - p, i):
                yield (p,) + tail

    if n < 0:
        return
    yield from rec(n, 0)


def partitions_of(n: int, bound: int = DEFAULT_BOUND) -> list[Partition]:
    """All partitions of n, each once, in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > bound:
        raise BoundExceeded(f"n = {n} exceeds the enumeration bound {bound}")
    return [Partition(p) for p in iter_partitions(n)]


def rank(lam: Partition) -> int:
    """Largest part minus number of parts (0 for the empty partition)."""
    return lam.largest - len(lam)


def crank(lam: Partition) -> int:
    """Andrews-Garvan crank.

    The empty partition gets crank 0. The single partition (1) of 1 is
    assigned crank 0, its combinatorial value; the generating-function
    convention at n = 1 lives in :func:`crank_counts_gf` instead.
    """
    if not lam.parts:
        return 0
    if lam.parts == (1,):
        return 0
    ones = lam.multiplicities.get(1, 0)
    if ones == 0:
        return lam.largest
    mu = sum(1 for p in lam.parts if p > ones)
    return mu - ones


def rank_counts(n: int, bound: int = DEFAULT_BOUND) -> dict[int, int]:
    """N(m, n) by enumeration."""
    return dict(sorted(Counter(rank(p) for p in partitions_of(n, bound)).items()))


def crank_counts_brute(n: int, bound: int = DEFAULT_BOUND) -> dict[int, int]:
    """Combinatorial crank counts by enumeration."""
    return dict(sorted(Counter(crank(p) for p in partitions_of(n, bound)).items()))


def phi(lam: Partition) -> Fraction:
    """prod_j 2^{m_j} / (m_j! (j!)^{m_j})."""
    num, den = 1, 1
    for j, m in lam.multiplicities.items():
        num *= 2 ** m
        den *= math.factorial(m) * math.factorial(j) ** m
    return Fraction(num, den)


def psi(lam: Partition) -> Fraction:
    """(-1)^{number of parts} phi(lam)."""
    return phi(lam) if len(lam) % 2 == 0 else -phi(lam)


HProvider = Union[Callable[[int], QSeries], Sequence[QSeries], Mapping[int, QSeries]]


def partition_trace(n: int, weight: Callable[[Partition], Fraction], h: HProvider, order=None) -> QSeries:
    """Tr_n(weight, h) = sum over partitions of n of weight(lam) prod_j h_j^{m_j}.

    Parts j whose h_j is the zero series are skipped during enumeration.
    ``order`` fixes the truncation order of the result (needed for n = 0);
    by default it is the smallest order among h_1..h_n.
    """
    get = h if callable(h) else h.__getitem__
    hs = {j: get(j) for j in range(1, n + 1)}
    if order is None:
        orders = [s.order for s in hs.values() if s.order is not None]
        order = min(orders) if orders else None
    total = QSeries.zero(order)
    allowed = [j for j, s in hs.items() if not s.is_zero()]
    powers: dict[tuple[int, int], QSeries] = {}

    def power(j: int, m: int) -> QSeries:
        key = (j, m)
        if key not in powers:
            powers[key] = hs[j] if m == 1 else power(j, m - 1) * hs[j]
        return powers[key]

    for parts in iter_partitions(n, allowed):
        lam = Partition(parts)
        c = weight(lam)
        if not c:
            continue
        term = QSeries.one(None)
        for j, m in lam.multiplicities.items():
            term = term * power(j, m)
        total = total + term.scale(c).truncate(order)
    return total


class LaurentQ:
    """Per q-power Laurent polynomials in zeta^(1/2), truncated below q^order.

    ``per_power[n]`` maps doubled zeta-exponents to coefficients of q^n.
    """

    __slots__ = ("order", "per_power")

    def __init__(self, order: int, per_power: Optional[Sequence[Mapping[int, int]]] = None):
        self.order = int(order)
        rows = [dict(r) for r in (per_power or [])][: self.order]
        while len(rows) < self.order:
            rows.append({})
        self.per_power = [{e: c for e, c in r.items() if c} for r in rows]

    @classmethod
    def one(cls, order: int) -> "LaurentQ":
        return cls(order, [{0: 1}])

    def coefficient(self, m, n: int) -> Fraction:
        """Coefficient of zeta^m q^n (m may be a half-integer)."""
        if n >= self.order:
            raise ValueError(f"q^{n} is beyond the truncation order {self.order}")
        key = Fraction(m) * 2
        if key.denominator != 1:
            return Fraction(0)
        return Fraction(self.per_power[n].get(key.numerator, 0))

    def row(self, n: int) -> dict[Fraction, Fraction]:
        """{m: coefficient} for q^n, with m as a (possibly half-integral) rational."""
        return {Fraction(e, 2): Fraction(c) for e, c in sorted(self.per_power[n].items())}

    def moment(self, k: int) -> QSeries:
        """sum_n sum_m m^k [zeta^m q^n] q^n."""
        coeffs = {}
        for n, r in enumerate(self.per_power):
            acc = sum((Fraction(e, 2) ** k * c for e, c in r.items()), Fraction(0))
            if acc:
                coeffs[n] = acc
        return QSeries(coeffs, self.order)

    def is_symmetric(self) -> bool:
        return all(r.get(-e, 0) == c for r in self.per_power for e, c in r.items())

    def first_mismatch(self, other: "LaurentQ"):
        """First (n, m, left, right) below the shared order where the objects differ."""
        for n in range(min(self.order, other.order)):
            a, b = self.per_power[n], other.per_power[n]
            for e in sorted(set(a) | set(b)):
                if a.get(e, 0) != b.get(e, 0):
                    return n, Fraction(e, 2), Fraction(a.get(e, 0)), Fraction(b.get(e, 0))
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentQ):
            return NotImplemented
        return self.first_mismatch(other) is None

    __hash__ = None

    def __repr__(self) -> str:
        return f"LaurentQ(order={self.order})"

    # in-place kernels used by the product expansions

    def _mul_binomial(self, zeta2: int, step: int, sign: int = -1) -> None:
        """Multiply by (1 + sign * zeta^(zeta2/2) q^step)."""
        rows = self.per_power
        for n in range(self.order - 1, step - 1, -1):
            src = rows[n - step]
            if not src:
                continue
            dst = rows[n]
            for e, c in src.items():
                key = e + zeta2
                v = dst.get(key, 0) + sign * c
                if v:
                    dst[key] = v
                else:
                    dst.pop(key, None)

    def _div_binomial(self, zeta2: int, step: int) -> None:
        """Multiply by 1 / (1 - zeta^(zeta2/2) q^step)."""
        rows = self.per_power
        for n in range(step, self.order):
            src = rows[n - step]
            if not src:
                continue
            dst = rows[n]
            for e, c in src.items():
                key = e + zeta2
                v = dst.get(key, 0) + c
                if v:
                    dst[key] = v
                else:
                    dst.pop(key, None)

    def __add__(self, other: "LaurentQ") -> "LaurentQ":
        order = min(self.order, other.order)
        rows = []
        for n in range(order):
            r = dict(self.per_power[n])
            for e, c in other.per_power[n].items():
                r[e] = r.get(e, 0) + c
            rows.append(r)
        return LaurentQ(order, rows)


def _euler(L: LaurentQ) -> None:
    for j in range(1, L.order):
        L._mul_binomial(0, j)


def _inverse_euler(L: LaurentQ) -> None:
    for j in range(1, L.order):
        L._div_binomial(0, j)


def crank_counts_gf(order: int) -> LaurentQ:
    """(q)_inf / ((zeta q)_inf (zeta^-1 q)_inf) expanded below q^order.

    Defines M(m, n), including M(+-1, 1) = 1 and M(0, 1) = -1.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    L = LaurentQ.one(order)
    _euler(L)
    for j in range(1, order):
        L._div_binomial(2, j)
        L._div_binomial(-2, j)
    return L


def rank_counts_gf(order: int) -> LaurentQ:
    """sum_n q^{n^2} / ((zeta q)_n (zeta^-1 q)_n) below q^order."""
    total = LaurentQ(order)
    n = 0
    while n * n < order:
        term = LaurentQ(order, [{}] * (n * n) + [{0: 1}])
        for j in range(1, n + 1):
            term._div_binomial(2, j)
            term._div_binomial(-2, j)
        total = total + term
        n += 1
    return total


def rank_counts_lerch(order: int) -> LaurentQ:
    """Rank generating function from its Lerch-sum expansion.

    (1 - zeta)/(q)_inf sum_{n in Z} (-1)^n q^{n(3n+1)/2} / (1 - zeta q^n); the
    n = 0 term contributes exactly 1 after multiplying by (1 - zeta).
    """
    inner = LaurentQ(order)
    rows = inner.per_power
    n = 1
    while n * (3 * n - 1) // 2 < order:
        sign = -1 if n % 2 else 1
        # positive index n: q^{n(3n+1)/2} sum_{j>=0} zeta^j q^{nj}
        base = n * (3 * n + 1) // 2
        j = 0
        while base + n * j < order:
            r = rows[base + n * j]
            r[2 * j] = r.get(2 * j, 0) + sign
            j += 1
        # negative index -n: -q^{n(3n-1)/2} sum_{j>=1} zeta^-j q^{nj}
        base = n * (3 * n - 1) // 2
        j = 1
        while base + n * j < order:
            r = rows[base + n * j]
            r[-2 * j] = r.get(-2 * j, 0) - sign
            j += 1
        n += 1
    shifted = []
    for r in rows:
        out = dict(r)
        for e, c in r.items():
            out[e + 2] = out.get(e + 2, 0) - c
        shifted.append(out)
    shifted[0][0] = shifted[0].get(0, 0) + 1
    inner = LaurentQ(order, shifted)
    _inverse_euler(inner)
    return inner


def rank_counts_brute(order: int, bound: int = DEFAULT_BOUND) -> LaurentQ:
    """N(m, n) for n < order assembled from enumeration."""
    rows = [{2 * m: c for m, c in rank_counts(n, bound).items()} for n in range(order)]
    return LaurentQ(order, rows)


def crank_table_brute(order: int, bound: int = DEFAULT_BOUND) -> LaurentQ:
    rows = [{2 * m: c for m, c in crank_counts_brute(n, bound).items()} for n in range(order)]
    return LaurentQ(order, rows)
