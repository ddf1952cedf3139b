"""Search for polynomial relations among weight-graded series.

Monomials of a fixed weight in a chosen set of generators are expanded to a
common q-order, the coefficient matrix is assembled column by column, and its
right nullspace is computed exactly with fraction-free elimination. An empty
nullspace means "no relation of this weight is visible to this order"; it is
a bounded claim, never a proof of freeness.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .arith import lcm_many
from .eisenstein import SeriesBank
from .qseries import QSeries

ORDER_MARGIN = 5
DEFAULT_GENERATORS = ("f2", "f4", "f6", "f8", "f10", "f12", "G2", "G4", "G6")

_GEN_RE = re.compile(r"^([fG])(\d+)$")


class InsufficientOrder(ValueError):
    pass


def generator_weight(gen: str) -> int:
    m = _GEN_RE.match(gen)
    if not m:
        raise ValueError(f"generator ids look like 'f4' or 'G6', got {gen!r}")
    k = int(m.group(2))
    if k < 2 or k % 2:
        raise ValueError(f"generator {gen!r} must have even index >= 2")
    return k


def default_generators(max_weight: int) -> tuple[str, ...]:
    """f_2, ..., f_W together with G_2, G_4, G_6."""
    fs = tuple(f"f{k}" for k in range(2, max_weight + 1, 2))
    return fs + ("G2", "G4", "G6")


@dataclass(frozen=True, order=False)
class Monomial:
    """Product of generators; ``factors`` is a nondecreasing tuple of generator positions."""

    generators: tuple[str, ...]
    factors: tuple[int, ...]

    @property
    def exponents(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for i in self.factors:
            g = self.generators[i]
            out[g] = out.get(g, 0) + 1
        return out

    @property
    def weight(self) -> int:
        return sum(generator_weight(self.generators[i]) for i in self.factors)

    def sort_key(self):
        return (self.weight, len(self.factors), self.factors)

    def __str__(self) -> str:
        return "*".join(g if e == 1 else f"{g}^{e}" for g, e in self.exponents.items())

    def evaluate(self, lookup: Callable[[str], QSeries], order: int) -> QSeries:
        out = QSeries.one(order)
        for i in self.factors:
            out = out * lookup(self.generators[i])
        return out.truncate(order)


def monomial_basis(weight: int, generators: Sequence[str] = DEFAULT_GENERATORS) -> list[Monomial]:
    """All monomials of exact ``weight``, ordered by number of factors then generator positions."""
    if weight < 2 or weight % 2:
        raise ValueError("weight must be even and >= 2")
    gens = tuple(generators)
    weights = [generator_weight(g) for g in gens]
    found: list[tuple[int, ...]] = []

    def rec(rest: int, start: int, acc: tuple[int, ...]):
        if rest == 0:
            found.append(acc)
            return
        for i in range(start, len(gens)):
            if weights[i] <= rest:
                rec(rest - weights[i], i, acc + (i,))

    rec(weight, 0, ())
    monos = [Monomial(gens, f) for f in found]
    return sorted(monos, key=Monomial.sort_key)


def bareiss_echelon(matrix: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form of an integer matrix; returns (rows, pivot columns)."""
    A = [list(r) for r in matrix]
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    prev = 1
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        pivot_row = A[r]
        pv = pivot_row[c]
        for i in range(r + 1, nrows):
            row = A[i]
            lead = row[c]
            if lead:
                for j in range(c + 1, ncols):
                    row[j] = (pv * row[j] - lead * pivot_row[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    row[j] = (pv * row[j]) // prev
            row[c] = 0
        prev = pv
        pivots.append(c)
        r += 1
    return A[:r], pivots


def integer_nullspace(matrix: list[list[int]]) -> list[list[int]]:
    """Basis of the right nullspace as primitive integer vectors (first nonzero entry positive)."""
    ncols = len(matrix[0]) if matrix else 0
    rows, pivots = bareiss_echelon(matrix)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fcol in free:
        x = [Fraction(0)] * ncols
        x[fcol] = Fraction(1)
        for i in range(len(pivots) - 1, -1, -1):
            c = pivots[i]
            row = rows[i]
            s = sum((row[j] * x[j] for j in range(c + 1, ncols) if row[j] and x[j]), Fraction(0))
            x[c] = -s / row[c]
        den = lcm_many(v.denominator for v in x)
        ints = [int(v * den) for v in x]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        ints = [v // g for v in ints]
        if next(v for v in ints if v) < 0:
            ints = [-v for v in ints]
        basis.append(ints)
    return basis


def rational_nullspace(columns: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Right nullspace of the matrix whose j-th column is ``columns[j]``.

    Each column is scaled by the lcm of its denominators before elimination;
    the scaling is undone on the way out.
    """
    if not columns:
        return []
    nrows = len(columns[0])
    scales = [lcm_many(Fraction(v).denominator for v in col) for col in columns]
    int_cols = [[int(Fraction(v) * s) for v in col] for col, s in zip(columns, scales)]
    matrix = [[int_cols[j][i] for j in range(len(columns))] for i in range(nrows)]
    out = []
    for vec in integer_nullspace(matrix):
        unscaled = [Fraction(v * s) for v, s in zip(vec, scales)]
        den = lcm_many(v.denominator for v in unscaled)
        g = 0
        for v in unscaled:
            g = math.gcd(g, int(v * den))
        out.append([v * den / g for v in unscaled])
    return out


@dataclass
class RelationSearch:
    weight: int
    order: int
    generators: tuple[str, ...]
    monomials: list[Monomial]
    nullspace: list[list[Fraction]] = field(default_factory=list)
    rank: int = 0

    @property
    def found(self) -> bool:
        return bool(self.nullspace)

    def to_dict(self) -> dict:
        return {
            "weight": self.weight,
            "order": self.order,
            "generators": list(self.generators),
            "monomials": [str(m) for m in self.monomials],
            "monomial_count": len(self.monomials),
            "rank": self.rank,
            "nullspace": [[str(v) for v in vec] for vec in self.nullspace],
        }

    def describe(self) -> str:
        if not self.nullspace:
            return (f"no relation of weight {self.weight} among {len(self.monomials)} monomials "
                    f"visible to q-order {self.order}")
        lines = [f"{len(self.nullspace)} relation(s) of weight {self.weight} at q-order {self.order}:"]
        for vec in self.nullspace:
            terms = [f"({c})*{m}" for c, m in zip(vec, self.monomials) if c]
            lines.append("  " + " + ".join(terms) + " = 0")
        return "\n".join(lines)


def find_relations(weight: int, order: int, generators: Sequence[str] = DEFAULT_GENERATORS,
                   bank: Optional[SeriesBank] = None) -> RelationSearch:
    """Exact nullspace of the monomial coefficient matrix at ``weight`` and q-order ``order``.

    ``order`` must be at least (number of monomials) + 5, otherwise the rank
    test is not meaningful and :class:`InsufficientOrder` is raised.
    """
    gens = tuple(generators)
    monos = monomial_basis(weight, gens)
    need = len(monos) + ORDER_MARGIN
    if order < need:
        raise InsufficientOrder(f"q-order {order} too small for {len(monos)} monomials; need >= {need}")
    bank = bank or SeriesBank(order)
    if bank.order < order:
        raise InsufficientOrder("series bank order is below the requested order")

    def lookup(gen: str) -> QSeries:
        k = generator_weight(gen)
        return bank.f(k) if gen[0] == "f" else bank.G(k)

    columns = [m.evaluate(lookup, order).dense(order) for m in monos]
    null = rational_nullspace(columns)
    return RelationSearch(weight, order, gens, monos, null, len(monos) - len(null))
