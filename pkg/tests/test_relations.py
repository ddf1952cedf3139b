from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from eisentype.relations import (
    InsufficientOrder,
    Monomial,
    bareiss_echelon,
    default_generators,
    find_relations,
    generator_weight,
    integer_nullspace,
    monomial_basis,
    rational_nullspace,
)


def colored_partition_count(weight: int, weights: list[int]) -> int:
    """Coefficient of x^weight in prod (1 - x^w)^{-1}."""
    dp = [1] + [0] * weight
    for w in weights:
        for n in range(w, weight + 1):
            dp[n] += dp[n - w]
    return dp[weight]


def test_generator_weight():
    assert generator_weight("f10") == 10
    for bad in ("h2", "f3", "G0", "f"):
        with pytest.raises(ValueError):
            generator_weight(bad)


def test_monomial_basis_examples():
    basis = monomial_basis(4, ["f2", "f4", "G2", "G4"])
    assert [str(m) for m in basis] == ["f4", "G4", "f2^2", "f2*G2", "G2^2"]
    assert [str(m) for m in monomial_basis(2, ["f2", "G2"])] == ["f2", "G2"]
    assert [str(m) for m in monomial_basis(4, ["f2"])] == ["f2^2"]
    with pytest.raises(ValueError):
        monomial_basis(3)


@pytest.mark.parametrize("weight", [2, 4, 6, 8, 10, 12])
def test_monomial_counts_match_colored_partitions(weight):
    gens = default_generators(12)
    basis = monomial_basis(weight, gens)
    assert len(basis) == colored_partition_count(weight, [generator_weight(g) for g in gens])
    assert len({m.factors for m in basis}) == len(basis)
    assert all(m.weight == weight for m in basis)
    assert basis == sorted(basis, key=Monomial.sort_key)


def _sympy_nullity(matrix):
    return len(sympy.Matrix(matrix).nullspace())


@given(st.integers(1, 5), st.integers(1, 6), st.integers(0, 2 ** 32))
def test_integer_nullspace_against_sympy(rows, cols, seed):
    rng = random.Random(seed)
    base = [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
    if rows > 1 and rng.random() < 0.5:
        base[-1] = [a + b for a, b in zip(base[0], base[1 % rows])]
    null = integer_nullspace(base)
    assert len(null) == _sympy_nullity(base)
    for vec in null:
        assert all(sum(r[j] * vec[j] for j in range(cols)) == 0 for r in base)
        assert next(v for v in vec if v) > 0


def test_bareiss_rank():
    rows, pivots = bareiss_echelon([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert pivots == [0, 1] and len(rows) == 2


def test_rational_nullspace():
    cols = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1), Fraction(2, 3)]]
    null = rational_nullspace(cols)
    assert len(null) == 1
    v = null[0]
    assert all(sum(cols[j][i] * v[j] for j in range(2)) == 0 for i in range(2))


def test_positive_control_weight_8():
    res = find_relations(8, 12, ["G4", "G8"])
    assert len(res.nullspace) == 1
    vec = dict(zip(map(str, res.monomials), res.nullspace[0]))
    assert vec["G8"] * 120 == -vec["G4^2"]


def test_positive_control_weight_12():
    res = find_relations(12, 20, ["G4", "G6", "G12"])
    assert len(res.nullspace) == 1
    vec = dict(zip(map(str, res.monomials), res.nullspace[0]))
    assert vec == {"G12": 13, "G4^3": -1209600, "G6^2": -12600}


def test_no_relation_at_weight_4():
    res = find_relations(4, 12)
    assert res.nullspace == [] and not res.found
    d = res.to_dict()
    assert d["weight"] == 4 and d["order"] == 12 and d["nullspace"] == []
    assert "no relation of weight 4" in res.describe()


def test_insufficient_order_is_an_error():
    with pytest.raises(InsufficientOrder):
        find_relations(4, 9)
