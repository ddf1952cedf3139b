from __future__ import annotations

import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from eisentype.arith import (
    Rational,
    as_rational,
    bernoulli,
    bernoulli_polynomial,
    check_multinomial_divisibility,
    lcm_many,
    multinomial,
    poly_eval,
)

from oracles import bernoulli_akiyama_tanigawa, multinomial_factorials


def test_rational_is_fraction():
    assert Rational is Fraction
    assert as_rational(3) == Fraction(3)
    assert as_rational("5/7") == Fraction(5, 7)


def test_bernoulli_small_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)


@pytest.mark.parametrize("n", range(0, 41))
def test_bernoulli_against_akiyama_tanigawa(n):
    expected = bernoulli_akiyama_tanigawa(n)
    if n == 1:
        expected = -expected
    assert bernoulli(n) == expected


@pytest.mark.parametrize("n", range(2, 31))
def test_bernoulli_against_sympy(n):
    assert bernoulli(n) == Fraction(str(sympy.bernoulli(n)))


def test_bernoulli_odd_vanish():
    assert all(bernoulli(n) == 0 for n in range(3, 60, 2))


def test_bernoulli_rejects_negative():
    with pytest.raises(ValueError):
        bernoulli(-1)


@given(st.lists(st.integers(min_value=0, max_value=12), min_size=1, max_size=5))
def test_multinomial_matches_factorials(parts):
    assert multinomial(parts) == multinomial_factorials(parts)


def test_multinomial_divisibility_examples():
    # 6 / gcd(2, 4) = 3 divides 15
    assert check_multinomial_divisibility([2, 4])
    assert check_multinomial_divisibility([5])
    assert check_multinomial_divisibility([3, 3, 3])


@given(st.lists(st.integers(min_value=1, max_value=30), min_size=1, max_size=6))
def test_multinomial_divisibility_property(parts):
    n = sum(parts)
    g = math.gcd(*parts)
    assert multinomial(parts) % (n // g) == 0
    assert check_multinomial_divisibility(parts)


@pytest.mark.parametrize("bad", [[], [0, 2], [3, -1]])
def test_multinomial_divisibility_rejects(bad):
    with pytest.raises(ValueError):
        check_multinomial_divisibility(bad)


def test_lcm_many():
    assert lcm_many([4, 6, 10]) == 60
    assert lcm_many([]) == 1


@pytest.mark.parametrize("n", range(0, 13))
def test_bernoulli_polynomial_against_sympy(n):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.bernoulli(n, x), x).all_coeffs()[::-1]
    got = bernoulli_polynomial(n)
    assert got == [Fraction(str(c)) for c in expected]


def test_bernoulli_polynomial_values():
    assert poly_eval(bernoulli_polynomial(2), Fraction(0)) == Fraction(1, 6)
    assert poly_eval(bernoulli_polynomial(1), Fraction(1, 2)) == 0


@given(st.integers(0, 12), st.fractions(max_denominator=20), st.fractions(max_denominator=20))
def test_bernoulli_polynomial_translation(n, x, y):
    lhs = poly_eval(bernoulli_polynomial(n), x + y)
    rhs = sum(math.comb(n, k) * poly_eval(bernoulli_polynomial(n - k), x) * y ** k for k in range(n + 1))
    assert lhs == rhs
