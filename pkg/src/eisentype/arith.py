"""Exact scalar arithmetic: rationals, multinomials and Bernoulli numbers."""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import reduce
from typing import Iterable

Rational = Fraction

_bernoulli_cache: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a normalized Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def bernoulli(n: int) -> Fraction:
    """Return the Bernoulli number B_n.

    Uses the convention B_1 = -1/2, i.e. B_n is the constant term of the
    Bernoulli polynomial B_n(X) with generating function t e^{Xt} / (e^t - 1).
    Values come from the recurrence sum_{j<=n} C(n+1, j) B_j = 0 and are
    memoized.
    """
    if n < 0:
        raise ValueError("bernoulli index must be nonnegative")
    if n < len(_bernoulli_cache):
        return _bernoulli_cache[n]
    with _bernoulli_lock:
        cache = _bernoulli_cache
        while len(cache) <= n:
            m = len(cache)
            if m > 1 and m % 2 == 1:
                cache.append(Fraction(0))
                continue
            acc = sum((math.comb(m + 1, j) * cache[j] for j in range(m)), Fraction(0))
            cache.append(-acc / (m + 1))
        return cache[n]


def multinomial(parts: Iterable[int]) -> int:
    """(sum parts)! / prod(parts_j!) as an exact integer."""
    total = 0
    result = 1
    for p in parts:
        if p < 0:
            raise ValueError("multinomial parts must be nonnegative")
        total += p
        result *= math.comb(total, p)
    return result


def check_multinomial_divisibility(parts: Iterable[int]) -> bool:
    """Whether n / gcd(parts) divides the multinomial coefficient of ``parts``."""
    parts = list(parts)
    if not parts or any(p < 1 for p in parts):
        raise ValueError("parts must be a nonempty sequence of positive integers")
    n = sum(parts)
    g = reduce(math.gcd, parts)
    return multinomial(parts) % (n // g) == 0


def lcm_many(values: Iterable[int]) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


def bernoulli_polynomial(n: int) -> list[Fraction]:
    """Coefficients [c_0, ..., c_n] of B_n(X) = sum_k C(n, k) B_k X^{n-k}."""
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = math.comb(n, k) * bernoulli(k)
    return coeffs


def poly_eval(coeffs: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
