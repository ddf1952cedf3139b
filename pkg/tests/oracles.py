"""Independent reference computations used only by the tests."""

from __future__ import annotations

import math
from fractions import Fraction


def bernoulli_akiyama_tanigawa(n: int) -> Fraction:
    """B_n with B_1 = +1/2 (Akiyama-Tanigawa); callers flip the sign at n = 1."""
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def partition_numbers(n_max: int) -> list[int]:
    """p(0..n_max) from Euler's pentagonal recurrence."""
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def pentagonal_euler(order: int) -> list[int]:
    """Dense coefficients of prod (1 - q^n) from the pentagonal number theorem."""
    out = [0] * order
    k = 0
    while True:
        hit = False
        for j in ((k, -k) if k else (0,)):
            e = j * (3 * j - 1) // 2
            if e < order:
                out[e] += (-1) ** (j % 2)
                hit = True
        if not hit and k > 0:
            break
        k += 1
    return out


def sigma(k: int, n: int) -> int:
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


def eisenstein_dense(k: int, order: int) -> list[Fraction]:
    """-B_k/(2k) + sum sigma_{k-1}(n) q^n, with B_k from the Akiyama-Tanigawa oracle."""
    const = -bernoulli_akiyama_tanigawa(k) / (2 * k)
    return [const] + [Fraction(sigma(k - 1, n)) for n in range(1, order)]


def g_double_sum(a: int, b: int, ell: int, order: int) -> list[Fraction]:
    """Brute-force double sum over all (n, m) with n m < order."""
    out = [Fraction(0)] * order
    for n in range(1, order):
        for m in range(1, order):
            if n * m >= order:
                break
            if a * n - 1 >= b * m >= b:
                out[n * m] += Fraction(a * n - b * m) ** (ell - 1)
            if n - 1 >= a * b * m >= a * b:
                out[n * m] -= Fraction(n - a * b * m) ** (ell - 1)
    return out


def multinomial_factorials(parts) -> int:
    n = sum(parts)
    den = 1
    for a in parts:
        den *= math.factorial(a)
    return math.factorial(n) // den


def all_partitions(n: int, largest: int | None = None):
    """Plain recursive enumeration, independent of the library's generator."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in all_partitions(n - first, first):
            yield (first,) + rest


def rank_moment_brute(k: int, order: int) -> list[Fraction]:
    out = []
    for n in range(order):
        total = 0
        for lam in all_partitions(n):
            r = (lam[0] - len(lam)) if lam else 0
            total += r ** k
        out.append(Fraction(total))
    return out
