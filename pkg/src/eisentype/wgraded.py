"""Polynomials in w (bounded degree) whose coefficients are q-series.

Bivariate objects in (z, q) are handled through w = 2 pi i z only, so that
zeta = e^w, zeta d/dzeta becomes d/dw and every coefficient stays rational.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Union

from .arith import bernoulli
from .qseries import QSeries, _min_order

Coefficient = Union[QSeries, int, Fraction]


def _as_qseries(c: Coefficient) -> QSeries:
    if isinstance(c, QSeries):
        return c
    return QSeries.constant(c)


class WSeries:
    """sum_{k <= degree} c_k w^k with QSeries coefficients sharing one q-order."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, coeffs: Sequence[Coefficient], degree: Optional[int] = None):
        cs = [_as_qseries(c) for c in coeffs]
        if degree is None:
            degree = len(cs) - 1
        if degree < 0:
            raise ValueError("w-degree bound must be nonnegative")
        cs = cs[: degree + 1]
        order = None
        for c in cs:
            order = _min_order(order, c.order)
        cs = [c.truncate(order) if order is not None else c for c in cs]
        while len(cs) < degree + 1:
            cs.append(QSeries.zero(order))
        self.degree = degree
        self.coeffs = cs

    @classmethod
    def from_function(cls, degree: int, coefficient: Callable[[int], Coefficient]) -> "WSeries":
        return cls([coefficient(k) for k in range(degree + 1)], degree)

    @classmethod
    def constant(cls, value: Coefficient, degree: int) -> "WSeries":
        return cls([value], degree)

    @property
    def q_order(self):
        order = None
        for c in self.coeffs:
            order = _min_order(order, c.order)
        return order

    def __getitem__(self, k: int) -> QSeries:
        if k < 0 or k > self.degree:
            raise IndexError(f"w-degree {k} outside 0..{self.degree}")
        return self.coeffs[k]

    def __repr__(self) -> str:
        return f"WSeries(degree={self.degree}, q_order={self.q_order})"

    def _other(self, other) -> "WSeries":
        if isinstance(other, WSeries):
            return other
        return WSeries.constant(other, self.degree)

    def __add__(self, other) -> "WSeries":
        other = self._other(other)
        z = min(self.degree, other.degree)
        return WSeries([self.coeffs[k] + other.coeffs[k] for k in range(z + 1)], z)

    __radd__ = __add__

    def __neg__(self) -> "WSeries":
        return WSeries([-c for c in self.coeffs], self.degree)

    def __sub__(self, other) -> "WSeries":
        return self + (-self._other(other))

    def __rsub__(self, other) -> "WSeries":
        return (-self) + other

    def scale(self, factor) -> "WSeries":
        if isinstance(factor, QSeries):
            return WSeries([c * factor for c in self.coeffs], self.degree)
        return WSeries([c.scale(factor) for c in self.coeffs], self.degree)

    def __mul__(self, other) -> "WSeries":
        if isinstance(other, WSeries):
            return w_mul(self, other)
        if isinstance(other, (QSeries, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "WSeries":
        if n < 0:
            return w_inverse(self) ** (-n)
        result = WSeries.constant(1, self.degree)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, j: int, grow: bool = False) -> "WSeries":
        """Multiply by w^j; with ``grow`` the degree bound rises by j, else the top is dropped."""
        zero = QSeries.zero(self.q_order)
        if grow:
            return WSeries([zero] * j + self.coeffs, self.degree + j)
        cs = [zero] * j + self.coeffs[: self.degree + 1 - j]
        return WSeries(cs, self.degree)

    def map(self, fn: Callable[[QSeries], QSeries]) -> "WSeries":
        return WSeries([fn(c) for c in self.coeffs], self.degree)

    def truncate(self, degree: int) -> "WSeries":
        return WSeries(self.coeffs[: degree + 1], min(degree, self.degree))

    def first_mismatch(self, other: "WSeries"):
        """First (w-degree, q-exponent, left, right) where the two series differ."""
        z = min(self.degree, other.degree)
        for k in range(z + 1):
            hit = self.coeffs[k].first_mismatch(other.coeffs[k])
            if hit is not None:
                return (k,) + hit
        return None

    def agrees_with(self, other: "WSeries") -> bool:
        return self.first_mismatch(other) is None

    __hash__ = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, WSeries):
            return NotImplemented
        return self.agrees_with(other)

    def to_dict(self) -> dict:
        return {"degree": self.degree, "coeffs": [c.to_dict() for c in self.coeffs]}


def w_mul(a: WSeries, b: WSeries) -> WSeries:
    z = min(a.degree, b.degree)
    out = []
    for k in range(z + 1):
        acc = None
        for i in range(k + 1):
            ai, bj = a.coeffs[i], b.coeffs[k - i]
            if ai.is_zero() or bj.is_zero():
                continue
            term = ai * bj
            acc = term if acc is None else acc + term
        out.append(acc if acc is not None else QSeries.zero(_min_order(a.q_order, b.q_order)))
    return WSeries(out, z)


def w_exp(a: WSeries) -> WSeries:
    """exp(a), from d/dw exp(a) = a' exp(a) degree by degree."""
    c0 = a.coeffs[0]
    head = None
    if not c0.is_zero():
        const = c0.constant_term()
        if const:
            raise ValueError(f"w_exp needs a w^0 coefficient without q-constant term, got {const}")
        head = c0.exp()
    order = a.q_order
    out = [QSeries.one(None).truncate(order) if order is not None else QSeries.one(None)]
    weighted = [(j, a.coeffs[j] * j) for j in range(1, a.degree + 1) if not a.coeffs[j].is_zero()]
    for k in range(1, a.degree + 1):
        acc = None
        for j, ja in weighted:
            if j > k:
                break
            if out[k - j].is_zero():
                continue
            term = ja * out[k - j]
            acc = term if acc is None else acc + term
        out.append(acc / k if acc is not None else QSeries.zero(order))
    result = WSeries(out, a.degree)
    if head is not None:
        result = result.scale(head)
    return result


def w_log(a: WSeries) -> WSeries:
    """log(a) for a w^0 coefficient equal to 1 (to the available q-order)."""
    c0 = a.coeffs[0]
    mismatch = c0.first_mismatch(QSeries.one(None))
    if mismatch is not None:
        exp, got, want = mismatch
        raise ValueError(f"w_log needs w^0 coefficient 1; coefficient of q^{exp} is {got}, expected {want}")
    order = a.q_order
    out = [QSeries.zero(order)]
    for k in range(1, a.degree + 1):
        acc = a.coeffs[k] * k
        for j in range(1, k):
            if out[j].is_zero() or a.coeffs[k - j].is_zero():
                continue
            acc = acc - out[j] * a.coeffs[k - j] * j
        out.append(acc / k)
    return WSeries(out, a.degree)


def w_inverse(a: WSeries) -> WSeries:
    """Multiplicative inverse of a series whose w^0 coefficient is a q-unit."""
    inv0 = a.coeffs[0].inverse()
    out = [inv0]
    for k in range(1, a.degree + 1):
        acc = None
        for j in range(1, k + 1):
            if a.coeffs[j].is_zero() or out[k - j].is_zero():
                continue
            term = a.coeffs[j] * out[k - j]
            acc = term if acc is None else acc + term
        out.append(-(acc * inv0) if acc is not None else QSeries.zero(a.q_order))
    return WSeries(out, a.degree)


def w_derivative(a: WSeries) -> WSeries:
    """d/dw; the degree bound drops by one (a constant maps to the zero series of degree 0)."""
    if a.degree == 0:
        return WSeries([QSeries.zero(a.q_order)], 0)
    return WSeries([a.coeffs[k + 1] * (k + 1) for k in range(a.degree)], a.degree - 1)


def q_derivative_w(a: WSeries) -> WSeries:
    """Apply D = q d/dq to every w-coefficient."""
    return a.map(QSeries.derivative)


def sinh_half_kernel(degree: int, reciprocal: bool = False) -> WSeries:
    """sinh(w/2) / (w/2) = sum_j (w/2)^(2j) / (2j+1)!, or its reciprocal.

    This is sin(pi z)/(pi z) after w = 2 pi i z; the coefficients are exact
    constants with no q-dependence.
    """
    if degree < 0:
        raise ValueError("degree bound must be nonnegative")
    cs = []
    for k in range(degree + 1):
        if k % 2:
            cs.append(0)
        else:
            cs.append(Fraction(1, 2 ** k * math.factorial(k + 1)))
    kernel = WSeries(cs, degree)
    return w_inverse(kernel) if reciprocal else kernel


def bernoulli_exponent(degree: int) -> WSeries:
    """-sum_{k >= 2} B_k w^k / (k * k!) as an exact w-series."""
    cs = [0, 0] + [-bernoulli(k) / (k * math.factorial(k)) for k in range(2, degree + 1)]
    return WSeries(cs[: degree + 1], degree)


def egf(terms: Iterable[QSeries], degree: int) -> WSeries:
    """sum_k a_k w^k / k! from a sequence a_0, a_1, ..."""
    cs = []
    for k, a in enumerate(terms):
        if k > degree:
            break
        cs.append(a / math.factorial(k))
    return WSeries(cs, degree)
