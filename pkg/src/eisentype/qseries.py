"""Truncated q-series with exact rational coefficients.

A :class:`QSeries` stores the coefficients of ``q^(e/d)`` for integer ``e``
on a lattice with denominator ``d`` together with a truncation order ``O``:
every exponent below ``O`` is known exactly, nothing at or above it is.
An order of ``None`` marks an exact object (a polynomial), used for pure
constants such as kernel coefficients.

Coefficients are held as ``int`` or ``Fraction`` values; both are exact and
mix freely, and the integer fast path matters for long products.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Union

from .arith import as_rational, lcm_many

Number = Union[int, Fraction]
Order = Optional[Fraction]


class PrecisionError(ValueError):
    """Raised when an operation needs a finite truncation order it does not have."""


def _as_order(order) -> Order:
    if order is None:
        return None
    return as_rational(order)


def _min_order(a: Order, b: Order) -> Order:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _limit(order: Order, lattice: int) -> Optional[int]:
    """Exclusive bound on lattice exponents ``e`` with ``e / lattice < order``."""
    if order is None:
        return None
    return math.ceil(order * lattice)


def _normalize(value: Number) -> Number:
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


class QSeries:
    """Sum of ``c_e q^(e/lattice)`` truncated below ``order``."""

    __slots__ = ("lattice", "order", "_coeffs")

    def __init__(self, coeffs: Optional[Mapping[int, Number]] = None, order=None, lattice: int = 1):
        if lattice < 1:
            raise ValueError("lattice denominator must be positive")
        self.lattice = int(lattice)
        self.order = _as_order(order)
        limit = _limit(self.order, self.lattice)
        clean: dict[int, Number] = {}
        for e, c in (coeffs or {}).items():
            if limit is not None and e >= limit:
                continue
            if isinstance(c, str):
                c = Fraction(c)
            if c:
                clean[int(e)] = _normalize(c)
        self._coeffs = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def _raw(cls, coeffs: dict[int, Number], order: Order, lattice: int) -> "QSeries":
        obj = cls.__new__(cls)
        obj.lattice = lattice
        obj.order = order
        obj._coeffs = coeffs
        return obj

    @classmethod
    def from_dense(cls, values: Iterable[Number], order=None, lattice: int = 1, start: int = 0) -> "QSeries":
        """Build from consecutive lattice coefficients beginning at exponent ``start``."""
        coeffs = {start + i: v for i, v in enumerate(values)}
        if order is None:
            order = Fraction(start + len(coeffs), lattice)
        return cls(coeffs, order, lattice)

    @classmethod
    def constant(cls, value, order=None) -> "QSeries":
        return cls({0: as_rational(value)}, order)

    @classmethod
    def zero(cls, order=None, lattice: int = 1) -> "QSeries":
        return cls({}, order, lattice)

    @classmethod
    def one(cls, order=None) -> "QSeries":
        return cls({0: 1}, order)

    @classmethod
    def monomial(cls, exponent, coefficient=1, order=None) -> "QSeries":
        exponent = as_rational(exponent)
        d = exponent.denominator
        return cls({exponent.numerator: as_rational(coefficient)}, order, d)

    # -- inspection -------------------------------------------------------

    def items(self) -> Iterator[tuple[int, Number]]:
        """Nonzero (lattice exponent, coefficient) pairs in increasing exponent order."""
        for e in sorted(self._coeffs):
            yield e, self._coeffs[e]

    def terms(self) -> Iterator[tuple[Fraction, Fraction]]:
        """Nonzero (rational exponent, coefficient) pairs in increasing order."""
        for e, c in self.items():
            yield Fraction(e, self.lattice), Fraction(c)

    def __getitem__(self, exponent) -> Fraction:
        return self.coefficient(exponent)

    def coefficient(self, exponent) -> Fraction:
        exponent = as_rational(exponent)
        if self.order is not None and exponent >= self.order:
            raise PrecisionError(f"coefficient of q^{exponent} is beyond the truncation order {self.order}")
        scaled = exponent * self.lattice
        if scaled.denominator != 1:
            return Fraction(0)
        return Fraction(self._coeffs.get(scaled.numerator, 0))

    def dense(self, stop: int, start: int = 0) -> list[Fraction]:
        """Coefficients of q^start, ..., q^(stop-1) (integer exponents only)."""
        return [self.coefficient(n) for n in range(start, stop)]

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def valuation(self) -> Order:
        """Smallest exponent with a nonzero coefficient (the order itself for a zero series)."""
        if self._coeffs:
            return Fraction(min(self._coeffs), self.lattice)
        return self.order

    def constant_term(self) -> Fraction:
        return Fraction(self._coeffs.get(0, 0))

    # -- lattice handling ---------------------------------------------------

    def rescale(self, lattice: int) -> "QSeries":
        """Re-express on a finer lattice; ``lattice`` must be a multiple of the current one."""
        if lattice == self.lattice:
            return self
        if lattice % self.lattice:
            raise ValueError(f"lattice {lattice} is not a multiple of {self.lattice}")
        f = lattice // self.lattice
        return QSeries._raw({e * f: c for e, c in self._coeffs.items()}, self.order, lattice)

    def reduce_lattice(self) -> "QSeries":
        """Coarsest lattice that still carries every stored exponent."""
        g = self.lattice
        for e in self._coeffs:
            g = math.gcd(g, e)
            if g == 1:
                break
        if g <= 1:
            return self
        return QSeries._raw({e // g: c for e, c in self._coeffs.items()}, self.order, self.lattice // g)

    def truncate(self, order) -> "QSeries":
        order = _min_order(self.order, _as_order(order))
        limit = _limit(order, self.lattice)
        if limit is None:
            return self
        return QSeries._raw({e: c for e, c in self._coeffs.items() if e < limit}, order, self.lattice)

    def with_order(self, order) -> "QSeries":
        """Declare a truncation order on an exact series (or lower an existing one)."""
        return self.truncate(order)

    @staticmethod
    def _common(a: "QSeries", b: "QSeries") -> tuple["QSeries", "QSeries", int]:
        d = a.lattice * b.lattice // math.gcd(a.lattice, b.lattice)
        return a.rescale(d), b.rescale(d), d

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            if isinstance(other, (int, Fraction)):
                other = QSeries.constant(other)
            else:
                return NotImplemented
        a, b, d = QSeries._common(self, other)
        order = _min_order(a.order, b.order)
        limit = _limit(order, d)
        out = dict(a._coeffs) if limit is None else {e: c for e, c in a._coeffs.items() if e < limit}
        for e, c in b._coeffs.items():
            if limit is not None and e >= limit:
                continue
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return QSeries._raw(out, order, d)

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries._raw({e: -c for e, c in self._coeffs.items()}, self.order, self.lattice)

    def __sub__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            other = QSeries.constant(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QSeries":
        return (-self) + other

    def scale(self, factor) -> "QSeries":
        factor = _normalize(as_rational(factor))
        if not factor:
            return QSeries._raw({}, self.order, self.lattice)
        return QSeries._raw({e: _normalize(c * factor) for e, c in self._coeffs.items()}, self.order, self.lattice)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return series_mul(self, other.inverse())
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / other)
        return NotImplemented

    def __pow__(self, n: int) -> "QSeries":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QSeries.one(None)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        if result.order is None and self.order is not None:
            result = result.with_order(self.order)
        return result

    def inverse(self) -> "QSeries":
        """Multiplicative inverse; the leading term may sit at any lattice exponent."""
        if not self._coeffs:
            raise ZeroDivisionError("inverse of a series with no known nonzero coefficient")
        v = min(self._coeffs)
        lead = Fraction(self._coeffs[v])
        if self.order is None:
            if len(self._coeffs) == 1:
                return QSeries._raw({-v: _normalize(1 / lead)}, None, self.lattice)
            raise PrecisionError("inverse of an exact non-monomial series needs a truncation order")
        d = self.lattice
        # unit u = self / (lead q^v), known below order - v
        n_terms = _limit(self.order, d) - v
        u = [0] * n_terms
        for e, c in self._coeffs.items():
            u[e - v] = c / lead
        inv = [Fraction(0)] * n_terms
        inv[0] = Fraction(1)
        nz = [j for j in range(1, n_terms) if u[j]]
        for i in range(1, n_terms):
            acc = 0
            for j in nz:
                if j > i:
                    break
                acc += u[j] * inv[i - j]
            inv[i] = -acc
        scale = 1 / lead
        coeffs = {}
        for i, c in enumerate(inv):
            if c:
                coeffs[i - v] = _normalize(c * scale)
        vq = Fraction(v, d)
        return QSeries._raw(coeffs, self.order - 2 * vq, d)

    # -- comparison -----------------------------------------------------------

    def first_mismatch(self, other: "QSeries") -> Optional[tuple[Fraction, Fraction, Fraction]]:
        """First exponent below the shared order where the two series differ."""
        a, b, d = QSeries._common(self, other)
        limit = _limit(_min_order(a.order, b.order), d)
        keys = sorted(set(a._coeffs) | set(b._coeffs))
        for e in keys:
            if limit is not None and e >= limit:
                break
            ca, cb = a._coeffs.get(e, 0), b._coeffs.get(e, 0)
            if ca != cb:
                return Fraction(e, d), Fraction(ca), Fraction(cb)
        return None

    def agrees_with(self, other: "QSeries") -> bool:
        return self.first_mismatch(other) is None

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QSeries.constant(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.agrees_with(other)

    __hash__ = None  # equality is agreement to a shared order, not an equivalence

    def __repr__(self) -> str:
        shown = []
        for exp, c in list(self.terms())[:8]:
            shown.append(f"{c}*q^{exp}" if exp else f"{c}")
        body = " + ".join(shown) if shown else "0"
        if len(self._coeffs) > 8:
            body += " + ..."
        tail = "exact" if self.order is None else f"O(q^{self.order})"
        return f"QSeries({body}; {tail})"

    # -- calculus -------------------------------------------------------------

    def derivative(self) -> "QSeries":
        return q_derivative(self)

    def exp(self) -> "QSeries":
        return series_exp(self)

    def log(self) -> "QSeries":
        return series_log(self)

    # -- serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "lattice": self.lattice,
            "order": "inf" if self.order is None else str(self.order),
            "coeffs": [[e, str(Fraction(c))] for e, c in self.items()],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: Mapping) -> "QSeries":
        order = data["order"]
        order = None if order == "inf" else Fraction(order)
        coeffs = {int(e): Fraction(c) for e, c in data["coeffs"]}
        return cls(coeffs, order, int(data["lattice"]))

    @classmethod
    def from_json(cls, text: str) -> "QSeries":
        return cls.from_dict(json.loads(text))


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product; precision follows from each factor's order and leading exponent."""
    a, b, d = QSeries._common(a, b)
    va, vb = a.valuation(), b.valuation()
    if a.order is None and b.order is None:
        order = None
    elif a.order is None:
        order = None if va is None else b.order + va
    elif b.order is None:
        order = None if vb is None else a.order + vb
    else:
        order = min(a.order + vb, b.order + va)
    limit = _limit(order, d)
    A = sorted(a._coeffs.items())
    B = sorted(b._coeffs.items())
    out: dict[int, Number] = {}
    get = out.get
    for ea, ca in A:
        if limit is not None and B and ea + B[0][0] >= limit:
            break
        for eb, cb in B:
            e = ea + eb
            if limit is not None and e >= limit:
                break
            out[e] = get(e, 0) + ca * cb
    coeffs = {e: _normalize(c) for e, c in out.items() if c}
    return QSeries._raw(coeffs, order, d)


def _finite_dense(a: QSeries, what: str) -> list[Number]:
    if a.order is None:
        raise PrecisionError(f"{what} of an exact series needs a truncation order")
    if a._coeffs and min(a._coeffs) < 0:
        raise ValueError(f"{what} needs a series without negative exponents")
    n = _limit(a.order, a.lattice)
    dense: list[Number] = [0] * max(n, 0)
    for e, c in a._coeffs.items():
        dense[e] = c
    return dense


def series_exp(a: QSeries) -> QSeries:
    """exp(a) for a series with zero constant term, solved from D(f) = D(a) f."""
    if a.order is None and not a._coeffs:
        return QSeries.one(None)
    c0 = a.constant_term()
    if c0:
        raise ValueError(f"exp needs a zero constant term, got {c0}")
    src = _finite_dense(a, "exp")
    n = len(src)
    weighted = [(j, j * src[j]) for j in range(1, n) if src[j]]
    out: list[Number] = [0] * n
    if n:
        out[0] = 1
    for e in range(1, n):
        acc = 0
        for j, ja in weighted:
            if j > e:
                break
            acc += ja * out[e - j]
        out[e] = _normalize(Fraction(acc) / e) if acc else 0
    return QSeries._raw({e: c for e, c in enumerate(out) if c}, a.order, a.lattice)


def series_log(a: QSeries) -> QSeries:
    """log(a) for a series with constant term 1, solved from D(a) = a D(log a)."""
    c0 = a.constant_term()
    if c0 != 1:
        raise ValueError(f"log needs constant term 1, got {c0}")
    if a.order is None and len(a._coeffs) == 1:
        return QSeries.zero(None, a.lattice)
    src = _finite_dense(a, "log")
    n = len(src)
    out: list[Number] = [0] * n
    nz_a = [j for j in range(1, n) if src[j]]
    for e in range(1, n):
        acc = 0
        for j in nz_a:
            if j >= e:
                break
            if out[e - j]:
                acc += (e - j) * out[e - j] * src[j]
        val = src[e] - Fraction(acc) / e if acc else src[e]
        out[e] = _normalize(val)
    return QSeries._raw({e: c for e, c in enumerate(out) if c}, a.order, a.lattice)


def q_derivative(a: QSeries) -> QSeries:
    """D = q d/dq: the coefficient of q^(e/d) is multiplied by e/d."""
    d = a.lattice
    coeffs = {}
    for e, c in a._coeffs.items():
        if e:
            coeffs[e] = _normalize(c * Fraction(e, d)) if d > 1 else c * e
    return QSeries._raw(coeffs, a.order, d)


def euler_product(order) -> QSeries:
    """(q; q)_infinity = prod_{n >= 1} (1 - q^n) truncated below ``order``."""
    order = as_rational(order)
    if order < 1:
        raise ValueError("euler_product needs order >= 1")
    n = math.ceil(order)
    dense = [0] * n
    dense[0] = 1
    for k in range(1, n):
        for e in range(n - 1, k - 1, -1):
            dense[e] -= dense[e - k]
    return QSeries._raw({e: c for e, c in enumerate(dense) if c}, order, 1)


def partition_series(order) -> QSeries:
    """1 / (q; q)_infinity, the generating function of p(n)."""
    order = as_rational(order)
    n = math.ceil(order)
    dense = [0] * n
    if n:
        dense[0] = 1
    for k in range(1, n):
        for e in range(k, n):
            dense[e] += dense[e - k]
    return QSeries._raw({e: c for e, c in enumerate(dense) if c}, order, 1)


def eta_series(order) -> QSeries:
    """Dedekind eta q^(1/24) (q; q)_infinity on the lattice of denominator 24.

    ``order`` bounds the product factor; the result is known below
    ``order + 1/24``.
    """
    product = euler_product(order).rescale(24)
    return QSeries._raw({e + 1: c for e, c in product._coeffs.items()}, product.order + Fraction(1, 24), 24)


def max_denominator(a: QSeries, from_exponent=0) -> int:
    """lcm of the denominators of all coefficients at exponents >= ``from_exponent``."""
    start = as_rational(from_exponent)
    return lcm_many(Fraction(c).denominator for exp, c in a.terms() if exp >= start)


def divisor_sum(k: int, order: int) -> QSeries:
    """sum_{n, m >= 1} m^k q^(nm) below ``order`` (no constant term)."""
    dense = [0] * order
    for m in range(1, order):
        mk = m ** k
        for nm in range(m, order, m):
            dense[nm] += mk
    return QSeries._raw({e: c for e, c in enumerate(dense) if c}, Fraction(order), 1)
