"""Truncated power series with exact coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable

from .poly import Poly


class TruncSeries:
    """Power series known modulo ``t**(order + 1)``.

    Binary operations between two series keep the smaller truncation order.
    Nothing is ever silently extended.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = [Fraction(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> "TruncSeries":
        return cls(p.coeffs, order)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(self.coeffs, order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def _other(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, Poly):
            return TruncSeries.from_poly(other, self.order)
        if isinstance(other, (int, Fraction)):
            return TruncSeries([other], self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return TruncSeries((a + b for a, b in zip(self.coeffs, other.coeffs)), n)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries((-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncSeries((c * other for c in self.coeffs), self.order)
        other = self._other(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        res = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            if a[i]:
                for j in range(n + 1 - i):
                    res[i + j] += a[i] * b[j]
        return TruncSeries(res, n)

    __rmul__ = __mul__

    def __repr__(self):
        return f"TruncSeries({[str(c) for c in self.coeffs]}, order={self.order})"


def series_of(num: Poly, den: Poly, order: int) -> TruncSeries:
    """Maclaurin coefficients of ``num/den`` up to ``t**order``."""
    if order < 0:
        raise ValueError("truncation order must be >= 0")
    d0 = den[0]
    if not d0:
        raise ZeroDivisionError("denominator vanishes at t = 0")
    if all(c.denominator == 1 for c in den.coeffs) and abs(d0) == 1:
        return _integer_series(num, den, order)
    dc = den.coeffs
    out: list[Fraction] = []
    for k in range(order + 1):
        acc = num[k]
        for i in range(1, min(k, len(dc) - 1) + 1):
            if dc[i]:
                acc -= dc[i] * out[k - i]
        out.append(acc / d0)
    return TruncSeries(out, order)


def _integer_series(num: Poly, den: Poly, order: int) -> TruncSeries:
    # den has integer coefficients and unit constant term, so clearing the
    # numerator's denominators keeps the whole recurrence in the integers
    scale = lcm(*(c.denominator for c in num.coeffs)) if num.coeffs else 1
    a = [int(c * scale) for c in num.coeffs]
    d0 = int(den[0])
    dc = [(i, int(c)) for i, c in enumerate(den.coeffs) if i and c]
    out: list[int] = []
    for k in range(order + 1):
        acc = a[k] if k < len(a) else 0
        for i, c in dc:
            if i > k:
                break
            acc -= c * out[k - i]
        out.append(acc * d0)
    return TruncSeries((Fraction(x, scale) for x in out), order)
