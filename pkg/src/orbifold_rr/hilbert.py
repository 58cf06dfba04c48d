"""Closed-form Hilbert series of a polarized Calabi-Yau threefold.

    P(t) = 1 + D^3/6 * (t^3 + 4t^2 + t)/(1-t)^4 + D.c2/12 * t/(1-t)^2
             + sum over points P_Q(t) + sum over curves P_C(t)

with each basket term a periodic-coefficient rational function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import basket
from .basket import CurveBasketEntry, PointBasketEntry, PolarizedData
from .exactmath import Poly, RationalFunction, TruncSeries, series_of
from .rr_core import chi, point_contribution, smallest_residue


class HilbertSeriesMismatch(AssertionError):
    """Closed form and direct Riemann-Roch summation disagree."""


@dataclass(frozen=True)
class HilbertSeries:
    closed: RationalFunction
    denominator_weights: tuple[int, ...]
    source: PolarizedData

    def coefficients(self, order: int) -> TruncSeries:
        return series_of(self.closed, order)

    def reduced(self) -> tuple[Poly, dict[int, int]]:
        return self.closed.reduced_parts()

    def factored(self) -> tuple[Poly, tuple[int, ...]]:
        """Numerator over the smallest product of (1 - t^w) that clears P(t)."""
        _, exps = self.reduced()
        weights = minimal_denominator_weights(exps)
        q, _ = self.closed.cleared(weights)
        return q, weights


def minimal_denominator_weights(exps: dict[int, int]) -> tuple[int, ...]:
    """Few weights w whose factors 1 - t^w cover the cyclotomic exponents ``exps``."""
    left = {d: e for d, e in exps.items() if e}
    weights = []
    while left:
        w = max(left)
        weights.append(w)
        for d in list(left):
            if w % d == 0:
                left[d] -= 1
                if not left[d]:
                    del left[d]
    return tuple(sorted(weights))


def point_series(p: PointBasketEntry) -> RationalFunction:
    """sum_{i=1}^{s-1} c_Q(iD) t^i / (1 - t^s)."""
    num = Poly([0] + [point_contribution(p, i) for i in range(1, p.s)])
    return RationalFunction(num, (p.s,))


def curve_series(c: CurveBasketEntry) -> RationalFunction:
    """Generating function of s_C(mD), m >= 1, over (1 - t^r)^2."""
    if c.degK:
        raise ValueError("closed-form curve series needs degK = 0 (Calabi-Yau case)")
    r = c.r
    quad = [Fraction(0)] * r  # rho(r - rho)/(2r) at t^i
    lin = [Fraction(0)] * r  # i * rho(r - rho)/(2r) at t^i
    cub = [Fraction(0)] * r  # rho(r - rho)(r - 2 rho) at t^i
    for i in range(1, r):
        rho = smallest_residue(i * c.k, r)
        quad[i] = Fraction(rho * (r - rho), 2 * r)
        lin[i] = i * quad[i]
        cub[i] = Fraction(rho * (r - rho) * (r - 2 * rho))
    one_minus = Poly.one_minus_t_pow(r)
    deg_part = Poly(lin) * one_minus + Poly(quad).shift(r) * r
    n_part = Poly(cub) * one_minus * Fraction(c.N, 12 * r * r * c.tau)
    return RationalFunction(deg_part * (-c.degD) + n_part, (r, r))


def cubic_term(D3) -> RationalFunction:
    return RationalFunction(Poly([0, 1, 4, 1]) * Fraction(D3, 6), (1, 1, 1, 1))


def c2_term(Dc2) -> RationalFunction:
    return RationalFunction(Poly([0, 1]) * Fraction(Dc2, 12), (1, 1))


def verification_order(data: PolarizedData) -> int:
    periods = data.periods()
    return max(50, 2 * lcm(*periods)) if periods else 50


def direct_series(data: PolarizedData, order: int) -> TruncSeries:
    """1 + sum_{m=1}^{order} chi(mD) t^m by summing Riemann-Roch term by term.

    Available for any polarization, not only Calabi-Yau ones.
    """
    basket.check(data)
    vals = [Fraction(1)] + [chi(data, m, validated=True).value for m in range(1, order + 1)]
    return TruncSeries(vals, order)


def assemble(data: PolarizedData, verify_to: int | None = None) -> HilbertSeries:
    """Exact closed form of the Hilbert series, checked against direct summation."""
    basket.check(data)
    if not data.calabi_yau:
        raise ValueError("closed-form Hilbert series is only available for Calabi-Yau data")
    total = RationalFunction.constant(1) + cubic_term(data.D3) + c2_term(data.Dc2)
    for p in data.points:
        total = total + point_series(p)
    for c in data.curves:
        total = total + curve_series(c)
    hs = HilbertSeries(total, total.weights, data)

    order = verification_order(data) if verify_to is None else verify_to
    if order:
        closed = hs.coefficients(order)
        direct = direct_series(data, order)
        if closed != direct:
            m = next(i for i in range(order + 1) if closed[i] != direct[i])
            raise HilbertSeriesMismatch(
                f"coefficient of t^{m}: closed form {closed[m]}, direct {direct[m]}"
            )
    return hs
