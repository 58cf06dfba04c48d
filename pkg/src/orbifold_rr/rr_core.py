"""Riemann-Roch for polarized threefolds with quotient singularities.

chi(X, O(mD)) = chi(O_X) + mD(mD - K)(2mD - K)/12 + m D.c2/12
                + sum over points c_P(mD) + sum over curves s_C(mD)

The point corrections are sums over roots of unity; they are evaluated
exactly in cyclotomic fields and the rational value is read off at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from . import basket
from .basket import CurveBasketEntry, PointBasketEntry, PolarizedData
from .exactmath import CycloElem, Poly, cyclo_inv, rational_part


@dataclass(frozen=True)
class ChiBreakdown:
    polynomial_part: Fraction
    point_contribs: tuple[Fraction, ...]
    curve_contribs: tuple[Fraction, ...]


@dataclass(frozen=True)
class ChiResult:
    m: int
    value: Fraction
    breakdown: ChiBreakdown

    def is_integral(self) -> bool:
        return self.value.denominator == 1


def smallest_residue(x: int, r: int) -> int:
    """``x mod r`` in ``[0, r-1]``."""
    if r <= 0:
        raise ValueError(f"modulus must be positive, got {r}")
    return x % r


@lru_cache(maxsize=None)
def _inverse_denominator(d: int, a: tuple[int, int, int]) -> CycloElem:
    """1 / prod (1 - zeta_d^{-a_i}) in Q(zeta_d)."""
    den = CycloElem.rational(d, 1)
    for x in a:
        den = den * (1 - CycloElem.zeta_power(d, -x))
    return cyclo_inv(den)


def _trace(x: CycloElem) -> CycloElem:
    """Sum of the images of x under zeta_d -> zeta_d^u over units u mod d."""
    d = x.conductor
    out = [Fraction(0)] * d
    for u in range(1, d):
        if gcd(u, d) == 1:
            for k, c in enumerate(x.coeffs.coeffs):
                out[(k * u) % d] += c
    return CycloElem(d, Poly(out))


@lru_cache(maxsize=4096)
def _point_sum(s: int, a: tuple[int, int, int], e: int) -> Fraction:
    """(1/s) sum_{eps^s = 1, eps^{a_i} != 1} (eps^{-e} - 1) / prod (1 - eps^{-a_i}).

    The roots eps of exact order d form one Galois orbit, so their part of
    the sum is the trace from Q(zeta_d) of the term at eps = zeta_d.
    """
    if e % s == 0:
        return Fraction(0)
    total = Fraction(0)
    for d in range(2, s + 1):
        if s % d or any(x % d == 0 for x in a):
            continue
        term = (CycloElem.zeta_power(d, -e) - 1) * _inverse_denominator(
            d, tuple(x % d for x in a)
        )
        total += rational_part(_trace(term))
    return total / s


def point_contribution(p: PointBasketEntry, m: int) -> Fraction:
    """c_P(mD), times the multiplicity of the entry."""
    return p.multiplicity * _point_sum(p.s, p.a, (p.n * m) % p.s)


def curve_coefficients(c: CurveBasketEntry, m: int) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients of (degD, degK, N) in s_C(mD)."""
    r = c.r
    rho = smallest_residue(m * c.k, r)
    q = rho * (r - rho)
    return (
        Fraction(-m * q, 2 * r),
        Fraction(q, 4 * r),
        Fraction(q * (r - 2 * rho), 12 * r * r * c.tau),
    )


def curve_contribution(c: CurveBasketEntry, m: int) -> Fraction:
    """s_C(mD)."""
    fd, fk, fn = curve_coefficients(c, m)
    return fd * c.degD + fk * c.degK + fn * c.N


def polynomial_part(data: PolarizedData, m: int) -> Fraction:
    cubic = 2 * m**3 * data.D3 - 3 * m**2 * data.D2K + m * data.DK2
    return data.chiO + cubic / 12 + m * data.Dc2 / 12


def chi(data: PolarizedData, m: int, *, validated: bool = False) -> ChiResult:
    """chi(X, O_X(mD)) for m >= 1, with its breakdown."""
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    if not validated:
        basket.check(data)
    poly = polynomial_part(data, m)
    pts = tuple(point_contribution(p, m) for p in data.points)
    crv = tuple(curve_contribution(c, m) for c in data.curves)
    value = poly + sum(pts, Fraction(0)) + sum(crv, Fraction(0))
    return ChiResult(m, value, ChiBreakdown(poly, pts, crv))


def chi_values(data: PolarizedData, m_max: int) -> list[Fraction]:
    """[chi(1), ..., chi(m_max)]."""
    basket.check(data)
    return [chi(data, m, validated=True).value for m in range(1, m_max + 1)]


def basket_correction(
    points: Sequence[PointBasketEntry], curves: Sequence[CurveBasketEntry], m: int
) -> Fraction:
    total = sum((point_contribution(p, m) for p in points), Fraction(0))
    return total + sum((curve_contribution(c, m) for c in curves), Fraction(0))


def solve_invariants(
    h1: int,
    h2: int,
    points: Sequence[PointBasketEntry] = (),
    curves: Sequence[CurveBasketEntry] = (),
) -> tuple[Fraction, Fraction]:
    """(D^3, D.c2) from h^0(D) and h^0(2D) in the Calabi-Yau setting.

    Solves  h(m) = m^3 D3/6 + m Dc2/12 + basket(m)  for m = 1, 2.
    """
    b1 = Fraction(h1) - basket_correction(points, curves, 1)
    b2 = Fraction(h2) - basket_correction(points, curves, 2)
    # Cramer's rule; the matrix [[1/6, 1/12], [8/6, 2/12]] has determinant -1/12
    det = Fraction(1, 6) * Fraction(2, 12) - Fraction(1, 12) * Fraction(8, 6)
    D3 = (b1 * Fraction(2, 12) - Fraction(1, 12) * b2) / det
    Dc2 = (Fraction(1, 6) * b2 - Fraction(8, 6) * b1) / det
    return D3, Dc2
