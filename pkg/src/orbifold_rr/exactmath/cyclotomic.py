"""Arithmetic in the cyclotomic fields Q(zeta_d).

Elements are kept in the power basis modulo the d-th cyclotomic polynomial,
so every nonzero element is a unit.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .poly import ONE, Poly, poly_xgcd


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> Poly:
    """The d-th cyclotomic polynomial, via ``(t^d - 1) / prod_{e | d, e < d} Phi_e``."""
    if d < 1:
        raise ValueError(f"cyclotomic index must be positive, got {d}")
    p = Poly.monomial(d) - 1
    for e in range(1, d):
        if d % e == 0:
            p = p.exact_div(cyclotomic_poly(e))
    return p


@lru_cache(maxsize=None)
def totient(d: int) -> int:
    return cyclotomic_poly(d).degree


class NotRationalError(ArithmeticError):
    """A cyclotomic element expected to be rational was not."""


class CycloElem:
    """An element of Q(zeta_d), with ``t`` standing for zeta_d."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Poly | list = ONE):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        if not isinstance(coeffs, Poly):
            coeffs = Poly(coeffs)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs % cyclotomic_poly(conductor))

    def __setattr__(self, name, value):
        raise AttributeError("CycloElem is immutable")

    @classmethod
    def zeta_power(cls, conductor: int, k: int) -> "CycloElem":
        """zeta_d ** k for any integer k."""
        return cls(conductor, Poly.monomial(k % conductor))

    @classmethod
    def rational(cls, conductor: int, c) -> "CycloElem":
        return cls(conductor, Poly([c]))

    def _check(self, other: "CycloElem") -> None:
        if other.conductor != self.conductor:
            raise ValueError(
                f"conductor mismatch: {self.conductor} vs {other.conductor}"
            )

    def _lift(self, other):
        if isinstance(other, CycloElem):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElem.rational(self.conductor, other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.conductor, self.coeffs))

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CycloElem(self.conductor, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.conductor, -self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CycloElem(self.conductor, self.coeffs - other.coeffs)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CycloElem(self.conductor, self.coeffs * other.coeffs)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * cyclo_inv(other)

    def __repr__(self):
        return f"CycloElem({self.conductor}, {self.coeffs!r})"


def cyclo_inv(x: CycloElem) -> CycloElem:
    """Multiplicative inverse by extended gcd against Phi_d."""
    if x.is_zero():
        raise ZeroDivisionError("zero has no inverse in a cyclotomic field")
    phi = cyclotomic_poly(x.conductor)
    g, u, _ = poly_xgcd(x.coeffs, phi)
    # Phi_d is irreducible, so any nonzero reduced element is coprime to it.
    assert g == ONE, g
    return CycloElem(x.conductor, u)


def rational_part(x: CycloElem) -> Fraction:
    """The value of ``x`` as a rational number; raises if ``x`` is not rational."""
    if x.coeffs.degree > 0:
        raise NotRationalError(
            f"element of Q(zeta_{x.conductor}) is not rational: {x.coeffs}"
        )
    return x.coeffs[0]


__all__ = [
    "CycloElem",
    "NotRationalError",
    "cyclo_inv",
    "cyclotomic_poly",
    "rational_part",
    "totient",
]
