"""Rational functions whose denominators are products of ``(1 - t^w)``.

Every Hilbert series in this package has this shape, which makes reduction
cheap: ``1 - t^w`` splits as ``(1 - t) * prod_{d | w, d > 1} Phi_d(t)``, so the
only possible common factors between numerator and denominator are
cyclotomic polynomials of known index.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Mapping

from .cyclotomic import cyclotomic_poly
from .poly import ONE, Poly
from .series import TruncSeries, series_of as _series_of


@lru_cache(maxsize=None)
def cyclotomic_factor(d: int) -> Poly:
    """``1 - t`` for d = 1, otherwise Phi_d.  All have constant term 1."""
    if d == 1:
        return Poly([1, -1])
    return cyclotomic_poly(d)


def cyclotomic_exponents(weights: Iterable[int]) -> Counter:
    """Multiplicity of each cyclotomic factor in ``prod (1 - t^w)``."""
    exps: Counter = Counter()
    for w in weights:
        for d in range(1, w + 1):
            if w % d == 0:
                exps[d] += 1
    return exps


def expand_cyclotomic(exps: Mapping[int, int]) -> Poly:
    out = ONE
    for d in sorted(exps):
        if exps[d]:
            out = out * cyclotomic_factor(d) ** exps[d]
    return out


def _sorted_weights(weights: Iterable[int]) -> tuple[int, ...]:
    ws = tuple(sorted(int(w) for w in weights))
    if any(w < 1 for w in ws):
        raise ValueError(f"denominator weights must be positive: {ws}")
    return ws


def merge_weights(a: Iterable[int], b: Iterable[int]) -> tuple[int, ...]:
    """Smallest multiset containing both (multiset union)."""
    ca, cb = Counter(a), Counter(b)
    return tuple(sorted((ca | cb).elements()))


@dataclass(frozen=True)
class RationalFunction:
    """``num / prod_{w in weights} (1 - t^w)``.

    The weight multiset is the canonical factored form of the denominator;
    ``den`` is its expansion.  Two instances compare equal when they denote
    the same function, regardless of representation.
    """

    num: Poly
    weights: tuple[int, ...] = ()

    def __post_init__(self):
        num = self.num if isinstance(self.num, Poly) else Poly(self.num)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "weights", _sorted_weights(self.weights))

    @cached_property
    def den(self) -> Poly:
        return Poly.product_one_minus(self.weights)

    @classmethod
    def polynomial(cls, p: Poly) -> "RationalFunction":
        return cls(p, ())

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls(Poly([c]), ())

    # -- arithmetic ------------------------------------------------------

    def with_weights(self, weights: Iterable[int]) -> "RationalFunction":
        """Same function over a larger denominator (must contain ours)."""
        target = Counter(weights)
        extra = target - Counter(self.weights)
        if Counter(self.weights) - target:
            raise ValueError("target denominator does not contain current one")
        return RationalFunction(
            self.num * Poly.product_one_minus(extra.elements()), tuple(target.elements())
        )

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = RationalFunction(Poly([other]) if not isinstance(other, Poly) else other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        common = merge_weights(self.weights, other.weights)
        a = self.with_weights(common)
        b = other.with_weights(common)
        return RationalFunction(a.num + b.num, common)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.weights)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunction(self.num * other, self.weights)
        if isinstance(other, Poly):
            return RationalFunction(self.num * other, self.weights)
        if isinstance(other, RationalFunction):
            return RationalFunction(
                self.num * other.num, self.weights + other.weights
            )
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        num, exps = self.reduced_parts()
        return hash((num, tuple(sorted(exps.items()))))

    # -- canonical form --------------------------------------------------

    def reduced_parts(self) -> tuple[Poly, dict[int, int]]:
        """Cancel common cyclotomic factors.

        Returns the reduced numerator and the cyclotomic exponent map of the
        reduced denominator ``prod_d cyclotomic_factor(d) ** e_d``.
        """
        num = self.num
        exps = dict(cyclotomic_exponents(self.weights))
        if not num:
            return num, {}
        for d in sorted(exps):
            phi = cyclotomic_factor(d)
            while exps[d]:
                q, r = divmod(num, phi)
                if r:
                    break
                num = q
                exps[d] -= 1
        return num, {d: e for d, e in exps.items() if e}

    def is_polynomial(self) -> bool:
        return not self.reduced_parts()[1]

    def to_polynomial(self) -> Poly:
        num, exps = self.reduced_parts()
        if exps:
            raise ArithmeticError("rational function is not a polynomial")
        return num

    def cleared(self, weights: Iterable[int]) -> tuple[Poly | None, dict[int, int]]:
        """Try ``self * prod (1 - t^w)`` as a polynomial.

        Returns ``(Q, {})`` on success, or ``(None, residual)`` where
        ``residual`` maps cyclotomic index to the number of factors left over.
        """
        weights = _sorted_weights(weights)
        num, exps = self.reduced_parts()
        have = cyclotomic_exponents(weights)
        residual = {d: e - have[d] for d, e in exps.items() if e > have[d]}
        if residual:
            return None, residual
        den = expand_cyclotomic(exps)
        return (num * Poly.product_one_minus(weights)).exact_div(den), {}

    # -- expansion -------------------------------------------------------

    def series(self, order: int) -> TruncSeries:
        return series_of(self, order)

    def __repr__(self):
        return f"RationalFunction({self.num}, weights={self.weights})"


def series_of(rf: RationalFunction, order: int) -> TruncSeries:
    """Exact Maclaurin expansion of ``rf`` up to ``t**order``."""
    return _series_of(rf.num, rf.den, order)
