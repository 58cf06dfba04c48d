"""Weighted projective embeddings suggested by a Hilbert series.

Given P(t), look for weights w_0..w_n such that Q(t) = P(t) prod (1 - t^w)
is a polynomial.  The greedy search adjoins generators in the lowest degree
where the partially cleared series still has a positive coefficient.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .basket import is_well_formed
from .exactmath import Poly, RationalFunction, series_of
from .hilbert import HilbertSeries

DEFAULT_MAX_DEGREE = 100
DEFAULT_MAX_WEIGHTS = 20
ROUND_TRIP_MARGIN = 50


class NotPolynomial(ArithmeticError):
    """P(t) * prod (1 - t^w) still has a denominator.

    ``residual`` maps a cyclotomic index d to the number of uncancelled
    factors Phi_d (d = 1 meaning 1 - t).
    """

    def __init__(self, weights, residual: dict[int, int]):
        self.weights = tuple(weights)
        self.residual = dict(sorted(residual.items()))
        parts = ", ".join(
            f"{'(1-t)' if d == 1 else f'Phi_{d}'}^{e}" for d, e in self.residual.items()
        )
        super().__init__(f"weights {self.weights} leave denominator {parts}")


@dataclass(frozen=True)
class EmbeddingCandidate:
    weights: tuple[int, ...]
    numerator: Poly
    codimension: int
    well_formed: bool
    symmetric: bool
    symmetry_sign: int | None


@dataclass(frozen=True)
class SearchFailure:
    reason: str
    weights: tuple[int, ...] = ()
    residual: RationalFunction | None = None

    def __bool__(self):
        return False


@dataclass(frozen=True)
class RelationReport:
    degrees: tuple[int, ...]
    heuristic: bool = field(default=True)

    def counts(self) -> dict[int, int]:
        return dict(sorted(Counter(self.degrees).items()))


def _divisors(n: int) -> list[int]:
    return [e for e in range(1, n + 1) if n % e == 0]


def _rational(ps) -> RationalFunction:
    return ps.closed if isinstance(ps, HilbertSeries) else ps


def clear_weights(ps: HilbertSeries | RationalFunction, weights: Iterable[int]) -> Poly:
    """Q(t) = P(t) * prod (1 - t^w), or raise :class:`NotPolynomial`."""
    weights = tuple(sorted(weights))
    if not weights:
        raise ValueError("need at least one weight")
    q, residual = _rational(ps).cleared(weights)
    if q is None:
        raise NotPolynomial(weights, residual)
    return q


def check_symmetry(q: Poly) -> tuple[bool, int | None]:
    """Whether q(t) = sign * t^deg * q(1/t) for sign in {+1, -1}."""
    if not q:
        raise ValueError("symmetry of the zero polynomial is undefined")
    rev = q.reverse()
    if len(rev) == len(q):
        if rev == q:
            return True, 1
        if rev == -q:
            return True, -1
    return False, None


def make_candidate(ps, weights: Iterable[int]) -> EmbeddingCandidate:
    weights = tuple(sorted(weights))
    q = clear_weights(ps, weights)
    sym, sign = check_symmetry(q)
    return EmbeddingCandidate(
        weights=weights,
        numerator=q,
        codimension=len(weights) - 4,
        well_formed=is_well_formed(weights),
        symmetric=sym,
        symmetry_sign=sign,
    )


def greedy_weights(
    ps: HilbertSeries | RationalFunction,
    max_degree: int = DEFAULT_MAX_DEGREE,
    max_weights: int = DEFAULT_MAX_WEIGHTS,
) -> EmbeddingCandidate | SearchFailure:
    """Canonical lowest-degree-first generator search.

    Each round looks at the partially cleared series R(t) = P(t) prod (1 - t^w)
    and its lowest positive coefficient g, in degree d.  If no coefficient of
    R is negative below d, those g monomials can only come from new
    generators, so g weights d are adjoined.  Past the first negative
    coefficient (a relation), a positive term may be a syzygy instead; d is
    then accepted only if 1 - t^d cancels a factor still left in the reduced
    denominator of R, and only as many copies as that factor needs.
    Otherwise a generator can be masked by relations in its own degree, and
    the round adjoins one weight equal to the largest cyclotomic index left
    in the denominator.  Stops as soon as R is a polynomial.
    """
    if isinstance(ps, HilbertSeries) and ps.source.D3 <= 0:
        return SearchFailure(f"polarization not ample: D^3 = {ps.source.D3} <= 0")
    rf = _rational(ps)
    coeffs = series_of(rf, max_degree)
    if any(c < 0 for c in coeffs):
        raise ValueError("Hilbert series has a negative coefficient")

    weights: list[int] = []
    state = rf
    while True:
        _, residual = state.reduced_parts()
        if not residual:
            return make_candidate(rf, weights)
        if len(weights) >= max_weights:
            return SearchFailure(
                f"reached max_weights={max_weights}", tuple(weights), state
            )
        ser = series_of(state, max_degree)
        d = next((i for i in range(1, max_degree + 1) if ser[i] > 0), None)
        neg = next((i for i in range(1, max_degree + 1) if ser[i] < 0), None)
        if d is not None and ser[d].denominator != 1:
            return SearchFailure(
                f"non-integral coefficient {ser[d]} at degree {d}", tuple(weights), state
            )
        if d is not None and (neg is None or d < neg):
            g = int(ser[d])
        else:
            need = max((residual.get(e, 0) for e in _divisors(d)), default=0) if d else 0
            if need:
                g = min(int(ser[d]), need)
            else:
                d, g = max(residual), 1
                if d > max_degree:
                    return SearchFailure(
                        f"denominator needs a generator of degree {d} > max_degree={max_degree}",
                        tuple(weights),
                        state,
                    )
        if len(weights) + g > max_weights:
            return SearchFailure(
                f"adjoining {g} generators of degree {d} exceeds max_weights={max_weights}",
                tuple(weights),
                state,
            )
        weights += [d] * g
        state = state * Poly.product_one_minus([d] * g)


def suggest_relations(candidate: EmbeddingCandidate | Poly) -> RelationReport:
    """Relation degrees read off the first band of negative numerator terms.

    Heuristic: only the first band is reported, since deeper terms mix
    syzygies with relations.
    """
    q = candidate.numerator if isinstance(candidate, EmbeddingCandidate) else candidate
    degrees: list[int] = []
    started = False
    for d in range(1, len(q)):
        c = q[d]
        if c < 0:
            started = True
            degrees += [d] * int(-c)
        elif c > 0 and started:
            break
    return RelationReport(tuple(degrees))


def round_trip_ok(ps, candidate: EmbeddingCandidate, margin: int = ROUND_TRIP_MARGIN) -> bool:
    """Re-expand Q/prod(1 - t^w) and compare with the input series."""
    order = candidate.numerator.degree + margin
    back = series_of(RationalFunction(candidate.numerator, candidate.weights), order)
    return back == series_of(_rational(ps), order)


__all__ = [
    "EmbeddingCandidate",
    "NotPolynomial",
    "RelationReport",
    "SearchFailure",
    "check_symmetry",
    "clear_weights",
    "greedy_weights",
    "make_candidate",
    "round_trip_ok",
    "suggest_relations",
]
