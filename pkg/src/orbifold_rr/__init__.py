"""Orbifold Riemann-Roch for polarized threefolds and Hilbert series embeddings."""

from .basket import (
    BasketError,
    CurveBasketEntry,
    PointBasketEntry,
    PolarizedData,
    WeightedSpace,
    classify_point,
    is_well_formed,
    validate,
)
from .documents import InputDocument, load_document, parse_document
from .embed import (
    EmbeddingCandidate,
    NotPolynomial,
    SearchFailure,
    check_symmetry,
    clear_weights,
    greedy_weights,
    suggest_relations,
)
from .hilbert import HilbertSeries, assemble, curve_series, point_series
from .rr_core import (
    chi,
    curve_contribution,
    point_contribution,
    smallest_residue,
    solve_invariants,
)

__version__ = "0.1.0"
