"""Signed magic arrays: existence, explicit constructions, verification and search."""

from __future__ import annotations

from .core import (
    ArraySet,
    Interval,
    IntSet,
    PartialGrid,
    SmaSpec,
    TwoSet,
    block_diag,
    frame_violation,
    hconcat,
    interval,
    negate,
    omega_for,
    partition_pairs,
    place,
    plus_minus,
    transpose,
    vconcat,
)
from .errors import (
    CollisionError,
    DocumentError,
    ExternalBaseUnavailable,
    InadmissibleError,
    IntegrityError,
    InvalidIhsError,
    OverlapError,
    ParameterError,
    ShapeError,
    SmaError,
    UnpairableError,
)
from .fixtures import fixture
from .results import ExternalConstructionRequired, NonExistent
from .search import SearchBudget, SearchOutcome, SearchStatus, exhaustive_sma, heuristic_ihs, heuristic_sma, heuristic_smas
from .sma import existence_case, generate_sma, sma_exists
from .smas import Construction, Route, build_57, build_6b, build_odd_odd, construct_smas, double_from_ihs, route_for
from .verify import (
    VerificationReport,
    Violation,
    verify_arrays,
    verify_entry_set,
    verify_ihs,
    verify_signature,
    verify_sma,
    verify_smas,
    verify_zero_sum,
)

__version__ = "0.1.0"

__all__ = [
    "ArraySet", "CollisionError", "DocumentError", "ExternalBaseUnavailable",
    "ExternalConstructionRequired", "InadmissibleError", "IntSet", "IntegrityError",
    "Interval", "InvalidIhsError", "Construction", "NonExistent", "OverlapError", "ParameterError",
    "PartialGrid", "Route", "SearchBudget", "SearchOutcome", "SearchStatus", "ShapeError",
    "SmaError", "SmaSpec", "TwoSet", "UnpairableError", "VerificationReport", "Violation",
    "block_diag", "build_57", "build_6b", "build_odd_odd", "construct_smas",
    "double_from_ihs", "exhaustive_sma", "existence_case", "fixture", "frame_violation",
    "generate_sma", "hconcat", "heuristic_ihs", "heuristic_sma", "heuristic_smas",
    "interval", "negate", "omega_for", "partition_pairs", "place", "plus_minus",
    "route_for", "sma_exists", "transpose", "vconcat", "verify_arrays", "verify_entry_set",
    "verify_ihs", "verify_signature", "verify_sma", "verify_smas", "verify_zero_sum",
]
