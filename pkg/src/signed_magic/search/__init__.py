"""Search oracles: exhaustive backtracking and seeded annealing."""

from __future__ import annotations

from ._backend import BACKEND
from .oracle import (
    DEFAULT_CEILING,
    SearchBudget,
    SearchOutcome,
    SearchStatus,
    cyclic_shape,
    exhaustive_sma,
    heuristic_ihs,
    heuristic_sma,
    heuristic_smas,
    value_order,
)

__all__ = [
    "BACKEND",
    "DEFAULT_CEILING",
    "SearchBudget",
    "SearchOutcome",
    "SearchStatus",
    "cyclic_shape",
    "exhaustive_sma",
    "heuristic_ihs",
    "heuristic_sma",
    "heuristic_smas",
    "value_order",
]
