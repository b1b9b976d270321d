"""Exhaustive and heuristic search for small signed magic arrays.

The exhaustive search is the ground truth for tiny cases and is the only
source of a nonexistence verdict. The heuristic search never claims
nonexistence; it either finds a witness or runs out of budget.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Optional, Union

from ..core import ArraySet, PartialGrid, SmaSpec, frame_violation, omega_for
from ..errors import InadmissibleError, IntegrityError, ParameterError
from ..verify import verify_ihs, verify_sma, verify_smas
from . import _backend
from ._kernels_py import BUDGET, EXHAUSTED, FOUND

DEFAULT_CEILING = 64


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 5_000_000
    max_wall_seconds: float = 60.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.max_nodes < 1:
            raise ParameterError("max_nodes must be positive")
        if self.max_wall_seconds <= 0:
            raise ParameterError("max_wall_seconds must be positive")
        if not 0 <= self.seed < 1 << 64:
            raise ParameterError("seed must fit in 64 unsigned bits")

    def deadline(self) -> float:
        return time.monotonic() + self.max_wall_seconds


class SearchStatus(enum.Enum):
    FOUND = "Found"
    PROVEN_NONEXISTENT = "ProvenNonExistent"
    BUDGET_EXHAUSTED = "BudgetExhausted"


Witness = Union[PartialGrid, ArraySet]


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    witness: Optional[Witness] = None
    nodes: int = 0

    def __post_init__(self) -> None:
        if (self.status is SearchStatus.FOUND) != (self.witness is not None):
            raise IntegrityError("a witness comes with Found and only with Found")

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND


def value_order(n_cells: int) -> list[int]:
    """Values of the universe for ``n_cells`` cells, largest magnitude first,
    positive before negative, zero last."""
    half = n_cells // 2
    out = [v for x in range(half, 0, -1) for v in (x, -x)]
    if n_cells % 2:
        out.append(0)
    return out


def _require_admissible(spec: SmaSpec) -> None:
    why = frame_violation(spec)
    if why:
        raise InadmissibleError(f"{spec} is not admissible: {why}")


def exhaustive_sma(spec: SmaSpec, budget: SearchBudget = SearchBudget()) -> SearchOutcome:
    """Complete backtracking search for an SMA with the given parameters."""
    _require_admissible(spec)
    status, cells, nodes = _backend.kernels.exhaustive(
        spec.m, spec.n, spec.s, spec.k, value_order(spec.cells),
        budget.max_nodes, budget.deadline(),
    )
    if status == FOUND:
        g = PartialGrid(spec.m, spec.n, cells)
        report = verify_sma(g, spec)
        if not report.passed:
            raise IntegrityError(f"exhaustive search returned an invalid grid: {report.summary(3)}")
        return SearchOutcome(SearchStatus.FOUND, g, nodes)
    if status == EXHAUSTED:
        return SearchOutcome(SearchStatus.PROVEN_NONEXISTENT, None, nodes)
    return SearchOutcome(SearchStatus.BUDGET_EXHAUSTED, None, nodes)


def _anneal(cells: list[tuple[int, int]], n_lines: int, values: list[int],
            budget: SearchBudget, allow_negate: bool) -> tuple[int, list[int], int]:
    top = max((abs(v) for v in values), default=1)
    row_of = [r for r, _ in cells]
    col_of = [c for _, c in cells]
    return _backend.kernels.anneal(
        row_of, col_of, n_lines, values, budget.seed, budget.max_nodes, allow_negate,
        max(2.0, 0.4 * top), 0.3, 20000, budget.deadline(),
    )


def _full_cells(a: int, b: int, e: int) -> list[tuple[int, int]]:
    out = []
    for i in range(e):
        base = i * (a + b)
        out += [(base + r, base + a + c) for r in range(a) for c in range(b)]
    return out


def _check_ceiling(n_cells: int, ceiling: int) -> None:
    if n_cells > ceiling:
        raise ParameterError(f"{n_cells} cells exceed the heuristic search ceiling {ceiling}")


def heuristic_smas(a: int, b: int, e: int, budget: SearchBudget = SearchBudget(),
                   ceiling: int = DEFAULT_CEILING) -> SearchOutcome:
    """Annealing search for an SMAS(a, b; e)."""
    if min(a, b, e) < 1:
        raise ParameterError(f"dimensions must be positive, got {(a, b, e)}")
    _check_ceiling(a * b * e, ceiling)
    cells = _full_cells(a, b, e)
    status, vals, iters = _anneal(cells, e * (a + b), list(omega_for(a * b * e)), budget, False)
    if status != FOUND:
        return SearchOutcome(SearchStatus.BUDGET_EXHAUSTED, None, iters)
    per = a * b
    xs = ArraySet(
        tuple(PartialGrid(a, b, vals[i * per:(i + 1) * per]) for i in range(e)), a, b, e
    )
    report = verify_smas(xs)
    if not report.passed:
        raise IntegrityError(f"heuristic search returned an invalid set: {report.summary(3)}")
    return SearchOutcome(SearchStatus.FOUND, xs, iters)


def heuristic_ihs(a: int, b: int, c: int, budget: SearchBudget = SearchBudget(),
                  ceiling: int = DEFAULT_CEILING) -> SearchOutcome:
    """Annealing search for an integer Heffter set IHS(a, b; c)."""
    if min(a, b, c) < 1:
        raise ParameterError(f"dimensions must be positive, got {(a, b, c)}")
    _check_ceiling(a * b * c, ceiling)
    cells = _full_cells(a, b, c)
    values = list(range(1, a * b * c + 1))
    status, vals, iters = _anneal(cells, c * (a + b), values, budget, True)
    if status != FOUND:
        return SearchOutcome(SearchStatus.BUDGET_EXHAUSTED, None, iters)
    per = a * b
    xs = ArraySet(
        tuple(PartialGrid(a, b, vals[i * per:(i + 1) * per]) for i in range(c)), a, b, c
    )
    report = verify_ihs(xs)
    if not report.passed:
        raise IntegrityError(f"heuristic search returned an invalid set: {report.summary(3)}")
    return SearchOutcome(SearchStatus.FOUND, xs, iters)


def cyclic_shape(spec: SmaSpec) -> list[tuple[int, int]]:
    """Filled cells of the cyclic pattern: row ``i`` uses columns
    ``i*s, ..., i*s + s - 1`` modulo ``n``. Every column gets ``k`` cells."""
    return [(i, (i * spec.s + t) % spec.n) for i in range(spec.m) for t in range(spec.s)]


def heuristic_sma(spec: SmaSpec, budget: SearchBudget = SearchBudget(),
                  ceiling: int = DEFAULT_CEILING) -> SearchOutcome:
    """Annealing search for an SMA on the cyclic shape of ``spec``."""
    _require_admissible(spec)
    _check_ceiling(spec.cells, ceiling)
    shape = cyclic_shape(spec)
    lines = [(r, spec.m + c) for r, c in shape]
    status, vals, iters = _anneal(lines, spec.m + spec.n, list(omega_for(spec.cells)), budget, False)
    if status != FOUND:
        return SearchOutcome(SearchStatus.BUDGET_EXHAUSTED, None, iters)
    cells: list[Optional[int]] = [None] * (spec.m * spec.n)
    for (r, c), v in zip(shape, vals):
        cells[r * spec.n + c] = v
    g = PartialGrid(spec.m, spec.n, cells)
    report = verify_sma(g, spec)
    if not report.passed:
        raise IntegrityError(f"heuristic search returned an invalid grid: {report.summary(3)}")
    return SearchOutcome(SearchStatus.FOUND, g, iters)
