"""Existence of SMA(m, n; s, k) and assembly of witnesses from array sets."""

from __future__ import annotations

import os
from math import gcd
from typing import Optional, Union

from .core import ArraySet, PartialGrid, SmaSpec, block_diag, frame_violation, hconcat, transpose
from .errors import InadmissibleError, IntegrityError, ParameterError
from .results import ExternalConstructionRequired, NonExistent
from .search import DEFAULT_CEILING, SearchBudget, SearchStatus, exhaustive_sma, heuristic_sma
from .smas.construct import construct_smas
from .verify import verify_sma

# Largest n*k handed to exhaustive search when no construction applies.
SMA_SEARCH_CEILING = 16



def default_search_ceiling() -> int:
    """``SMA_SEARCH_CEILING`` from the environment, else the built-in bound."""
    raw = os.environ.get("SMA_SEARCH_CEILING")
    if raw is None or raw.strip() == "":
        return SMA_SEARCH_CEILING
    try:
        value = int(raw)
    except ValueError:
        raise ParameterError(f"SMA_SEARCH_CEILING must be an integer, got {raw!r}") from None
    if value < 0:
        raise ParameterError("SMA_SEARCH_CEILING must be nonnegative")
    return value


SmaResult = Union[PartialGrid, ExternalConstructionRequired, NonExistent]


def _require_frame(spec: SmaSpec) -> None:
    why = frame_violation(spec)
    if why:
        raise InadmissibleError(f"SMA{spec} is not admissible: {why}")


def existence_case(spec: SmaSpec) -> Optional[int]:
    """Which of the six existence cases ``spec`` falls in, or ``None``."""
    _require_frame(spec)
    m, n, s, k = spec.m, spec.n, spec.s, spec.k
    if k == m == s == n == 1:
        return 1
    if k == 2 and m == 2 and s == n and s % 4 in (0, 3):
        return 2
    if k == 2 and m >= 3 and s >= 3:
        return 3
    if s == 2 and n == 2 and k == m and k % 4 in (0, 3):
        return 4
    if s == 2 and n >= 3 and k >= 3:
        return 5
    if s >= 3 and k >= 3:
        return 6
    return None


def sma_exists(spec: SmaSpec) -> bool:
    """Whether an SMA with these parameters exists."""
    return existence_case(spec) is not None


def _constructible(spec: SmaSpec) -> bool:
    """The case assembled here from array sets: ``k`` odd at least 5,
    ``n`` even, ``s`` at least 5 and not divisible by 4, ``gcd(s, k) = 1``."""
    s, k = spec.s, spec.k
    return (k >= 5 and k % 2 == 1 and spec.n % 2 == 0 and s >= 5 and s % 4 != 0
            and gcd(s, k) == 1)


def assemble(spec: SmaSpec) -> Union[PartialGrid, ExternalConstructionRequired]:
    """Block-diagonal assembly for a spec accepted by the construction case."""
    s, k = spec.s, spec.k
    e = spec.m // k
    if s % 2:
        xs = construct_smas(k, s, e)
        if isinstance(xs, ExternalConstructionRequired):
            return xs
        return block_diag(*xs)
    half = s // 2
    if half == 3:
        xs = construct_smas(k, 6, e)
        if isinstance(xs, ExternalConstructionRequired):
            return xs
        return block_diag(*xs)
    xs = construct_smas(k, half, 2 * e)
    if isinstance(xs, ExternalConstructionRequired):
        return xs
    rs = xs.arrays
    return block_diag(*(hconcat(rs[2*i], rs[2*i + 1]) for i in range(e)))


def _search(spec: SmaSpec, budget: SearchBudget, ceiling: int,
            heuristic_ceiling: int) -> SmaResult:
    if spec.cells <= ceiling:
        out = exhaustive_sma(spec, budget)
        if out.status is SearchStatus.FOUND:
            return out.witness
        if out.status is SearchStatus.PROVEN_NONEXISTENT:
            raise IntegrityError(f"search refuted SMA{spec}, which should exist")
    elif spec.cells <= heuristic_ceiling:
        out = heuristic_sma(spec, budget, heuristic_ceiling)
        if out.found:
            return out.witness
    return ExternalConstructionRequired(
        f"SMA{spec} exists but is not built here and search did not produce it",
        "outside the assembled case")


def generate_sma(spec: SmaSpec, budget: SearchBudget = SearchBudget(),
                 search_ceiling: Optional[int] = None,
                 heuristic_ceiling: int = DEFAULT_CEILING) -> SmaResult:
    """A verified SMA for ``spec``, or why none is returned.

    The assembled case is tried as given and transposed. Other existing
    specs go to exhaustive search when ``n*k <= search_ceiling`` and to
    annealing when ``n*k <= heuristic_ceiling``.
    """
    if not sma_exists(spec):
        return NonExistent(f"no SMA{spec} exists: none of the existence cases applies")
    if _constructible(spec):
        g = assemble(spec)
    elif _constructible(spec.transposed()):
        g = assemble(spec.transposed())
        if isinstance(g, PartialGrid):
            g = transpose(g)
    else:
        if search_ceiling is None:
            search_ceiling = default_search_ceiling()
        g = _search(spec, budget, search_ceiling, heuristic_ceiling)
    if isinstance(g, PartialGrid):
        report = verify_sma(g, spec)
        if not report:
            raise IntegrityError(f"assembled SMA{spec} failed verification: {report.summary(3)}")
    return g


def generate_from_sets(spec: SmaSpec, xs: ArraySet) -> PartialGrid:
    """Block-diagonal of a supplied array set, verified against ``spec``."""
    g = block_diag(*xs)
    report = verify_sma(g, spec)
    if not report:
        raise IntegrityError(f"diag of the supplied set is not an SMA{spec}: {report.summary(3)}")
    return g
