"""Integer sets, 2-sets and immutable partial grids.

Everything here is plain data plus the small algebra the constructions need:
arithmetic progressions, signed closures, pairings into fixed-difference
2-sets, and the grid operations (transpose, negate, concatenation, block
diagonal, placement).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    CollisionError,
    OverlapError,
    ParameterError,
    ShapeError,
    UnpairableError,
)

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1

Cell = Optional[int]


def checked(value: int) -> int:
    """Return ``value`` unchanged, raising OverflowError outside int64."""
    if not INT64_MIN <= value <= INT64_MAX:
        raise OverflowError(f"{value} does not fit in 64 bits")
    return value


# ---------------------------------------------------------------- sets


@dataclass(frozen=True)
class Interval:
    """Arithmetic progression ``lo, lo+step, ..., hi``; empty when lo > hi."""

    lo: int
    hi: int
    step: int = 1

    def __iter__(self) -> Iterator[int]:
        if self.lo > self.hi:
            return iter(())
        return iter(range(self.lo, self.hi + 1, self.step))

    def __len__(self) -> int:
        if self.lo > self.hi:
            return 0
        return (self.hi - self.lo) // self.step + 1

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, int) or self.lo > self.hi:
            return False
        return self.lo <= x <= self.hi and (x - self.lo) % self.step == 0


def interval(a: int, b: int, d: int = 1) -> Interval:
    """Progression from ``a`` to ``b`` with difference ``d``.

    Empty when ``a > b``. A non-empty progression whose endpoints are not
    congruent modulo ``d`` is rejected rather than silently truncated.
    """
    if d < 1:
        raise ParameterError(f"step must be positive, got {d}")
    checked(a)
    checked(b)
    if a <= b and (b - a) % d:
        raise ParameterError(f"endpoints {a} and {b} are not congruent mod {d}")
    return Interval(a, b, d)


class IntSet:
    """Immutable sorted set of integers.

    Built from any iterable of distinct integers. Repeated elements are an
    error, so ``IntSet(chain(x, y))`` doubles as a disjointness check.
    """

    __slots__ = ("_items", "_set")

    def __init__(self, items: Iterable[int] = ()) -> None:
        values = [checked(int(x)) for x in items]
        as_set = frozenset(values)
        if len(as_set) != len(values):
            seen: set[int] = set()
            dup = next(x for x in values if x in seen or seen.add(x))
            raise OverlapError(f"element {dup} occurs more than once")
        self._items = tuple(sorted(as_set))
        self._set = as_set

    @classmethod
    def union(cls, *parts: Iterable[int]) -> "IntSet":
        """Disjoint union; raises OverlapError when parts intersect."""
        out: list[int] = []
        for p in parts:
            out.extend(p)
        return cls(out)

    def __iter__(self) -> Iterator[int]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __contains__(self, x: object) -> bool:
        return x in self._set

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntSet):
            return self._items == other._items
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._items)

    def __repr__(self) -> str:
        if len(self._items) > 12:
            head = ", ".join(map(str, self._items[:6]))
            return f"IntSet([{head}, ...] n={len(self._items)})"
        return f"IntSet({list(self._items)})"

    @property
    def items(self) -> tuple[int, ...]:
        return self._items

    def as_frozenset(self) -> frozenset[int]:
        return self._set

    def difference(self, other: Iterable[int]) -> "IntSet":
        drop = set(other)
        return IntSet(x for x in self._items if x not in drop)


def plus_minus(s: Iterable[int]) -> IntSet:
    """Signed closure ``{x, -x}`` of a set of positive integers."""
    out: list[int] = []
    for x in s:
        if x <= 0:
            raise ParameterError(f"plus_minus expects positive members, got {x}")
        out.append(x)
        out.append(-x)
    return IntSet(out)


def omega_for(n: int) -> IntSet:
    """Entry universe for ``n`` cells.

    ``±[1, n/2]`` when ``n`` is even, ``{0} ∪ ±[1, (n-1)/2]`` when odd.
    """
    if n < 1:
        raise ParameterError(f"cell count must be positive, got {n}")
    half = n // 2
    base = list(range(-half, half + 1))
    if n % 2 == 0:
        base.remove(0)
    return IntSet(base)


@dataclass(frozen=True, order=True)
class TwoSet:
    """The pair ``{low, low + eps}`` with ``eps`` in {1, 2, 4}."""

    low: int
    eps: int

    def __post_init__(self) -> None:
        if self.eps not in (1, 2, 4):
            raise ParameterError(f"2-set type must be 1, 2 or 4, got {self.eps}")
        if self.low < 1:
            raise ParameterError(f"2-set members must be positive, got {self.low}")
        checked(self.low + self.eps)

    @property
    def high(self) -> int:
        return self.low + self.eps

    def __iter__(self) -> Iterator[int]:
        yield self.low
        yield self.high


def partition_pairs(s: Iterable[int], eps: int) -> list[TwoSet]:
    """Split ``s`` into 2-sets of type ``eps`` by greedy minimum-first pairing.

    The smallest remaining element ``x`` is always paired with ``x + eps``.
    This is the canonical order used by every construction, so the output
    is fully determined by the set.
    """
    if eps not in (1, 2, 4):
        raise ParameterError(f"2-set type must be 1, 2 or 4, got {eps}")
    remaining = set(s)
    if len(remaining) % 2:
        raise UnpairableError(f"odd cardinality {len(remaining)} cannot be paired")
    out: list[TwoSet] = []
    for x in sorted(remaining):
        if x not in remaining:
            continue
        if x + eps not in remaining:
            raise UnpairableError(f"no partner {x + eps} for {x} (type {eps})")
        remaining.discard(x)
        remaining.discard(x + eps)
        out.append(TwoSet(x, eps))
    return out


# ---------------------------------------------------------------- grids


class PartialGrid:
    """Immutable rectangular grid whose cells hold an int or ``None``.

    Storage is a flat row-major tuple; ``None`` marks an empty cell, so 0
    is an ordinary entry.
    """

    __slots__ = ("rows", "cols", "cells")

    def __init__(self, rows: int, cols: int, cells: Sequence[Cell]) -> None:
        if rows < 0 or cols < 0:
            raise ShapeError(f"negative dimensions {rows}x{cols}")
        if len(cells) != rows * cols:
            raise ShapeError(f"{len(cells)} cells do not fill {rows}x{cols}")
        for v in cells:
            if v is not None:
                checked(v)
        self.rows = rows
        self.cols = cols
        self.cells: tuple[Cell, ...] = tuple(
            None if v is None else int(v) for v in cells
        )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Cell]]) -> "PartialGrid":
        if not rows:
            return cls(0, 0, ())
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), width, [v for r in rows for v in r])

    @classmethod
    def empty(cls, rows: int, cols: int) -> "PartialGrid":
        return cls(rows, cols, [None] * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, rc: tuple[int, int]) -> Cell:
        r, c = rc
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(rc)
        return self.cells[r * self.cols + c]

    def row(self, r: int) -> tuple[Cell, ...]:
        return self.cells[r * self.cols:(r + 1) * self.cols]

    def col(self, c: int) -> tuple[Cell, ...]:
        return self.cells[c::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[Cell]]:
        return [list(self.row(r)) for r in range(self.rows)]

    def entries(self) -> list[int]:
        return [v for v in self.cells if v is not None]

    def filled_count(self) -> int:
        return sum(v is not None for v in self.cells)

    def row_sums(self) -> list[int]:
        return [sum(v for v in self.row(r) if v is not None) for r in range(self.rows)]

    def col_sums(self) -> list[int]:
        return [sum(v for v in self.col(c) if v is not None) for c in range(self.cols)]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PartialGrid):
            return self.shape == other.shape and self.cells == other.cells
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.cells))

    def __repr__(self) -> str:
        return f"PartialGrid({self.rows}x{self.cols}, {self.to_rows()!r})"


@dataclass(frozen=True)
class ArraySet:
    """``e`` grids, all of shape ``a x b``."""

    arrays: tuple[PartialGrid, ...]
    a: int
    b: int
    e: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "arrays", tuple(self.arrays))
        if len(self.arrays) != self.e:
            raise ShapeError(f"expected {self.e} arrays, got {len(self.arrays)}")
        for g in self.arrays:
            if g.shape != (self.a, self.b):
                raise ShapeError(f"array of shape {g.shape} in a {self.a}x{self.b} set")

    @classmethod
    def of(cls, arrays: Sequence[PartialGrid]) -> "ArraySet":
        if not arrays:
            raise ShapeError("an array set needs at least one array")
        a, b = arrays[0].shape
        return cls(tuple(arrays), a, b, len(arrays))

    def __iter__(self) -> Iterator[PartialGrid]:
        return iter(self.arrays)

    def __len__(self) -> int:
        return self.e

    def entries(self) -> list[int]:
        return [v for g in self.arrays for v in g.entries()]


def transpose(g: PartialGrid) -> PartialGrid:
    cells = [g.cells[r * g.cols + c] for c in range(g.cols) for r in range(g.rows)]
    return PartialGrid(g.cols, g.rows, cells)


def negate(g: PartialGrid) -> PartialGrid:
    return PartialGrid(g.rows, g.cols, [None if v is None else -v for v in g.cells])


def hconcat(*grids: PartialGrid) -> PartialGrid:
    if not grids:
        raise ShapeError("nothing to concatenate")
    rows = grids[0].rows
    if any(g.rows != rows for g in grids):
        raise ShapeError("hconcat needs equal row counts")
    out: list[Cell] = []
    for r in range(rows):
        for g in grids:
            out.extend(g.row(r))
    return PartialGrid(rows, sum(g.cols for g in grids), out)


def vconcat(*grids: PartialGrid) -> PartialGrid:
    if not grids:
        raise ShapeError("nothing to concatenate")
    cols = grids[0].cols
    if any(g.cols != cols for g in grids):
        raise ShapeError("vconcat needs equal column counts")
    out: list[Cell] = []
    for g in grids:
        out.extend(g.cells)
    return PartialGrid(sum(g.rows for g in grids), cols, out)


def block_diag(*grids: PartialGrid) -> PartialGrid:
    """Place grids along the diagonal of an otherwise empty grid."""
    if not grids:
        raise ShapeError("nothing to place")
    rows = sum(g.rows for g in grids)
    cols = sum(g.cols for g in grids)
    out: list[Cell] = [None] * (rows * cols)
    r0 = c0 = 0
    for g in grids:
        for r in range(g.rows):
            base = (r0 + r) * cols + c0
            out[base:base + g.cols] = g.row(r)
        r0 += g.rows
        c0 += g.cols
    return PartialGrid(rows, cols, out)


def place(frame: PartialGrid, block: PartialGrid, r: int, c: int) -> PartialGrid:
    """Copy ``block`` into ``frame`` with its top-left corner at ``(r, c)``."""
    if r < 0 or c < 0 or r + block.rows > frame.rows or c + block.cols > frame.cols:
        raise ShapeError(
            f"{block.rows}x{block.cols} block at ({r},{c}) leaves the "
            f"{frame.rows}x{frame.cols} frame"
        )
    out = list(frame.cells)
    for i in range(block.rows):
        for j in range(block.cols):
            v = block.cells[i * block.cols + j]
            if v is None:
                continue
            k = (r + i) * frame.cols + (c + j)
            if out[k] is not None:
                raise CollisionError(f"cell ({r + i},{c + j}) is already occupied")
            out[k] = v
    return PartialGrid(frame.rows, frame.cols, out)


@dataclass(frozen=True)
class SmaSpec:
    """Parameters ``(m, n, s, k)``: an ``m x n`` grid, ``s`` filled cells per
    row and ``k`` per column."""

    m: int
    n: int
    s: int
    k: int

    @property
    def cells(self) -> int:
        return self.n * self.k

    def transposed(self) -> "SmaSpec":
        return SmaSpec(self.n, self.m, self.k, self.s)

    def __str__(self) -> str:
        return f"({self.m},{self.n};{self.s},{self.k})"


def frame_violation(spec: SmaSpec) -> Optional[str]:
    """Why ``spec`` is not an admissible SMA frame, or ``None`` if it is."""
    m, n, s, k = spec.m, spec.n, spec.s, spec.k
    if any(not isinstance(x, int) or isinstance(x, bool) for x in (m, n, s, k)):
        return "parameters must be integers"
    if min(m, n, s, k) < 1:
        return "parameters must be positive"
    if s > n:
        return f"s = {s} exceeds n = {n}"
    if k > m:
        return f"k = {k} exceeds m = {m}"
    if m * s != n * k:
        return f"m*s = {m * s} differs from n*k = {n * k}"
    return None
