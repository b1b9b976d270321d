"""Independent checkers for zero-sum arrays.

Nothing in this module imports construction code. Every checker returns a
:class:`VerificationReport` listing all violations it found; malformed
input is reported, not raised, except for the explicit dimension mismatch
in :func:`verify_sma`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .core import ArraySet, IntSet, PartialGrid, SmaSpec, omega_for
from .errors import ShapeError

AXIOMS = (
    "coverage",
    "multiplicity",
    "row-fill",
    "col-fill",
    "row-sum",
    "col-sum",
    "universe-mismatch",
    "signature",
    "frame",
)


@dataclass(frozen=True)
class Violation:
    axiom: str
    location: str
    detail: str

    def __str__(self) -> str:
        return f"[{self.axiom}] {self.location}: {self.detail}"


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @classmethod
    def from_violations(cls, violations: Iterable[Violation]) -> "VerificationReport":
        vs = tuple(violations)
        return cls(not vs, vs)

    @property
    def axioms(self) -> set[str]:
        return {v.axiom for v in self.violations}

    def __bool__(self) -> bool:
        return self.passed

    def summary(self, limit: int = 10) -> str:
        if self.passed:
            return "pass"
        lines = [f"fail ({len(self.violations)} violations)"]
        lines += [f"  {v}" for v in self.violations[:limit]]
        if len(self.violations) > limit:
            lines.append(f"  ... {len(self.violations) - limit} more")
        return "\n".join(lines)


def _where(prefix: str, what: str, i: int) -> str:
    return f"{prefix}{what} {i + 1}"


def _sum_violations(g: PartialGrid, prefix: str = "") -> list[Violation]:
    out = []
    for r, s in enumerate(g.row_sums()):
        if s:
            out.append(Violation("row-sum", _where(prefix, "row", r), f"sum is {s}"))
    for c, s in enumerate(g.col_sums()):
        if s:
            out.append(Violation("col-sum", _where(prefix, "col", c), f"sum is {s}"))
    return out


def _entry_violations(entries: Sequence[int], universe: IntSet) -> list[Violation]:
    out = []
    counts = Counter(entries)
    allowed = universe.as_frozenset()
    outside = sorted(x for x in counts if x not in allowed)
    if outside:
        out.append(Violation(
            "universe-mismatch", "entries",
            f"{len(outside)} values outside the universe, e.g. {outside[:5]}",
        ))
    repeated = sorted(x for x, n in counts.items() if n > 1)
    if repeated:
        out.append(Violation(
            "multiplicity", "entries",
            f"{len(repeated)} values repeated, e.g. {repeated[:5]}",
        ))
    missing = [x for x in universe if x not in counts]
    if missing:
        out.append(Violation(
            "coverage", "entries",
            f"{len(missing)} values missing, e.g. {missing[:5]}",
        ))
    return out


def verify_zero_sum(g: PartialGrid) -> VerificationReport:
    """Every row and column of ``g`` sums to zero."""
    return VerificationReport.from_violations(_sum_violations(g))


def verify_entry_set(entries, expected: Optional[Iterable[int]] = None) -> VerificationReport:
    """The multiset ``entries`` equals the set ``expected``.

    A block family may be passed alone; its members' entries are then
    checked against its ``claimed`` set.
    """
    if expected is None:
        if not hasattr(entries, "claimed") or not hasattr(entries, "members"):
            raise TypeError("verify_entry_set needs an expected set or a block family")
        expected = entries.claimed
        entries = [v for g in entries.members for v in g.entries()]
    exp = expected if isinstance(expected, IntSet) else IntSet(expected)
    return VerificationReport.from_violations(_entry_violations(list(entries), exp))


def verify_signature(
    g: PartialGrid,
    row_sums: Optional[Sequence[int]] = None,
    col_sums: Optional[Sequence[int]] = None,
    where: str = "block",
) -> VerificationReport:
    """Row and column sums of ``g`` match the given vectors (zero by default)."""
    want_r = list(row_sums) if row_sums is not None else [0] * g.rows
    want_c = list(col_sums) if col_sums is not None else [0] * g.cols
    got_r, got_c = g.row_sums(), g.col_sums()
    out = []
    if got_r != want_r:
        out.append(Violation("signature", where, f"row sums {got_r}, expected {want_r}"))
    if got_c != want_c:
        out.append(Violation("signature", where, f"col sums {got_c}, expected {want_c}"))
    return VerificationReport.from_violations(out)


def verify_sma(g: PartialGrid, spec: SmaSpec) -> VerificationReport:
    """Check ``g`` is a signed magic array with parameters ``spec``."""
    if g.shape != (spec.m, spec.n):
        raise ShapeError(f"grid is {g.rows}x{g.cols}, spec asks for {spec.m}x{spec.n}")
    out: list[Violation] = []
    for r in range(g.rows):
        cnt = sum(v is not None for v in g.row(r))
        if cnt != spec.s:
            out.append(Violation("row-fill", f"row {r + 1}", f"{cnt} filled, expected {spec.s}"))
    for c in range(g.cols):
        cnt = sum(v is not None for v in g.col(c))
        if cnt != spec.k:
            out.append(Violation("col-fill", f"col {c + 1}", f"{cnt} filled, expected {spec.k}"))
    out += _sum_violations(g)
    out += _entry_violations(g.entries(), omega_for(spec.n * spec.k))
    return VerificationReport.from_violations(out)


def verify_arrays(arrays: Sequence[PartialGrid], a: int, b: int, e: int) -> VerificationReport:
    """Check a list of grids against the declared ``(a, b, e)`` of a set.

    Each grid must be a full ``a x b`` array with zero row and column sums,
    and together the grids must use every element of the universe for
    ``a*b*e`` cells exactly once.
    """
    out: list[Violation] = []
    if len(arrays) != e:
        out.append(Violation("frame", "set", f"{len(arrays)} arrays, declared {e}"))
    for i, g in enumerate(arrays):
        tag = f"array {i + 1}, "
        if g.shape != (a, b):
            out.append(Violation("frame", f"array {i + 1}", f"shape {g.shape}, declared {(a, b)}"))
        for r in range(g.rows):
            if any(v is None for v in g.row(r)):
                out.append(Violation("row-fill", _where(tag, "row", r), "row has empty cells"))
        for c in range(g.cols):
            if any(v is None for v in g.col(c)):
                out.append(Violation("col-fill", _where(tag, "col", c), "column has empty cells"))
        out += _sum_violations(g, tag)
    entries = [v for g in arrays for v in g.entries()]
    if a * b * e >= 1:
        out += _entry_violations(entries, omega_for(a * b * e))
    else:
        out.append(Violation("frame", "set", f"declared cell count {a * b * e}"))
    return VerificationReport.from_violations(out)


def verify_smas(xs: ArraySet) -> VerificationReport:
    """Check ``xs`` is a signed magic array set with its own ``(a, b, e)``."""
    return verify_arrays(xs.arrays, xs.a, xs.b, xs.e)


def verify_ihs(xs: ArraySet) -> VerificationReport:
    """Check ``xs`` is an integer Heffter array set.

    All rows and columns sum to zero and the absolute values of the
    ``a*b*c`` entries are exactly ``1, ..., a*b*c``, so the set together
    with its negation covers ``±[1, a*b*c]``.
    """
    out: list[Violation] = []
    total = xs.a * xs.b * xs.e
    for i, g in enumerate(xs.arrays):
        tag = f"array {i + 1}, "
        for r in range(g.rows):
            if any(v is None for v in g.row(r)):
                out.append(Violation("row-fill", _where(tag, "row", r), "row has empty cells"))
        out += _sum_violations(g, tag)
    entries = xs.entries()
    if 0 in entries:
        out.append(Violation("universe-mismatch", "entries", "0 is not allowed"))
    out += _entry_violations([abs(v) for v in entries if v], IntSet(range(1, total + 1)))
    return VerificationReport.from_violations(out)
