"""Turn a declarative construction plan into an array set.

A plan lists the block families, the leftover sets (named intervals) that
the families do not use, how those leftovers are split into 2-sets of
type 4, 2 and 1, which small blocks are cut from the 2-sets, and which
templates the arrays follow. :func:`realize` checks every bookkeeping
claim before it assembles anything:

* the families use pairwise distinct entries inside the universe;
* the named leftovers are disjoint and equal the complement computed
  directly from the families;
* the 2-set pools are used up exactly by the small blocks;
* every block pool is used up exactly by the templates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..blocks import q_block, r_block, u_block
from ..core import ArraySet, IntSet, PartialGrid, TwoSet, interval, partition_pairs
from ..errors import IntegrityError
from .layouts import Template, fill

# Leftover set: (low, high, step).
Span = tuple[int, int, int]

# Small block recipes: which 2-set pools each kind draws from, in order.
_RECIPES = {
    "Q3": ("F", "F"),
    "Q2": ("G", "G"),
    "Q1": ("H", "H"),
    "R2": ("F", "G", "G"),
    "R1": ("G", "H", "H"),
}


@dataclass
class Plan:
    route: str
    a: int
    b: int
    e: int
    families: list[tuple[str, Sequence[PartialGrid]]]
    leftovers: dict[str, Span]
    splits: dict[str, list[str]] = field(default_factory=dict)
    f: list[str] = field(default_factory=list)
    g: list[str] = field(default_factory=list)
    h: list[str] = field(default_factory=list)
    corrections: list[tuple[str, ...]] = field(default_factory=list)
    small: list[tuple[str, int]] = field(default_factory=list)
    layout: list[tuple[Template, int]] = field(default_factory=list)


def _fail(plan: Plan, msg: str) -> IntegrityError:
    return IntegrityError(f"{plan.route} {(plan.a, plan.b, plan.e)}: {msg}")


def _span_set(plan: Plan, name: str) -> list[int]:
    lo, hi, step = plan.leftovers[name]
    try:
        return list(interval(lo, hi, step))
    except Exception as exc:
        raise _fail(plan, f"leftover {name} = [{lo},{hi}]_{step}: {exc}") from None


def _as_pair(plan: Plan, name: str, eps: int) -> TwoSet:
    vals = _span_set(plan, name)
    if len(vals) != 2 or vals[1] - vals[0] != eps:
        raise _fail(plan, f"leftover {name} = {vals} is not a 2-set of type {eps}")
    return TwoSet(vals[0], eps)


def check_leftovers(plan: Plan) -> IntSet:
    """Verify the named leftovers against the complement of the families."""
    n_half = plan.a * plan.b * plan.e // 2
    used: list[int] = []
    for _, members in plan.families:
        for blk in members:
            used.extend(blk.entries())
    try:
        used_set = IntSet(used)
    except Exception as exc:
        raise _fail(plan, f"block families overlap: {exc}") from None
    for x in used_set:
        if x == 0 or abs(x) > n_half:
            raise _fail(plan, f"family entry {x} outside ±[1,{n_half}]")
        if -x not in used_set:
            raise _fail(plan, f"family entries are not closed under negation at {x}")
    residual = IntSet(x for x in range(1, n_half + 1) if x not in used_set)

    children = {c for kids in plan.splits.values() for c in kids}
    top = [name for name in plan.leftovers if name not in children]
    try:
        declared = IntSet.union(*(_span_set(plan, n) for n in top))
    except IntegrityError:
        raise
    except Exception as exc:
        raise _fail(plan, f"leftover sets overlap: {exc}") from None
    if declared != residual:
        extra = sorted(declared.as_frozenset() - residual.as_frozenset())
        missing = sorted(residual.as_frozenset() - declared.as_frozenset())
        raise _fail(plan, f"leftovers disagree with families: extra {extra[:8]}, missing {missing[:8]}")
    for parent, kids in plan.splits.items():
        whole = IntSet(_span_set(plan, parent))
        try:
            parts = IntSet.union(*(_span_set(plan, k) for k in kids))
        except Exception as exc:
            raise _fail(plan, f"split of {parent} overlaps: {exc}") from None
        if parts != whole:
            raise _fail(plan, f"split of {parent} does not reproduce it")
    return residual


def realize(plan: Plan) -> ArraySet:
    residual = check_leftovers(plan)

    consumed: list[int] = []
    pools: dict[str, list[TwoSet]] = {}
    for key, names, eps in (("F", plan.f, 4), ("G", plan.g, 2), ("H", plan.h, 1)):
        values = [x for n in names for x in _span_set(plan, n)]
        consumed.extend(values)
        try:
            pools[key] = partition_pairs(values, eps)
        except Exception as exc:
            raise _fail(plan, f"pool {key}: {exc}") from None

    corrections: list[PartialGrid] = []
    corr_kind = None
    for corr in plan.corrections:
        if corr[0] == "W2":
            x = _as_pair(plan, corr[1], 1)
            corrections.append(u_block(2, x))
            consumed.extend(x)
        else:
            x, y = _as_pair(plan, corr[1], 1), _as_pair(plan, corr[2], 2)
            corrections.append(u_block(1, x, y))
            consumed.extend(x)
            consumed.extend(y)
        corr_kind = corr[0]
    try:
        IntSet(consumed)
    except Exception as exc:
        raise _fail(plan, f"leftovers assigned twice: {exc}") from None
    if IntSet(consumed) != residual:
        raise _fail(plan, "pools and corrections do not cover the leftovers exactly")

    cursor = {k: 0 for k in pools}

    def take(key: str) -> TwoSet:
        i = cursor[key]
        if i >= len(pools[key]):
            raise _fail(plan, f"pool {key} exhausted")
        cursor[key] = i + 1
        return pools[key][i]

    z4: list[PartialGrid] = []
    z6: list[PartialGrid] = []
    for kind, count in plan.small:
        for _ in range(count):
            pairs = [take(k) for k in _RECIPES[kind]]
            if kind[0] == "Q":
                z4.append(q_block({"Q1": 1, "Q2": 2, "Q3": 3}[kind], *pairs))
            else:
                z6.append(r_block(1 if kind == "R1" else 2, *pairs))
    for key, pool in pools.items():
        if cursor[key] != len(pool):
            raise _fail(plan, f"pool {key} has {len(pool) - cursor[key]} unused 2-sets")

    blocks: dict[str, list[PartialGrid]] = {"Z4": z4, "Z6": z6}
    if corr_kind:
        blocks[corr_kind] = corrections
    for kind, members in plan.families:
        blocks.setdefault(kind, []).extend(members)
    iters = {k: iter(v) for k, v in blocks.items()}

    arrays: list[PartialGrid] = []
    for template, count in plan.layout:
        for _ in range(count):
            arrays.append(fill(template, iters))
    for k, it in iters.items():
        if next(it, None) is not None:
            raise _fail(plan, f"{k} blocks left over after tiling")
    if len(arrays) != plan.e:
        raise _fail(plan, f"tiled {len(arrays)} arrays, expected {plan.e}")
    return ArraySet(tuple(arrays), plan.a, plan.b, plan.e)
