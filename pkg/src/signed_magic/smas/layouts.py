"""Array templates: where each block kind sits inside an array.

A template is a list of slots ``(kind, row, col)``. A slot kind ending in
``t`` takes a block from the pool of the base kind and transposes it
(``X2t`` draws from the ``X2`` pool). Slots are filled in column-major
order, left to right and then top to bottom, drawing each pool in order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from ..core import PartialGrid, place, transpose
from ..errors import IntegrityError, ShapeError

SHAPES = {
    "X3": (3, 3),
    "X2": (2, 3),
    "X5": (5, 3),
    "X6": (6, 3),
    "Y5": (5, 5),
    "Z4": (2, 4),
    "Z6": (2, 6),
    "W2": (2, 2),
    "W4": (2, 4),
}


def pool_of(kind: str) -> str:
    return kind[:-1] if kind.endswith("t") else kind


@dataclass(frozen=True)
class Template:
    name: str
    rows: int
    cols: int
    slots: tuple[tuple[str, int, int], ...]

    def ordered(self) -> list[tuple[str, int, int]]:
        return sorted(self.slots, key=lambda s: (s[2], s[1]))

    def demand(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for kind, _, _ in self.slots:
            out[pool_of(kind)] = out.get(pool_of(kind), 0) + 1
        return out


def fill(template: Template, pools: Mapping[str, Iterator[PartialGrid]]) -> PartialGrid:
    """Build one array by drawing blocks from ``pools`` into the template."""
    g = PartialGrid.empty(template.rows, template.cols)
    for kind, r, c in template.ordered():
        base = pool_of(kind)
        try:
            block = next(pools[base])
        except (KeyError, StopIteration):
            raise IntegrityError(f"{template.name}: pool {base} ran out") from None
        if block.shape != SHAPES[base]:
            raise ShapeError(f"{base} block has shape {block.shape}")
        if kind.endswith("t"):
            block = transpose(block)
        g = place(g, block, r, c)
    if any(v is None for v in g.cells):
        raise IntegrityError(f"{template.name}: template leaves empty cells")
    return g


def _top_x3(b: int) -> list[tuple[str, int, int]]:
    return [("X3", 0, 0)] + [("X2t", 0, c) for c in range(3, b, 2)]


def _band(r: int, start: int, b: int) -> list[tuple[str, int, int]]:
    return [("Z4", r, c) for c in range(start, b, 4)]


def five_rows_z6(b: int) -> Template:
    """5 x b, b = 1 mod 4: X3 and transposed X2 on top, X2, Z6 and Z4 below."""
    if b < 9 or b % 4 != 1:
        raise ShapeError(f"five_rows_z6 needs b >= 9, b = 1 mod 4, got {b}")
    slots = _top_x3(b) + [("X2", 3, 0), ("Z6", 3, 3)] + _band(3, 9, b)
    return Template(f"5x{b}-z6", 5, b, tuple(slots))


def five_rows_z4(b: int) -> Template:
    """5 x b, b = 3 mod 4: X3 and transposed X2 on top, X2 and Z4 below."""
    if b < 7 or b % 4 != 3:
        raise ShapeError(f"five_rows_z4 needs b >= 7, b = 3 mod 4, got {b}")
    slots = _top_x3(b) + [("X2", 3, 0)] + _band(3, 3, b)
    return Template(f"5x{b}-z4", 5, b, tuple(slots))


def tall_z4(a: int, b: int) -> Template:
    """a x b, b = 3 mod 4: X3 top-left, then bands of X2 followed by Z4."""
    if a < 5 or a % 2 == 0 or b < 7 or b % 4 != 3:
        raise ShapeError(f"tall_z4 needs odd a >= 5 and b = 3 mod 4, got {(a, b)}")
    slots = _top_x3(b)
    for r in range(3, a, 2):
        slots += [("X2", r, 0)] + _band(r, 3, b)
    return Template(f"{a}x{b}-tall-z4", a, b, tuple(slots))


def tall_y5_w2(a: int, b: int) -> Template:
    """a x b, b = 3 mod 4: Y5 top-left with a W2 correction, then X2/Z4 bands."""
    if a < 5 or a % 2 == 0 or b < 7 or b % 4 != 3:
        raise ShapeError(f"tall_y5_w2 needs odd a >= 5 and b = 3 mod 4, got {(a, b)}")
    slots = [("Y5", 0, 0)] + [("X2t", 0, c) for c in range(5, b, 2)]
    slots += [("W2", 3, 5)] + _band(3, 7, b)
    for r in range(5, a, 2):
        slots += [("X2", r, 0)] + _band(r, 3, b)
    return Template(f"{a}x{b}-y5-w2", a, b, tuple(slots))


def _quads(a: int, b: int) -> list[tuple[str, int, int]]:
    slots = []
    for r in range(5, a, 4):
        slots += [("X2", r, 0), ("X2", r + 2, 0), ("Z4t", r, 3)]
        slots += _band(r, 5, b) + _band(r + 2, 5, b)
    return slots


def tall_y5_w4(a: int, b: int) -> Template:
    """a x b with a, b = 1 mod 4: Y5 and a W4 correction on top, then
    groups of four rows holding two X2, one transposed Z4 and Z4 bands."""
    if a < 5 or a % 4 != 1 or b < 9 or b % 4 != 1:
        raise ShapeError(f"tall_y5_w4 needs a, b = 1 mod 4, a >= 5, b >= 9, got {(a, b)}")
    slots = [("Y5", 0, 0)] + [("X2t", 0, c) for c in range(5, b, 2)]
    slots += [("W4", 3, 5)] + _band(3, 9, b) + _quads(a, b)
    return Template(f"{a}x{b}-y5-w4", a, b, tuple(slots))


def tall_z6(a: int, b: int) -> Template:
    """a x b with a, b = 1 mod 4: the ``five_rows_z6`` top followed by
    groups of four rows as in ``tall_y5_w4``."""
    if a < 5 or a % 4 != 1 or b < 9 or b % 4 != 1:
        raise ShapeError(f"tall_z6 needs a, b = 1 mod 4, a >= 5, b >= 9, got {(a, b)}")
    slots = _top_x3(b) + [("X2", 3, 0), ("Z6", 3, 3)] + _band(3, 9, b) + _quads(a, b)
    return Template(f"{a}x{b}-tall-z6", a, b, tuple(slots))


def five_seven_x5() -> Template:
    """5 x 7: a 5x3 block, two transposed X2 and one Z4."""
    slots = [("X5", 0, 0), ("X2t", 0, 3), ("X2t", 0, 5), ("Z4", 3, 3)]
    return Template("5x7-x5", 5, 7, tuple(slots))


def six_five_x2() -> Template:
    """6 x 5: three stacked X2 and one transposed Z6."""
    slots = [("X2", 0, 0), ("X2", 2, 0), ("X2", 4, 0), ("Z6t", 0, 3)]
    return Template("6x5-x2", 6, 5, tuple(slots))


def six_seven_x2() -> Template:
    """6 x 7: three rows of an X2 followed by a Z4."""
    slots = [s for r in (0, 2, 4) for s in (("X2", r, 0), ("Z4", r, 3))]
    return Template("6x7-x2", 6, 7, tuple(slots))


def six_five_x6() -> Template:
    """6 x 5: one 6x3 block and one transposed Z6."""
    return Template("6x5-x6", 6, 5, (("X6", 0, 0), ("Z6t", 0, 3)))


def six_seven_x6() -> Template:
    """6 x 7: one 6x3 block and three Z4."""
    slots = [("X6", 0, 0), ("Z4", 0, 3), ("Z4", 2, 3), ("Z4", 4, 3)]
    return Template("6x7-x6", 6, 7, tuple(slots))
