"""Which construction builds a given SMAS(a, b; e).

Odd ``a, b`` (``e = 2c`` even) follow a table indexed by ``c mod 4``, the
class of ``a`` (5, 7, ``1 mod 4`` and at least 9, ``3 mod 4`` and at least
11) and the class of ``b`` (7, ``1 mod 4``, ``3 mod 4``). Each plan is
written for one orientation; when the requested ``(a, b)`` only fits the
other one, the route is marked ``transposed`` and the arrays are built for
``(b, a)`` and transposed at the end.

``a = 6`` (or ``b = 6``) uses ``e = c`` arrays: ``b`` in {5, 7} has a
direct plan and larger ``b`` widen a set with ``b - 4`` columns.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional

from ..errors import InadmissibleError
from . import five_seven, general, six
from .engine import Plan


class Construction(enum.Enum):
    # odd a, b
    FIVE_B1_C0 = "5xb1-c0"
    FIVE_B3_C0 = "5xb3-c0"
    FIVE_B1_C3 = "5xb1-c3"
    A1_B3_C3 = "a1xb3-c3"
    A1_7_C3 = "a1x7-c3"
    A1_B1_C1_BASE = "a1xb1-c1-base"
    A1_B1_C1 = "a1xb1-c1"
    FIVE_B3_C1 = "5xb3-c1"
    A3_B3_C1_BASE = "a3xb3-c1-base"
    A3_B3_C1 = "a3xb3-c1"
    A1_B1_C2 = "a1xb1-c2"
    A1_B3_C2 = "a1xb3-c2"
    A1_7_C2 = "a1x7-c2"
    A3_B3_C2 = "a3xb3-c2"
    # 5 x 7
    FIVE_SEVEN_C0 = "5x7-c0"
    FIVE_SEVEN_C1 = "5x7-c1"
    FIVE_SEVEN_C2 = "5x7-c2"
    FIVE_SEVEN_C3 = "5x7-c3"
    # 6 x b
    WIDEN = "6xb-widen"
    SIX_C0 = "6x5|7-c0"
    SIX_FIVE_C1 = "6x5-c1"
    SIX_SEVEN_C1 = "6x7-c1"
    SIX_FIVE_C2 = "6x5-c2"
    SIX_SEVEN_C2 = "6x7-c2"
    SIX_FIVE_C3 = "6x5-c3"
    SIX_SEVEN_C3 = "6x7-c3"
    # fixed sets
    FIG1 = "fig1"
    FIG2 = "fig2"
    FIG3 = "fig3"
    FIG4 = "fig4"
    # not built here
    EXTERNAL_IHS = "external-ihs"
    EXTERNAL_BASE_6_7_1 = "search-6x7x1"


PLANS: dict[Construction, Callable[[int, int, int], Plan]] = {
    Construction.FIVE_B1_C0: general.plan_5_b1_c0,
    Construction.FIVE_B3_C0: general.plan_5_b3_c0,
    Construction.FIVE_B1_C3: general.plan_5_b1_c3,
    Construction.A1_B3_C3: general.plan_a1_b3_c3,
    Construction.A1_7_C3: general.plan_a1_7_c3,
    Construction.A1_B1_C1_BASE: general.plan_a1_b1_c1_base,
    Construction.A1_B1_C1: general.plan_a1_b1_c1,
    Construction.FIVE_B3_C1: general.plan_5_b3_c1,
    Construction.A3_B3_C1_BASE: general.plan_a3_b3_c1_base,
    Construction.A3_B3_C1: general.plan_a3_b3_c1,
    Construction.A1_B1_C2: general.plan_a1_b1_c2,
    Construction.A1_B3_C2: general.plan_a1_b3_c2,
    Construction.A1_7_C2: general.plan_a1_7_c2,
    Construction.A3_B3_C2: general.plan_a3_b3_c2,
    Construction.FIVE_SEVEN_C0: five_seven.plan_57_c0,
    Construction.FIVE_SEVEN_C1: five_seven.plan_57_c1,
    Construction.FIVE_SEVEN_C2: five_seven.plan_57_c2,
    Construction.FIVE_SEVEN_C3: five_seven.plan_57_c3,
    Construction.SIX_C0: six.plan_6_c0,
    Construction.SIX_FIVE_C1: six.plan_65_c1,
    Construction.SIX_SEVEN_C1: six.plan_67_c1,
    Construction.SIX_FIVE_C2: six.plan_65_c2,
    Construction.SIX_SEVEN_C2: six.plan_67_c2,
    Construction.SIX_FIVE_C3: six.plan_65_c3,
    Construction.SIX_SEVEN_C3: six.plan_67_c3,
}

FIXTURES = {Construction.FIG1: "fig1", Construction.FIG2: "fig2", Construction.FIG3: "fig3", Construction.FIG4: "fig4"}


def _r1(x: int, lo: int) -> bool:
    return x >= lo and x % 4 == 1


def _r3(x: int, lo: int) -> bool:
    return x >= lo and x % 4 == 3


# Orientation each odd-odd plan is written for.
_FITS: dict[Construction, Callable[[int, int], bool]] = {
    Construction.FIVE_B1_C0: lambda a, b: a == 5 and _r1(b, 9),
    Construction.FIVE_B3_C0: lambda a, b: a == 5 and _r3(b, 11),
    Construction.FIVE_B1_C3: lambda a, b: a == 5 and _r1(b, 9),
    Construction.A1_B3_C3: lambda a, b: _r1(a, 5) and _r3(b, 11),
    Construction.A1_7_C3: lambda a, b: _r1(a, 9) and b == 7,
    Construction.A1_B1_C1_BASE: lambda a, b: _r1(a, 5) and _r1(b, 9),
    Construction.A1_B1_C1: lambda a, b: _r1(a, 5) and _r1(b, 9),
    Construction.FIVE_B3_C1: lambda a, b: a == 5 and _r3(b, 11),
    Construction.A3_B3_C1_BASE: lambda a, b: _r3(a, 7) and _r3(b, 7),
    Construction.A3_B3_C1: lambda a, b: _r3(a, 7) and _r3(b, 7),
    Construction.A1_B1_C2: lambda a, b: _r1(a, 5) and _r1(b, 9),
    Construction.A1_B3_C2: lambda a, b: _r1(a, 5) and _r3(b, 11),
    Construction.A1_7_C2: lambda a, b: _r1(a, 9) and b == 7,
    Construction.A3_B3_C2: lambda a, b: _r3(a, 7) and _r3(b, 7),
}

_X = Construction.EXTERNAL_IHS
L = Construction
# _TABLE[c % 4][row class][column class]
_TABLE: dict[int, dict[str, dict[str, Construction]]] = {
    0: {
        "5": {"7": L.FIVE_SEVEN_C0, "1": L.FIVE_B1_C0, "3": L.FIVE_B3_C0},
        "7": {"7": _X, "1": _X, "3": _X},
        "1": {"7": _X, "1": _X, "3": _X},
        "3": {"7": _X, "1": _X, "3": _X},
    },
    1: {
        "5": {"7": L.FIVE_SEVEN_C1, "1": L.A1_B1_C1, "3": L.FIVE_B3_C1},
        "7": {"7": L.A3_B3_C1, "1": _X, "3": L.A3_B3_C1},
        "1": {"7": _X, "1": L.A1_B1_C1, "3": _X},
        "3": {"7": L.A3_B3_C1, "1": _X, "3": L.A3_B3_C1},
    },
    2: {
        "5": {"7": L.FIVE_SEVEN_C2, "1": L.A1_B1_C2, "3": L.A1_B3_C2},
        "7": {"7": L.A3_B3_C2, "1": L.A1_7_C2, "3": L.A3_B3_C2},
        "1": {"7": L.A1_7_C2, "1": L.A1_B1_C2, "3": L.A1_B3_C2},
        "3": {"7": L.A3_B3_C2, "1": L.A1_B3_C2, "3": L.A3_B3_C2},
    },
    3: {
        "5": {"7": L.FIVE_SEVEN_C3, "1": L.FIVE_B1_C3, "3": L.A1_B3_C3},
        "7": {"7": _X, "1": L.A1_7_C3, "3": _X},
        "1": {"7": L.A1_7_C3, "1": _X, "3": L.A1_B3_C3},
        "3": {"7": _X, "1": L.A1_B3_C3, "3": _X},
    },
}
del L


@dataclass(frozen=True)
class Route:
    """A routing decision.

    ``a, b, e`` is the frame the construction is run in; when ``transposed``
    is set the requested frame is ``b x a``. ``base`` is the narrower set a
    widening step starts from.
    """

    construction: Construction
    a: int
    b: int
    e: int
    transposed: bool = False
    base: Optional["Route"] = None
    cell: str = ""

    @property
    def external(self) -> bool:
        return self.construction is Construction.EXTERNAL_IHS

    def chain(self) -> list["Route"]:
        out = [self]
        while out[-1].base is not None:
            out.append(out[-1].base)
        return out

    def describe(self) -> str:
        parts = []
        for r in self.chain():
            t = " (transposed)" if r.transposed else ""
            parts.append(f"{r.construction.value} on {r.a}x{r.b}, e={r.e}{t}")
        return " <- ".join(parts)


def admissibility_violation(a: int, b: int, e: int) -> Optional[str]:
    """Why ``(a, b, e)`` is outside the families built here, or ``None``."""
    if any(not isinstance(x, int) or isinstance(x, bool) for x in (a, b, e)):
        return "a, b, e must be integers"
    if min(a, b, e) < 1:
        return "a, b, e must be positive"
    if 6 in (a, b):
        other = b if a == 6 else a
        if other % 2 == 0 or other < 5:
            return f"with one side 6 the other must be odd and at least 5, got {other}"
        return None
    if a % 2 == 0 or b % 2 == 0:
        return "sides must both be odd, or one of them must be 6"
    if a < 5 or b < 5:
        return "odd sides must be at least 5"
    if (a, b) == (5, 5):
        return "(a, b) = (5, 5) is not covered"
    if e % 2:
        return "for odd sides the number of arrays e must be even"
    return None


def _row_class(a: int) -> str:
    if a in (5, 7):
        return str(a)
    return "1" if a % 4 == 1 else "3"


def _col_class(b: int) -> str:
    return "7" if b == 7 else ("1" if b % 4 == 1 else "3")


def _six(b: int, c: int, transposed: bool) -> Route:
    if b > 7:
        base = _six(b - 4, c, False)
        return Route(Construction.WIDEN, 6, b, c, transposed, base, cell=f"6 x {b}")
    r = c % 4
    if b == 5:
        if c == 2:
            construction = Construction.FIG4
        else:
            construction = {0: Construction.SIX_C0, 1: Construction.SIX_FIVE_C1,
                     2: Construction.SIX_FIVE_C2, 3: Construction.SIX_FIVE_C3}[r]
    else:
        if c == 1:
            construction = Construction.EXTERNAL_BASE_6_7_1
        else:
            construction = {0: Construction.SIX_C0, 1: Construction.SIX_SEVEN_C1,
                     2: Construction.SIX_SEVEN_C2, 3: Construction.SIX_SEVEN_C3}[r]
    return Route(construction, 6, b, c, transposed, cell=f"6 x {b}, c = {r} mod 4")


def route_for(a: int, b: int, e: int) -> Route:
    """The unique route for an admissible ``(a, b, e)``."""
    why = admissibility_violation(a, b, e)
    if why:
        raise InadmissibleError(f"SMAS({a},{b};{e}): {why}")
    if a == 6:
        return _six(b, e, False)
    if b == 6:
        return _six(a, e, True)

    c = e // 2
    swapped = b == 5
    ra, rb = (b, a) if swapped else (a, b)
    rc, cc = _row_class(ra), _col_class(rb)
    construction = _TABLE[c % 4][rc][cc]
    cell = f"c = {c % 4} mod 4, a class {rc}, b class {cc}"

    if construction is Construction.EXTERNAL_IHS:
        return Route(construction, ra, rb, e, swapped, cell=cell)
    if construction is Construction.A1_B1_C1 and c == 1:
        construction = Construction.A1_B1_C1_BASE
    elif construction is Construction.A3_B3_C1 and c == 1:
        construction = Construction.A3_B3_C1_BASE
    elif construction.value.startswith("5x7-") and c <= 3:
        construction = {1: Construction.FIG1, 2: Construction.FIG3, 3: Construction.FIG2}[c]

    if construction in _FITS and not _FITS[construction](ra, rb):
        ra, rb, swapped = rb, ra, not swapped
        if not _FITS[construction](ra, rb):
            raise InadmissibleError(f"no orientation of {a}x{b} fits {construction.value}")
    return Route(construction, ra, rb, e, swapped, cell=cell)
