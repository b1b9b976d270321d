"""Plans for SMAS(6, b; c) with b in {5, 7}, and the widening step that
turns an SMAS(6, b; c) into an SMAS(6, b + 4; c).

Note that here ``e = c``: the set has ``c`` arrays, not ``2c``.
"""

from __future__ import annotations

from ..blocks import SPECIAL_A, block_b_set, special_s
from ..core import ArraySet, hconcat, transpose
from ..errors import ParameterError
from .engine import Plan
from .general import _require
from .layouts import six_five_x2, six_five_x6, six_seven_x2, six_seven_x6


def _x6() -> list:
    return [transpose(SPECIAL_A)]


def plan_6_c0(a: int, b: int, c: int) -> Plan:
    """6 x 5 or 6 x 7, c = 0 mod 4."""
    _require(a == 6 and b in (5, 7) and c >= 4 and c % 4 == 0, "6_c0", a, b, c)
    t = (c - 4) // 4
    d = b - 5
    B = block_b_set(1, 36*t + 36, 12*t + 12)
    plan = Plan(
        "6_c0", a, b, c,
        families=[("X2", B.members)],
        leftovers={
            "1": (2, 24*t + 24, 2),
            "2": (48*t + 49, 60*t + 60 + 12*(t + 1)*d, 1),
            "1.1": (2, 8*t + 6, 4),
            "1.2": (4, 8*t + 8, 4),
            "1.3": (8*t + 10, 24*t + 24, 2),
            "2.1": (48*t + 49, 52*t + 51, 2),
            "2.2": (48*t + 50, 52*t + 52, 2),
            "2.3": (52*t + 53, 60*t + 60 + 12*(t + 1)*d, 1),
        },
        splits={"1": ["1.1", "1.2", "1.3"], "2": ["2.1", "2.2", "2.3"]},
        f=["1.1", "1.2"],
        g=["1.3", "2.1", "2.2"],
        h=["2.3"],
    )
    if b == 5:
        plan.small = [("R2", 2*t + 2), ("R1", 2*t + 2)]
        plan.layout = [(six_five_x2(), 4*t + 4)]
    else:
        plan.small = [("Q3", t + 1), ("Q2", 3*t + 3), ("Q1", 8*t + 8)]
        plan.layout = [(six_seven_x2(), 4*t + 4)]
    return plan


def plan_65_c1(a: int, b: int, c: int) -> Plan:
    """6 x 5, c = 1 mod 4."""
    _require((a, b) == (6, 5) and c >= 1 and c % 4 == 1, "65_c1", a, b, c)
    t = (c - 1) // 4
    B = block_b_set(1, 36*t + 8, 12*t + 3)
    return Plan(
        "65_c1", a, b, c,
        families=[("X2", B.members)],
        leftovers={
            "1": (2, 24*t + 4, 2),
            "2": (48*t + 12, 60*t + 15, 1),
            "1.1": (2, 16*t + 4, 2),
            "1.2": (16*t + 6, 24*t + 2, 4),
            "1.3": (16*t + 8, 24*t + 4, 4),
            "2.1": (48*t + 12, 52*t + 10, 2),
            "2.2": (48*t + 13, 52*t + 11, 2),
            "2.3": (52*t + 12, 60*t + 15, 1),
        },
        splits={"1": ["1.1", "1.2", "1.3"], "2": ["2.1", "2.2", "2.3"]},
        f=["1.2", "1.3"],
        g=["1.1", "2.1", "2.2"],
        h=["2.3"],
        small=[("R2", 2*t), ("R1", 2*t + 1)],
        layout=[(six_five_x2(), 4*t + 1)],
    )


def plan_67_c1(a: int, b: int, c: int) -> Plan:
    """6 x 7, c = 1 mod 4, c >= 5."""
    _require((a, b) == (6, 7) and c >= 5 and c % 4 == 1, "67_c1", a, b, c)
    t = (c - 5) // 4
    B = block_b_set(11, 36*t + 45, 12*t + 12)
    return Plan(
        "67_c1", a, b, c,
        families=[("X6", _x6()), ("X2", B.members)],
        leftovers={
            "1": (10, 24*t + 32, 2),
            "2": (36*t + 46, 36*t + 55, 1),
            "3": (48*t + 68, 84*t + 105, 1),
        },
        g=["1"],
        h=["2", "3"],
        small=[("Q2", 3*t + 3), ("Q1", 9*t + 12)],
        layout=[(six_seven_x2(), 4*t + 4), (six_seven_x6(), 1)],
    )


def plan_65_c2(a: int, b: int, c: int) -> Plan:
    """6 x 5, c = 2 mod 4, c >= 6."""
    _require((a, b) == (6, 5) and c >= 6 and c % 4 == 2, "65_c2", a, b, c)
    t = (c - 6) // 4
    B = block_b_set(11, 36*t + 55, 12*t + 15)
    return Plan(
        "65_c2", a, b, c,
        families=[("X6", _x6()), ("X2", B.members)],
        leftovers={
            "1": (10, 24*t + 40, 2),
            "2": (36*t + 56, 36*t + 65, 1),
            "3": (48*t + 81, 60*t + 90, 1),
            "1.1": (10, 8*t + 24, 2),
            "1.2": (8*t + 26, 24*t + 38, 4),
            "1.3": (8*t + 28, 24*t + 40, 4),
            "2.1": (36*t + 56, 36*t + 58, 2),
            "2.2": (36*t + 57, 36*t + 59, 2),
            "2.3": (36*t + 60, 36*t + 65, 1),
            "3.1": (48*t + 81, 60*t + 87, 2),
            "3.2": (48*t + 82, 60*t + 88, 2),
            "3.3": (60*t + 89, 60*t + 90, 1),
        },
        splits={"1": ["1.1", "1.2", "1.3"], "2": ["2.1", "2.2", "2.3"],
                "3": ["3.1", "3.2", "3.3"]},
        f=["1.2", "1.3"],
        g=["1.1", "2.1", "2.2", "3.1", "3.2"],
        h=["2.3", "3.3"],
        small=[("R2", 4*t + 4), ("R1", 2)],
        layout=[(six_five_x2(), 4*t + 5), (six_five_x6(), 1)],
    )


def plan_67_c2(a: int, b: int, c: int) -> Plan:
    """6 x 7, c = 2 mod 4."""
    _require((a, b) == (6, 7) and c >= 2 and c % 4 == 2, "67_c2", a, b, c)
    t = (c - 2) // 4
    B = block_b_set(11, 36*t + 19, 12*t + 3)
    return Plan(
        "67_c2", a, b, c,
        families=[("X6", _x6()), ("X2", B.members)],
        leftovers={
            "1": (10, 24*t + 16, 2),
            "2": (36*t + 20, 36*t + 29, 1),
            "3": (48*t + 33, 84*t + 42, 1),
        },
        g=["1"],
        h=["2", "3"],
        small=[("Q2", 3*t + 1), ("Q1", 9*t + 5)],
        layout=[(six_seven_x2(), 4*t + 1), (six_seven_x6(), 1)],
    )


def plan_65_c3(a: int, b: int, c: int) -> Plan:
    """6 x 5, c = 3 mod 4."""
    _require((a, b) == (6, 5) and c >= 3 and c % 4 == 3, "65_c3", a, b, c)
    t = (c - 3) // 4
    B = block_b_set(11, 36*t + 27, 12*t + 6)
    return Plan(
        "65_c3", a, b, c,
        families=[("X6", _x6()), ("X2", B.members)],
        leftovers={
            "1": (10, 24*t + 20, 2),
            "2": (36*t + 28, 36*t + 37, 1),
            "3": (48*t + 44, 60*t + 45, 1),
            "1.1": (10, 8*t + 20, 2),
            "1.2": (8*t + 22, 24*t + 18, 4),
            "1.3": (8*t + 24, 24*t + 20, 4),
            "3.1": (48*t + 44, 60*t + 42, 2),
            "3.2": (48*t + 45, 60*t + 43, 2),
            "3.3": (60*t + 44, 60*t + 45, 1),
        },
        splits={"1": ["1.1", "1.2", "1.3"], "3": ["3.1", "3.2", "3.3"]},
        f=["1.2", "1.3"],
        g=["1.1", "3.1", "3.2"],
        h=["2", "3.3"],
        small=[("R2", 4*t), ("R1", 3)],
        layout=[(six_five_x2(), 4*t + 2), (six_five_x6(), 1)],
    )


def plan_67_c3(a: int, b: int, c: int) -> Plan:
    """6 x 7, c = 3 mod 4."""
    _require((a, b) == (6, 7) and c >= 3 and c % 4 == 3, "67_c3", a, b, c)
    t = (c - 3) // 4
    B = block_b_set(1, 36*t + 26, 12*t + 9)
    return Plan(
        "67_c3", a, b, c,
        families=[("X2", B.members)],
        leftovers={
            "1": (2, 24*t + 16, 2),
            "2": (48*t + 36, 84*t + 63, 1),
        },
        g=["1"],
        h=["2"],
        small=[("Q2", 3*t + 2), ("Q1", 9*t + 7)],
        layout=[(six_seven_x2(), 4*t + 3)],
    )


def widen(xs: ArraySet) -> ArraySet:
    """SMAS(6, b; c) -> SMAS(6, b + 4; c).

    Array ``i`` gets a 6x4 block on ``±[3bc + 12i + 1, 3bc + 12i + 12]``
    appended on the right.
    """
    if xs.a != 6:
        raise ParameterError(f"widening needs 6-row arrays, got {xs.a}")
    base = 3 * xs.b * xs.e
    out = tuple(hconcat(r, special_s(base + 12*i)) for i, r in enumerate(xs.arrays))
    return ArraySet(out, 6, xs.b + 4, xs.e)
