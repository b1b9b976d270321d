"""Plans for SMAS(5, 7; 2c).

The smallest cases ``c = 1, 2, 3`` come from fixed fixtures and are not
planned here; every other ``c`` has a plan below.
"""

from __future__ import annotations

from ..blocks import (
    block_a2_set,
    block_b_set,
    block_c_set,
    block_c2_set,
    special_a_prime,
    special_d,
)
from ..core import negate
from .engine import Plan
from .general import _require
from .layouts import five_rows_z4, five_seven_x5, tall_y5_w2


def plan_57_c0(a: int, b: int, c: int) -> Plan:
    """c = 0 mod 4."""
    _require((a, b) == (5, 7) and c >= 4 and c % 4 == 0, "57_c0", a, b, c)
    s = c // 4
    t = s - 1
    A = block_a2_set(4*s, 24*s, 10*s, 2*s)
    B = block_b_set(1, 116*s, 24*s)
    return Plan(
        "57_c0", a, b, 2 * c,
        families=[("X3", A.members), ("X2", B.members)],
        leftovers={
            "1": (2, 8*t + 8, 2),
            "2": (52*t + 53, 56*t + 55, 2),
            "3": (56*t + 58, 60*t + 60, 2),
            "4": (60*t + 61, 64*t + 64, 1),
            "5": (64*t + 65, 72*t + 69, 4),
            "6": (68*t + 70, 72*t + 72, 2),
            "7": (72*t + 73, 80*t + 80, 1),
            "8": (80*t + 81, 88*t + 85, 4),
            "9": (84*t + 86, 88*t + 88, 2),
            "10": (88*t + 89, 92*t + 92, 1),
        },
        f=["5", "8"],
        g=["1", "2", "3", "6", "9"],
        h=["4", "7", "10"],
        small=[("Q3", s), ("Q2", 3*s), ("Q1", 4*s)],
        layout=[(five_rows_z4(7), 8*s)],
    )


def plan_57_c1(a: int, b: int, c: int) -> Plan:
    """c = 1 mod 4, c >= 5."""
    _require((a, b) == (5, 7) and c >= 5 and c % 4 == 1, "57_c1", a, b, c)
    t = (c - 5) // 4
    K = 4*t + 5
    A = block_a2_set(K, 6*K, 10*t + 12, 2*t + 2)
    ap = special_a_prime(t)
    B = block_b_set(1, 29*K, 6*K)
    return Plan(
        "57_c1", a, b, 2 * c,
        families=[("X3", list(A.members) + [ap, negate(ap)]), ("X2", B.members)],
        leftovers={
            "1": (12, 8*t + 10, 2),
            "2": (40*t + 44, 40*t + 46, 2),
            "3": (52*t + 65, 56*t + 63, 2),
            "4": (56*t + 64, 56*t + 67, 1),
            "5": (56*t + 68, 60*t + 70, 2),
            "6": (60*t + 72, 64*t + 75, 1),
            "7": (64*t + 77, 64*t + 79, 2),
            "8": (64*t + 83, 72*t + 87, 4),
            "9": (68*t + 80, 72*t + 82, 2),
            "10": (72*t + 84, 72*t + 86, 2),
            "11": (72*t + 88, 80*t + 91, 1),
            "12": (80*t + 93, 80*t + 95, 2),
            "13": (80*t + 99, 88*t + 103, 4),
            "14": (84*t + 96, 88*t + 102, 2),
            "15": (88*t + 104, 92*t + 105, 1),
            "16": (92*t + 106, 92*t + 112, 2),
            "17": (92*t + 113, 92*t + 114, 1),
        },
        f=["8", "13"],
        g=["1", "2", "3", "5", "7", "9", "10", "12", "14", "16"],
        h=["4", "6", "11", "15", "17"],
        small=[("Q3", t + 1), ("Q2", 3*t + 5), ("Q1", 4*t + 4)],
        layout=[(five_rows_z4(7), 8*t + 10)],
    )


def plan_57_c2(a: int, b: int, c: int) -> Plan:
    """c = 2 mod 4, c >= 6."""
    _require((a, b) == (5, 7) and c >= 6 and c % 4 == 2, "57_c2", a, b, c)
    t = (c - 6) // 4
    A = block_a2_set(4*t + 12, 24*t + 38, 10*t + 14, 2*t + 2)
    B = block_b_set(17, 116*t + 164, 24*t + 30)
    C = block_c2_set(92*t + 118, 116*t + 165, 60*t + 89)
    d = special_d(t)
    return Plan(
        "57_c2", a, b, 2 * c,
        families=[("X3", A.members), ("X2", B.members), ("Y5", C.members),
                  ("X5", [d, negate(d)])],
        leftovers={
            "1": (16, 18, 2),
            "2": (20, 24, 4),
            "3": (26, 8*t + 24, 2),
            "4": (40*t + 60, 40*t + 72, 4),
            "5": (56*t + 74, 56*t + 86, 4),
            "6": (52*t + 81, 56*t + 83, 2),
            "7": (56*t + 90, 60*t + 88, 2),
            "8": (60*t + 93, 64*t + 96, 1),
            "9": (64*t + 97, 64*t + 107, 2),
            "10": (64*t + 109, 72*t + 113, 4),
            "11": (68*t + 102, 80*t + 112, 2),
            "12": (72*t + 117, 80*t + 123, 2),
            "13": (80*t + 125, 88*t + 129, 4),
            "14": (84*t + 118, 92*t + 116, 2),
            "15": (88*t + 133, 92*t + 131, 2),
            "16": (92*t + 120, 92*t + 124, 4),
            "17": (92*t + 126, 92*t + 128, 2),
            "18": (92*t + 132, 92*t + 134, 2),
            "8.1": (60*t + 93, 60*t + 94, 1),
            "8.2": (60*t + 95, 60*t + 96, 1),
            "8.3": (60*t + 97, 64*t + 96, 1),
        },
        splits={"8": ["8.1", "8.2", "8.3"]},
        corrections=[("W2", "8.1"), ("W2", "8.2")],
        f=["2", "4", "5", "10", "13", "16"],
        g=["1", "3", "6", "7", "9", "11", "12", "14", "15", "17", "18"],
        h=["8.3"],
        small=[("Q3", t + 4), ("Q2", 6*t + 6), ("Q1", t)],
        layout=[(five_rows_z4(7), 8*t + 8), (tall_y5_w2(5, 7), 2), (five_seven_x5(), 2)],
    )


def plan_57_c3(a: int, b: int, c: int) -> Plan:
    """c = 3 mod 4, c >= 7."""
    _require((a, b) == (5, 7) and c >= 7 and c % 4 == 3, "57_c3", a, b, c)
    t = (c - 7) // 4
    A = block_a2_set(4*t + 9, 24*t + 42, 10*t + 17, 2*t + 3)
    B = block_b_set(9, 116*t + 199, 24*t + 38)
    C = block_c_set(92*t + 148, 116*t + 200, 92*t + 158)
    return Plan(
        "57_c3", a, b, 2 * c,
        families=[("X3", A.members), ("X2", B.members), ("Y5", C.members)],
        leftovers={
            "1": (12, 8*t + 18, 2),
            "2": (40*t + 68, 40*t + 72, 4),
            "3": (52*t + 91, 56*t + 93, 2),
            "4": (56*t + 94, 56*t + 95, 1),
            "5": (56*t + 98, 60*t + 100, 2),
            "6": (60*t + 102, 64*t + 111, 1),
            "7": (64*t + 113, 64*t + 115, 2),
            "8": (64*t + 119, 72*t + 123, 4),
            "9": (68*t + 118, 72*t + 124, 2),
            "10": (72*t + 126, 80*t + 131, 1),
            "11": (80*t + 132, 80*t + 135, 1),
            "12": (80*t + 143, 88*t + 147, 4),
            "13": (80*t + 137, 80*t + 139, 2),
            "14": (84*t + 142, 92*t + 144, 2),
            "15": (88*t + 151, 92*t + 149, 2),
            "16": (92*t + 146, 92*t + 150, 4),
            "17": (92*t + 151, 92*t + 153, 2),
            "18": (92*t + 155, 92*t + 156, 1),
        },
        corrections=[("W2", "4"), ("W2", "18")],
        f=["2", "8", "12", "16"],
        g=["1", "3", "5", "7", "9", "13", "14", "15", "17"],
        h=["6", "10", "11"],
        small=[("Q3", t + 2), ("Q2", 4*t + 5), ("Q1", 3*t + 5)],
        layout=[(five_rows_z4(7), 8*t + 12), (tall_y5_w2(5, 7), 2)],
    )
