"""Plans for SMAS(a, b; 2c) with a, b odd, both at least 5, not (5,5).

Each function takes ``(a, b, c)`` in its own orientation and returns a
:class:`~.engine.Plan`. Leftover sets are named ``"k"`` or ``"k.j"`` for
the ``j``-th piece of leftover ``k``.
"""

from __future__ import annotations

from ..blocks import block_a_set, block_b_set, block_c_set
from ..errors import ParameterError
from .engine import Plan
from .layouts import (
    five_rows_z4,
    five_rows_z6,
    tall_y5_w2,
    tall_y5_w4,
    tall_z4,
    tall_z6,
)


def _require(ok: bool, what: str, a: int, b: int, c: int) -> None:
    if not ok:
        raise ParameterError(f"{what} does not cover (a,b,c) = {(a, b, c)}")


# ------------------------------------------------------------ c = 0 mod 4


def plan_5_b1_c0(a: int, b: int, c: int) -> Plan:
    """5 x b, b = 1 mod 4, b >= 9, c = 0 mod 4."""
    _require(a == 5 and b >= 9 and b % 4 == 1 and c >= 4 and c % 4 == 0, "5_b1_c0", a, b, c)
    t, w = (c - 4) // 4, (b - 9) // 4
    W = 32 * w * (t + 1)
    X = 48 * w * (t + 1)
    A = block_a_set(4*t + 4, 16*w*(t + 1) + 32*t + 32, 4*t + 4)
    B = block_b_set(1, 64*w*(t + 1) + 148*t + 148, 16*w*(t + 1) + 32*t + 32)
    return Plan(
        "5_b1_c0", a, b, 2 * c,
        families=[("X3", A.members), ("X2", B.members)],
        leftovers={
            "1": (2, 8*t + 8, 2),
            "2": (40*t + 42, 56*t + 54, 4),
            "3": (56*t + 58, W + 112*t + 112, 2),
            "4": (W + 80*t + 81, W + 112*t + 109, 4),
            "5": (W + 112*t + 113, X + 116*t + 116, 1),
            "1.1": (2, 8*t + 6, 4),
            "1.2": (4, 8*t + 8, 4),
            "5.1": (W + 112*t + 113, X + 116*t + 115, 2),
            "5.2": (W + 112*t + 114, X + 116*t + 116, 2),
        },
        splits={"1": ["1.1", "1.2"], "5": ["5.1", "5.2"]},
        f=["1.1", "1.2", "2", "4"],
        g=["3", "5.1", "5.2"],
        small=[("R2", 8*t + 8), ("Q2", 8*w*(t + 1))],
        layout=[(five_rows_z6(b), 8*t + 8)],
    )


def plan_5_b3_c0(a: int, b: int, c: int) -> Plan:
    """5 x b, b = 3 mod 4, b >= 11, c = 0 mod 4."""
    _require(a == 5 and b >= 11 and b % 4 == 3 and c >= 4 and c % 4 == 0, "5_b3_c0", a, b, c)
    t, w = (c - 4) // 4, (b - 11) // 4
    W = 32 * w * (t + 1)
    A = block_a_set(4*t + 4, 16*w*(t + 1) + 40*t + 40, 4*t + 4)
    B = block_b_set(1, 64*w*(t + 1) + 180*t + 180, 16*w*(t + 1) + 40*t + 40)
    return Plan(
        "5_b3_c0", a, b, 2 * c,
        families=[("X3", A.members), ("X2", B.members)],
        leftovers={
            "1": (2, 8*t + 8, 2),
            "2": (40*t + 42, 56*t + 54, 4),
            "3": (56*t + 58, W + 128*t + 128, 2),
            "4": (W + 96*t + 97, W + 128*t + 125, 4),
            "5": (W + 128*t + 129, 48*w*(t + 1) + 140*t + 140, 1),
        },
        f=["2", "4"],
        g=["1", "3"],
        h=["5"],
        small=[("Q3", 3*t + 3), ("Q2", 2*(2*w + 5)*(t + 1)), ("Q1", (4*w + 3)*(t + 1))],
        layout=[(five_rows_z4(b), 8*t + 8)],
    )


# ------------------------------------------------------------ c = 3 mod 4


def plan_5_b1_c3(a: int, b: int, c: int) -> Plan:
    """5 x b, b = 1 mod 4, b >= 9, c = 3 mod 4."""
    _require(a == 5 and b >= 9 and b % 4 == 1 and c >= 3 and c % 4 == 3, "5_b1_c3", a, b, c)
    t, w = (c - 3) // 4, (b - 9) // 4
    K = 4*t + 3
    S = 8 * w * K
    A = block_a_set(4*t + 2, 4*(w + 2)*K, 4*t + 3)
    B = block_b_set(1, 4*(16*w + 37)*t + 48*w + 111, 4*(w + 2)*K)
    return Plan(
        "5_b1_c3", a, b, 2 * c,
        families=[("X3", A.members), ("X2", B.members)],
        leftovers={
            "1": (2, 8*t + 4, 2),
            "2": (40*t + 32, 56*t + 36, 4),
            "3": (56*t + 40, S + 112*t + 78, 2),
            "4": (S + 80*t + 63, S + 112*t + 75, 4),
            "5": (S + 112*t + 79, S + 112*t + 80, 1),
            "6": (S + 112*t + 82, 12*w*K + 116*t + 87, 1),
            "1.1": (2, 8*t - 2, 4),
            "1.2": (4, 8*t, 4),
            "1.3": (8*t + 2, 8*t + 4, 2),
            "6.1": (S + 112*t + 82, S + 112*t + 86, 4),
            "6.2": (S + 112*t + 83, S + 112*t + 87, 4),
            "6.3": (S + 112*t + 84, S + 112*t + 85, 1),
            "6.4": (S + 112*t + 88, 12*w*K + 116*t + 86, 2),
            "6.5": (S + 112*t + 89, 12*w*K + 116*t + 87, 2),
        },
        splits={"1": ["1.1", "1.2", "1.3"], "6": ["6.1", "6.2", "6.3", "6.4", "6.5"]},
        f=["1.1", "1.2", "2", "4", "6.1", "6.2"],
        g=["1.3", "3", "6.4", "6.5"],
        h=["5", "6.3"],
        small=[("R2", 8*t + 5), ("R1", 1), ("Q2", 2*w*K)],
        layout=[(five_rows_z6(b), 8*t + 6)],
    )


def plan_a1_b3_c3(a: int, b: int, c: int) -> Plan:
    """a x b, a = 1 mod 4, a >= 5, b = 3 mod 4, b >= 11, c = 3 mod 4."""
    _require(a >= 5 and a % 4 == 1 and b >= 11 and b % 4 == 3 and c >= 3 and c % 4 == 3,
             "a1_b3_c3", a, b, c)
    t, v, w = (c - 3) // 4, (a - 5) // 4, (b - 11) // 4
    K = 4*t + 3
    S = 8 * (v + w) * K
    A = block_a_set(4*t + 5, 4*(v + w)*K + 40*t + 30, 4*t + 2)
    B = block_b_set(9, 8*(2*v*w + 5*v + 2*w)*K + 180*t + 131, 4*(v + w)*K + 40*t + 26)
    C = block_c_set(S + 140*t + 92, 8*(2*v*w + 5*v + 2*w)*K + 180*t + 132, S + 140*t + 102)
    return Plan(
        "a1_b3_c3", a, b, 2 * c,
        families=[("X3", A.members), ("X2", B.members), ("Y5", C.members)],
        leftovers={
            "1": (12, 8*t + 10, 2),
            "2": (40*t + 28, 40*t + 34, 2),
            "3": (40*t + 38, 56*t + 42, 4),
            "4": (56*t + 44, S + 96*t + 66, 2),
            "5": (S + 96*t + 68, S + 96*t + 75, 1),
            "6": (S + 96*t + 76, S + 128*t + 90, 2),
            "7": (S + 96*t + 79, S + 128*t + 91, 4),
            "8": (S + 128*t + 92, S + 140*t + 91, 1),
            "9": (S + 140*t + 95, S + 140*t + 97, 2),
            "10": (S + 140*t + 106, 4*(4*v*w + 9*v + 3*w)*K + 140*t + 105, 1),
            "11": (S + 140*t + 93, S + 140*t + 94, 1),
            "12": (S + 140*t + 99, S + 140*t + 100, 1),
            "5.1": (S + 96*t + 68, S + 96*t + 72, 4),
            "5.2": (S + 96*t + 69, S + 96*t + 70, 1),
            "5.3": (S + 96*t + 71, S + 96*t + 73, 2),
            "5.4": (S + 96*t + 74, S + 96*t + 75, 1),
        },
        splits={"5": ["5.1", "5.2", "5.3", "5.4"]},
        corrections=[("W2", "11"), ("W2", "12")],
        f=["3", "5.1", "7"],
        g=["1", "2", "4", "5.3", "6", "9"],
        h=["5.2", "5.4", "8", "10"],
        small=[("Q3", 3*t + 2), ("Q2", (v + w)*K + 10*t + 7),
               ("Q1", (4*v*w + 7*v + w)*K + 3*t + 1)],
        layout=[(tall_z4(a, b), 8*t + 4), (tall_y5_w2(a, b), 2)],
    )


def plan_a1_7_c3(a: int, b: int, c: int) -> Plan:
    """a x 7, a = 1 mod 4, a >= 9, c = 3 mod 4."""
    _require(a >= 9 and a % 4 == 1 and b == 7 and c >= 3 and c % 4 == 3, "a1_7_c3", a, b, c)
    t, v = (c - 3) // 4, (a - 9) // 4
    K = 4*t + 3
    S = 8 * v * K
    A = block_a_set(4*t + 5, 4*v*K + 40*t + 30, 4*t + 2)
    B = block_b_set(9, 24*v*K + 212*t + 155, 4*v*K + 40*t + 26)
    C = block_c_set(S + 128*t + 92, 24*v*K + 212*t + 156, S + 128*t + 102)
    return Plan(
        "a1_7_c3", a, b, 2 * c,
        families=[("X3", A.members), ("X2", B.members), ("Y5", C.members)],
        leftovers={
            "1": (12, 8*t + 10, 2),
            "2": (40*t + 28, 40*t + 34, 2),
            "3": (40*t + 38, 56*t + 42, 4),
            "4": (56*t + 44, S + 96*t + 66, 2),
            "5": (S + 96*t + 68, S + 96*t + 75, 1),
            "6": (S + 96*t + 76, S + 128*t + 90, 2),
            "7": (S + 96*t + 79, S + 128*t + 91, 4),
            "8": (S + 128*t + 106, S + 172*t + 129, 1),
            "9": (S + 128*t + 93, S + 128*t + 94, 1),
            "10": (S + 128*t + 95, S + 128*t + 97, 2),
            "11": (S + 128*t + 99, S + 128*t + 100, 1),
            "12": (S + 172*t + 130, 20*v*K + 172*t + 129, 1),
            "5.1": (S + 96*t + 68, S + 96*t + 72, 4),
            "5.2": (S + 96*t + 69, S + 96*t + 70, 1),
            "5.3": (S + 96*t + 71, S + 96*t + 73, 2),
            "5.4": (S + 96*t + 74, S + 96*t + 75, 1),
        },
        splits={"5": ["5.1", "5.2", "5.3", "5.4"]},
        corrections=[("W2", "9"), ("W2", "11")],
        f=["3", "5.1", "7"],
        g=["1", "2", "4", "5.3", "6", "10"],
        h=["5.2", "5.4", "8", "12"],
        small=[("Q3", 3*t + 2), ("Q2", v*K + 10*t + 7), ("Q1", 3*v*K + 11*t + 7)],
        layout=[(tall_z4(a, b), 8*t + 4), (tall_y5_w2(a, b), 2)],
    )


# ------------------------------------------------------------ c = 1 mod 4


def plan_a1_b1_c1_base(a: int, b: int, c: int) -> Plan:
    """a x b, a = b = 1 mod 4, a >= 5, b >= 9, c = 1."""
    _require(a >= 5 and a % 4 == 1 and b >= 9 and b % 4 == 1 and c == 1, "a1_b1_c1_base", a, b, c)
    v, w = (a - 5) // 4, (b - 9) // 4
    P = 8 * (v + w)
    B = block_b_set(9, 16*v*w + 32*v + 16*w + 33, 4*(v + w + 1))
    C = block_c_set(P + 16, 16*v*w + 32*v + 16*w + 34, P + 26)
    return Plan(
        "a1_b1_c1_base", a, b, 2 * c,
        families=[("X2", B.members), ("Y5", C.members)],
        leftovers={
            "1": (12, P + 14, 2),
            "2": (P + 17, P + 18, 1),
            "3": (P + 19, P + 21, 2),
            "4": (P + 23, P + 24, 1),
            "5": (P + 30, 16*v*(w + 1) + 12*(v + w) + 29, 1),
            "1.1": (12, 14, 2),
            "1.2": (16, P + 14, 2),
        },
        splits={"1": ["1.1", "1.2"]},
        corrections=[("W4", "2", "1.1"), ("W4", "4", "3")],
        g=["1.2"],
        h=["5"],
        small=[("Q2", v + w), ("Q1", 4*v*(w + 1) + v + w)],
        layout=[(tall_y5_w4(a, b), 2)],
    )


def plan_a1_b1_c1(a: int, b: int, c: int) -> Plan:
    """a x b, a = b = 1 mod 4, a >= 5, b >= 9, c = 1 mod 4, c >= 5."""
    _require(a >= 5 and a % 4 == 1 and b >= 9 and b % 4 == 1 and c >= 5 and c % 4 == 1,
             "a1_b1_c1", a, b, c)
    t, v, w = (c - 5) // 4, (a - 5) // 4, (b - 9) // 4
    K = 4*t + 5
    S = 8 * (v + w) * K
    Q = (16*v*(w + 1) + 16*(v + w)) * K
    A = block_a_set(4*t + 5, 4*(v + w)*K + 32*t + 40, 4*t + 4)
    B = block_b_set(9, Q + 148*t + 181, 4*(v + w)*K + 32*t + 36)
    C = block_c_set(S + 112*t + 130, Q + 148*t + 182, S + 112*t + 140)
    return Plan(
        "a1_b1_c1", a, b, 2 * c,
        families=[("X3", A.members), ("X2", B.members), ("Y5", C.members)],
        leftovers={
            "1": (12, 8*t + 10, 2),
            "2": (40*t + 44, 40*t + 46, 2),
            "3": (40*t + 50, 56*t + 62, 4),
            "4": (56*t + 64, S + 80*t + 94, 2),
            "5": (S + 80*t + 96, S + 80*t + 97, 1),
            "6": (S + 80*t + 98, S + 112*t + 128, 2),
            "7": (S + 80*t + 99, S + 112*t + 127, 4),
            "8": (S + 112*t + 131, S + 112*t + 135, 4),
            "9": (S + 112*t + 132, S + 112*t + 133, 1),
            "10": (S + 112*t + 137, S + 112*t + 138, 1),
            "11": (S + 112*t + 144, S + 116*t + 145, 1),
            "12": (S + 116*t + 146, (16*v*(w + 1) + 12*(v + w))*K + 116*t + 145, 1),
            "1.1": (12, 8*t + 8, 4),
            "1.2": (14, 8*t + 10, 4),
            "6.1": (S + 80*t + 98, S + 80*t + 100, 2),
            "6.2": (S + 80*t + 102, S + 80*t + 104, 2),
            "6.3": (S + 80*t + 106, S + 112*t + 128, 2),
            "11.1": (S + 112*t + 144, S + 116*t + 142, 2),
            "11.2": (S + 112*t + 145, S + 116*t + 143, 2),
            "11.3": (S + 116*t + 144, S + 116*t + 145, 1),
        },
        splits={"1": ["1.1", "1.2"], "6": ["6.1", "6.2", "6.3"], "11": ["11.1", "11.2", "11.3"]},
        corrections=[("W4", "5", "6.1"), ("W4", "9", "6.2")],
        f=["1.1", "1.2", "3", "7", "8"],
        g=["2", "4", "6.3", "11.1", "11.2"],
        h=["10", "11.3", "12"],
        small=[("R2", 8*t + 7), ("R1", 1), ("Q2", (v + w)*K),
               ("Q1", (4*v*(w + 1) + v + w)*K)],
        layout=[(tall_z6(a, b), 8*t + 8), (tall_y5_w4(a, b), 2)],
    )


def plan_5_b3_c1(a: int, b: int, c: int) -> Plan:
    """5 x b, b = 3 mod 4, b >= 11, c = 1 mod 4."""
    _require(a == 5 and b >= 11 and b % 4 == 3 and c >= 1 and c % 4 == 1, "5_b3_c1", a, b, c)
    t, w = (c - 1) // 4, (b - 11) // 4
    K = 4*t + 1
    S = 8 * w * K
    A = block_a_set(4*t, 2*(2*w + 5)*K, 4*t + 1)
    B = block_b_set(1, (16*w + 45)*K, 2*(2*w + 5)*K)
    return Plan(
        "5_b3_c1", a, b, 2 * c,
        families=[("X3", A.members), ("X2", B.members)],
        leftovers={
            "1": (2, 8*t, 2),
            "2": (40*t + 12, 56*t + 8, 4),
            "3": (56*t + 12, S + 128*t + 30, 2),
            "4": (S + 96*t + 27, S + 128*t + 31, 4),
            "5": (S + 128*t + 32, 12*w*K + 140*t + 35, 1),
            "3.1": (56*t + 12, S + 128*t + 26, 2),
            "3.2": (S + 128*t + 28, S + 128*t + 30, 2),
            "4.1": (S + 96*t + 27, S + 128*t + 23, 4),
            "4.2": (S + 128*t + 27, S + 128*t + 31, 4),
        },
        splits={"3": ["3.1", "3.2"], "4": ["4.1", "4.2"]},
        f=["2", "4.1"],
        g=["1", "3.1"],
        h=["3.2", "4.2", "5"],
        small=[("Q3", 3*t), ("Q2", (w + 2)*K + 2*t), ("Q1", w*K + 3*t + 2)],
        layout=[(five_rows_z4(b), 8*t + 2)],
    )


def plan_a3_b3_c1_base(a: int, b: int, c: int) -> Plan:
    """a x b, a = b = 3 mod 4, a, b >= 7, c = 1."""
    _require(a >= 7 and a % 4 == 3 and b >= 7 and b % 4 == 3 and c == 1, "a3_b3_c1_base", a, b, c)
    v, w = (a - 7) // 4, (b - 7) // 4
    P = 8 * (v + w)
    B = block_b_set(9, 16*v*w + 24*(v + w) + 37, 4*(v + w + 1))
    C = block_c_set(P + 16, 16*v*w + 24*(v + w) + 38, P + 26)
    return Plan(
        "a3_b3_c1_base", a, b, 2 * c,
        families=[("X2", B.members), ("Y5", C.members)],
        leftovers={
            "1": (12, P + 14, 2),
            "2": (P + 17, P + 18, 1),
            "3": (P + 19, P + 21, 2),
            "4": (P + 23, P + 24, 1),
            "5": (P + 30, 16*v*w + 20*(v + w) + 33, 1),
        },
        corrections=[("W2", "2"), ("W2", "4")],
        g=["1", "3"],
        h=["5"],
        small=[("Q2", v + w + 1), ("Q1", 4*v*w + 3*(v + w) + 1)],
        layout=[(tall_y5_w2(a, b), 2)],
    )


def plan_a3_b3_c1(a: int, b: int, c: int) -> Plan:
    """a x b, a = b = 3 mod 4, a, b >= 7, c = 1 mod 4, c >= 5."""
    _require(a >= 7 and a % 4 == 3 and b >= 7 and b % 4 == 3 and c >= 5 and c % 4 == 1,
             "a3_b3_c1", a, b, c)
    t, v, w = (c - 5) // 4, (a - 7) // 4, (b - 7) // 4
    K = 4*t + 5
    S = 8 * (v + w) * K
    Q = (16*v*w + 24*(v + w)) * K
    A = block_a_set(4*t + 5, 4*(v + w)*K + 32*t + 40, 4*t + 4)
    B = block_b_set(9, Q + 164*t + 201, 4*(v + w)*K + 32*t + 36)
    C = block_c_set(S + 112*t + 132, Q + 164*t + 202, S + 112*t + 142)
    return Plan(
        "a3_b3_c1", a, b, 2 * c,
        families=[("X3", A.members), ("X2", B.members), ("Y5", C.members)],
        leftovers={
            "1": (12, 8*t + 10, 2),
            "2": (40*t + 44, 40*t + 46, 2),
            "3": (40*t + 50, 56*t + 62, 4),
            "4": (56*t + 64, S + 80*t + 94, 2),
            "5": (S + 80*t + 96, S + 80*t + 99, 1),
            "6": (S + 80*t + 100, S + 112*t + 130, 2),
            "7": (S + 80*t + 103, S + 112*t + 131, 4),
            "8": (S + 112*t + 133, S + 112*t + 134, 1),
            "9": (S + 112*t + 135, S + 112*t + 137, 2),
            "10": (S + 112*t + 139, S + 112*t + 140, 1),
            "11": (S + 112*t + 146, S + 132*t + 165, 1),
            "12": (S + 132*t + 166, (16*v*w + 20*(v + w))*K + 132*t + 165, 1),
        },
        corrections=[("W2", "8"), ("W2", "10")],
        f=["3", "7"],
        g=["1", "2", "4", "6", "9"],
        h=["5", "11", "12"],
        small=[("Q3", 3*t + 3), ("Q2", (v + w)*K + 8*t + 9),
               ("Q1", (4*v*w + 3*(v + w))*K + 5*t + 6)],
        layout=[(tall_z4(a, b), 8*t + 8), (tall_y5_w2(a, b), 2)],
    )


# ------------------------------------------------------------ c = 2 mod 4


def plan_a1_b1_c2(a: int, b: int, c: int) -> Plan:
    """a x b, a = b = 1 mod 4, a >= 5, b >= 9, c = 2 mod 4."""
    _require(a >= 5 and a % 4 == 1 and b >= 9 and b % 4 == 1 and c >= 2 and c % 4 == 2,
             "a1_b1_c2", a, b, c)
    t, v, w = (c - 2) // 4, (a - 5) // 4, (b - 9) // 4
    J = 2*t + 1
    D = 16 * (v + w) * J
    Q = (32*v*(w + 1) + 32*(v + w)) * J
    A = block_a_set(4*t + 5, 8*(v + w)*J + 32*t + 16, 4*t + 1)
    B = block_b_set(9, Q + 148*t + 70, 8*(v + w)*J + 32*t + 12)
    C = block_c_set(D + 80*t + 37, Q + 148*t + 71, D + 116*t + 55)
    return Plan(
        "a1_b1_c2", a, b, 2 * c,
        families=[("X3", A.members), ("X2", B.members), ("Y5", C.members)],
        leftovers={
            "1": (D + 80*t + 38, D + 80*t + 39, 1),
            "2": (D + 80*t + 44, D + 80*t + 45, 1),
            "3": (40*t + 20, 40*t + 26, 2),
            "4": (12, 8*t + 10, 2),
            "5": (40*t + 28, 56*t + 32, 4),
            "6": (56*t + 34, D + 80*t + 36, 2),
            "7": (D + 80*t + 40, D + 80*t + 42, 2),
            "8": (D + 80*t + 48, D + 80*t + 49, 1),
            "9": (D + 80*t + 53, D + 112*t + 49, 4),
            "10": (D + 80*t + 50, D + 112*t + 52, 2),
            "11": (D + 112*t + 53, D + 116*t + 54, 1),
            "12": (D + 116*t + 59, (32*v*(w + 1) + 24*(v + w))*J + 116*t + 58, 1),
            "3.1": (40*t + 20, 40*t + 22, 2),
            "3.2": (40*t + 24, 40*t + 26, 2),
            "4.1": (12, 8*t + 8, 4),
            "4.2": (14, 8*t + 10, 4),
            "11.1": (D + 112*t + 53, D + 116*t + 51, 2),
            "11.2": (D + 112*t + 54, D + 116*t + 52, 2),
            "11.3": (D + 116*t + 53, D + 116*t + 54, 1),
        },
        splits={"3": ["3.1", "3.2"], "4": ["4.1", "4.2"], "11": ["11.1", "11.2", "11.3"]},
        corrections=[("W4", "1", "3.1"), ("W4", "2", "3.2")],
        f=["4.1", "4.2", "5", "9"],
        g=["6", "7", "10", "11.1", "11.2"],
        h=["8", "11.3", "12"],
        small=[("R2", 8*t + 1), ("R1", 1), ("Q2", 2*(v + w)*J),
               ("Q1", (8*v*(w + 1) + 2*(v + w))*J)],
        layout=[(tall_z6(a, b), 8*t + 2), (tall_y5_w4(a, b), 2)],
    )


def plan_a1_b3_c2(a: int, b: int, c: int) -> Plan:
    """a x b, a = 1 mod 4, a >= 5, b = 3 mod 4, b >= 11, c = 2 mod 4."""
    _require(a >= 5 and a % 4 == 1 and b >= 11 and b % 4 == 3 and c >= 2 and c % 4 == 2,
             "a1_b3_c2", a, b, c)
    t, v, w = (c - 2) // 4, (a - 5) // 4, (b - 11) // 4
    J = 2*t + 1
    D = 16 * (v + w) * J
    Q = (16*v*(2*w + 3) + 32*(v + w)) * J
    A = block_a_set(4*t + 5, 8*(v + w)*J + 40*t + 20, 4*t + 1)
    B = block_b_set(9, Q + 180*t + 86, 8*(v + w)*J + 40*t + 16)
    C = block_c_set(D + 96*t + 42, Q + 180*t + 87, D + 128*t + 61)
    return Plan(
        "a1_b3_c2", a, b, 2 * c,
        families=[("X3", A.members), ("X2", B.members), ("Y5", C.members)],
        leftovers={
            "1": (12, 8*t + 10, 2),
            "2": (40*t + 20, 40*t + 26, 2),
            "3": (40*t + 28, 56*t + 32, 4),
            "4": (56*t + 34, D + 96*t + 40, 2),
            "5": (D + 96*t + 44, D + 96*t + 45, 1),
            "6": (D + 96*t + 47, D + 96*t + 49, 2),
            "7": (D + 96*t + 50, D + 96*t + 52, 2),
            "8": (D + 96*t + 53, D + 128*t + 57, 4),
            "9": (D + 96*t + 54, D + 128*t + 60, 2),
            "10": (D + 128*t + 65, D + 140*t + 70, 1),
            "11": (D + 140*t + 71, (16*v*(2*w + 3) + 24*(v + w))*J + 140*t + 70, 1),
            "10.1": (D + 128*t + 65, D + 128*t + 66, 1),
            "10.2": (D + 128*t + 67, D + 140*t + 70, 1),
        },
        splits={"10": ["10.1", "10.2"]},
        corrections=[("W2", "5"), ("W2", "10.1")],
        f=["3", "8"],
        g=["1", "2", "4", "6", "7", "9"],
        h=["10.2", "11"],
        small=[("Q3", 3*t + 1), ("Q2", 2*(v + w)*J + 10*t + 4),
               ("Q1", (4*v*(2*w + 3) + 2*(v + w))*J + 3*t + 1)],
        layout=[(tall_z4(a, b), 8*t + 2), (tall_y5_w2(a, b), 2)],
    )


def plan_a1_7_c2(a: int, b: int, c: int) -> Plan:
    """a x 7, a = 1 mod 4, a >= 9, c = 2 mod 4."""
    _require(a >= 9 and a % 4 == 1 and b == 7 and c >= 2 and c % 4 == 2, "a1_7_c2", a, b, c)
    t, v = (c - 2) // 4, (a - 9) // 4
    J = 2*t + 1
    D = 16 * v * J
    A = block_a_set(4*t + 5, 8*v*J + 40*t + 20, 4*t + 1)
    B = block_b_set(9, 48*v*J + 212*t + 102, 8*v*J + 40*t + 16)
    C = block_c_set(D + 96*t + 42, 48*v*J + 212*t + 103, D + 128*t + 61)
    return Plan(
        "a1_7_c2", a, b, 2 * c,
        families=[("X3", A.members), ("X2", B.members), ("Y5", C.members)],
        leftovers={
            "1": (12, 8*t + 10, 2),
            "2": (40*t + 20, 40*t + 26, 2),
            "3": (40*t + 28, 56*t + 32, 4),
            "4": (56*t + 34, D + 96*t + 40, 2),
            "5": (D + 96*t + 44, D + 96*t + 45, 1),
            "6": (D + 96*t + 47, D + 96*t + 49, 2),
            "7": (D + 96*t + 50, D + 96*t + 52, 2),
            "8": (D + 96*t + 53, D + 128*t + 57, 4),
            "9": (D + 96*t + 54, D + 128*t + 60, 2),
            "10": (D + 128*t + 65, D + 172*t + 86, 1),
            "11": (D + 172*t + 87, 40*v*J + 172*t + 86, 1),
            "10.1": (D + 128*t + 65, D + 128*t + 66, 1),
            "10.2": (D + 128*t + 67, D + 172*t + 86, 1),
        },
        splits={"10": ["10.1", "10.2"]},
        corrections=[("W2", "5"), ("W2", "10.1")],
        f=["3", "8"],
        g=["1", "2", "4", "6", "7", "9"],
        h=["10.2", "11"],
        small=[("Q3", 3*t + 1), ("Q2", 2*v*J + 10*t + 4), ("Q1", 6*v*J + 11*t + 5)],
        layout=[(tall_z4(a, b), 8*t + 2), (tall_y5_w2(a, b), 2)],
    )


def plan_a3_b3_c2(a: int, b: int, c: int) -> Plan:
    """a x b, a = b = 3 mod 4, a, b >= 7, c = 2 mod 4."""
    _require(a >= 7 and a % 4 == 3 and b >= 7 and b % 4 == 3 and c >= 2 and c % 4 == 2,
             "a3_b3_c2", a, b, c)
    t, v, w = (c - 2) // 4, (a - 7) // 4, (b - 7) // 4
    J = 2*t + 1
    D = 16 * (v + w) * J
    Q = (32*v*w + 48*(v + w)) * J
    A = block_a_set(4*t + 5, 8*(v + w)*J + 32*t + 16, 4*t + 1)
    B = block_b_set(9, Q + 164*t + 78, 8*(v + w)*J + 32*t + 12)
    C = block_c_set(D + 80*t + 34, Q + 164*t + 79, D + 112*t + 55)
    return Plan(
        "a3_b3_c2", a, b, 2 * c,
        families=[("X3", A.members), ("X2", B.members), ("Y5", C.members)],
        leftovers={
            "1": (D + 80*t + 36, D + 80*t + 37, 1),
            "2": (D + 80*t + 45, D + 80*t + 46, 1),
            "3": (12, 8*t + 10, 2),
            "4": (40*t + 20, 40*t + 26, 2),
            "5": (40*t + 28, 56*t + 32, 4),
            "6": (56*t + 34, D + 80*t + 32, 2),
            "7": (D + 80*t + 39, D + 80*t + 41, 2),
            "8": (D + 80*t + 42, D + 80*t + 44, 2),
            "9": (D + 80*t + 48, D + 112*t + 54, 2),
            "10": (D + 80*t + 49, D + 112*t + 53, 4),
            "11": (D + 112*t + 59, D + 132*t + 66, 1),
            "12": (D + 132*t + 67, (32*v*w + 40*(v + w))*J + 132*t + 66, 1),
        },
        corrections=[("W2", "1"), ("W2", "2")],
        f=["5", "10"],
        g=["3", "4", "6", "7", "8", "9"],
        h=["11", "12"],
        small=[("Q3", 3*t + 1), ("Q2", 2*(v + w)*J + 8*t + 3),
               ("Q1", (8*v*w + 6*(v + w))*J + 5*t + 2)],
        layout=[(tall_z4(a, b), 8*t + 2), (tall_y5_w2(a, b), 2)],
    )
