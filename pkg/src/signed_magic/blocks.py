"""Parametric zero-sum blocks and block families.

Small blocks (``q_block``, ``r_block``, ``u_block``) are two-row blocks
built from 2-sets. Block families (``block_a_set`` and friends) are lists of
blocks together with the entry set they claim to use; each family checks
its own claim and sum signatures when it is built.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import (
    IntSet,
    PartialGrid,
    TwoSet,
    interval,
    negate,
    plus_minus,
    vconcat,
)
from .errors import IntegrityError, ParameterError
from .verify import verify_entry_set, verify_signature

_Q_EPS = {1: 1, 2: 2, 4: 4}


def _two_rows(top: Sequence[int]) -> PartialGrid:
    return PartialGrid(2, len(top), list(top) + [-x for x in top])


def _need(p: TwoSet, eps: int, what: str) -> None:
    if p.eps != eps:
        raise ParameterError(f"{what} must be a 2-set of type {eps}, got type {p.eps}")


def q_block(kind: int, p1: TwoSet, p2: TwoSet) -> PartialGrid:
    """2x4 zero-sum block from two 2-sets of type 1, 2 or 4 (kind 1, 2, 3)."""
    eps = {1: 1, 2: 2, 3: 4}.get(kind)
    if eps is None:
        raise ParameterError(f"q_block kind must be 1, 2 or 3, got {kind}")
    _need(p1, eps, "first pair")
    _need(p2, eps, "second pair")
    x1, x2 = p1.low, p2.low
    return _two_rows([x1, -(x1 + eps), -x2, x2 + eps])


def r_block(kind: int, lead: TwoSet, p1: TwoSet, p2: TwoSet) -> PartialGrid:
    """2x6 zero-sum block.

    Kind 1 takes a type-2 lead pair and two type-1 pairs; kind 2 takes a
    type-4 lead pair and two type-2 pairs.
    """
    if kind not in (1, 2):
        raise ParameterError(f"r_block kind must be 1 or 2, got {kind}")
    big, small = (2, 1) if kind == 1 else (4, 2)
    _need(lead, big, "lead pair")
    _need(p1, small, "second pair")
    _need(p2, small, "third pair")
    y, x1, x2 = lead.low, p1.low, p2.low
    return _two_rows([y, -(y + big), -x1, x1 + small, -x2, x2 + small])


def u_block(kind: int, x: TwoSet, y: Optional[TwoSet] = None) -> PartialGrid:
    """Correction block with row sums (-1, +1) and zero column sums.

    Kind 1 is 2x4 and uses a type-1 pair ``x`` and a type-2 pair ``y``;
    kind 2 is 2x2 and uses only ``x``.
    """
    _need(x, 1, "x")
    if kind == 1:
        if y is None:
            raise ParameterError("u_block kind 1 needs a type-2 pair")
        _need(y, 2, "y")
        return _two_rows([y.low, -(y.low + 2), -x.low, x.low + 1])
    if kind == 2:
        if y is not None:
            raise ParameterError("u_block kind 2 takes a single pair")
        return _two_rows([x.low, -(x.low + 1)])
    raise ParameterError(f"u_block kind must be 1 or 2, got {kind}")


@dataclass(frozen=True)
class BlockSet:
    """A family of equally shaped blocks and the entries it claims to use.

    ``row_sums`` and ``col_sums`` are the common sum signature of every
    member. Construction fails if the members do not use exactly the
    claimed entries or if a member has the wrong signature.
    """

    members: tuple[PartialGrid, ...]
    claimed: IntSet
    row_sums: tuple[int, ...]
    col_sums: tuple[int, ...]
    name: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", tuple(self.members))
        rep = verify_entry_set(
            [v for g in self.members for v in g.entries()], self.claimed
        )
        if not rep.passed:
            raise IntegrityError(f"{self.name}: entries differ from claim\n{rep.summary()}")
        for i, g in enumerate(self.members):
            sig = verify_signature(g, self.row_sums, self.col_sums, f"{self.name}[{i}]")
            if not sig.passed:
                raise IntegrityError(sig.summary())

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def entries(self) -> list[int]:
        return [v for g in self.members for v in g.entries()]


def _pm(*parts) -> IntSet:
    return plus_minus(IntSet.union(*parts))


def _zero(n: int) -> tuple[int, ...]:
    return (0,) * n


def _signed(blocks: list[PartialGrid]) -> list[PartialGrid]:
    return blocks + [negate(g) for g in blocks]


def block_a_set(alpha: int, beta: int, u: int) -> BlockSet:
    """``2u`` zero-sum 3x3 blocks; requires ``0 <= u <= alpha + 1``."""
    if min(alpha, beta, u) < 0 or u > alpha + 1:
        raise ParameterError(f"block A needs nonnegative ints with u <= alpha+1, got {(alpha, beta, u)}")
    al, be = alpha, beta
    base = []
    for i in range(u):
        base.append(PartialGrid.from_rows([
            [4*al + 6*u + 4 + 4*i, -(2*al + 2*u + 2 + 2*i), -(2*al + 4*u + 2 + 2*i)],
            [-(2*al + 2 + 2*i), 2*al + 2*be + 2*u + 3 + 4*i, -(2*be + 2*u + 1 + 2*i)],
            [-(2*al + 6*u + 2 + 2*i), -(2*be + 1 + 2*i), 2*al + 2*be + 6*u + 3 + 4*i],
        ]))
    claimed = _pm(
        interval(2*al + 2, 2*al + 8*u, 2),
        interval(4*al + 6*u + 4, 4*al + 10*u, 4),
        interval(2*be + 1, 2*be + 4*u - 1, 2),
        interval(2*al + 2*be + 2*u + 3, 2*al + 2*be + 10*u - 1, 4),
    ) if u else IntSet()
    return BlockSet(tuple(_signed(base)), claimed, _zero(3), _zero(3), "A")


def block_b_set(alpha: int, beta: int, u: int) -> BlockSet:
    """``u`` zero-sum 2x3 blocks; requires ``beta >= alpha + 3u - 2``."""
    if min(alpha, beta, u) < 1 or beta < alpha + 3*u - 2:
        raise ParameterError(f"block B needs positive ints with beta >= alpha+3u-2, got {(alpha, beta, u)}")
    members = [
        _two_rows([alpha + 2*j, -(alpha + beta + j), beta - j]) for j in range(u)
    ]
    claimed = _pm(
        interval(alpha, alpha + 2*u - 2, 2),
        interval(beta - u + 1, beta),
        interval(alpha + beta, alpha + beta + u - 1),
    )
    return BlockSet(tuple(members), claimed, _zero(2), _zero(3), "B")


def block_c_set(alpha: int, beta: int, gamma: int) -> BlockSet:
    """Two 5x5 blocks with row sums (0,0,0,1,-1).

    Requires ``beta > gamma + 3 > alpha + 12 > 22``.
    """
    if not beta > gamma + 3 > alpha + 12 > 22:
        raise ParameterError(f"block C needs beta > gamma+3 > alpha+12 > 22, got {(alpha, beta, gamma)}")
    a, b, g = alpha, beta, gamma
    c1 = PartialGrid.from_rows([
        [10, -8, -2, 5, -5],
        [-6, -a, a + 6, -(b + 6), b + 6],
        [-4, a + 9, -(a + 4), b, -(b + 1)],
        [1, -(b + 5), b + 3, -(g + 1), g + 3],
        [-1, b + 4, -(b + 3), g + 2, -(g + 3)],
    ])
    c2 = PartialGrid.from_rows([
        [-10, 8, 2, 7, -7],
        [6, a, -(a + 6), -(b + 7), b + 7],
        [4, -(a + 9), a + 4, b + 1, -b],
        [-3, b + 5, -(b + 2), g + 1, -g],
        [3, -(b + 4), b + 2, -(g + 2), g],
    ])
    claimed = _pm(
        interval(1, 7, 2), interval(2, 10, 2), (a, a + 4, a + 6, a + 9),
        interval(g, g + 3), interval(b, b + 7),
    )
    return BlockSet((c1, c2), claimed, (0, 0, 0, 1, -1), _zero(5), "C")


def block_a2_set(alpha: int, beta: int, gamma: int, u: int) -> BlockSet:
    """``4u`` zero-sum 3x3 blocks.

    Requires ``alpha + 1 >= 2u`` and ``2 gamma >= alpha + 8u``.
    """
    if min(alpha, beta, gamma, u) < 0 or alpha + 1 < 2*u or 2*gamma < alpha + 8*u:
        raise ParameterError(
            f"block A2 needs alpha+1 >= 2u and 2gamma >= alpha+8u, got {(alpha, beta, gamma, u)}"
        )
    al, be, ga = alpha, beta, gamma
    even, odd = [], []
    for i in range(u):
        even.append(PartialGrid.from_rows([
            [4*al + 12*u + 4 + 4*i, -(2*al + 4*u + 2 + 2*i), -(2*al + 8*u + 2 + 2*i)],
            [-(2*al + 2 + 2*i), 2*al + 2*be + 4*u + 3 + 4*i, -(2*be + 4*u + 1 + 2*i)],
            [-(2*al + 12*u + 2 + 2*i), -(2*be + 1 + 2*i), 2*al + 2*be + 12*u + 3 + 4*i],
        ]))
        odd.append(PartialGrid.from_rows([
            [4*al + 16*u + 4 + 4*i, -(2*al + 6*u + 2 + 2*i), -(2*al + 10*u + 2 + 2*i)],
            [-(2*al + 2*u + 2 + 2*i), 2*al + 4*ga + 10*u - 2*i, -(4*ga + 8*u - 2 - 4*i)],
            [-(2*al + 14*u + 2 + 2*i), -(4*ga + 4*u - 2 - 4*i), 2*al + 4*ga + 18*u - 2*i],
        ]))
    base = [g for pair in zip(even, odd) for g in pair]
    claimed = _pm(
        interval(2*al + 2, 2*al + 16*u, 2),
        interval(4*al + 12*u + 4, 4*al + 20*u, 4),
        interval(2*be + 1, 2*be + 2*u - 1, 2),
        interval(2*be + 4*u + 1, 2*be + 6*u - 1, 2),
        interval(2*al + 2*be + 4*u + 3, 2*al + 2*be + 8*u - 1, 4),
        interval(2*al + 2*be + 12*u + 3, 2*al + 2*be + 16*u - 1, 4),
        interval(4*ga + 2, 4*ga + 8*u - 2, 4),
        interval(2*al + 4*ga + 8*u + 2, 2*al + 4*ga + 10*u, 2),
        interval(2*al + 4*ga + 16*u + 2, 2*al + 4*ga + 18*u, 2),
    ) if u else IntSet()
    return BlockSet(tuple(_signed(base)), claimed, _zero(3), _zero(3), "A2")


def block_c2_set(alpha: int, beta: int, gamma: int) -> BlockSet:
    """Two 5x5 blocks with row sums (0,0,0,1,-1).

    Requires ``beta > alpha + 15 > gamma + 18 > 40``.
    """
    if not beta > alpha + 15 > gamma + 18 > 40:
        raise ParameterError(f"block C2 needs beta > alpha+15 > gamma+18 > 40, got {(alpha, beta, gamma)}")
    a, b, g = alpha, beta, gamma
    c1 = PartialGrid.from_rows([
        [22, -14, -8, 13, -13],
        [-12, -a, a + 12, -(b + 14), b + 14],
        [-10, a + 15, -(a + 4), b, -(b + 1)],
        [9, -(b + 13), b + 3, -(g + 1), g + 3],
        [-9, b + 12, -(b + 3), g + 2, -(g + 3)],
    ])
    c2 = PartialGrid.from_rows([
        [-22, 14, 8, 15, -15],
        [12, a, -(a + 12), -(b + 15), b + 15],
        [10, -(a + 15), a + 4, b + 1, -b],
        [-11, b + 13, -(b + 2), g + 1, -g],
        [11, -(b + 12), b + 2, -(g + 2), g],
    ])
    claimed = _pm(
        interval(8, 15), (22,), interval(g, g + 3), (a, a + 4, a + 12, a + 15),
        interval(b, b + 3), interval(b + 12, b + 15),
    )
    return BlockSet((c1, c2), claimed, (0, 0, 0, 1, -1), _zero(5), "C2")


# ---------------------------------------------------------------- specials

SPECIAL_A = PartialGrid.from_rows([
    [1, -1, 2, -2, 4, -4],
    [8, 7, -8, 5, -7, -5],
    [-9, -6, 6, -3, 3, 9],
])


def special_a_prime(t: int) -> PartialGrid:
    """3x3 zero-sum block completing the 5x7 family for ``c = 4t + 5``."""
    if t < 0:
        raise ParameterError(f"t must be nonnegative, got {t}")
    return PartialGrid.from_rows([
        [10, -4, -6],
        [-2, 92*t + 111, -(92*t + 109)],
        [-8, -(92*t + 107), 92*t + 115],
    ])


def special_d(t: int) -> PartialGrid:
    """5x3 zero-sum block used in the 5x7 family for ``c = 4t + 6``."""
    if t < 0:
        raise ParameterError(f"t must be nonnegative, got {t}")
    k = 116*t
    return PartialGrid.from_rows([
        [k + 169, 3, -(k + 172)],
        [-(k + 173), k + 175, -2],
        [k + 171, -(k + 176), 5],
        [-(k + 174), 4, k + 170],
        [7, -6, -1],
    ])


def special_s(j: int) -> PartialGrid:
    """6x4 zero-sum block using exactly ``±[j+1, j+12]``."""
    if j < 0:
        raise ParameterError(f"offset must be nonnegative, got {j}")
    return vconcat(*(
        q_block(1, TwoSet(j + 4*i + 1, 1), TwoSet(j + 4*i + 3, 1)) for i in range(3)
    ))


def special_block(name: str, param: Optional[int] = None) -> PartialGrid:
    """Look up a special block by name: ``A``, ``A_prime``, ``D`` or ``S``."""
    if name == "A":
        return SPECIAL_A
    if param is None:
        raise ParameterError(f"special block {name} needs a parameter")
    makers = {"A_prime": special_a_prime, "D": special_d, "S": special_s}
    if name not in makers:
        raise ParameterError(f"unknown special block {name!r}")
    return makers[name](param)
