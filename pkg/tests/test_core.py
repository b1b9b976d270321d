from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from signed_magic.core import (
    ArraySet,
    IntSet,
    PartialGrid,
    TwoSet,
    block_diag,
    hconcat,
    interval,
    negate,
    omega_for,
    partition_pairs,
    place,
    plus_minus,
    transpose,
    vconcat,
)
from signed_magic.errors import (
    CollisionError,
    OverlapError,
    ParameterError,
    ShapeError,
    UnpairableError,
)

grids = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.one_of(st.none(), st.integers(-50, 50)), min_size=r * c, max_size=r * c)
        .map(lambda cells: PartialGrid(r, c, cells))
    )
)


def test_interval_examples():
    assert list(interval(2, 8, 2)) == [2, 4, 6, 8]
    assert list(interval(5, 3, 1)) == []
    assert list(interval(1, 1, 4)) == [1]


def test_interval_rejects_noncongruent_endpoints():
    with pytest.raises(ParameterError):
        interval(1, 4, 2)
    with pytest.raises(ParameterError):
        interval(1, 4, 0)


@given(st.integers(-100, 100), st.integers(0, 40), st.integers(1, 6))
def test_interval_length(a, steps, d):
    iv = interval(a, a + steps * d, d)
    assert len(iv) == steps + 1 == len(list(iv))
    assert len(interval(a + 1, a, d)) == 0


def test_plus_minus():
    assert list(plus_minus([1, 3])) == [-3, -1, 1, 3]
    assert list(plus_minus([])) == []
    assert list(plus_minus([10])) == [-10, 10]
    with pytest.raises(ParameterError):
        plus_minus([0])


def test_intset_rejects_overlap():
    with pytest.raises(OverlapError):
        IntSet.union([1, 2], [2, 3])
    assert IntSet.union([1, 2], [3]) == IntSet([3, 2, 1])


def test_partition_pairs_examples():
    assert partition_pairs({2, 4, 6, 8}, 2) == [TwoSet(2, 2), TwoSet(6, 2)]
    assert partition_pairs({12, 13, 14, 15}, 1) == [TwoSet(12, 1), TwoSet(14, 1)]
    with pytest.raises(UnpairableError):
        partition_pairs({1, 2, 4}, 1)
    with pytest.raises(UnpairableError):
        partition_pairs({1, 3}, 1)


@given(st.lists(st.integers(1, 60), unique=True, max_size=20), st.sampled_from([1, 2, 4]))
def test_partition_pairs_is_a_partition(lows, eps):
    s: set[int] = set()
    for x in lows:
        if x not in s and x + eps not in s:
            s |= {x, x + eps}
    pairs = partition_pairs(s, eps)
    flat = [v for p in pairs for v in p]
    assert sorted(flat) == sorted(s)
    assert all(p.high - p.low == eps for p in pairs)


def _has_matching(s: frozenset[int], eps: int) -> bool:
    if not s:
        return True
    x = min(s)
    return any(
        y in s and _has_matching(s - {x, y}, eps) for y in (x + eps, x - eps)
    )


@given(st.sets(st.integers(1, 16), max_size=12), st.sampled_from([1, 2, 4]))
def test_greedy_pairing_succeeds_whenever_a_pairing_exists(s, eps):
    # the minimum can only pair upwards, so the recursive matcher is exhaustive
    possible = len(s) % 2 == 0 and _has_matching(frozenset(s), eps)
    try:
        partition_pairs(s, eps)
        greedy = True
    except UnpairableError:
        greedy = False
    assert greedy == possible


def test_omega_for():
    assert omega_for(70) == plus_minus(range(1, 36))
    assert list(omega_for(9)) == list(range(-4, 5))
    assert list(omega_for(1)) == [0]


@given(st.integers(1, 200))
def test_omega_symmetric(n):
    om = omega_for(n)
    assert len(om) == n
    assert set(om) == {-x for x in om}
    assert (0 in om) == (n % 2 == 1)


def test_transpose_of_zero_row_grid():
    g = PartialGrid.from_rows([[1, 2, -3], [-1, -2, 3]])
    t = transpose(g)
    assert t.shape == (3, 2)
    assert t.col_sums() == [0, 0]


@given(grids)
def test_involutions(g):
    assert transpose(transpose(g)) == g
    assert negate(negate(g)) == g
    assert transpose(g).row_sums() == g.col_sums()


def test_block_diag_keeps_zero_sums():
    from signed_magic.fixtures import fixture

    a1, a2 = fixture("fig1")
    d = block_diag(a1, a2)
    assert d.shape == (10, 14)
    assert set(d.row_sums()) == {0} and set(d.col_sums()) == {0}


@given(st.lists(grids, min_size=1, max_size=4))
def test_block_diag_preserves_sums(gs):
    d = block_diag(*gs)
    assert d.row_sums() == [x for g in gs for x in g.row_sums()]
    assert d.col_sums() == [x for g in gs for x in g.col_sums()]


def test_concat_shapes():
    a = PartialGrid.from_rows([[1, -1]])
    b = PartialGrid.from_rows([[2], [3]])
    assert hconcat(a, a).shape == (1, 4)
    assert vconcat(a, a).shape == (2, 2)
    with pytest.raises(ShapeError):
        hconcat(a, b)
    with pytest.raises(ShapeError):
        vconcat(a, b)


def test_place():
    block = PartialGrid.from_rows([[1, -2, -3, 4], [-1, 2, 3, -4]])
    assert place(PartialGrid.empty(2, 4), block, 0, 0) == block
    with pytest.raises(CollisionError):
        place(place(PartialGrid.empty(2, 5), block, 0, 0), block, 0, 1)
    with pytest.raises(ShapeError):
        place(PartialGrid.empty(2, 3), block, 0, 0)


def test_place_tiles_a_full_frame():
    from signed_magic.blocks import block_b_set, r_block

    frame = PartialGrid.empty(6, 5)
    bs = block_b_set(1, 8, 3).members
    for i in range(3):
        frame = place(frame, bs[i], 2 * i, 0)
    r1 = r_block(1, TwoSet(2, 2), TwoSet(12, 1), TwoSet(14, 1))
    frame = place(frame, transpose(r1), 0, 3)
    assert None not in frame.cells


def test_arrayset_shape_checks():
    g = PartialGrid.from_rows([[1, -1]])
    with pytest.raises(ShapeError):
        ArraySet((g,), 1, 2, 2)
    with pytest.raises(ShapeError):
        ArraySet.of([g, PartialGrid.from_rows([[1], [-1]])])


def test_int64_overflow_is_caught():
    with pytest.raises(OverflowError):
        PartialGrid(1, 1, [1 << 70])


def test_small_pairing_agrees_with_brute_force():
    # every eps-pairable subset of [1, 8]
    for r in range(0, 9, 2):
        for combo in itertools.combinations(range(1, 9), r):
            for eps in (1, 2, 4):
                s = frozenset(combo)
                try:
                    partition_pairs(s, eps)
                    ok = True
                except UnpairableError:
                    ok = False
                assert ok == _has_matching(s, eps)
