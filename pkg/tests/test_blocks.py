from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from signed_magic.blocks import (
    SPECIAL_A,
    block_a2_set,
    block_a_set,
    block_b_set,
    block_c2_set,
    block_c_set,
    q_block,
    r_block,
    special_a_prime,
    special_block,
    special_d,
    special_s,
    u_block,
)
from signed_magic.core import TwoSet, negate, plus_minus
from signed_magic.errors import ParameterError
from signed_magic.fixtures import SHAPES, fixture
from signed_magic.verify import verify_entry_set, verify_smas, verify_zero_sum


def rows(g):
    return [list(r) for r in g.to_rows()]


def test_q_blocks():
    assert rows(q_block(1, TwoSet(1, 1), TwoSet(3, 1))) == [[1, -2, -3, 4], [-1, 2, 3, -4]]
    assert rows(q_block(2, TwoSet(3, 2), TwoSet(7, 2))) == [[3, -5, -7, 9], [-3, 5, 7, -9]]
    with pytest.raises(ParameterError):
        q_block(1, TwoSet(1, 2), TwoSet(3, 1))


def test_r_blocks():
    r1 = r_block(1, TwoSet(2, 2), TwoSet(12, 1), TwoSet(14, 1))
    assert rows(r1) == [[2, -4, -12, 13, -14, 15], [-2, 4, 12, -13, 14, -15]]
    r2 = r_block(2, TwoSet(42, 4), TwoSet(58, 2), TwoSet(62, 2))
    assert rows(r2)[0] == [42, -46, -58, 60, -62, 64]
    assert rows(r2)[1] == [-42, 46, 58, -60, 62, -64]
    with pytest.raises(ParameterError):
        r_block(2, TwoSet(2, 2), TwoSet(12, 1), TwoSet(14, 1))


def test_u_blocks():
    u2 = u_block(2, TwoSet(5, 1))
    assert rows(u2) == [[5, -6], [-5, 6]]
    assert u2.row_sums() == [-1, 1] and u2.col_sums() == [0, 0]
    u1 = u_block(1, TwoSet(1, 1), TwoSet(3, 2))
    assert rows(u1) == [[3, -5, -1, 2], [-3, 5, 1, -2]]
    assert not verify_zero_sum(u2)
    with pytest.raises(ParameterError):
        u_block(1, TwoSet(1, 1))
    with pytest.raises(ParameterError):
        u_block(2, TwoSet(1, 1), TwoSet(3, 2))


@given(st.integers(1, 500), st.integers(1, 500), st.sampled_from([1, 2, 3]))
def test_q_blocks_zero_sum(x1, x2, kind):
    eps = {1: 1, 2: 2, 3: 4}[kind]
    g = q_block(kind, TwoSet(x1, eps), TwoSet(x2, eps))
    assert verify_zero_sum(g)


@given(st.integers(1, 500), st.integers(1, 500), st.integers(1, 500), st.sampled_from([1, 2]))
def test_r_blocks_zero_sum(y, x1, x2, kind):
    big, small = (2, 1) if kind == 1 else (4, 2)
    g = r_block(kind, TwoSet(y, big), TwoSet(x1, small), TwoSet(x2, small))
    assert verify_zero_sum(g)


def test_block_a_example():
    bs = block_a_set(0, 0, 1)
    assert rows(bs.members[0]) == [[10, -4, -6], [-2, 5, -3], [-8, -1, 9]]
    assert bs.members[1] == negate(bs.members[0])
    assert bs.claimed == plus_minus([1, 2, 3, 4, 5, 6, 8, 9, 10])
    assert verify_entry_set(bs)
    assert len(block_a_set(3, 4, 0)) == 0
    with pytest.raises(ParameterError):
        block_a_set(0, 0, 2)


def test_block_b_examples():
    bs = block_b_set(1, 8, 3)
    assert [rows(g)[0] for g in bs] == [[1, -9, 8], [3, -10, 7], [5, -11, 6]]
    assert bs.claimed == plus_minus([1, 3, 5, 6, 7, 8, 9, 10, 11])
    assert [rows(g)[0] for g in block_b_set(2, 7, 2)] == [[2, -9, 7], [4, -10, 6]]
    with pytest.raises(ParameterError):
        block_b_set(1, 5, 3)


def test_block_c_example():
    bs = block_c_set(11, 25, 21)
    assert rows(bs.members[0])[3] == [1, -30, 28, -22, 24]
    assert set(plus_minus([1, 3, 5, 7, 2, 4, 6, 8, 10])) <= set(bs.claimed)
    with pytest.raises(ParameterError):
        block_c_set(10, 25, 21)


def test_block_a2_example():
    bs = block_a2_set(1, 0, 5, 1)
    assert rows(bs.members[0])[0] == [20, -8, -12]
    assert len(bs) == 4
    assert len(block_a2_set(1, 0, 5, 0)) == 0
    with pytest.raises(ParameterError):
        block_a2_set(1, 0, 4, 1)


def test_block_c2_example():
    bs = block_c2_set(27, 43, 23)
    assert rows(bs.members[0])[0] == [22, -14, -8, 13, -13]
    assert set(plus_minus(list(range(8, 16)) + [22])) <= set(bs.claimed)
    # the inequality chain is strict, so (26, 42, 23) is outside the family
    with pytest.raises(ParameterError):
        block_c2_set(26, 42, 23)


def test_special_blocks():
    assert rows(SPECIAL_A)[0] == [1, -1, 2, -2, 4, -4]
    assert verify_zero_sum(SPECIAL_A)
    s0 = special_s(0)
    assert s0.shape == (6, 4)
    assert verify_zero_sum(s0)
    assert verify_entry_set(s0.entries(), plus_minus(range(1, 13)))
    assert rows(special_a_prime(0))[1] == [-2, 111, -109]
    assert special_block("A") is SPECIAL_A
    assert special_block("S", 3) == special_s(3)
    with pytest.raises(ParameterError):
        special_block("Z", 1)


@given(st.integers(0, 50))
def test_special_parametric_blocks_zero_sum(t):
    assert verify_zero_sum(special_a_prime(t))
    assert verify_zero_sum(special_d(t))
    assert verify_entry_set(special_s(t).entries(), plus_minus(range(t + 1, t + 13)))


def test_fixtures_verify_and_match_reference_rows():
    for name, shape in SHAPES.items():
        xs = fixture(name)
        assert (xs.a, xs.b, xs.e) == shape
        assert verify_smas(xs)
    assert rows(fixture("fig1").arrays[0])[0] == [10, -4, -6, 5, -5, 7, -7]
    assert rows(fixture("fig4").arrays[0])[0] == [-4, -5, 9, 11, -11]
    assert rows(fixture("fig3").arrays[0])[0] == [53, 3, -56, 17, -17, 19, -19]
    with pytest.raises(ParameterError):
        fixture("fig9")


# Randomized valid parameters for each family.

a_params = st.integers(0, 40).flatmap(
    lambda al: st.tuples(st.just(al), st.integers(0, 60), st.integers(0, al + 1)))
b_params = st.tuples(st.integers(1, 60), st.integers(1, 20), st.integers(0, 30)).map(
    lambda t: (t[0], t[0] + 3 * t[1] - 2 + t[2], t[1]))
c_params = st.tuples(st.integers(11, 60), st.integers(1, 30), st.integers(1, 30)).map(
    lambda t: (t[0], t[0] + 9 + t[1] + t[2] + 3, t[0] + 9 + t[1]))
a2_params = st.tuples(st.integers(0, 40), st.integers(0, 60), st.integers(0, 30)).flatmap(
    lambda t: st.integers(0, (t[0] + 1) // 2).map(
        lambda u: (t[0], t[1], (t[0] + 8 * u + 1) // 2 + t[2], u)))
c2_params = st.tuples(st.integers(23, 80), st.integers(1, 30), st.integers(1, 30)).map(
    lambda t: (t[0] + 3 + t[1], t[0] + 3 + t[1] + 15 + t[2], t[0]))


def _check_family(bs, row_sig, col_sig):
    assert verify_entry_set(bs)
    assert len(bs.entries()) == len(bs.claimed)
    for g in bs:
        assert g.row_sums() == list(row_sig)
        assert g.col_sums() == list(col_sig)


@given(a_params)
def test_block_a_family(p):
    bs = block_a_set(*p)
    _check_family(bs, [0] * 3, [0] * 3)
    half = len(bs) // 2
    assert list(bs.members[half:]) == [negate(g) for g in bs.members[:half]]


@given(b_params)
def test_block_b_family(p):
    _check_family(block_b_set(*p), [0] * 2, [0] * 3)


@given(c_params)
def test_block_c_family(p):
    _check_family(block_c_set(*p), [0, 0, 0, 1, -1], [0] * 5)


@given(a2_params)
def test_block_a2_family(p):
    _check_family(block_a2_set(*p), [0] * 3, [0] * 3)


@given(c2_params)
def test_block_c2_family(p):
    _check_family(block_c2_set(*p), [0, 0, 0, 1, -1], [0] * 5)
