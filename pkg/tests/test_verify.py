from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from signed_magic.blocks import block_b_set, q_block, u_block
from signed_magic.core import ArraySet, IntSet, PartialGrid, SmaSpec, TwoSet, block_diag, negate, transpose
from signed_magic.errors import ShapeError
from signed_magic.fixtures import SHAPES, fixture
from signed_magic.verify import (
    verify_arrays,
    verify_entry_set,
    verify_ihs,
    verify_sma,
    verify_smas,
    verify_zero_sum,
)


def test_zero_sum():
    assert verify_zero_sum(q_block(1, TwoSet(1, 1), TwoSet(3, 1))).passed
    bad = verify_zero_sum(PartialGrid.from_rows([[1, 2], [-1, -1]]))
    assert not bad.passed
    assert [v.location for v in bad.violations if v.axiom == "row-sum"] == ["row 1", "row 2"]
    assert not verify_zero_sum(u_block(2, TwoSet(5, 1)))


def test_report_passed_iff_no_violations():
    rep = verify_zero_sum(PartialGrid.from_rows([[1, -1], [-1, 1]]))
    assert rep.passed and not rep.violations and bool(rep)
    rep = verify_zero_sum(PartialGrid.from_rows([[1, 1]]))
    assert not rep.passed and rep.violations and not bool(rep)


def test_verify_sma_examples():
    a1, a2 = fixture("fig1")
    assert verify_sma(block_diag(a1, a2), SmaSpec(10, 14, 7, 5))
    rep = verify_sma(a1, SmaSpec(5, 7, 7, 5))
    assert "universe-mismatch" in rep.axioms
    assert verify_sma(PartialGrid.from_rows([[0]]), SmaSpec(1, 1, 1, 1))
    with pytest.raises(ShapeError):
        verify_sma(a1, SmaSpec(7, 5, 5, 7))


def test_verify_sma_fill_counts():
    g = PartialGrid.from_rows([[1, -1, None], [-1, 1, None]])
    rep = verify_sma(g, SmaSpec(2, 3, 2, 2))
    assert {"col-fill", "multiplicity"} <= rep.axioms


def test_verify_smas_fixtures_and_corruption():
    for name in SHAPES:
        assert verify_smas(fixture(name))
    xs = fixture("fig1")
    first, second = xs.arrays
    cells = list(second.cells)
    cells[0] = first.cells[0]
    dup = ArraySet((first, PartialGrid(5, 7, cells)), 5, 7, 2)
    assert "multiplicity" in verify_smas(dup).axioms


def test_verify_arrays_declared_mismatch():
    xs = fixture("fig1")
    rep = verify_arrays(xs.arrays, 5, 7, 4)
    assert {"frame", "coverage"} <= rep.axioms


@given(st.sampled_from(sorted(SHAPES)), st.data())
def test_any_single_cell_change_fails(name, data):
    xs = fixture(name)
    i = data.draw(st.integers(0, xs.e - 1))
    j = data.draw(st.integers(0, xs.a * xs.b - 1))
    delta = data.draw(st.integers(-50, 50).filter(bool))
    cells = list(xs.arrays[i].cells)
    cells[j] += delta
    arrays = list(xs.arrays)
    arrays[i] = PartialGrid(xs.a, xs.b, cells)
    assert not verify_smas(ArraySet(tuple(arrays), xs.a, xs.b, xs.e))


@given(st.sampled_from(sorted(SHAPES)))
def test_negation_closure(name):
    xs = fixture(name)
    neg = ArraySet(tuple(negate(g) for g in xs), xs.a, xs.b, xs.e)
    assert verify_smas(neg).passed == verify_smas(xs).passed


def test_transpose_duality():
    g = block_diag(*fixture("fig1"))
    assert verify_sma(transpose(g), SmaSpec(14, 10, 5, 7))
    bad = PartialGrid.from_rows([[1, 2], [-1, -2]])
    assert verify_sma(bad, SmaSpec(2, 2, 2, 2)).passed == verify_sma(transpose(bad), SmaSpec(2, 2, 2, 2)).passed


def test_verify_entry_set():
    assert verify_entry_set(block_b_set(1, 8, 3))
    assert not verify_entry_set([1, -1, 2], IntSet([1, -1]))
    assert not verify_entry_set([1, -1], IntSet([1, -1, 2]))


def test_verify_ihs():
    g = PartialGrid.from_rows([[1, -3, 2], [-4, 6, -2]])
    assert not verify_ihs(ArraySet.of([g]))
    good = PartialGrid.from_rows([[1, 2, -3], [-4, -2, 6]])
    assert not verify_ihs(ArraySet.of([good]))
    # fig1 is not a doubled IHS: its two arrays are not negatives of each other
    half = ArraySet.of([fixture("fig1").arrays[0]])
    assert not verify_ihs(half)
    both = ArraySet.of([PartialGrid.from_rows([[1, -1]])])
    assert "multiplicity" in verify_ihs(both).axioms or not verify_ihs(both)
