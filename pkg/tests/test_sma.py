from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from signed_magic.core import PartialGrid, SmaSpec, block_diag, frame_violation, transpose
from signed_magic.errors import InadmissibleError, ParameterError
from signed_magic.fixtures import fixture
from signed_magic.results import ExternalConstructionRequired, NonExistent
from signed_magic.search import SearchStatus, exhaustive_sma
from signed_magic.sma import default_search_ceiling, existence_case, generate_sma, sma_exists
from signed_magic.verify import verify_sma


def test_existence_examples():
    assert sma_exists(SmaSpec(1, 1, 1, 1))
    assert not sma_exists(SmaSpec(2, 2, 2, 2))
    assert sma_exists(SmaSpec(2, 7, 7, 2))
    assert existence_case(SmaSpec(2, 7, 7, 2)) == 2
    assert existence_case(SmaSpec(7, 2, 2, 7)) == 4
    assert existence_case(SmaSpec(2, 5, 5, 2)) is None
    assert existence_case(SmaSpec(3, 6, 4, 2)) == 3
    assert existence_case(SmaSpec(4, 6, 3, 2)) == 3
    assert existence_case(SmaSpec(5, 5, 3, 3)) == 6
    assert not sma_exists(SmaSpec(4, 4, 1, 1))


def test_existence_rejects_bad_frames():
    for bad in [(3, 4, 2, 5), (2, 2, 3, 2), (2, 3, 2, 2), (0, 1, 1, 1)]:
        with pytest.raises(InadmissibleError):
            sma_exists(SmaSpec(*bad))


def test_generate_examples():
    g = generate_sma(SmaSpec(10, 14, 7, 5))
    assert g == block_diag(*fixture("fig1"))
    g = generate_sma(SmaSpec(5, 6, 6, 5))
    canonical = generate_sma(SmaSpec(6, 5, 5, 6))
    assert g == transpose(canonical)
    assert isinstance(generate_sma(SmaSpec(2, 5, 5, 2)), NonExistent)


ASSEMBLED = [SmaSpec(10, 14, 7, 5), SmaSpec(5, 6, 6, 5), SmaSpec(14, 20, 10, 7), SmaSpec(18, 10, 5, 9)]


@pytest.mark.parametrize("spec", ASSEMBLED + [s.transposed() for s in ASSEMBLED], ids=str)
def test_assembled_specs_verify(spec):
    g = generate_sma(spec)
    assert isinstance(g, PartialGrid)
    assert verify_sma(g, spec)


def test_hconcat_branch_is_used():
    # s = 10 = 2 * 5 pairs up arrays of an SMAS(7, 5; 4)
    g = generate_sma(SmaSpec(14, 20, 10, 7))
    assert g.shape == (14, 20)


def test_external_when_set_needs_ihs():
    # k = 7, s = 9, e = 8: SMAS(7, 9; 8) sits in an IHS-only cell
    spec = SmaSpec(56, 72, 9, 7)
    assert isinstance(generate_sma(spec), ExternalConstructionRequired)


def test_tiny_specs_come_from_search():
    g = generate_sma(SmaSpec(3, 3, 3, 3))
    assert verify_sma(g, SmaSpec(3, 3, 3, 3))
    g = generate_sma(SmaSpec(1, 1, 1, 1))
    assert g.cells == (0,)


def test_large_unassembled_spec_is_external():
    # gcd(s, k) = 2 with n*k far beyond search scale
    spec = SmaSpec(40, 40, 4, 4)
    out = generate_sma(spec, search_ceiling=16, heuristic_ceiling=64)
    assert isinstance(out, ExternalConstructionRequired)


def test_search_ceiling_env(monkeypatch):
    monkeypatch.setenv("SMA_SEARCH_CEILING", "20")
    assert default_search_ceiling() == 20
    monkeypatch.setenv("SMA_SEARCH_CEILING", "x")
    with pytest.raises(ParameterError):
        default_search_ceiling()
    monkeypatch.delenv("SMA_SEARCH_CEILING")
    assert default_search_ceiling() == 16


def _specs(max_cells: int):
    for m in range(1, max_cells + 1):
        for n in range(1, max_cells + 1):
            for s in range(1, n + 1):
                for k in range(1, m + 1):
                    spec = SmaSpec(m, n, s, k)
                    if spec.cells <= max_cells and not frame_violation(spec):
                        yield spec


def test_existence_agrees_with_exhaustive_search():
    specs = list(_specs(12))
    assert len(specs) == 79
    for spec in specs:
        found = exhaustive_sma(spec).status is SearchStatus.FOUND
        assert found == sma_exists(spec), spec


@given(st.sampled_from(list(_specs(16))))
def test_generation_transpose_duality(spec):
    a = generate_sma(spec)
    b = generate_sma(spec.transposed())
    assert type(a) is type(b)
    if isinstance(a, PartialGrid):
        assert verify_sma(transpose(a), spec.transposed())
        assert verify_sma(b, spec.transposed())
