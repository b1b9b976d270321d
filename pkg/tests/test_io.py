from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from signed_magic.core import PartialGrid, SmaSpec
from signed_magic.errors import DocumentError
from signed_magic.fixtures import SHAPES, fixture
from signed_magic.io import (
    GridDocument,
    dump,
    from_csv,
    from_json,
    load,
    render,
    to_csv,
    to_json,
    to_latex,
)
from signed_magic.sma import generate_sma

cells = st.one_of(st.none(), st.integers(-10**6, 10**6))


@st.composite
def documents(draw):
    r, c, e = draw(st.integers(1, 6)), draw(st.integers(1, 6)), draw(st.integers(1, 4))
    grids = tuple(
        PartialGrid(r, c, draw(st.lists(cells, min_size=r * c, max_size=r * c))) for _ in range(e)
    )
    kind = draw(st.sampled_from(["sma", "smas", "ihs"]))
    meta = draw(st.dictionaries(st.sampled_from("abcemnsk"), st.integers(1, 99), max_size=4))
    return GridDocument(kind, grids, meta)


@given(documents())
def test_json_round_trip(doc):
    text = to_json(doc)
    back = from_json(text)
    assert back == doc
    assert to_json(back) == text


@given(documents())
def test_csv_round_trip(doc):
    text = to_csv(doc)
    back = from_csv(text)
    assert back == doc
    assert to_csv(back) == text


def test_fixture_documents_round_trip():
    for name in SHAPES:
        doc = GridDocument.for_set(fixture(name))
        assert from_json(to_json(doc)).array_set() == fixture(name)
        assert to_csv(from_csv(to_csv(doc))) == to_csv(doc)


def test_empty_cells_are_blank():
    g = generate_sma(SmaSpec(10, 14, 7, 5))
    doc = GridDocument.for_sma(g, SmaSpec(10, 14, 7, 5))
    assert "null" in to_json(doc)
    csv_text = to_csv(doc)
    assert ",," in csv_text
    assert csv_text.startswith("# rows=10 cols=14 index=1/1 kind=sma meta=k:5,m:10,n:14,s:7\n")
    latex = to_latex(doc)
    assert latex.startswith("\\begin{tabular}{|" + "c|" * 14 + "}\n\\hline\n")
    assert " &  & " in latex


def test_json_shape():
    doc = GridDocument.for_set(fixture("fig1"))
    text = to_json(doc)
    assert text.startswith('{"kind":"smas","rows":5,"cols":7,"count":2,"arrays":[\n')
    assert text.endswith('],"meta":{"a":5,"b":7,"e":2}}\n')


@pytest.mark.parametrize("text", [
    "not json",
    "[]",
    '{"rows":1,"cols":2,"count":1,"arrays":[[1]]}',
    '{"rows":1,"cols":1,"count":1,"arrays":[["x"]]}',
    '{"rows":1,"cols":1,"count":2,"arrays":[[1]]}',
    '{"kind":"zz","rows":1,"cols":1,"count":1,"arrays":[[1]]}',
])
def test_bad_json(text):
    with pytest.raises(DocumentError):
        from_json(text)


@pytest.mark.parametrize("text", [
    "",
    "1,2\n",
    "# rows=1 cols=2 index=1/1 kind=smas\n1\n",
    "# rows=1 cols=1 index=2/1 kind=smas\n1\n",
    "# rows=1 cols=1 index=1/1 kind=smas\nq\n",
])
def test_bad_csv(text):
    with pytest.raises(DocumentError):
        from_csv(text)


def test_file_helpers(tmp_path):
    doc = GridDocument.for_set(fixture("fig4"))
    for fmt in ("json", "csv"):
        p = tmp_path / f"x.{fmt}"
        dump(doc, p, fmt)
        assert load(p) == doc
    with pytest.raises(DocumentError):
        render(doc, "xml")
