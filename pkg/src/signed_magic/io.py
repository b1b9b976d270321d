"""Grid documents and their JSON, CSV and LaTeX renderings.

Rendering is canonical, so a document read back from its own JSON or CSV
renders to the same bytes.
"""

from __future__ import annotations

import csv
import io as _io
import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence, Union

from .core import ArraySet, PartialGrid, SmaSpec
from .errors import DocumentError

KINDS = ("sma", "smas", "ihs")
FORMATS = ("json", "csv", "latex")


@dataclass(frozen=True)
class GridDocument:
    """One or more equally sized grids with an optional parameter declaration.

    ``meta`` holds ``m, n, s, k`` for an SMA and ``a, b, e`` (or ``a, b, c``
    for an IHS) for a set.
    """

    kind: str
    arrays: tuple[PartialGrid, ...]
    meta: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise DocumentError(f"unknown kind {self.kind!r}")
        object.__setattr__(self, "arrays", tuple(self.arrays))
        if not self.arrays:
            raise DocumentError("a document needs at least one array")
        shapes = {g.shape for g in self.arrays}
        if len(shapes) != 1:
            raise DocumentError(f"arrays of different shapes {sorted(shapes)}")
        for key, v in self.meta.items():
            if not isinstance(v, int) or isinstance(v, bool):
                raise DocumentError(f"meta {key} must be an integer, got {v!r}")

    @property
    def rows(self) -> int:
        return self.arrays[0].rows

    @property
    def cols(self) -> int:
        return self.arrays[0].cols

    @property
    def count(self) -> int:
        return len(self.arrays)

    def array_set(self) -> ArraySet:
        return ArraySet.of(self.arrays)

    @classmethod
    def for_sma(cls, g: PartialGrid, spec: SmaSpec) -> "GridDocument":
        return cls("sma", (g,), {"m": spec.m, "n": spec.n, "s": spec.s, "k": spec.k})

    @classmethod
    def for_set(cls, xs: ArraySet, kind: str = "smas") -> "GridDocument":
        last = "c" if kind == "ihs" else "e"
        return cls(kind, xs.arrays, {"a": xs.a, "b": xs.b, last: xs.e})


# JSON

def to_json(doc: GridDocument) -> str:
    head = (f'{{"kind":{json.dumps(doc.kind)},"rows":{doc.rows},'
            f'"cols":{doc.cols},"count":{doc.count},"arrays":[\n')
    body = ",\n".join(json.dumps(list(g.cells), separators=(",", ":")) for g in doc.arrays)
    meta = json.dumps(doc.meta, separators=(",", ":"), sort_keys=True)
    return f'{head}{body}\n],"meta":{meta}}}\n'


def _int(obj: dict, key: str) -> int:
    v = obj.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise DocumentError(f"{key!r} must be a positive integer, got {v!r}")
    return v


def from_json(text: str) -> GridDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise DocumentError("top level must be an object")
    rows, cols, count = _int(obj, "rows"), _int(obj, "cols"), _int(obj, "count")
    arrays = obj.get("arrays")
    if not isinstance(arrays, list) or len(arrays) != count:
        raise DocumentError(f"'arrays' must be a list of {count} cell lists")
    grids = []
    for i, cells in enumerate(arrays):
        if not isinstance(cells, list) or len(cells) != rows * cols:
            raise DocumentError(f"array {i + 1} must list {rows * cols} cells")
        if any(v is not None and (not isinstance(v, int) or isinstance(v, bool)) for v in cells):
            raise DocumentError(f"array {i + 1} holds a non-integer cell")
        grids.append(PartialGrid(rows, cols, cells))
    meta = obj.get("meta", {})
    if not isinstance(meta, dict):
        raise DocumentError("'meta' must be an object")
    return GridDocument(obj.get("kind", "smas"), tuple(grids), meta)


# CSV

_HEADER = re.compile(r"# rows=(\d+) cols=(\d+) index=(\d+)/(\d+) kind=(\w+)(?: meta=(\S*))?$")


def _meta_str(meta: dict) -> str:
    return ",".join(f"{k}:{meta[k]}" for k in sorted(meta))


def to_csv(doc: GridDocument) -> str:
    out = _io.StringIO()
    meta = _meta_str(doc.meta)
    for i, g in enumerate(doc.arrays):
        if i:
            out.write("\n")
        out.write(f"# rows={g.rows} cols={g.cols} index={i + 1}/{doc.count} kind={doc.kind}")
        out.write(f" meta={meta}\n" if meta else "\n")
        w = csv.writer(out, lineterminator="\n")
        for r in g.to_rows():
            w.writerow(["" if v is None else v for v in r])
    return out.getvalue()


def _parse_meta(text: str) -> dict:
    meta = {}
    for part in filter(None, text.split(",")):
        key, _, val = part.partition(":")
        try:
            meta[key] = int(val)
        except ValueError as exc:
            raise DocumentError(f"bad meta entry {part!r}") from exc
    return meta


def from_csv(text: str) -> GridDocument:
    blocks = [b for b in re.split(r"\n\s*\n", text.strip("\n")) if b.strip()]
    if not blocks:
        raise DocumentError("empty CSV document")
    grids, kind, meta = [], "smas", {}
    for i, block in enumerate(blocks):
        lines = block.split("\n")
        m = _HEADER.match(lines[0].strip())
        if not m:
            raise DocumentError(f"block {i + 1}: bad header {lines[0]!r}")
        rows, cols, idx, total = (int(m.group(j)) for j in range(1, 5))
        if idx != i + 1 or total != len(blocks):
            raise DocumentError(f"block {i + 1}: header says index {idx}/{total}")
        kind, meta = m.group(5), _parse_meta(m.group(6) or "")
        data = list(csv.reader(lines[1:]))
        if len(data) != rows or any(len(r) != cols for r in data):
            raise DocumentError(f"block {i + 1}: expected {rows} rows of {cols} fields")
        try:
            cells = [None if f.strip() == "" else int(f) for r in data for f in r]
        except ValueError as exc:
            raise DocumentError(f"block {i + 1}: {exc}") from exc
        grids.append(PartialGrid(rows, cols, cells))
    return GridDocument(kind, tuple(grids), meta)


# LaTeX

def _latex_grid(g: PartialGrid) -> str:
    lines = [r"\begin{tabular}{|" + "c|" * g.cols + "}", r"\hline"]
    for r in g.to_rows():
        lines.append(" & ".join("" if v is None else f"${v}$" for v in r) + r" \\ \hline")
    lines.append(r"\end{tabular}")
    return "\n".join(lines)


def to_latex(doc: GridDocument) -> str:
    return "\n\\quad\n".join(_latex_grid(g) for g in doc.arrays) + "\n"


# dispatch

def render(doc: GridDocument, fmt: str) -> str:
    if fmt == "json":
        return to_json(doc)
    if fmt == "csv":
        return to_csv(doc)
    if fmt == "latex":
        return to_latex(doc)
    raise DocumentError(f"unknown format {fmt!r}; choose from {FORMATS}")


def parse(text: str, fmt: str) -> GridDocument:
    if fmt == "json":
        return from_json(text)
    if fmt == "csv":
        return from_csv(text)
    raise DocumentError(f"cannot read format {fmt!r}")


def guess_format(path: Union[str, Path], text: str) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".json", ".csv"):
        return suffix[1:]
    return "json" if text.lstrip().startswith("{") else "csv"


def load(path: Union[str, Path]) -> GridDocument:
    """Read a JSON or CSV document; OSError propagates."""
    text = Path(path).read_text(encoding="utf-8")
    return parse(text, guess_format(path, text))


def dump(doc: GridDocument, path: Union[str, Path], fmt: str = "json") -> None:
    Path(path).write_text(render(doc, fmt), encoding="utf-8")


def grids_equal(xs: Iterable[PartialGrid], ys: Sequence[PartialGrid]) -> bool:
    xs = list(xs)
    return len(xs) == len(ys) and all(x == y for x, y in zip(xs, ys))
