"""Command-line interface.

Exit codes: 0 success, 1 nonexistent or failed check, 2 inadmissible input
or usage error, 3 external construction required, 4 I/O or document error,
5 search budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import io as gio
from .core import PartialGrid, SmaSpec, frame_violation
from .errors import DocumentError, InadmissibleError, InvalidIhsError, ParameterError, SmaError
from .results import ExternalConstructionRequired, NonExistent
from .search import BACKEND, SearchBudget, SearchStatus, exhaustive_sma, heuristic_sma
from .sma import default_search_ceiling, generate_sma, sma_exists
from .smas.construct import construct_smas
from .smas.routing import route_for
from .verify import VerificationReport, verify_arrays, verify_ihs, verify_sma

OK, FAIL, USAGE, EXTERNAL, IO_ERROR, BUDGET = 0, 1, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def _spec(values: Sequence[int]) -> SmaSpec:
    spec = SmaSpec(*values)
    why = frame_violation(spec)
    if why:
        raise CliError(f"inadmissible ({why})", USAGE)
    return spec


def _budget(args: argparse.Namespace) -> SearchBudget:
    try:
        return SearchBudget(max_nodes=args.budget, max_wall_seconds=args.timeout, seed=args.seed)
    except ParameterError as exc:
        raise CliError(str(exc), USAGE) from exc


def _emit(doc: gio.GridDocument, args: argparse.Namespace) -> None:
    text = gio.render(doc, args.format)
    if args.out in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        Path(args.out).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc}", IO_ERROR) from exc


def cmd_exists(args: argparse.Namespace) -> int:
    spec = _spec(args.params)
    if sma_exists(spec):
        print("exists")
        return OK
    print("does not exist")
    return FAIL


def cmd_route(args: argparse.Namespace) -> int:
    try:
        route = route_for(*args.params)
    except InadmissibleError as exc:
        raise CliError(f"inadmissible ({exc})", USAGE) from exc
    print(route.describe())
    return EXTERNAL if route.external else OK


def _load_ihs(path: str):
    try:
        doc = gio.load(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", IO_ERROR) from exc
    return doc.array_set()


def cmd_generate(args: argparse.Namespace) -> int:
    if args.kind == "sma":
        if len(args.params) != 4:
            raise CliError("generate sma needs m n s k", USAGE)
        spec = _spec(args.params)
        result = generate_sma(spec, _budget(args))
        doc = gio.GridDocument.for_sma(result, spec) if isinstance(result, PartialGrid) else None
    else:
        if len(args.params) != 3:
            raise CliError("generate smas needs a b e", USAGE)
        ihs = _load_ihs(args.ihs) if args.ihs else None
        try:
            result = construct_smas(*args.params, ihs=ihs)
        except InadmissibleError as exc:
            raise CliError(f"inadmissible ({exc})", USAGE) from exc
        doc = None if isinstance(result, ExternalConstructionRequired) else gio.GridDocument.for_set(result)
    if isinstance(result, NonExistent):
        print(f"does not exist: {result}", file=sys.stderr)
        return FAIL
    if isinstance(result, ExternalConstructionRequired):
        print(f"external IHS construction required: {result}" if args.kind == "smas"
              else f"external construction required: {result}", file=sys.stderr)
        return EXTERNAL
    assert doc is not None
    _emit(doc, args)
    return OK


def _declared(doc: gio.GridDocument, expect: Optional[Sequence[int]]) -> dict:
    if not expect:
        return dict(doc.meta)
    names = ("m", "n", "s", "k") if doc.kind == "sma" else (
        ("a", "b", "c") if doc.kind == "ihs" else ("a", "b", "e"))
    if len(expect) != len(names):
        raise CliError(f"--expect for {doc.kind} needs {len(names)} values", USAGE)
    return dict(zip(names, expect))


def _infer_sma(g: PartialGrid) -> SmaSpec:
    s = sum(v is not None for v in g.row(0)) if g.rows else 0
    k = sum(v is not None for v in g.col(0)) if g.cols else 0
    return SmaSpec(g.rows, g.cols, s, k)


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        doc = gio.load(args.path)
    except OSError as exc:
        raise CliError(f"cannot read {args.path}: {exc}", IO_ERROR) from exc
    meta = _declared(doc, args.expect)
    report: VerificationReport
    if doc.kind == "sma":
        if doc.count != 1:
            raise CliError("an sma document holds exactly one array", IO_ERROR)
        g = doc.arrays[0]
        spec = SmaSpec(*(meta[x] for x in "mnsk")) if set("mnsk") <= set(meta) else _infer_sma(g)
        if g.shape != (spec.m, spec.n):
            print(f"FAIL: grid is {g.rows}x{g.cols}, declared SMA{spec}")
            return FAIL
        report = verify_sma(g, spec)
        label = f"SMA{spec}"
    elif doc.kind == "ihs":
        xs = doc.array_set()
        report = verify_ihs(xs)
        label = f"IHS({xs.a},{xs.b};{xs.e})"
    else:
        a, b, e = meta.get("a", doc.rows), meta.get("b", doc.cols), meta.get("e", doc.count)
        report = verify_arrays(doc.arrays, a, b, e)
        label = f"SMAS({a},{b};{e})"
    if report:
        print(f"PASS: {label}")
        return OK
    print(f"FAIL: {label}")
    print(report.summary(args.limit))
    return FAIL


def cmd_search(args: argparse.Namespace) -> int:
    spec = _spec(args.params)
    budget = _budget(args)
    if spec.cells <= default_search_ceiling():
        out = exhaustive_sma(spec, budget)
    else:
        try:
            out = heuristic_sma(spec, budget)
        except ParameterError as exc:
            raise CliError(str(exc), USAGE) from exc
    print(out.status.value, file=sys.stderr)
    if out.status is SearchStatus.FOUND:
        _emit(gio.GridDocument.for_sma(out.witness, spec), args)
        return OK
    return FAIL if out.status is SearchStatus.PROVEN_NONEXISTENT else BUDGET


def cmd_selftest(args: argparse.Namespace) -> int:
    from . import selftest

    ok = True
    print(f"search backend: {BACKEND}")
    for check in selftest.run():
        ok &= check.passed
        status = "PASS" if check.passed else "FAIL"
        print(f"{status} {check.name}: {check.detail} ({check.seconds:.2f}s)")
    return OK if ok else FAIL


def _ints(n: int):
    return dict(nargs=n, type=int)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="signed-magic",
                                description="Signed magic arrays: existence, construction and checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def output_opts(q: argparse.ArgumentParser) -> None:
        q.add_argument("--format", choices=gio.FORMATS, default="json")
        q.add_argument("--out", help="output file (default stdout)")

    def search_opts(q: argparse.ArgumentParser) -> None:
        q.add_argument("--seed", type=int, default=0, help="seed for randomized search")
        q.add_argument("--budget", type=int, default=5_000_000, help="search step budget")
        q.add_argument("--timeout", type=float, default=60.0, help="search wall-clock budget in seconds")

    q = sub.add_parser("exists", help="decide whether an SMA(m,n;s,k) exists")
    q.add_argument("params", metavar="N", **_ints(4))
    q.set_defaults(func=cmd_exists)

    q = sub.add_parser("route", help="show which construction builds SMAS(a,b;e)")
    q.add_argument("params", metavar="N", **_ints(3))
    q.set_defaults(func=cmd_route)

    q = sub.add_parser("generate", help="build an SMA or SMAS")
    q.add_argument("kind", choices=("sma", "smas"))
    q.add_argument("params", metavar="N", nargs="+", type=int)
    q.add_argument("--ihs", help="IHS document to double when the set needs one")
    output_opts(q)
    search_opts(q)
    q.set_defaults(func=cmd_generate)

    q = sub.add_parser("verify", help="check a JSON or CSV document")
    q.add_argument("path")
    q.add_argument("--expect", nargs="+", type=int, help="declared parameters overriding the file")
    q.add_argument("--limit", type=int, default=10, help="violations to list")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("search", help="search for an SMA(m,n;s,k)")
    q.add_argument("params", metavar="N", **_ints(4))
    output_opts(q)
    search_opts(q)
    q.set_defaults(func=cmd_search)

    q = sub.add_parser("selftest", help="run reduced-scale built-in checks")
    q.set_defaults(func=cmd_selftest)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(exc, file=sys.stderr)
        return exc.code
    except (DocumentError, InvalidIhsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return IO_ERROR
    except (InadmissibleError, ParameterError) as exc:
        print(f"inadmissible ({exc})", file=sys.stderr)
        return USAGE
    except SmaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
