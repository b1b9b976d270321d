"""Reduced-scale checks run by ``signed-magic selftest``."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator

from .core import ArraySet, SmaSpec, frame_violation
from .fixtures import SHAPES, fixture
from .results import ExternalConstructionRequired
from .search import SearchStatus, exhaustive_sma
from .sma import generate_sma, sma_exists
from .smas.construct import construct_smas
from .smas.routing import route_for
from .verify import verify_sma, verify_smas


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str
    seconds: float


def _fixtures() -> str:
    for name, shape in SHAPES.items():
        xs = fixture(name)
        if (xs.a, xs.b, xs.e) != shape or not verify_smas(xs):
            raise AssertionError(f"{name} fails")
    return f"{len(SHAPES)} fixtures verify"


def _odd_sweep() -> str:
    built = ext = 0
    for a in range(5, 12, 2):
        for b in range(5, 12, 2):
            if (a, b) == (5, 5):
                continue
            for c in range(1, 5):
                out = construct_smas(a, b, 2 * c)
                if isinstance(out, ExternalConstructionRequired):
                    if not route_for(a, b, 2 * c).external:
                        raise AssertionError(f"({a},{b},{2 * c}) unexpectedly external")
                    ext += 1
                else:
                    built += 1
    return f"{built} built, {ext} external"


def _six_sweep() -> str:
    n = 0
    for b in (5, 7, 9, 11):
        for c in range(1, 5):
            out = construct_smas(6, b, c)
            if not isinstance(out, ArraySet):
                raise AssertionError(f"(6,{b},{c}) not built")
            n += 1
    return f"{n} built"


def _assembly() -> str:
    specs = [SmaSpec(10, 14, 7, 5), SmaSpec(5, 6, 6, 5)]
    for spec in specs + [s.transposed() for s in specs]:
        g = generate_sma(spec)
        if not verify_sma(g, spec):
            raise AssertionError(f"SMA{spec} fails")
    return f"{2 * len(specs)} specs verify"


def _boundary() -> str:
    n = 0
    for m in range(1, 9):
        for nn in range(1, 9):
            for s in range(1, nn + 1):
                for k in range(1, m + 1):
                    spec = SmaSpec(m, nn, s, k)
                    if frame_violation(spec) or spec.cells > 8:
                        continue
                    found = exhaustive_sma(spec).status is SearchStatus.FOUND
                    if found != sma_exists(spec):
                        raise AssertionError(f"disagreement at {spec}")
                    n += 1
    return f"{n} specs agree"


CHECKS: list[tuple[str, Callable[[], str]]] = [
    ("fixtures", _fixtures),
    ("odd-sides sweep", _odd_sweep),
    ("six-row sweep", _six_sweep),
    ("sma assembly", _assembly),
    ("existence boundary", _boundary),
]


def run() -> Iterator[Check]:
    for name, fn in CHECKS:
        t0 = time.perf_counter()
        try:
            detail, ok = fn(), True
        except Exception as exc:  # reported, not raised
            detail, ok = f"{type(exc).__name__}: {exc}", False
        yield Check(name, ok, detail, time.perf_counter() - t0)
