"""Compare the compiled and pure-Python search kernels.

Run with ``python benchmarks/bench_search.py``. Both backends get the same
inputs and must return the same results; the table reports the best of
``--repeat`` wall-clock timings for each.
"""

from __future__ import annotations

import argparse
import time

from signed_magic.core import SmaSpec, omega_for
from signed_magic.search import _kernels_py, value_order

try:
    from signed_magic.search import _kernels as _compiled
except ImportError:
    _compiled = None


def _full_lines(a: int, b: int, e: int) -> tuple[list[int], list[int], int]:
    rows, cols = [], []
    for i in range(e):
        for r in range(a):
            for c in range(b):
                rows.append(i * (a + b) + r)
                cols.append(i * (a + b) + a + c)
    return rows, cols, e * (a + b)


def anneal_case(kernels, a: int, b: int, e: int, seed: int):
    rows, cols, n_lines = _full_lines(a, b, e)
    values = list(omega_for(a * b * e))
    top = max(abs(v) for v in values)
    return kernels.anneal(rows, cols, n_lines, values, seed, 50_000_000, False,
                          max(2.0, 0.4 * top), 0.3, 20000, time.monotonic() + 600)


def exhaustive_case(kernels, spec: SmaSpec):
    return kernels.exhaustive(spec.m, spec.n, spec.s, spec.k, value_order(spec.cells),
                              50_000_000, time.monotonic() + 600)


CASES = [
    ("anneal SMAS(6,7;1) seed 1", lambda k: anneal_case(k, 6, 7, 1, 1)),
    ("anneal SMAS(5,7;1) seed 3", lambda k: anneal_case(k, 5, 7, 1, 3)),
    ("exhaustive SMA(5,5;3,3)", lambda k: exhaustive_case(k, SmaSpec(5, 5, 3, 3))),
    ("exhaustive SMA(2,13;13,2)", lambda k: exhaustive_case(k, SmaSpec(2, 13, 13, 2))),
    ("exhaustive SMA(6,6;3,3)", lambda k: exhaustive_case(k, SmaSpec(6, 6, 3, 3))),
    ("exhaustive SMA(4,5;5,4)", lambda k: exhaustive_case(k, SmaSpec(4, 5, 5, 4))),
]


def best_of(fn, repeat: int) -> tuple[float, object]:
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    if _compiled is None:
        print("compiled kernels are not built; only the Python backend is timed")
    print(f"{'case':32} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, fn in CASES:
        tp, rp = best_of(lambda: fn(_kernels_py), args.repeat)
        if _compiled is None:
            print(f"{name:32} {tp:10.4f} {'-':>11} {'-':>8}")
            continue
        tc, rc = best_of(lambda: fn(_compiled), args.repeat)
        same = "" if rp == rc else "  RESULTS DIFFER"
        print(f"{name:32} {tp:10.4f} {tc:11.4f} {tp / tc:7.1f}x{same}")


if __name__ == "__main__":
    main()
