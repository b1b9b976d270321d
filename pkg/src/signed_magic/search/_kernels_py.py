"""Pure-Python search kernels.

The compiled module ``_kernels`` implements the same two functions with the
same arithmetic and the same random stream, so either backend returns
identical results for identical inputs.
"""

from __future__ import annotations

import math
import time

MASK64 = (1 << 64) - 1
_CHECK_EVERY = 4096

FOUND = 0
EXHAUSTED = 1
BUDGET = 2


class SplitMix64:
    """The splitmix64 generator."""

    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next() % n

    def uniform(self) -> float:
        return (self.next() >> 11) * (1.0 / 9007199254740992.0)


def anneal(row_of, col_of, n_lines, values, seed, max_iters, allow_negate,
           t_start, t_end, sweep, deadline):
    """Simulated annealing on a fixed set of cells.

    Cell ``i`` lies on lines ``row_of[i]`` and ``col_of[i]``. The values are
    shuffled onto the cells and then moved by swaps (and, if allowed, by
    negating single cells) until every line sums to zero.

    Returns ``(status, values, iterations)`` with status ``FOUND`` or
    ``BUDGET``.
    """
    n = len(values)
    vals = list(values)
    rng = SplitMix64(seed)
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        vals[i], vals[j] = vals[j], vals[i]
    sums = [0] * n_lines
    for i in range(n):
        sums[row_of[i]] += vals[i]
        sums[col_of[i]] += vals[i]
    cost = 0
    for x in sums:
        cost += abs(x)
    if cost == 0:
        return FOUND, vals, 0
    alpha = math.exp(math.log(t_end / t_start) / sweep)
    temp = t_start
    step = 0
    it = 0
    while it < max_iters:
        it += 1
        if it % _CHECK_EVERY == 0 and time.monotonic() > deadline:
            break
        step += 1
        if step >= sweep:
            step = 0
            temp = t_start
        else:
            temp *= alpha
        i = rng.below(n)
        if allow_negate and rng.below(5) == 0:
            v = vals[i]
            if v == 0:
                continue
            ri, ci = row_of[i], col_of[i]
            d = -2 * v
            delta = (abs(sums[ri] + d) - abs(sums[ri])) + (abs(sums[ci] + d) - abs(sums[ci]))
            if delta <= 0 or rng.uniform() < math.exp(-delta / temp):
                vals[i] = -v
                sums[ri] += d
                sums[ci] += d
                cost += delta
                if cost == 0:
                    return FOUND, vals, it
            continue
        j = rng.below(n - 1)
        if j >= i:
            j += 1
        d = vals[j] - vals[i]
        if d == 0:
            continue
        ri, ci, rj, cj = row_of[i], col_of[i], row_of[j], col_of[j]
        delta = 0
        if ri != rj:
            delta += (abs(sums[ri] + d) - abs(sums[ri])) + (abs(sums[rj] - d) - abs(sums[rj]))
        if ci != cj:
            delta += (abs(sums[ci] + d) - abs(sums[ci])) + (abs(sums[cj] - d) - abs(sums[cj]))
        if delta <= 0 or rng.uniform() < math.exp(-delta / temp):
            vals[i], vals[j] = vals[j], vals[i]
            if ri != rj:
                sums[ri] += d
                sums[rj] -= d
            if ci != cj:
                sums[ci] += d
                sums[cj] -= d
            cost += delta
            if cost == 0:
                return FOUND, vals, it
    return BUDGET, vals, it


def exhaustive(m, n, s, k, order, max_nodes, deadline):
    """Place ``order[0], order[1], ...`` one value at a time into an ``m x n``
    grid with at most ``s`` values per row and ``k`` per column.

    Rows and columns are opened in order of first use, which removes the
    row and column permutation symmetry. A partial line survives only if
    the values still to be placed can bring its sum back to zero.

    Returns ``(status, cells, nodes)``: ``FOUND`` with a row-major cell list
    (``None`` for empty cells), ``EXHAUSTED`` after a complete search, or
    ``BUDGET`` when ``max_nodes`` or the deadline ran out.
    """
    total = len(order)
    width = max(s, k)
    # top[p][q] / bot[p][q]: sum of the q largest / smallest of order[p:].
    top = []
    bot = []
    for p in range(total + 1):
        rest = sorted(order[p:])
        hi = [0] * (width + 1)
        lo = [0] * (width + 1)
        for q in range(1, width + 1):
            if q <= len(rest):
                hi[q] = hi[q - 1] + rest[-q]
                lo[q] = lo[q - 1] + rest[q - 1]
            else:
                hi[q] = lo[q] = 0
        top.append(hi)
        bot.append(lo)
    avail = [total - p for p in range(total + 1)]

    grid = [None] * (m * n)
    rcnt = [0] * m
    ccnt = [0] * n
    rsum = [0] * m
    csum = [0] * n
    state = {"nodes": 0, "stop": False}

    def viable(p: int, nr: int, nc: int) -> bool:
        left = avail[p]
        hi, lo = top[p], bot[p]
        for r in range(nr):
            q = s - rcnt[r]
            if q == 0:
                if rsum[r] != 0:
                    return False
            elif q > left or not (lo[q] <= -rsum[r] <= hi[q]):
                return False
        for c in range(nc):
            q = k - ccnt[c]
            if q == 0:
                if csum[c] != 0:
                    return False
            elif q > left or not (lo[q] <= -csum[c] <= hi[q]):
                return False
        return True

    def go(p: int, nr: int, nc: int) -> bool:
        if p == total:
            return True
        v = order[p]
        for r in range(min(nr + 1, m)):
            if rcnt[r] == s:
                continue
            for c in range(min(nc + 1, n)):
                idx = r * n + c
                if grid[idx] is not None or ccnt[c] == k:
                    continue
                state["nodes"] += 1
                if state["nodes"] > max_nodes or (
                    state["nodes"] % _CHECK_EVERY == 0 and time.monotonic() > deadline
                ):
                    state["stop"] = True
                    return False
                grid[idx] = v
                rcnt[r] += 1
                ccnt[c] += 1
                rsum[r] += v
                csum[c] += v
                nr2 = nr + 1 if r == nr else nr
                nc2 = nc + 1 if c == nc else nc
                if viable(p + 1, nr2, nc2) and go(p + 1, nr2, nc2):
                    return True
                grid[idx] = None
                rcnt[r] -= 1
                ccnt[c] -= 1
                rsum[r] -= v
                csum[c] -= v
                if state["stop"]:
                    return False
        return False

    if go(0, 0, 0):
        return FOUND, list(grid), state["nodes"]
    return (BUDGET if state["stop"] else EXHAUSTED), None, state["nodes"]
