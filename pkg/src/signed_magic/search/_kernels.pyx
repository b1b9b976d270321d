# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.

Same algorithms, arithmetic and random stream as ``_kernels_py``.
"""

from libc.math cimport exp, log
from libc.stdlib cimport free, malloc
from libc.stdint cimport int64_t, uint64_t

import time

cdef enum:
    CHECK_EVERY = 4096

FOUND = 0
EXHAUSTED = 1
BUDGET = 2


cdef inline uint64_t _next(uint64_t* state) nogil:
    state[0] += 0x9E3779B97F4A7C15ULL
    cdef uint64_t z = state[0]
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


cdef inline uint64_t _below(uint64_t* state, uint64_t n) nogil:
    return _next(state) % n


cdef inline double _uniform(uint64_t* state) nogil:
    return <double>(_next(state) >> 11) * (1.0 / 9007199254740992.0)


cdef inline int64_t _abs(int64_t x) nogil:
    return -x if x < 0 else x


def anneal(row_of, col_of, int n_lines, values, seed, long long max_iters,
           bint allow_negate, double t_start, double t_end, long long sweep,
           double deadline):
    cdef Py_ssize_t n = len(values)
    cdef int64_t* vals = <int64_t*>malloc(n * sizeof(int64_t))
    cdef int* rows = <int*>malloc(n * sizeof(int))
    cdef int* cols = <int*>malloc(n * sizeof(int))
    cdef int64_t* sums = <int64_t*>malloc(n_lines * sizeof(int64_t))
    cdef uint64_t state = <uint64_t>(int(seed) & 0xFFFFFFFFFFFFFFFF)
    cdef Py_ssize_t i, j
    cdef int64_t tmp, d, v, delta, cost = 0
    cdef int ri, ci, rj, cj
    cdef double alpha, temp
    cdef long long step = 0, it = 0
    cdef int status = BUDGET
    try:
        for i in range(n):
            vals[i] = values[i]
            rows[i] = row_of[i]
            cols[i] = col_of[i]
        for i in range(n_lines):
            sums[i] = 0
        i = n - 1
        while i > 0:
            j = <Py_ssize_t>_below(&state, i + 1)
            tmp = vals[i]; vals[i] = vals[j]; vals[j] = tmp
            i -= 1
        for i in range(n):
            sums[rows[i]] += vals[i]
            sums[cols[i]] += vals[i]
        for i in range(n_lines):
            cost += _abs(sums[i])
        if cost == 0:
            return FOUND, [vals[i] for i in range(n)], 0
        alpha = exp(log(t_end / t_start) / sweep)
        temp = t_start
        while it < max_iters:
            it += 1
            if it % CHECK_EVERY == 0 and time.monotonic() > deadline:
                break
            step += 1
            if step >= sweep:
                step = 0
                temp = t_start
            else:
                temp *= alpha
            i = <Py_ssize_t>_below(&state, n)
            if allow_negate and _below(&state, 5) == 0:
                v = vals[i]
                if v == 0:
                    continue
                ri = rows[i]; ci = cols[i]
                d = -2 * v
                delta = (_abs(sums[ri] + d) - _abs(sums[ri])) + (_abs(sums[ci] + d) - _abs(sums[ci]))
                if delta <= 0 or _uniform(&state) < exp(-(<double>delta) / temp):
                    vals[i] = -v
                    sums[ri] += d
                    sums[ci] += d
                    cost += delta
                    if cost == 0:
                        status = FOUND
                        break
                continue
            j = <Py_ssize_t>_below(&state, n - 1)
            if j >= i:
                j += 1
            d = vals[j] - vals[i]
            if d == 0:
                continue
            ri = rows[i]; ci = cols[i]; rj = rows[j]; cj = cols[j]
            delta = 0
            if ri != rj:
                delta += (_abs(sums[ri] + d) - _abs(sums[ri])) + (_abs(sums[rj] - d) - _abs(sums[rj]))
            if ci != cj:
                delta += (_abs(sums[ci] + d) - _abs(sums[ci])) + (_abs(sums[cj] - d) - _abs(sums[cj]))
            if delta <= 0 or _uniform(&state) < exp(-(<double>delta) / temp):
                tmp = vals[i]; vals[i] = vals[j]; vals[j] = tmp
                if ri != rj:
                    sums[ri] += d
                    sums[rj] -= d
                if ci != cj:
                    sums[ci] += d
                    sums[cj] -= d
                cost += delta
                if cost == 0:
                    status = FOUND
                    break
        return status, [vals[i] for i in range(n)], it
    finally:
        free(vals); free(rows); free(cols); free(sums)


cdef struct Ctx:
    int m, n, s, k, total, width
    int64_t* order
    int64_t* top      # (total + 1) x (width + 1)
    int64_t* bot
    int64_t* grid
    char* filled
    int* rcnt
    int* ccnt
    int64_t* rsum
    int64_t* csum
    long long nodes
    long long max_nodes
    double deadline
    bint stop


cdef bint _viable(Ctx* c, int p, int nr, int nc):
    cdef int left = c.total - p
    cdef int64_t* hi = c.top + p * (c.width + 1)
    cdef int64_t* lo = c.bot + p * (c.width + 1)
    cdef int r, q
    cdef int64_t need
    for r in range(nr):
        q = c.s - c.rcnt[r]
        if q == 0:
            if c.rsum[r] != 0:
                return False
        else:
            need = -c.rsum[r]
            if q > left or not (lo[q] <= need <= hi[q]):
                return False
    for r in range(nc):
        q = c.k - c.ccnt[r]
        if q == 0:
            if c.csum[r] != 0:
                return False
        else:
            need = -c.csum[r]
            if q > left or not (lo[q] <= need <= hi[q]):
                return False
    return True


cdef bint _go(Ctx* c, int p, int nr, int nc):
    if p == c.total:
        return True
    cdef int64_t v = c.order[p]
    cdef int r, col, idx, nr2, nc2
    cdef int rmax = nr + 1 if nr + 1 < c.m else c.m
    cdef int cmax = nc + 1 if nc + 1 < c.n else c.n
    for r in range(rmax):
        if c.rcnt[r] == c.s:
            continue
        for col in range(cmax):
            idx = r * c.n + col
            if c.filled[idx] or c.ccnt[col] == c.k:
                continue
            c.nodes += 1
            if c.nodes > c.max_nodes or (
                c.nodes % CHECK_EVERY == 0 and time.monotonic() > c.deadline
            ):
                c.stop = True
                return False
            c.filled[idx] = 1
            c.grid[idx] = v
            c.rcnt[r] += 1
            c.ccnt[col] += 1
            c.rsum[r] += v
            c.csum[col] += v
            nr2 = nr + 1 if r == nr else nr
            nc2 = nc + 1 if col == nc else nc
            if _viable(c, p + 1, nr2, nc2) and _go(c, p + 1, nr2, nc2):
                return True
            c.filled[idx] = 0
            c.rcnt[r] -= 1
            c.ccnt[col] -= 1
            c.rsum[r] -= v
            c.csum[col] -= v
            if c.stop:
                return False
    return False


def exhaustive(int m, int n, int s, int k, order, long long max_nodes, double deadline):
    cdef Ctx c
    cdef int p, q, i
    c.m = m; c.n = n; c.s = s; c.k = k
    c.total = len(order)
    c.width = s if s > k else k
    c.nodes = 0
    c.max_nodes = max_nodes
    c.deadline = deadline
    c.stop = False
    c.order = <int64_t*>malloc((c.total + 1) * sizeof(int64_t))
    c.top = <int64_t*>malloc((c.total + 1) * (c.width + 1) * sizeof(int64_t))
    c.bot = <int64_t*>malloc((c.total + 1) * (c.width + 1) * sizeof(int64_t))
    c.grid = <int64_t*>malloc(m * n * sizeof(int64_t))
    c.filled = <char*>malloc(m * n * sizeof(char))
    c.rcnt = <int*>malloc(m * sizeof(int))
    c.ccnt = <int*>malloc(n * sizeof(int))
    c.rsum = <int64_t*>malloc(m * sizeof(int64_t))
    c.csum = <int64_t*>malloc(n * sizeof(int64_t))
    try:
        for i in range(c.total):
            c.order[i] = order[i]
        for p in range(c.total + 1):
            rest = sorted(order[p:])
            c.top[p * (c.width + 1)] = 0
            c.bot[p * (c.width + 1)] = 0
            for q in range(1, c.width + 1):
                if q <= len(rest):
                    c.top[p * (c.width + 1) + q] = c.top[p * (c.width + 1) + q - 1] + rest[len(rest) - q]
                    c.bot[p * (c.width + 1) + q] = c.bot[p * (c.width + 1) + q - 1] + rest[q - 1]
                else:
                    c.top[p * (c.width + 1) + q] = 0
                    c.bot[p * (c.width + 1) + q] = 0
        for i in range(m * n):
            c.filled[i] = 0
            c.grid[i] = 0
        for i in range(m):
            c.rcnt[i] = 0
            c.rsum[i] = 0
        for i in range(n):
            c.ccnt[i] = 0
            c.csum[i] = 0
        if _go(&c, 0, 0, 0):
            cells = [c.grid[i] if c.filled[i] else None for i in range(m * n)]
            return FOUND, cells, c.nodes
        return (BUDGET if c.stop else EXHAUSTED), None, c.nodes
    finally:
        free(c.order); free(c.top); free(c.bot); free(c.grid); free(c.filled)
        free(c.rcnt); free(c.ccnt); free(c.rsum); free(c.csum)
