"""numba-compiled versions of the hot kernels (see ``_numpy`` for the contracts)."""

import numpy as np
from numba import njit, prange


@njit(cache=True)
def subset_zeta(a, n):
    size = 1 << n
    for b in range(n):
        step = 1 << b
        for m in range(size):
            if m & step:
                a[m] += a[m ^ step]
    return a


@njit(cache=True)
def minimal_members(null, n):
    size = 1 << n
    out = np.ones(size, dtype=np.bool_)
    for m in range(size):
        v = null[m]
        for b in range(n):
            bit = 1 << b
            if m & bit and null[m ^ bit] >= v:
                out[m] = False
                break
    return out


@njit(cache=True)
def encode_words(msgs, gen, add, mul):
    N = msgs.shape[0]
    k, n = gen.shape
    out = np.zeros((N, n), dtype=np.int64)
    for r in range(N):
        for j in range(n):
            s = 0
            for i in range(k):
                s = add[s, mul[msgs[r, i], gen[i, j]]]
            out[r, j] = s
    return out


@njit(cache=True, parallel=True)
def split_weight_tally(low, high, add):
    L, n = low.shape
    H = high.shape[0]
    rows = np.zeros((H, n + 1), dtype=np.int64)
    for h in prange(H):
        hw = high[h]
        for a in range(L):
            w = 0
            for j in range(n):
                if add[hw[j], low[a, j]] != 0:
                    w += 1
            rows[h, w] += 1
    tally = np.zeros(n + 1, dtype=np.int64)
    for h in range(H):
        for w in range(n + 1):
            tally[w] += rows[h, w]
    return tally


@njit(cache=True)
def conic_zero_stats(cw, line_through, incidence):
    N, n = cw.shape
    counts = np.zeros(N, dtype=np.int64)
    collinear = np.zeros(N, dtype=np.bool_)
    for r in range(N):
        c = 0
        p1 = -1
        p2 = -1
        for j in range(n):
            if cw[r, j] == 0:
                c += 1
                if p1 < 0:
                    p1 = j
                elif p2 < 0:
                    p2 = j
        counts[r] = c
        if c >= 2:
            line = line_through[p1, p2]
            ok = True
            for j in range(n):
                if cw[r, j] == 0 and not incidence[line, j]:
                    ok = False
                    break
            collinear[r] = ok
    return counts, collinear


@njit(cache=True)
def count_triangles(incidence, line_through):
    n = incidence.shape[1]
    total = 0
    for a in range(n):
        for b in range(a + 1, n):
            ab = line_through[a, b]
            for c in range(b + 1, n):
                if not incidence[ab, c]:
                    total += 1
    return total


@njit(cache=True)
def count_quadrilaterals(incidence, line_through):
    n = incidence.shape[1]
    total = 0
    for a in range(n):
        for b in range(a + 1, n):
            ab = line_through[a, b]
            for c in range(b + 1, n):
                if incidence[ab, c]:
                    continue
                ac = line_through[a, c]
                bc = line_through[b, c]
                for d in range(c + 1, n):
                    if not (incidence[ab, d] or incidence[ac, d] or incidence[bc, d]):
                        total += 1
    return total


@njit(cache=True)
def aggregate_betti(null, pc, g, level, n, kmax):
    table = np.zeros((kmax + 1, n + 1), dtype=np.int64)
    for m in range(null.shape[0]):
        i = null[m] - level
        if i < 0:
            i = 0
        v = g[m]
        if v < 0:
            v = -v
        table[i, pc[m]] += v
    return table
