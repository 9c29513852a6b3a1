"""Pure-numpy versions of the hot kernels.

Every function here has a twin with the same signature in ``_numba``.
Both must return identical integers.
"""

import numpy as np


def subset_zeta(a, n):
    """In-place sum over subsets: ``a[S] <- sum(a[T] for T subset of S)``."""
    size = 1 << n
    for b in range(n):
        step = 1 << b
        v = a.reshape(size // (2 * step), 2, step)
        v[:, 1, :] += v[:, 0, :]
    return a


def minimal_members(null, n):
    """Flag subsets whose nullity drops on every single-element deletion.

    The empty set is flagged too; callers filter by nullity.
    """
    size = 1 << n
    out = np.ones(size, dtype=np.bool_)
    for b in range(n):
        step = 1 << b
        v = null.reshape(size // (2 * step), 2, step)
        o = out.reshape(size // (2 * step), 2, step)
        o[:, 1, :] &= v[:, 0, :] < v[:, 1, :]
    return out


def encode_words(msgs, gen, add, mul):
    """Codewords ``msgs @ gen`` over a field given by its add/mul tables."""
    if gen.shape[0] == 0:
        return np.zeros((msgs.shape[0], gen.shape[1]), dtype=np.int64)
    acc = mul[msgs[:, 0][:, None], gen[0][None, :]]
    for i in range(1, gen.shape[0]):
        acc = add[acc, mul[msgs[:, i][:, None], gen[i][None, :]]]
    return acc.astype(np.int64)


def split_weight_tally(low, high, add):
    """Weight histogram of ``low[a] + high[b]`` over every pair ``(a, b)``."""
    n = low.shape[1]
    tally = np.zeros(n + 1, dtype=np.int64)
    for h in range(high.shape[0]):
        words = add[high[h][None, :], low]
        tally += np.bincount(np.count_nonzero(words, axis=1), minlength=n + 1)
    return tally


def conic_zero_stats(cw, line_through, incidence):
    """Zero count per word and whether all zeros sit on one line."""
    zeros = cw == 0
    counts = zeros.sum(axis=1).astype(np.int64)
    collinear = np.zeros(cw.shape[0], dtype=np.bool_)
    sel = np.nonzero(counts >= 2)[0]
    if sel.size:
        z = zeros[sel]
        p1 = np.argmax(z, axis=1)
        z2 = z.copy()
        z2[np.arange(sel.size), p1] = False
        p2 = np.argmax(z2, axis=1)
        lines = line_through[p1, p2]
        on = incidence[lines]
        collinear[sel] = (z & on).sum(axis=1) == counts[sel]
    return counts, collinear


def count_triangles(incidence, line_through):
    n = incidence.shape[1]
    total = 0
    for a in range(n):
        for b in range(a + 1, n):
            off = ~incidence[line_through[a, b], b + 1:]
            total += int(off.sum())
    return total


def count_quadrilaterals(incidence, line_through):
    n = incidence.shape[1]
    total = 0
    idx = np.arange(n)
    for a in range(n):
        for b in range(a + 1, n):
            ab = incidence[line_through[a, b]]
            cs = idx[(idx > b) & ~ab]
            if cs.size == 0:
                continue
            # rows: third point c, columns: fourth point d
            ok = ~ab[None, :] & (idx[None, :] > cs[:, None])
            ok &= ~incidence[line_through[a, cs]]
            ok &= ~incidence[line_through[b, cs]]
            total += int(ok.sum())
    return total


def aggregate_betti(null, pc, g, level, n, kmax):
    """Sum ``|g|`` into cells (elongated nullity, cardinality)."""
    i = np.maximum(null.astype(np.int64) - level, 0)
    flat = i * (n + 1) + pc.astype(np.int64)
    table = np.zeros((kmax + 1) * (n + 1), dtype=np.int64)
    np.add.at(table, flat, np.abs(g))
    return table.reshape(kmax + 1, n + 1)
