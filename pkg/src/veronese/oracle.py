"""Brute-force ground truth: codeword and subcode enumeration.

Nothing here touches matroids or Betti numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import kernels
from .code import LinearCode, pack_rows
from .errors import GuardExceeded
from .geometry import message_digits
from .weights import gaussian_binomial

WORD_GUARD = 20_000_000
SUBCODE_GUARD = 1_000_000


@dataclass(frozen=True)
class WeightDistribution:
    counts: dict
    Q: int
    total: int

    def __post_init__(self):
        if sum(self.counts.values()) != self.total:
            raise AssertionError("weight counts do not add up to Q^k")

    def __getitem__(self, w: int) -> int:
        return self.counts.get(w, 0)


def _partial_words(C: LinearCode, rows) -> np.ndarray:
    rows = list(rows)
    Q = C.q
    tabs = C.field.tables
    msgs = message_digits(np.arange(Q ** len(rows), dtype=np.int64), Q, len(rows))
    return kernels.encode_words(msgs, C.generator[rows], tabs.add, tabs.mul)


def word_weight_distribution(C: LinearCode, guard: int = WORD_GUARD) -> WeightDistribution:
    """Weights of all Q^k messages encoded over the code's own field.

    Messages are split into a low and a high half; each half is encoded once
    and every pair is summed coordinatewise inside the kernel.
    """
    Q, k, n = C.q, C.k, C.n
    total = Q ** k
    if total > guard:
        raise GuardExceeded(f"{total} words exceed the word guard {guard}", suggestion="raise --word-guard")
    half = k // 2
    low = _partial_words(C, range(half))
    high = _partial_words(C, range(half, k))
    tally = kernels.split_weight_tally(low, high, C.field.tables.add)
    counts = {w: int(c) for w, c in enumerate(tally) if c}
    return WeightDistribution(counts, Q, total)


def echelon_subspaces(q: int, k: int, r: int):
    """Yield every r-dim subspace of F_q^k as a (count, r) array of row message codes.

    One array per pivot pattern; rows are in reduced echelon form, so each
    subspace appears exactly once.
    """
    if r == 0:
        yield np.zeros((1, 0), dtype=np.int64)
        return
    for pivots in combinations(range(k), r):
        slots = [(t, c) for t, p in enumerate(pivots) for c in range(p + 1, k) if c not in pivots]
        f = len(slots)
        fills = message_digits(np.arange(q ** f, dtype=np.int64), q, f) if f else np.zeros((1, 0), np.int64)
        rows = np.empty((fills.shape[0], r), dtype=np.int64)
        for t, p in enumerate(pivots):
            rows[:, t] = q ** p
        for s, (t, c) in enumerate(slots):
            rows[:, t] += fills[:, s] * q ** c
        yield rows


def subcode_spectrum(C: LinearCode, r: int, guard: int = SUBCODE_GUARD) -> dict[int, int]:
    """Support-weight histogram over all r-dimensional subcodes."""
    q, k = C.q, C.k
    count = gaussian_binomial(k, r, q)
    if count > guard:
        raise GuardExceeded(f"{count} subcodes exceed the subcode guard {guard}",
                            suggestion="raise --subcode-guard")
    if r == 0:
        return {0: 1}
    masks = pack_rows(_partial_words(C, range(k)) != 0)
    tally = np.zeros(C.n + 1, dtype=np.int64)
    for rows in echelon_subspaces(q, k, r):
        acc = masks[rows[:, 0]]
        for t in range(1, r):
            acc = acc | masks[rows[:, t]]
        weight = np.bitwise_count(acc).sum(axis=1)
        tally += np.bincount(weight, minlength=C.n + 1)
    if int(tally.sum()) != count:
        raise AssertionError("echelon enumeration missed subspaces")  # pragma: no cover
    return {w: int(c) for w, c in enumerate(tally) if c}
