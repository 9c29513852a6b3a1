"""Matroids realized by matrices over finite fields, with elongation and restriction.

Subsets of the ground set are passed either as an iterable of indices or as an
``int`` bitmask (bit ``e`` set iff element ``e`` is in the subset).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np

from . import kernels
from . import linalg
from .code import LinearCode
from .errors import GuardExceeded, InvalidInput
from .field import FieldDescriptor
from .geometry import ConicClass, message_digits, plane

DEFAULT_GUARD = 24

PARITY_CHECK = "parity-check-matroid"
GENERATOR = "generator-matroid"


def as_mask(X, n: int) -> int:
    if isinstance(X, (int, np.integer)):
        m = int(X)
        if m < 0 or m >> n:
            raise InvalidInput(f"subset mask {m:#x} out of range for ground size {n}")
        return m
    m = 0
    for e in X:
        e = int(e)
        if not 0 <= e < n:
            raise InvalidInput(f"element {e} out of range for ground size {n}")
        m |= 1 << e
    return m


def mask_elements(mask: int) -> list[int]:
    out, e = [], 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return out


def _popcounts(n: int) -> np.ndarray:
    return np.bitwise_count(np.arange(1 << n, dtype=np.uint64)).astype(np.int8)


def _support_bits(words: np.ndarray) -> np.ndarray:
    """Support bitmask (int64) per codeword row; requires n <= 62."""
    n = words.shape[1]
    weights = np.left_shift(np.int64(1), np.arange(n, dtype=np.int64))
    return ((words != 0).astype(np.int64) * weights).sum(axis=1)


def _nullity_lattice(supports: np.ndarray, n: int, q: int, dim: int) -> np.ndarray:
    """Nullity of every subset from the supports of all words of the kernel code.

    The words supported inside ``X`` form a subspace of dimension ``n(X)``, so
    a subset-sum of the support histogram gives ``q**n(X)``.
    """
    counts = np.bincount(supports, minlength=1 << n).astype(np.int64)
    kernels.subset_zeta(counts, n)
    null = np.zeros(1 << n, dtype=np.int8)
    for t in range(1, dim + 1):
        null[counts >= q ** t] = t
    if not np.array_equal(counts, np.power(np.int64(q), null.astype(np.int64))):
        raise AssertionError("word counts are not powers of q")  # pragma: no cover
    return null


@dataclass(frozen=True)
class NullityProfile:
    """Elongated nullity of every subset, indexed by bitmask."""

    n: int
    nullity: np.ndarray
    popcount: np.ndarray

    def counts(self) -> Counter:
        """``(cardinality, nullity) -> number of subsets``."""
        flat = self.popcount.astype(np.int64) * 64 + self.nullity.astype(np.int64)
        vals, cnt = np.unique(flat, return_counts=True)
        return Counter({(int(v) // 64, int(v) % 64): int(c) for v, c in zip(vals, cnt)})

    def class_sizes(self) -> dict[int, int]:
        """``i -> |N_i|``."""
        vals, cnt = np.unique(self.nullity, return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, cnt)}


class Matroid:
    """Matroid of a matrix, possibly elongated.

    ``mode`` is ``PARITY_CHECK`` when ``matrix`` generates a code and the
    matroid is the one of that code's parity-check matrix; nullity is then
    ``n(X) = k - rank(columns of E minus X)``, so no parity-check matrix is
    needed.  ``GENERATOR`` uses linear independence of ``matrix`` columns.
    """

    def __init__(self, field: FieldDescriptor, matrix, mode: str = PARITY_CHECK,
                 offset: int = 0, guard: int = DEFAULT_GUARD, code: LinearCode | None = None):
        if mode not in (PARITY_CHECK, GENERATOR):
            raise InvalidInput(f"unknown matroid mode {mode!r}")
        self.field = field
        self.matrix = np.asarray(matrix, dtype=np.int64)
        self.mode = mode
        self.offset = int(offset)
        self.guard = guard
        self.code = code
        self._base = None

    def _share(self, other: Matroid) -> Matroid:
        other._base = self._base or self
        return other

    @property
    def base(self) -> Matroid:
        return self._base or self

    @property
    def n(self) -> int:
        return self.matrix.shape[1]

    @cached_property
    def _matrix_rank(self) -> int:
        return linalg.rank(self.field, self.matrix.tolist())

    @property
    def base_rank(self) -> int:
        if self.mode == PARITY_CHECK:
            return self.n - self._matrix_rank
        return self._matrix_rank

    @property
    def rank(self) -> int:
        return min(self.n, self.base_rank + self.offset)

    @property
    def max_nullity(self) -> int:
        return self.n - self.rank

    def base_nullity(self, X) -> int:
        mask = as_mask(X, self.n)
        elems = mask_elements(mask)
        rows = self.matrix.tolist()
        if self.mode == PARITY_CHECK:
            rest = [e for e in range(self.n) if not mask >> e & 1]
            return self._matrix_rank - linalg.column_rank(self.field, rows, rest)
        return len(elems) - linalg.column_rank(self.field, rows, elems)

    def rank_nullity(self, X) -> tuple[int, int]:
        mask = as_mask(X, self.n)
        null = max(0, self.base_nullity(mask) - self.offset)
        size = bin(mask).count("1")
        return size - null, null

    def is_independent(self, X) -> bool:
        return self.rank_nullity(X)[1] == 0

    def elongate(self, l: int) -> Matroid:
        if not 0 <= l <= self.n - self.rank:
            raise InvalidInput(f"elongation {l} outside [0, {self.n - self.rank}]")
        out = Matroid(self.field, self.matrix, self.mode, self.offset + l, self.guard, self.code)
        return self._share(out)

    def restrict(self, sigma) -> MatroidView:
        return MatroidView(self, as_mask(sigma, self.n))

    # -- lattice-wide data -------------------------------------------------

    @cached_property
    def kernel_rows(self) -> np.ndarray:
        """Basis of the code whose words supported in X span an n(X)-dim space."""
        if self.mode == PARITY_CHECK:
            return self.matrix
        ns = linalg.nullspace(self.field, self.matrix.tolist(), self.n)
        return np.array(ns, dtype=np.int64).reshape(len(ns), self.n)

    @cached_property
    def kernel_words(self) -> np.ndarray:
        rows = self.kernel_rows
        q, dim = self.field.cardinality, rows.shape[0]
        if dim == 0:
            return np.zeros((1, self.n), dtype=np.int64)
        msgs = message_digits(np.arange(q ** dim, dtype=np.int64), q, dim)
        tabs = self.field.tables
        return kernels.encode_words(msgs, rows, tabs.add, tabs.mul)

    def _base_lattice(self) -> np.ndarray:
        base = self.base
        if "_lattice" not in base.__dict__:
            if base.n > base.guard:
                raise GuardExceeded(
                    f"ground size {base.n} exceeds the exhaustive guard {base.guard}",
                    suggestion="the structural route",
                )
            sup = _support_bits(base.kernel_words)
            base.__dict__["_lattice"] = _nullity_lattice(
                sup, base.n, base.field.cardinality, base.kernel_rows.shape[0])
        return base.__dict__["_lattice"]

    def profile(self) -> NullityProfile:
        null = self._base_lattice()
        if self.offset:
            null = np.maximum(null.astype(np.int16) - self.offset, 0).astype(np.int8)
        return NullityProfile(self.n, null, _popcounts(self.n))

    def euler_lattice(self) -> np.ndarray:
        """``chi(M_sigma)`` for every sigma, via a subset-sum of the signed independence indicator."""
        prof = self.profile()
        sign = 1 - 2 * (prof.popcount.astype(np.int64) & 1)
        f = np.where(prof.nullity == 0, sign, 0).astype(np.int64)
        return kernels.subset_zeta(f, self.n)

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.rank}, mode={self.mode}, offset={self.offset})"


class MatroidView:
    """Restriction of a matroid to a subset; shares the parent's realization."""

    def __init__(self, parent: Matroid, mask: int):
        self.parent = parent
        self.mask = mask
        self.elements = mask_elements(mask)

    @property
    def n(self) -> int:
        return len(self.elements)

    def _lift(self, X) -> int:
        local = as_mask(X, self.parent.n)
        if local & ~self.mask:
            raise InvalidInput("subset is not inside the restriction")
        return local

    def rank_nullity(self, X) -> tuple[int, int]:
        return self.parent.rank_nullity(self._lift(X))

    @property
    def rank(self) -> int:
        return self.parent.rank_nullity(self.mask)[0]

    def local_nullities(self) -> np.ndarray:
        """Elongated nullity of every subset of the view, in local bit order."""
        k = self.n
        if k > self.parent.guard:
            raise GuardExceeded(f"restriction of size {k} exceeds the guard {self.parent.guard}")
        M = self.parent
        words = M.kernel_words
        inside = ~np.any(words[:, [e for e in range(M.n) if not self.mask >> e & 1]] != 0, axis=1) \
            if self.n < M.n else np.ones(words.shape[0], dtype=bool)
        local = words[inside][:, self.elements]
        sup = _support_bits(local) if k else np.zeros(int(inside.sum()), dtype=np.int64)
        null = _nullity_lattice(sup, k, M.field.cardinality, M.kernel_rows.shape[0])
        if M.offset:
            null = np.maximum(null.astype(np.int16) - M.offset, 0).astype(np.int8)
        return null

    def independent_count(self) -> int:
        return int((self.local_nullities() == 0).sum())

    def circuits(self) -> list[frozenset[int]]:
        null = self.local_nullities()
        minimal = kernels.minimal_members(null, self.n)
        out = []
        for m in np.nonzero(minimal & (null == 1))[0]:
            out.append(frozenset(self.elements[b] for b in mask_elements(int(m))))
        return sorted(out, key=lambda s: (len(s), sorted(s)))


def parity_check_matroid(C: LinearCode, via: str = "dual", guard: int = DEFAULT_GUARD) -> Matroid:
    """Matroid of the parity-check matrix of ``C``.

    ``via="dual"`` works from the generator matrix alone; ``via="nullspace"``
    materializes a parity-check matrix and uses its column independence.
    """
    if via == "dual":
        return Matroid(C.field, C.generator, PARITY_CHECK, guard=guard, code=C)
    if via == "nullspace":
        return Matroid(C.field, C.parity_check(), GENERATOR, guard=guard, code=C)
    raise InvalidInput(f"unknown route {via!r}")


def rank_nullity(M: Matroid, X) -> tuple[int, int]:
    return M.rank_nullity(X)


def elongate(M: Matroid, l: int) -> Matroid:
    return M.elongate(l)


def restrict(M: Matroid, sigma) -> MatroidView:
    return M.restrict(sigma)


def nullity_profile(M: Matroid) -> NullityProfile:
    return M.profile()


def euler_characteristic(view) -> int:
    """Alternating count of independent sets of a matroid or restriction view."""
    if isinstance(view, Matroid):
        view = view.restrict((1 << view.n) - 1)
    if view.n == 0:
        return 1
    null = view.local_nullities()
    sign = 1 - 2 * (_popcounts(view.n).astype(np.int64) & 1)
    return int(sign[null == 0].sum())


# -- cycles ----------------------------------------------------------------

def _is_veronese(M: Matroid) -> bool:
    C = M.code
    return (C is not None and C.provenance is not None and M.mode in (PARITY_CHECK, GENERATOR)
            and C.k == 6 and C.n == plane(C.field).n)


def cycles(M: Matroid, i: int, method: str = "auto", limit: int = 2_000_000) -> list[frozenset[int]]:
    """Inclusion-minimal subsets of elongated nullity ``i``, sorted by (size, elements)."""
    if not 1 <= i <= M.max_nullity:
        raise InvalidInput(f"nullity {i} outside [1, {M.max_nullity}]")
    method = _pick(M, method)
    if method == "exhaustive":
        prof = M.profile()
        minimal = kernels.minimal_members(prof.nullity, M.n)
        found = [frozenset(mask_elements(int(m))) for m in np.nonzero(minimal & (prof.nullity == i))[0]]
    else:
        total = sum(cycle_census(M, i, "structural").values())
        if total > limit:
            raise GuardExceeded(f"{total} cycles exceed the listing limit {limit}", suggestion="cycle_census")
        found = list(_structural_cycles(M, i + M.offset))
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def cycle_census(M: Matroid, i: int, method: str = "auto") -> dict[int, int]:
    """``cardinality -> number of cycles of nullity i``."""
    if not 1 <= i <= M.max_nullity:
        raise InvalidInput(f"nullity {i} outside [1, {M.max_nullity}]")
    method = _pick(M, method)
    if method == "exhaustive":
        return dict(sorted(Counter(len(s) for s in cycles(M, i, "exhaustive")).items()))
    from .geometry import conic_census, count_configurations

    F = M.code.field
    q = F.cardinality
    n = q * q + q + 1
    t = i + M.offset
    if t == 1:
        cen = conic_census(F)
        out = {n - (2 * q + 1): cen.two_lines, n - (q + 1): cen.irreducible}
    elif t == 2:
        out = {n - (q + 2): count_configurations(F, "line-plus-point"),
               n - 4: count_configurations(F, "quadrilateral")}
    elif t == 3:
        out = {n - (q + 1): count_configurations(F, "line"), n - 3: count_configurations(F, "triangle")}
    elif t == 4:
        out = {n - 2: count_configurations(F, "point-pair")}
    elif t == 5:
        out = {n - 1: count_configurations(F, "single-point")}
    else:
        out = {n: 1}
    return dict(sorted(out.items()))


def _pick(M: Matroid, method: str) -> str:
    if method not in ("auto", "exhaustive", "structural"):
        raise InvalidInput(f"unknown method {method!r}")
    structural_ok = _is_veronese(M) and M.code.field.cardinality >= 4
    if method == "auto":
        method = "exhaustive" if M.n <= M.guard else "structural"
    if method == "structural" and not structural_ok:
        raise GuardExceeded("the structural route needs a Veronese code with q >= 4",
                            suggestion="--method exhaustive")
    if method == "exhaustive" and M.n > M.guard:
        raise GuardExceeded(f"ground size {M.n} exceeds the exhaustive guard {M.guard}",
                            suggestion="--method structural")
    return method


def conic_point_sets(F: FieldDescriptor, cls: ConicClass) -> list[tuple[int, ...]]:
    """Rational point sets of all conics of one class (explicit enumeration)."""
    from .geometry import normalized_message_codes

    geo = plane(F)
    q = F.cardinality
    tabs = F.tables
    G = geo.monomial_matrix()
    codes = normalized_message_codes(q)
    out = []
    for start in range(0, codes.shape[0], 1 << 15):
        msgs = message_digits(codes[start:start + (1 << 15)], q, 6)
        cw = kernels.encode_words(msgs, G, tabs.add, tabs.mul)
        zc, col = kernels.conic_zero_stats(cw, geo.line_through, geo.incidence)
        if cls is ConicClass.IRREDUCIBLE:
            sel = (zc == q + 1) & ~col
        elif cls is ConicClass.DOUBLE_LINE:
            sel = (zc == q + 1) & col
        elif cls is ConicClass.TWO_LINES:
            sel = zc == 2 * q + 1
        else:
            sel = zc == 1
        for row in cw[sel]:
            out.append(tuple(int(j) for j in np.nonzero(row == 0)[0]))
    return out


def _structural_cycles(M: Matroid, t: int):
    """Complements of the point configurations whose complements are minimal in N_t."""
    F = M.code.field
    geo = plane(F)
    n = geo.n
    lines = [tuple(int(p) for p in np.nonzero(geo.incidence[li])[0]) for li in range(n)]
    full = frozenset(range(n))

    def comp(pts):
        return full - frozenset(pts)

    if t == 1:
        for a, b in combinations(range(n), 2):
            yield comp(set(lines[a]) | set(lines[b]))
        for pts in conic_point_sets(F, ConicClass.IRREDUCIBLE):
            yield comp(pts)
    elif t == 2:
        for ln in lines:
            on = set(ln)
            for p in range(n):
                if p not in on:
                    yield comp(on | {p})
        for quad in combinations(range(n), 4):
            if not any(geo.is_collinear(tri) for tri in combinations(quad, 3)):
                yield comp(quad)
    elif t == 3:
        for ln in lines:
            yield comp(ln)
        for tri in combinations(range(n), 3):
            if not geo.is_collinear(tri):
                yield comp(tri)
    elif t == 4:
        for pair in combinations(range(n), 2):
            yield comp(pair)
    elif t == 5:
        for p in range(n):
            yield comp((p,))
    else:
        yield full
