"""Linear codes over finite fields; the Veronese code of the projective plane."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import kernels
from . import linalg
from .errors import GuardExceeded, InvalidInput
from .field import DEFAULT_CAP, FieldDescriptor, FieldElement, extend_field
from .geometry import message_digits, plane


@dataclass(frozen=True)
class LinearCode:
    """A code given by a k x n generator matrix of field codes."""

    field: FieldDescriptor
    generator: np.ndarray
    provenance: dict | None = field(default=None, compare=False)

    def __post_init__(self):
        g = np.array(self.generator, dtype=np.int64)
        g.setflags(write=False)
        object.__setattr__(self, "generator", g)
        r = linalg.rank(self.field, g.tolist())
        if r != g.shape[0]:
            raise InvalidInput(f"generator has rank {r}, expected {g.shape[0]}")

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    @property
    def n(self) -> int:
        return self.generator.shape[1]

    @property
    def q(self) -> int:
        return self.field.cardinality

    def matrix(self) -> list[list[FieldElement]]:
        F = self.field
        return [[F(int(c)) for c in row] for row in self.generator]

    def parity_check(self) -> np.ndarray:
        """An (n-k) x n parity-check matrix (right null space of the generator)."""
        ns = linalg.nullspace(self.field, self.generator.tolist())
        return np.array(ns, dtype=np.int64).reshape(len(ns), self.n)

    def all_codewords(self, guard: int = 1 << 22) -> np.ndarray:
        """Every codeword, row ``m`` encoding the message with code ``m``."""
        total = self.q ** self.k
        if total > guard:
            raise GuardExceeded(f"{total} codewords exceed the guard {guard}")
        msgs = message_digits(np.arange(total, dtype=np.int64), self.q, self.k)
        tabs = self.field.tables
        return kernels.encode_words(msgs, self.generator, tabs.add, tabs.mul)

    def support_masks(self, guard: int = 1 << 22) -> np.ndarray:
        """Support bitmask of every codeword, shape ``(q^k, words)`` of uint64."""
        cw = self.all_codewords(guard) != 0
        return pack_rows(cw)


def pack_rows(bits: np.ndarray) -> np.ndarray:
    """Pack a boolean (N, n) array into (N, ceil(n/64)) uint64 little-endian words."""
    N, n = bits.shape
    W = max(1, -(-n // 64))
    out = np.zeros((N, W), dtype=np.uint64)
    for j in range(n):
        w, b = divmod(j, 64)
        out[:, w] |= bits[:, j].astype(np.uint64) << np.uint64(b)
    return out


def build_veronese_code(F: FieldDescriptor) -> LinearCode:
    """The [q^2+q+1, 6] code whose columns evaluate the conic monomials at P^2(F)."""
    if F.cardinality < 2:
        raise InvalidInput("need a field with at least two elements")
    geo = plane(F)
    prov = {"point_order": "lexicographic-normalized", "point_order_hash": geo.point_order_hash()}
    return LinearCode(F, geo.monomial_matrix(), prov)


def extend_scalars(C: LinearCode, m: int, cap: int = DEFAULT_CAP) -> LinearCode:
    """Same generator read over the degree-m extension of the code's field."""
    if m < 1:
        raise InvalidInput("extension degree must be positive")
    if m == 1:
        return C
    E = extend_field(C.field, m, cap=cap)
    return LinearCode(E, C.generator, C.provenance)


class Encoded(NamedTuple):
    codeword: tuple[FieldElement, ...]
    support: frozenset[int]
    weight: int


def encode_support(C: LinearCode, message) -> Encoded:
    msg = [int(x) for x in message]
    if len(msg) != C.k:
        raise InvalidInput(f"message length {len(msg)} != dimension {C.k}")
    F = C.field
    word = []
    for j in range(C.n):
        s = 0
        for i in range(C.k):
            s = F.add(s, F.mul(msg[i], int(C.generator[i, j])))
        word.append(s)
    support = frozenset(j for j, c in enumerate(word) if c)
    return Encoded(tuple(F(c) for c in word), support, len(support))
