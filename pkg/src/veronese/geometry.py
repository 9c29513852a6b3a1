"""Points, lines and conics of the projective plane over a finite field."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import InvalidInput, VeroneseError
from .field import FieldDescriptor, FieldElement

MONOMIALS = ("x^2", "xy", "xz", "y^2", "yz", "z^2")


class ConicClass(str, Enum):
    DOUBLE_LINE = "DoubleLine"
    TWO_LINES = "TwoDistinctLines"
    IRREDUCIBLE = "Irreducible"
    SINGLE_POINT = "SinglePoint"


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple[FieldElement, FieldElement, FieldElement]
    index: int


@dataclass(frozen=True)
class ProjLine:
    coeffs: tuple[FieldElement, FieldElement, FieldElement]
    incident: tuple[int, ...]
    index: int


@dataclass(frozen=True)
class Conic:
    coeffs: tuple[FieldElement, ...]
    points: tuple[int, ...]
    cls: ConicClass


class ConicCensus(NamedTuple):
    double_line: int
    two_lines: int
    irreducible: int
    single_point: int


def normalized_triples(Q: int) -> list[tuple[int, int, int]]:
    """Projective triples with first nonzero coordinate 1, lexicographic order."""
    out = [(0, 0, 1)]
    out += [(0, 1, a) for a in range(Q)]
    out += [(1, a, b) for a in range(Q) for b in range(Q)]
    return out


def normalize(F: FieldDescriptor, codes) -> tuple[int, ...]:
    codes = [int(c) for c in codes]
    lead = next((c for c in codes if c), None)
    if lead is None:
        raise InvalidInput("the zero vector has no projective point")
    inv = F.inv(lead)
    return tuple(F.mul(inv, c) for c in codes)


class PlaneGeometry:
    """Incidence structure of P^2(F), fixed point and line orders included."""

    def __init__(self, F: FieldDescriptor):
        self.field = F
        self.q = F.cardinality
        triples = normalized_triples(self.q)
        self.n = len(triples)
        self.coords = np.array(triples, dtype=np.int64)
        self.index_of = {t: i for i, t in enumerate(triples)}
        incidence = np.zeros((self.n, self.n), dtype=np.bool_)
        for li, (a, b, c) in enumerate(triples):
            for pi, (x, y, z) in enumerate(triples):
                v = F.add(F.add(F.mul(a, x), F.mul(b, y)), F.mul(c, z))
                incidence[li, pi] = v == 0
        self.incidence = incidence
        self.incidence.setflags(write=False)
        line_through = np.full((self.n, self.n), -1, dtype=np.int64)
        for li in range(self.n):
            pts = np.nonzero(incidence[li])[0]
            line_through[np.ix_(pts, pts)] = li
        np.fill_diagonal(line_through, -1)
        self.line_through = line_through
        self.line_through.setflags(write=False)

    @property
    def points(self) -> list[ProjPoint]:
        F = self.field
        return [ProjPoint(tuple(F(int(c)) for c in t), i) for i, t in enumerate(self.coords)]

    @property
    def lines(self) -> list[ProjLine]:
        F = self.field
        return [
            ProjLine(tuple(F(int(c)) for c in t), tuple(int(p) for p in np.nonzero(self.incidence[i])[0]), i)
            for i, t in enumerate(self.coords)
        ]

    def point_order_hash(self) -> str:
        payload = json.dumps(self.coords.tolist(), separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def monomial_matrix(self) -> np.ndarray:
        """6 x n matrix of degree-2 monomials evaluated at every point."""
        F = self.field
        cols = []
        for x, y, z in self.coords.tolist():
            cols.append([F.mul(x, x), F.mul(x, y), F.mul(x, z), F.mul(y, y), F.mul(y, z), F.mul(z, z)])
        return np.array(cols, dtype=np.int64).T.copy()

    def is_collinear(self, pts) -> bool:
        pts = list(pts)
        if len(pts) <= 2:
            return True
        line = self.line_through[pts[0], pts[1]]
        return bool(self.incidence[line, pts].all())


@lru_cache(maxsize=32)
def plane(F: FieldDescriptor) -> PlaneGeometry:
    return PlaneGeometry(F)


def enumerate_points(F: FieldDescriptor) -> list[ProjPoint]:
    return plane(F).points


def enumerate_lines(F: FieldDescriptor) -> list[ProjLine]:
    return plane(F).lines


def _conic_value(F, coeffs, point) -> int:
    x, y, z = point
    mons = (F.mul(x, x), F.mul(x, y), F.mul(x, z), F.mul(y, y), F.mul(y, z), F.mul(z, z))
    v = 0
    for a, m in zip(coeffs, mons):
        v = F.add(v, F.mul(a, m))
    return v


def _classify(q: int, count: int, collinear: bool) -> ConicClass:
    if count == 1:
        return ConicClass.SINGLE_POINT
    if count == 2 * q + 1:
        return ConicClass.TWO_LINES
    if count == q + 1:
        return ConicClass.DOUBLE_LINE if collinear else ConicClass.IRREDUCIBLE
    raise VeroneseError(f"conic with {count} rational points over F_{q}: arithmetic is broken")


def classify_conic(F: FieldDescriptor, coeffs) -> Conic:
    """Classify ``a x^2 + b xy + c xz + d y^2 + e yz + f z^2`` by its rational points."""
    codes = [int(c) for c in coeffs]
    if len(codes) != 6:
        raise InvalidInput("a conic needs 6 coefficients")
    if not any(codes):
        raise InvalidInput("the zero form is not a conic")
    codes = normalize(F, codes)
    geo = plane(F)
    pts = tuple(i for i, p in enumerate(geo.coords.tolist()) if _conic_value(F, codes, p) == 0)
    cls = _classify(F.cardinality, len(pts), geo.is_collinear(pts))
    return Conic(tuple(F(c) for c in codes), pts, cls)


def normalized_message_codes(Q: int, k: int = 6) -> np.ndarray:
    """Codes ``sum(m_i Q^i)`` of all nonzero k-vectors with first nonzero entry 1."""
    blocks = []
    for lead in range(k):
        free = k - lead - 1
        rest = np.arange(Q ** free, dtype=np.int64)
        blocks.append(Q ** lead + rest * Q ** (lead + 1))
    return np.concatenate(blocks)


def message_digits(codes: np.ndarray, Q: int, k: int) -> np.ndarray:
    out = np.empty((codes.shape[0], k), dtype=np.int64)
    c = codes.copy()
    for i in range(k):
        out[:, i] = c % Q
        c //= Q
    return out


def conic_census(F: FieldDescriptor, chunk: int = 1 << 15) -> ConicCensus:
    """Classify all (q^6-1)/(q-1) projective conics by direct evaluation."""
    geo = plane(F)
    q = F.cardinality
    tabs = F.tables
    G = geo.monomial_matrix()
    codes = normalized_message_codes(q)
    counts = {c: 0 for c in ConicClass}
    for start in range(0, codes.shape[0], chunk):
        msgs = message_digits(codes[start:start + chunk], q, 6)
        cw = kernels.encode_words(msgs, G, tabs.add, tabs.mul)
        zc, col = kernels.conic_zero_stats(cw, geo.line_through, geo.incidence)
        single = zc == 1
        two = zc == 2 * q + 1
        small = zc == q + 1
        bad = ~(single | two | small)
        if bad.any():
            raise VeroneseError(f"conic with {int(zc[bad][0])} points over F_{q}: arithmetic is broken")
        counts[ConicClass.SINGLE_POINT] += int(single.sum())
        counts[ConicClass.TWO_LINES] += int(two.sum())
        counts[ConicClass.DOUBLE_LINE] += int((small & col).sum())
        counts[ConicClass.IRREDUCIBLE] += int((small & ~col).sum())
    return ConicCensus(
        counts[ConicClass.DOUBLE_LINE],
        counts[ConicClass.TWO_LINES],
        counts[ConicClass.IRREDUCIBLE],
        counts[ConicClass.SINGLE_POINT],
    )


CONFIGURATION_KINDS = ("line-plus-point", "quadrilateral", "triangle", "line", "point-pair", "single-point")


def count_configurations(F: FieldDescriptor, kind: str) -> int:
    """Count point configurations in P^2(F) by direct enumeration."""
    geo = plane(F)
    n = geo.n
    if kind == "line-plus-point":
        return int(sum(n - int(row.sum()) for row in geo.incidence))
    if kind == "quadrilateral":
        return int(kernels.count_quadrilaterals(geo.incidence, geo.line_through))
    if kind == "triangle":
        return int(kernels.count_triangles(geo.incidence, geo.line_through))
    if kind == "line":
        return int(geo.incidence.any(axis=1).sum())
    if kind == "point-pair":
        return int(sum(1 for a in range(n) for b in range(a + 1, n)))
    if kind == "single-point":
        return n
    raise InvalidInput(f"unknown configuration kind {kind!r}; expected one of {CONFIGURATION_KINDS}")


__all__ = [
    "CONFIGURATION_KINDS",
    "Conic",
    "ConicCensus",
    "ConicClass",
    "MONOMIALS",
    "PlaneGeometry",
    "ProjLine",
    "ProjPoint",
    "classify_conic",
    "conic_census",
    "count_configurations",
    "enumerate_lines",
    "enumerate_points",
    "normalize",
    "plane",
]
