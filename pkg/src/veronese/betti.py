"""N-graded Betti tables of a code's matroid and its elongations.

Two routes:

* ``exhaustive_tables`` scans the whole subset lattice.  The local Betti
  number at ``sigma`` is the magnitude of the alternating independent-set
  count of the restriction, placed at homological degree ``n(sigma)``.
* ``veronese_structural_betti`` fills the first row of every level from
  plane-geometry counts, pins one second-row entry, and solves the
  Herzog-Kuhl equations exactly for the rest.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from . import kernels
from .code import build_veronese_code
from .errors import InvalidInput, SolveError
from .field import FieldDescriptor
from .linalg import solve_rational
from .matroid import Matroid, euler_characteristic, parity_check_matroid, cycle_census


@dataclass(frozen=True)
class BettiTable:
    level: int
    k_eff: int
    n: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {(int(i), int(j)): int(v) for (i, j), v in self.entries.items() if v}
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def __getitem__(self, ij) -> int:
        return self.entries.get(ij, 0)

    def phi(self, j: int) -> int:
        return sum((-1) ** i * v for (i, jj), v in self.entries.items() if jj == j)

    @property
    def max_degree(self) -> int:
        return max(i for i, _ in self.entries)

    def row(self, i: int) -> dict[int, int]:
        return {j: v for (ii, j), v in self.entries.items() if ii == i}

    def as_rows(self) -> list[dict]:
        return [{"i": i, "j": j, "value": v} for (i, j), v in self.entries.items()]


@dataclass(frozen=True)
class HKReport:
    residuals: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return not any(self.residuals)


def hk_residuals(entries, k_eff: int) -> tuple:
    return tuple(
        sum((-1) ** i * j ** s * v for (i, j), v in entries.items()) for s in range(k_eff)
    )


def verify_hk(T: BettiTable) -> HKReport:
    """Herzog-Kuhl residuals ``sum (-1)^i j^s beta_ij`` for ``s < k_eff``; 0^0 = 1."""
    return HKReport(hk_residuals(T.entries, T.k_eff))


# -- exhaustive route ---------------------------------------------------------

def _table_from_array(arr: np.ndarray, level: int, k_eff: int, n: int) -> BettiTable:
    entries = {(int(i), int(j)): int(arr[i, j]) for i, j in zip(*np.nonzero(arr))}
    return BettiTable(level, k_eff, n, entries)


def exhaustive_tables(M: Matroid, levels=None) -> list[BettiTable]:
    """Betti tables of ``M`` elongated by each offset in ``levels`` (default: all)."""
    base = M.base
    kmax = base.max_nullity
    if levels is None:
        levels = range(kmax)
    prof = base.profile()
    null, pc = prof.nullity, prof.popcount
    sign = 1 - 2 * (pc.astype(np.int64) & 1)
    out = []
    for l in levels:
        if not 0 <= l <= kmax:
            raise InvalidInput(f"level {l} outside [0, {kmax}]")
        f = np.where(null <= l, sign, 0).astype(np.int64)
        g = kernels.subset_zeta(f, base.n)
        arr = kernels.aggregate_betti(null, pc, g, l, base.n, kmax)
        out.append(_table_from_array(arr, l, kmax - l, base.n))
    return out


def exhaustive_betti(M: Matroid) -> BettiTable:
    return exhaustive_tables(M.base, [M.offset])[0]


def local_betti(M: Matroid, sigma) -> int:
    """Local Betti number at ``sigma``: ``|chi(M_sigma)|``; 1 for the empty set."""
    view = M.restrict(sigma)
    if view.n == 0:
        return 1
    return abs(euler_characteristic(view))


def dz_local_check(q: int) -> int:
    """Magnitude of the alternating dependent-set count of ``M_q`` restricted away
    from a line plus an outside point.

    For ``q^2-q <= z <= q^2-2`` there are ``(q+1) C(q-1, q^2-1-z)`` dependent
    z-subsets; the whole complement (``z = q^2-1``) adds one more.
    """
    if isinstance(q, FieldDescriptor):
        q = q.cardinality
    if q < 2:
        raise InvalidInput("q must be at least 2")
    top = q * q - 1
    total = sum((-1) ** z * (q + 1) * comb(q - 1, top - z) for z in range(q * q - q, top))
    total += (-1) ** top
    return abs(total)


# -- Herzog-Kuhl solving --------------------------------------------------

def hk_solve(skeleton, pinned: dict, k_eff: int, level: int = 0, n: int | None = None) -> BettiTable:
    """Solve the Herzog-Kuhl equations for the skeleton positions not pinned.

    ``(0, 0) -> 1`` is always known.  Unknowns must sit at distinct internal
    degrees; the first ``len(unknowns)`` equations are solved (a Vandermonde
    system) and every remaining equation is checked.
    """
    known = {(0, 0): 1}
    known.update({tuple(k): int(v) for k, v in pinned.items()})
    unknowns = sorted({tuple(p) for p in skeleton} - set(known))
    js = [j for _, j in unknowns]
    if len(set(js)) != len(js):
        raise SolveError("two unknowns share an internal degree; the system is not Vandermonde")
    u = len(unknowns)
    if u > k_eff:
        raise SolveError(f"{u} unknowns but only {k_eff} equations (underdetermined)")
    rhs = [-sum((-1) ** i * j ** s * v for (i, j), v in known.items()) for s in range(k_eff)]
    A = [[(-1) ** i * j ** s for i, j in unknowns] for s in range(k_eff)]
    sol = solve_rational(A[:u], rhs[:u]) if u else []
    values = {}
    for pos, x in zip(unknowns, sol):
        if x.denominator != 1:
            raise SolveError(f"non-integral Betti number {x} at {pos}")
        if x < 0:
            raise SolveError(f"negative Betti number {x} at {pos}")
        values[pos] = int(x)
    for s in range(u, k_eff):
        lhs = sum(a * Fraction(values[p]) for a, p in zip(A[s], unknowns))
        if lhs != rhs[s]:
            raise SolveError("inconsistent overdetermined system", equation=s)
    entries = dict(known)
    entries.update(values)
    if n is None:
        n = max(j for _, j in entries)
    table = BettiTable(level, k_eff, n, entries)
    report = verify_hk(table)
    if not report.passed:  # pragma: no cover - guarded by the checks above
        raise SolveError("nonzero residual", equation=next(s for s, r in enumerate(report.residuals) if r))
    return table


def veronese_skeleton(q: int, level: int) -> list[tuple[int, int]]:
    """Positions that may carry nonzero Betti numbers of the level-``level`` elongation (q >= 4)."""
    base = [
        (1, q * q - q), (1, q * q), (2, q * q - 1), (2, q * q + q - 3), (3, q * q),
        (3, q * q + q - 2), (4, q * q + q - 1), (5, q * q + q), (6, q * q + q + 1),
    ]
    return [(0, 0)] + [(i - level, j) for i, j in base if i - level >= 1]


def veronese_structural_betti(F: FieldDescriptor, levels=range(6)) -> list[BettiTable]:
    q = F.cardinality
    if q < 4:
        raise InvalidInput("the structural route needs q >= 4; use the exhaustive route for q = 2, 3")
    C = build_veronese_code(F)
    M = parity_check_matroid(C)
    n, k = C.n, C.k
    out = []
    for l in levels:
        skel = veronese_skeleton(q, l)
        pinned = {(1, j): c for j, c in cycle_census(M.elongate(l), 1, "structural").items()}
        if l == 0:
            pinned[(2, q * q - 1)] = cycle_census(M, 2, "structural")[n - (q + 2)] * dz_local_check(q)
        stray = set(pinned) - set(skel)
        if stray:
            raise SolveError(f"pinned positions {sorted(stray)} fall outside the skeleton")
        out.append(hk_solve(skel, pinned, k - l, level=l, n=n))
    return out


def betti_tables(F: FieldDescriptor, method: str = "auto", guard: int = 24) -> list[BettiTable]:
    """Levels 0..5 of the Veronese matroid over ``F``."""
    if method not in ("auto", "exhaustive", "structural"):
        raise InvalidInput(f"unknown method {method!r}")
    q = F.cardinality
    n = q * q + q + 1
    if method == "auto":
        method = "exhaustive" if q < 4 or n <= guard else "structural"
    if method == "structural":
        return veronese_structural_betti(F)
    M = parity_check_matroid(build_veronese_code(F), guard=guard)
    return exhaustive_tables(M)
