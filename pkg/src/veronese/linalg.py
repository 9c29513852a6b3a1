"""Exact linear algebra: matrices over finite fields (integer codes) and over Q."""

from __future__ import annotations

from fractions import Fraction

from .errors import SolveError
from .field import FieldDescriptor


def rref(F: FieldDescriptor, rows) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form of a matrix of field codes; returns (rows, pivots)."""
    M = [list(map(int, r)) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.mul(inv, x) for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(F: FieldDescriptor, rows) -> int:
    return len(rref(F, rows)[1])


def column_rank(F: FieldDescriptor, matrix, cols) -> int:
    """Rank of the submatrix on the given column indices."""
    cols = list(cols)
    if not cols:
        return 0
    return rank(F, [[row[c] for c in cols] for row in matrix])


def nullspace(F: FieldDescriptor, rows, ncols: int | None = None) -> list[list[int]]:
    """A basis of ``{x : A x = 0}`` as a list of row vectors.

    ``ncols`` is required when ``rows`` is empty.
    """
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    R, pivots = rref(F, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, p in zip(R, pivots):
            v[p] = F.neg(row[f])
        basis.append(v)
    return basis


def solve_rational(A, b) -> list[Fraction]:
    """Unique solution of a square system over Q by Gauss-Jordan elimination."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            raise SolveError("singular system", equation=c)
        M[c], M[piv] = M[piv], M[c]
        p = M[c][c]
        M[c] = [x / p for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return [M[i][n] for i in range(n)]
