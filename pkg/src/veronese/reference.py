"""Closed forms for Veronese codes, kept as auditable fixtures.

Formulas are stored as text polynomials in ``q`` over an integer denominator
and evaluated exactly; a failed divisibility means a transcription error.
"""

from __future__ import annotations

import re
from math import comb

from .betti import BettiTable
from .errors import InvalidInput, SolveError
from .geometry import ConicCensus
from .weights import IntPolynomial, SpectraTable, Z

_TERM = re.compile(r"([+-]?)(\d*)(q(?:\^(\d+))?)?")


def qpoly(expr: str) -> dict[int, int]:
    """Parse ``"2q^8+3q^7-6q+1"`` into ``{exponent: coefficient}``."""
    out: dict[int, int] = {}
    s = expr.replace(" ", "")
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {expr!r} at {s[pos:]!r}")
        sign, digits, var, exp = m.groups()
        if not digits and not var:
            raise ValueError(f"cannot parse {expr!r} at {s[pos:]!r}")
        c = int(digits) if digits else 1
        e = (int(exp) if exp else 1) if var else 0
        out[e] = out.get(e, 0) + (-c if sign == "-" else c)
        pos = m.end()
    return out


def evaluate(expr: str, q: int, denominator: int = 1) -> int:
    num = sum(c * q ** e for e, c in qpoly(expr).items())
    if num % denominator:
        raise SolveError(f"{expr} / {denominator} is not integral at q={q}")
    return num // denominator


# (level, homological degree, internal degree, numerator, denominator)
BETTI_FORMULAS = [
    (0, 1, "q^2-q", "q^4+2q^3+2q^2+q", 2),
    (0, 1, "q^2", "q^5-q^2", 1),
    (0, 2, "q^2-1", "q^5+q^4+q^3", 1),
    (0, 2, "q^2+q-3", "q^9-q^7-q^6+q^4", 24),
    (0, 3, "q^2", "q^5-q^3-q^2+1", 1),
    (0, 3, "q^2+q-2", "q^9-q^8-q^7+q^6+3q^5+3q^4", 6),
    (0, 4, "q^2+q-1", "q^9-2q^8+q^7+3q^6+2q^5-q^4-4q^3", 4),
    (0, 5, "q^2+q", "q^9-3q^8+5q^7-q^6-3q^5-2q^4+6q^2-3q", 6),
    (0, 6, "q^2+q+1", "q^9-4q^8+11q^7-17q^6+12q^5-3q^4", 24),
    (1, 1, "q^2-1", "q^4+q^3+q^2", 1),
    (1, 1, "q^2+q-3", "q^8-q^6-q^5+q^3", 24),
    (1, 2, "q^2", "q^4+q^3-q-1", 1),
    (1, 2, "q^2+q-2", "q^8+q^6+3q^5+4q^4+3q^3", 6),
    (1, 3, "q^2+q-1", "q^8+3q^6+3q^5-3q^3-4q^2", 4),
    (1, 4, "q^2+q", "q^8+5q^6-q^5-6q^4-5q^3+6q", 6),
    (1, 5, "q^2+q+1", "q^8+7q^6-9q^5-8q^4+9q^3", 24),
    (2, 1, "q^2", "q^2+q+1", 1),
    (2, 1, "q^2+q-2", "q^6+2q^5+2q^4+q^3", 6),
    (2, 2, "q^2+q-1", "q^6+2q^5+2q^4+q^3", 2),
    (2, 3, "q^2+q", "q^6+2q^5+2q^4-q^3-2q^2-2q", 2),
    (2, 4, "q^2+q+1", "q^6+2q^5+2q^4-5q^3", 6),
    (3, 1, "q^2+q-1", "q^4+2q^3+2q^2+q", 2),
    (3, 2, "q^2+q", "q^4+2q^3+q^2-1", 1),
    (3, 3, "q^2+q+1", "q^4+2q^3-q", 2),
    (4, 1, "q^2+q", "q^2+q+1", 1),
    (4, 2, "q^2+q+1", "q^2+q", 1),
    (5, 1, "q^2+q+1", "1", 1),
]

# (dimension r, weight, numerator, denominator)
SPECTRA_FORMULAS = [
    (1, "q^2-q", "q^4+2q^3+2q^2+q", 2),
    (1, "q^2", "q^5+q+1", 1),
    (1, "q^2+q", "q^4-q", 2),
    (2, "q^2-1", "q^4+q^3+q^2", 1),
    (2, "q^2", "q^3+2q^2+2q+1", 1),
    (2, "q^2+q-3", "q^8-q^6-q^5+q^3", 24),
    (2, "q^2+q-2", "q^7+q^6-q^4-q^3", 2),
    (2, "q^2+q-1", "q^8+5q^6+7q^5+4q^4-q^3-4q^2", 4),
    (2, "q^2+q", "2q^8+3q^7+q^6+4q^5+9q^4+5q^3-6q", 6),
    (2, "q^2+q+1", "3q^8+q^6-3q^5-q^3", 8),
    (3, "q^2", "q^2+q+1", 1),
    (3, "q^2+q-2", "q^6+2q^5+2q^4+q^3", 6),
    (3, "q^2+q-1", "q^7+2q^6+3q^5+3q^4+2q^3+q^2", 2),
    (3, "q^2+q", "2q^8+2q^7+3q^6+2q^5+4q^4+3q^3+2q^2", 2),
    (3, "q^2+q+1", "6q^9+3q^7+2q^6+q^5-5q^4+2q^3-3q^2", 6),
    (4, "q^2+q-1", "q^4+2q^3+2q^2+q", 2),
    (4, "q^2+q", "q^6+2q^5+2q^4+q^3+q^2+q+1", 1),
    (4, "q^2+q+1", "2q^8+2q^7+2q^6+q^4-q", 2),
    (5, "q^2+q", "q^2+q+1", 1),
    (5, "q^2+q+1", "q^5+q^4+q^3", 1),
    (6, "q^2+q+1", "1", 1),
]

SPECTRA_Q3 = {
    (1, 6): 78, (1, 9): 247, (1, 12): 39, (2, 8): 117,
    (2, 9): 286, (2, 10): 1404, (2, 11): 3042, (2, 12): 3705,
    (2, 13): 2457, (3, 9): 13, (3, 10): 234, (3, 11): 2340,
    (3, 12): 10296, (3, 13): 20997, (4, 11): 78, (4, 12): 1417,
    (4, 13): 9516, (5, 12): 13, (5, 13): 351, (6, 13): 1,
}

SPECTRA_Q2 = {
    (1, 2): 21, (1, 4): 35, (1, 6): 7, (2, 3): 35,
    (2, 4): 105, (3, 4): 35, (2, 5): 210, (3, 5): 210,
    (4, 5): 21, (2, 6): 210, (3, 6): 560, (4, 6): 175,
    (5, 6): 7, (2, 7): 91, (3, 7): 590, (4, 7): 455,
    (5, 7): 56, (6, 7): 1,
}


def _need_big(q: int):
    if q < 4:
        raise InvalidInput("the parametric formulas cover q >= 4")


def betti_closed_form(q: int) -> list[BettiTable]:
    _need_big(q)
    n = q * q + q + 1
    levels: dict[int, dict] = {l: {(0, 0): 1} for l in range(6)}
    for l, i, j, num, den in BETTI_FORMULAS:
        levels[l][(i, evaluate(j, q))] = evaluate(num, q, den)
    return [BettiTable(l, 6 - l, n, levels[l]) for l in range(6)]


def gwp_closed_form(q: int) -> list[IntPolynomial]:
    """The nonzero generalized weight polynomials, expanded; all others are zero."""
    _need_big(q)
    n = q * q + q + 1
    P = [IntPolynomial() for _ in range(n + 1)]
    one = Z - 1
    zq = Z - q
    P[0] = IntPolynomial([1])
    P[q * q - q] = comb(n, 2) * one
    P[q * q - 1] = n * q * q * zq * one
    P[q * q] = n * one * (Z * Z - (q * q - 1) * Z + (2 * q ** 3 - 2 * q * q - q + 1))
    P[q * q + q - 3] = (n * (q + 1) * q ** 3 * (q - 1) ** 2 * zq * one).exact_div(24)
    P[q * q + q - 2] = (n * (q + 1) * q ** 3 * one * zq * (Z - (q * q - 3 * q + 3))).exact_div(6)
    quad = 2 * Z * Z - 2 * (q * q - q) * Z + evaluate("q^4-4q^3+7q^2-4q", q)
    P[q * q + q - 1] = (n * (q + 1) * q * one * zq * quad).exact_div(4)
    quartic = IntPolynomial([
        evaluate("q^7-4q^6+8q^5-5q^4-6q^3+9q^2-3q", q),
        -evaluate("q^6-q^5+5q^4-5q^3-6q^2+6q", q),
        evaluate("3q^4+3q^3-6q", q),
        -evaluate("6q^2+6q-6", q),
        6,
    ])
    P[q * q + q] = (n * one * quartic).exact_div(6)
    quartic = IntPolynomial([
        evaluate("q^8-4q^7+11q^6-17q^5+12q^4-3q^3", q),
        -evaluate("4q^6-4q^5+8q^4-20q^3+12q^2", q),
        evaluate("12q^4-12q", q),
        -24 * q * q,
        24,
    ])
    P[n] = (one * zq * quartic).exact_div(24)
    return P


def spectra_closed_form(q: int) -> SpectraTable:
    n = q * q + q + 1
    if q == 2:
        entries = dict(SPECTRA_Q2)
    elif q == 3:
        entries = dict(SPECTRA_Q3)
    elif q >= 4:
        entries = {(r, evaluate(w, q)): evaluate(num, q, den) for r, w, num, den in SPECTRA_FORMULAS}
    else:
        raise InvalidInput(f"no spectra fixture for q={q}")
    entries[(0, 0)] = 1
    return SpectraTable(q, n, 6, entries)


def spectra_parametric(q: int) -> SpectraTable:
    """The q >= 4 formulas evaluated at any q (a regression guard for small q)."""
    n = q * q + q + 1
    entries = {(0, 0): 1}
    for r, w, num, den in SPECTRA_FORMULAS:
        key = (r, evaluate(w, q))
        entries[key] = entries.get(key, 0) + evaluate(num, q, den)
    return SpectraTable(q, n, 6, entries)


def conic_class_counts(q: int) -> ConicCensus:
    """Class sizes of the conics of P^2(F_q): double lines, line pairs, irreducible, one-point."""
    n = q * q + q + 1
    return ConicCensus(n, q * (q + 1) * n // 2, q ** 5 - q ** 2, q * (q - 1) * n // 2)


def minimal_set_census(q: int) -> dict[int, dict[int, int]]:
    """nullity -> {cardinality: number of inclusion-minimal sets} for q >= 4."""
    _need_big(q)
    n = q * q + q + 1
    return {
        1: {n - (2 * q + 1): q * (q + 1) * n // 2, n - (q + 1): q ** 5 - q ** 2},
        2: {n - (q + 2): q * q * n, n - 4: n * q * q * (q * q + q) * (q - 1) ** 2 // 24},
        3: {n - (q + 1): n, n - 3: n * q * q * (q * q + q) // 6},
        4: {n - 2: n * (q * q + q) // 2},
        5: {n - 1: n},
        6: {n: 1},
    }


def hamming_ladder(q: int) -> list[int]:
    return [q * q - q, q * q - 1, q * q, q * q + q - 1, q * q + q, q * q + q + 1]


def beta_line_plus_point(q: int) -> int:
    """Level-0 Betti number at internal degree q^2-1."""
    return q ** 3 * (q * q + q + 1)


def total_conics(q: int) -> int:
    return (q ** 6 - 1) // (q - 1)
