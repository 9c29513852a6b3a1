"""Generalized weight polynomials and higher weight spectra."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .betti import BettiTable, verify_hk
from .errors import InvalidInput, SolveError


class IntPolynomial:
    """Polynomial in Z with exact integer coefficients, ascending powers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls([c])

    @classmethod
    def linear_root(cls, a: int) -> IntPolynomial:
        """``Z - a``."""
        return cls([-a, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def _coerce(self, other) -> IntPolynomial:
        return other if isinstance(other, IntPolynomial) else IntPolynomial([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def exact_div(self, d: int) -> IntPolynomial:
        if any(c % d for c in self.coeffs):
            raise SolveError(f"coefficients of {self} not divisible by {d}")
        return IntPolynomial(c // d for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"


Z = IntPolynomial([0, 1])


@dataclass(frozen=True)
class SpectraTable:
    q: int
    n: int
    k: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {(int(r), int(w)): int(v) for (r, w), v in self.entries.items() if v}
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def __getitem__(self, rw) -> int:
        return self.entries.get(rw, 0)

    def row(self, r: int) -> dict[int, int]:
        return {w: v for (rr, w), v in self.entries.items() if rr == r}

    def as_rows(self) -> list[dict]:
        return [{"r": r, "w": w, "count": v} for (r, w), v in self.entries.items()]


def subspace_factor(q: int, m: int, r: int) -> int:
    """``prod_{i<r} (q^m - q^i)``."""
    out = 1
    Qm = q ** m
    for i in range(r):
        out *= Qm - q ** i
    return out


def gaussian_binomial(n: int, r: int, q: int) -> int:
    if not 0 <= r <= n:
        raise InvalidInput(f"need 0 <= r <= n, got r={r}, n={n}")
    num = den = 1
    for i in range(r):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _check_levels(tables, k):
    by_level = {t.level: t for t in tables}
    for l in range(k):
        if l not in by_level:
            raise InvalidInput(f"missing Betti table for level {l}")
        if not verify_hk(by_level[l]).passed:
            raise InvalidInput(f"Betti table at level {l} fails the Herzog-Kuhl check")
    return by_level


def gwp_from_betti(tables, n: int, k: int) -> list[IntPolynomial]:
    """``P_w = sum_l sum_i (-1)^(i+1) beta^(l)_{i,w} Z^l (Z-1)`` for w >= 1; ``P_0 = 1``."""
    by_level = _check_levels(tables, k)
    polys = [IntPolynomial([1])]
    for w in range(1, n + 1):
        P = IntPolynomial()
        for l in range(k):
            for (i, j), beta in by_level[l].entries.items():
                if j == w:
                    P = P + (-1) ** (i + 1) * beta * IntPolynomial([0] * l + [1]) * (Z - 1)
        polys.append(P)
    return polys


def gwp_from_phi_differences(tables, n: int, k: int) -> list[IntPolynomial]:
    """``P_w = sum_l (phi_w(M^(l)) - phi_w(M^(l-1))) Z^l`` with levels -1 and k empty of w >= 1."""
    by_level = _check_levels(tables, k)

    def phi(l, w):
        if l < 0 or l >= k:
            return 0
        return by_level[l].phi(w)

    polys = [IntPolynomial([1])]
    for w in range(1, n + 1):
        polys.append(IntPolynomial([phi(l, w) - phi(l - 1, w) for l in range(k + 1)]))
    return polys


def spectra_from_gwp(polys, q: int, k: int, n: int | None = None) -> SpectraTable:
    """Invert ``P_w(q^m) = sum_{r<=m} A_w^(r) prod_{i<r}(q^m - q^i)`` for m = 0..k."""
    entries = {}
    for w, P in enumerate(polys):
        if P.degree > k:
            raise SolveError(f"P_{w} has degree {P.degree} > {k}")
        found = []
        for m in range(k + 1):
            rest = P(q ** m) - sum(found[r] * subspace_factor(q, m, r) for r in range(m))
            d = subspace_factor(q, m, m)
            if rest % d:
                raise SolveError(f"A_{w}^({m}) is not integral")
            a = rest // d
            if a < 0:
                raise SolveError(f"A_{w}^({m}) = {a} is negative")
            found.append(a)
            entries[(m, w)] = a
    return SpectraTable(q, len(polys) - 1 if n is None else n, k, entries)


def _interpolate(xs, ys) -> list[Fraction]:
    """Ascending coefficients of the interpolating polynomial (Newton form)."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (Z - xs[i]) + coef[i]
        new = [Fraction(0)] * n
        for d in range(n - 1):
            new[d + 1] += poly[d]
            new[d] -= xs[i] * poly[d]
        new[0] += coef[i]
        poly = new
    return poly


def gwp_from_spectra(S: SpectraTable, k: int | None = None) -> list[IntPolynomial]:
    k = S.k if k is None else k
    q = S.q
    xs = [q ** m for m in range(k + 1)]
    polys = []
    for w in range(S.n + 1):
        ys = [sum(S[(r, w)] * subspace_factor(q, m, r) for r in range(m + 1)) for m in range(k + 1)]
        coeffs = _interpolate(xs, ys)
        if any(c.denominator != 1 for c in coeffs):
            raise SolveError(f"P_{w} has non-integral coefficients")
        polys.append(IntPolynomial(int(c) for c in coeffs))
    return polys


def hamming_weights(source) -> list[int]:
    """Generalized Hamming weights d_1..d_k from a level-0 Betti table or a spectra table."""
    if isinstance(source, BettiTable):
        rng = range(1, source.k_eff + 1)
        get = source.row
    elif isinstance(source, SpectraTable):
        rng = range(1, source.k + 1)
        get = source.row
    else:
        raise InvalidInput("expected a BettiTable or a SpectraTable")
    out = []
    for i in rng:
        row = get(i)
        if not row:
            raise InvalidInput(f"no nonzero entry in row {i}")
        out.append(min(row))
    return out
