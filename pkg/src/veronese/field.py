"""Finite field towers with exact arithmetic.

Elements are encoded as integers ``0 .. |F|-1``: an element of a degree-``d``
extension of a base field of size ``Q`` with coefficient codes ``c_0..c_{d-1}``
has code ``sum(c_i * Q**i)``.  Base-field elements therefore keep their code
inside every extension, which makes scalar extension a no-op on matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

import numpy as np

from .errors import FieldError, InvalidInput

DEFAULT_CAP = 1 << 16
TABLE_THRESHOLD = 256


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**d``; raises ``FieldError`` if ``q`` is not a prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    d, r = 0, q
    while r % p == 0:
        r //= p
        d += 1
    if r != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, d


@dataclass(frozen=True)
class FieldDescriptor:
    """A prime field, or a simple extension of ``base`` by a monic irreducible.

    ``modulus`` lists the base-field codes of the modulus in ascending degree
    (leading 1 included).  Prime fields carry ``(0, 1)`` by convention.
    """

    characteristic: int
    degree: int
    modulus: tuple[int, ...]
    base: FieldDescriptor | None = None

    @property
    def cardinality(self) -> int:
        if self.base is None:
            return self.characteristic
        return self.base.cardinality ** self.degree

    @property
    def base_cardinality(self) -> int:
        return self.characteristic if self.base is None else self.base.cardinality

    @property
    def absolute_degree(self) -> int:
        return 1 if self.base is None else self.degree * self.base.absolute_degree

    @property
    def is_prime_field(self) -> bool:
        return self.base is None

    def __repr__(self) -> str:
        if self.base is None:
            return f"GF({self.characteristic})"
        return f"GF({self.cardinality})[{format_poly(self.modulus)} over {self.base!r}]"

    def describe(self) -> list:
        """Nested ``[modulus, base...]`` record used in report metadata."""
        if self.base is None:
            return [self.characteristic]
        return [list(self.modulus), self.base.describe()]

    # -- code-level arithmetic ---------------------------------------------

    def digits(self, a: int) -> list[int]:
        Q = self.base_cardinality
        out = []
        for _ in range(self.degree):
            out.append(a % Q)
            a //= Q
        return out

    def from_digits(self, coeffs) -> int:
        Q = self.base_cardinality
        code = 0
        for c in reversed(list(coeffs)):
            code = code * Q + c
        return code

    def add(self, a: int, b: int) -> int:
        if self.base is None:
            return (a + b) % self.characteristic
        if self.characteristic == 2:
            return a ^ b
        B = self.base
        return self.from_digits(B.add(x, y) for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a: int) -> int:
        if self.base is None:
            return (-a) % self.characteristic
        if self.characteristic == 2:
            return a
        return self.from_digits(self.base.neg(x) for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        tab = self._mul_rows
        if tab is not None:
            return tab[a][b]
        return self._mul_generic(a, b)

    def _mul_generic(self, a: int, b: int) -> int:
        if self.base is None:
            return (a * b) % self.characteristic
        B = self.base
        x, y = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.degree - 1)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj:
                    prod[i + j] = B.add(prod[i + j], B.mul(xi, yj))
        return self.from_digits(_poly_mod(B, prod, self.modulus))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.pow(a, self.cardinality - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    @cached_property
    def _mul_rows(self):
        if self.cardinality > TABLE_THRESHOLD:
            return None
        r = range(self.cardinality)
        return [[self._mul_generic(a, b) for b in r] for a in r]

    @cached_property
    def tables(self) -> FieldTables:
        """Dense add/mul/neg/inv lookup tables (fields up to ``TABLE_THRESHOLD``)."""
        if self.cardinality > TABLE_THRESHOLD:
            raise FieldError(f"no lookup tables for fields above {TABLE_THRESHOLD} elements")
        Q = self.cardinality
        add = np.array([[self.add(a, b) for b in range(Q)] for a in range(Q)], dtype=np.int64)
        mul = np.array(self._mul_rows, dtype=np.int64)
        neg = np.array([self.neg(a) for a in range(Q)], dtype=np.int64)
        inv = np.array([0] + [self.inv(a) for a in range(1, Q)], dtype=np.int64)
        for t in (add, mul, neg, inv):
            t.setflags(write=False)
        return FieldTables(add, mul, neg, inv)

    # -- element-level API -------------------------------------------------

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.owner != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, (list, tuple)):
            if len(value) != self.degree:
                raise FieldError(f"expected {self.degree} coefficients")
            Q = self.base_cardinality
            if self.base is None:
                return FieldElement(self, int(value[0]) % Q)
            coeffs = [int(self.base(c).code) for c in value]
            return FieldElement(self, self.from_digits(coeffs))
        value = int(value)
        if self.base is None:
            return FieldElement(self, value % self.characteristic)
        if not 0 <= value < self.cardinality:
            raise FieldError(f"code {value} out of range for {self!r}")
        return FieldElement(self, value)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self) -> list[FieldElement]:
        return enumerate_field(self)


@dataclass(frozen=True)
class FieldTables:
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray


@dataclass(frozen=True)
class FieldElement:
    owner: FieldDescriptor
    code: int

    @property
    def coefficients(self) -> tuple[int, ...]:
        if self.owner.base is None:
            return (self.code,)
        return tuple(self.owner.digits(self.code))

    def _check(self, other) -> int:
        if isinstance(other, int):
            return self.owner(other).code
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.owner != self.owner:
            raise FieldError("operands belong to different fields")
        return other.code

    def __add__(self, other):
        b = self._check(other)
        return FieldElement(self.owner, self.owner.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._check(other)
        return FieldElement(self.owner, self.owner.sub(self.code, b))

    def __rsub__(self, other):
        b = self._check(other)
        return FieldElement(self.owner, self.owner.sub(b, self.code))

    def __mul__(self, other):
        b = self._check(other)
        return FieldElement(self.owner, self.owner.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._check(other)
        return FieldElement(self.owner, self.owner.div(self.code, b))

    def __neg__(self):
        return FieldElement(self.owner, self.owner.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.owner, self.owner.pow(self.code, e))

    def __bool__(self) -> bool:
        return self.code != 0

    def __int__(self) -> int:
        return self.code

    def __repr__(self) -> str:
        return f"{self.owner.cardinality}#{self.code}"


def arithmetic(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    ops = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}
    if op not in ops:
        raise InvalidInput(f"unknown field operation {op!r}")
    if a.owner != b.owner:
        raise FieldError("operands belong to different fields")
    return ops[op](b)


def enumerate_field(F: FieldDescriptor) -> list[FieldElement]:
    """All elements in code order; zero first, then coefficient-lexicographic."""
    return [FieldElement(F, c) for c in range(F.cardinality)]


# -- polynomials over a field, coefficient lists ascending -----------------

def format_poly(coeffs) -> str:
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
        if e == 0:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) or "0"


def _poly_mod(F: FieldDescriptor, num, modulus) -> list[int]:
    num = list(num)
    d = len(modulus) - 1
    lead_inv = F.inv(modulus[-1])
    for e in range(len(num) - 1, d - 1, -1):
        c = num[e]
        if c == 0:
            continue
        c = F.mul(c, lead_inv)
        for t in range(d + 1):
            num[e - d + t] = F.sub(num[e - d + t], F.mul(c, modulus[t]))
    out = num[:d] + [0] * max(0, d - len(num))
    return out


def is_irreducible(F: FieldDescriptor, poly) -> bool:
    """Brute-force irreducibility over ``F`` by trial division with monic factors."""
    poly = list(poly)
    while poly and poly[-1] == 0:
        poly.pop()
    d = len(poly) - 1
    if d < 1:
        return False
    Q = F.cardinality
    for e in range(1, d // 2 + 1):
        for tail in product(range(Q), repeat=e):
            if not any(_poly_mod(F, poly, list(tail) + [1])):
                return False
    return True


def smallest_irreducible(F: FieldDescriptor, d: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``d`` over ``F``.

    Candidates are compared coefficient by coefficient from degree ``d-1`` down.
    """
    Q = F.cardinality
    for t in range(Q ** d):
        tail = []
        for _ in range(d):
            tail.append(t % Q)
            t //= Q
        poly = tuple(tail) + (1,)
        if is_irreducible(F, poly):
            return poly
    raise FieldError(f"no irreducible of degree {d} over {F!r}")  # pragma: no cover


def _prime_field(p: int) -> FieldDescriptor:
    return FieldDescriptor(p, 1, (0, 1), None)


def _check_modulus(F: FieldDescriptor, d: int, modulus) -> tuple[int, ...]:
    modulus = tuple(int(c) for c in modulus)
    if len(modulus) != d + 1 or modulus[-1] != 1:
        raise FieldError(f"modulus must be monic of degree {d}")
    if any(not 0 <= c < F.cardinality for c in modulus):
        raise FieldError("modulus coefficient out of range")
    if not is_irreducible(F, modulus):
        raise FieldError(f"{format_poly(modulus)} is reducible over {F!r}")
    return modulus


def build_field(p: int, d: int = 1, modulus=None, cap: int = DEFAULT_CAP) -> FieldDescriptor:
    """``F_{p^d}`` as a simple extension of ``F_p``."""
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if d < 1:
        raise FieldError("degree must be positive")
    if p ** d > cap:
        raise FieldError(f"{p}^{d} exceeds the cardinality cap {cap}")
    Fp = _prime_field(p)
    if d == 1:
        return Fp
    return extend_field(Fp, d, modulus=modulus, cap=cap)


def extend_field(F: FieldDescriptor, m: int, modulus=None, cap: int = DEFAULT_CAP) -> FieldDescriptor:
    """Degree-``m`` extension with ``F`` as base; ``m == 1`` returns ``F`` itself."""
    if m < 1:
        raise FieldError("extension degree must be positive")
    if F.cardinality ** m > cap:
        raise FieldError(f"{F.cardinality}^{m} exceeds the cardinality cap {cap}")
    if m == 1:
        return F
    if modulus is None:
        modulus = smallest_irreducible(F, m)
    else:
        modulus = _check_modulus(F, m, modulus)
    return FieldDescriptor(F.characteristic, m, modulus, F)


def field_of_order(q: int, modulus=None, cap: int = DEFAULT_CAP) -> FieldDescriptor:
    p, d = prime_power(q)
    return build_field(p, d, modulus=modulus, cap=cap)
