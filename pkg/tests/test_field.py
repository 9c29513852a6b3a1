import pytest
from hypothesis import given, settings, strategies as st

from veronese.errors import FieldError
from veronese.field import (
    build_field,
    extend_field,
    field_of_order,
    format_poly,
    is_irreducible,
    prime_power,
    smallest_irreducible,
)

ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49]


@st.composite
def field_and_elements(draw, count=3):
    q = draw(st.sampled_from(ORDERS))
    F = field_of_order(q)
    return (F, *[draw(st.integers(0, q - 1)) for _ in range(count)])


@settings(max_examples=300, deadline=None)
@given(field_and_elements())
def test_ring_axioms(data):
    F, a, b, c = data
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a
    assert F.mul(a, 1) == a and F.add(a, 0) == a


@settings(max_examples=300, deadline=None)
@given(field_and_elements(2))
def test_inverse_and_frobenius(data):
    F, a, b = data
    p, q = F.characteristic, F.cardinality
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.div(F.mul(a, b), a) == b
    assert F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p))
    assert F.pow(a, q) == a


def test_no_zero_divisors():
    for q in (4, 8, 9, 16):
        F = field_of_order(q)
        for a in range(1, q):
            assert all(F.mul(a, b) for b in range(1, q))


def test_default_moduli():
    assert field_of_order(9).modulus == (1, 0, 1)
    assert field_of_order(8).modulus == (1, 1, 0, 1)
    assert field_of_order(4).modulus == (1, 1, 1)
    assert format_poly((1, 0, 1)) == "x^2+1"


def test_no_root_for_default_quadratic():
    F3 = build_field(3)
    assert all((x * x + 1) % 3 for x in range(3))
    assert is_irreducible(F3, (1, 0, 1))
    assert not is_irreducible(F3, (2, 0, 1))
    assert smallest_irreducible(F3, 2) == (1, 0, 1)


def test_tower_preserves_base_codes():
    F4 = field_of_order(4)
    F16 = extend_field(F4, 2)
    assert F16.cardinality == 16 and F16.base is F4
    for a in range(4):
        for b in range(4):
            assert F16.mul(a, b) == F4.mul(a, b)
            assert F16.add(a, b) == F4.add(a, b)
    assert F16.absolute_degree == 4


def test_element_wrapper():
    F = field_of_order(9)
    x = F(3)
    assert (x * x + F.one) == F.zero
    assert (x / x) == F.one
    assert int(x ** 8) == 1
    assert x.coefficients == (0, 1)


def test_tables_are_readonly():
    t = field_of_order(8).tables
    with pytest.raises(ValueError):
        t.mul[1, 1] = 0


@pytest.mark.parametrize("q,expected", [(2, (2, 1)), (9, (3, 2)), (16, (2, 4)), (49, (7, 2))])
def test_prime_power(q, expected):
    assert prime_power(q) == expected


@pytest.mark.parametrize("bad", [0, 1, 6, 12, 100])
def test_rejects_non_prime_powers(bad):
    with pytest.raises(FieldError):
        field_of_order(bad)


def test_rejects_bad_moduli():
    with pytest.raises(FieldError):
        build_field(2, 3, modulus=(1, 1, 1, 1))
    with pytest.raises(FieldError):
        build_field(2, 3, modulus=(1, 1, 0))
    with pytest.raises(FieldError):
        build_field(4, 1)
    with pytest.raises(FieldError):
        build_field(2, 20)


def test_alternate_modulus_builds():
    F = build_field(2, 3, modulus=(1, 0, 1, 1))
    assert F.modulus == (1, 0, 1, 1)
    assert all(F.mul(a, F.inv(a)) == 1 for a in range(1, 8))
