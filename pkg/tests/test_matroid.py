import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from strategies import small_codes
from veronese.code import build_veronese_code
from veronese.errors import GuardExceeded, InvalidInput
from veronese.field import field_of_order
from veronese.matroid import (
    GENERATOR,
    Matroid,
    cycle_census,
    cycles,
    euler_characteristic,
    mask_elements,
    parity_check_matroid,
)
from veronese.reference import minimal_set_census

PROPS = settings(max_examples=60, deadline=None)


@PROPS
@given(small_codes())
def test_nullity_grows_by_at_most_one(C):
    M = parity_check_matroid(C)
    null = M.profile().nullity.astype(np.int64)
    for e in range(M.n):
        bit = 1 << e
        idx = np.arange(1 << M.n)
        without = idx[(idx & bit) == 0]
        step = null[without | bit] - null[without]
        assert ((step == 0) | (step == 1)).all()
    assert null[-1] == C.k and null[0] == 0


@PROPS
@given(small_codes(), st.data())
def test_lattice_matches_linear_algebra(C, data):
    M = parity_check_matroid(C)
    null = M.profile().nullity
    for _ in range(5):
        X = data.draw(st.integers(0, (1 << M.n) - 1))
        assert null[X] == M.base_nullity(X)
        r, nl = M.rank_nullity(X)
        assert r + nl == bin(X).count("1")


@PROPS
@given(small_codes())
def test_dual_route_equals_nullspace_route(C):
    a = parity_check_matroid(C, via="dual")
    b = parity_check_matroid(C, via="nullspace")
    assert np.array_equal(a.profile().nullity, b.profile().nullity)
    assert a.rank == b.rank == C.n - C.k


@PROPS
@given(small_codes(), st.data())
def test_elongation_shifts_nullity(C, data):
    M = parity_check_matroid(C)
    l = data.draw(st.integers(0, M.max_nullity))
    E = M.elongate(l)
    base = M.profile().nullity.astype(np.int64)
    assert np.array_equal(E.profile().nullity, np.maximum(base - l, 0))
    assert E.rank == min(M.n, M.rank + l)
    X = data.draw(st.integers(0, (1 << M.n) - 1))
    assert E.rank_nullity(X)[1] == max(0, M.base_nullity(X) - l)


@PROPS
@given(small_codes())
def test_circuits_are_minimal_nullity_one(C):
    M = parity_check_matroid(C)
    circ = cycles(M, 1)
    full = M.restrict(range(M.n)).circuits()
    assert circ == full
    for c in circ:
        assert M.base_nullity(c) == 1
        assert all(M.base_nullity(c - {e}) == 0 for e in c)


@PROPS
@given(small_codes())
def test_euler_characteristic_of_lattice(C):
    M = parity_check_matroid(C)
    chi = M.euler_lattice()
    for sigma in range(0, 1 << M.n, max(1, (1 << M.n) // 17)):
        assert chi[sigma] == euler_characteristic(M.restrict(sigma))


def test_independent_restriction_has_zero_euler_characteristic():
    C = build_veronese_code(field_of_order(3))
    M = parity_check_matroid(C)
    indep = next(s for s in range(1, 1 << M.n) if M.is_independent(s) and bin(s).count("1") == 3)
    assert euler_characteristic(M.restrict(indep)) == 0
    assert euler_characteristic(M.restrict(0)) == 1


def test_uniform_matroid_at_two():
    # the q=2 code is MDS, so its matroid is uniform: circuits are all 2-sets
    M = parity_check_matroid(build_veronese_code(field_of_order(2)))
    assert cycle_census(M, 1) == {2: 21}


def test_generator_mode_matroid():
    F = field_of_order(3)
    M = Matroid(F, [[1, 0, 1, 1], [0, 1, 1, 2]], GENERATOR)
    assert M.rank == 2
    assert M.is_independent([0, 1]) and not M.is_independent([0, 1, 2])


def test_q4_cycles_exhaustive_equals_structural():
    M = parity_check_matroid(build_veronese_code(field_of_order(4)))
    expected = minimal_set_census(4)
    for i in range(1, 7):
        assert cycle_census(M, i, "exhaustive") == expected[i]
        assert cycle_census(M, i, "structural") == expected[i]


def test_q4_structural_lists_match_exhaustive():
    M = parity_check_matroid(build_veronese_code(field_of_order(4)))
    for i in (1, 3, 5):
        assert cycles(M, i, "structural") == cycles(M, i, "exhaustive")


def test_no_nine_point_circuit_at_three():
    M = parity_check_matroid(build_veronese_code(field_of_order(3)))
    assert all(len(c) != 9 for c in cycles(M, 1))


def test_guards_and_bad_arguments():
    M = parity_check_matroid(build_veronese_code(field_of_order(5)))
    with pytest.raises(GuardExceeded):
        M.profile()
    with pytest.raises(GuardExceeded):
        cycle_census(M, 1, "exhaustive")
    with pytest.raises(InvalidInput):
        M.elongate(7)
    with pytest.raises(InvalidInput):
        cycle_census(M, 0)
    small = parity_check_matroid(build_veronese_code(field_of_order(3)))
    with pytest.raises(GuardExceeded):
        cycle_census(small, 1, "structural")
    assert mask_elements(0b1011) == [0, 1, 3]
