import pytest
from hypothesis import given, settings, strategies as st

from strategies import small_codes
from veronese.betti import betti_tables, exhaustive_tables
from veronese.code import extend_scalars
from veronese.errors import InvalidInput, SolveError
from veronese.field import field_of_order
from veronese.matroid import parity_check_matroid
from veronese.oracle import word_weight_distribution
from veronese.weights import (
    IntPolynomial,
    SpectraTable,
    Z,
    gaussian_binomial,
    gwp_from_betti,
    gwp_from_phi_differences,
    gwp_from_spectra,
    hamming_weights,
    spectra_from_gwp,
    subspace_factor,
)

ints = st.lists(st.integers(-50, 50), max_size=5)


@given(ints, ints, st.integers(-5, 5))
def test_polynomial_ring(a, b, z):
    A, B = IntPolynomial(a), IntPolynomial(b)
    assert (A + B)(z) == A(z) + B(z)
    assert (A * B)(z) == A(z) * B(z)
    assert (A - B)(z) == A(z) - B(z)
    assert (3 * A).exact_div(3) == A


def test_polynomial_basics():
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert (Z - 1) * (Z + 1) == IntPolynomial([-1, 0, 1])
    assert IntPolynomial.linear_root(3)(3) == 0
    assert IntPolynomial.constant(4) == 4
    with pytest.raises(SolveError):
        IntPolynomial([1, 2]).exact_div(2)


def test_gaussian_binomial():
    assert gaussian_binomial(6, 2, 3) == 11011
    assert gaussian_binomial(6, 0, 5) == 1 == gaussian_binomial(6, 6, 5)
    assert gaussian_binomial(4, 2, 2) == 35
    assert subspace_factor(2, 3, 2) == 7 * 6
    with pytest.raises(InvalidInput):
        gaussian_binomial(3, 4, 2)


@settings(max_examples=30, deadline=None)
@given(small_codes(orders=(2, 3), max_n=7, max_k=3), st.sampled_from([1, 2]))
def test_gwp_counts_words_of_extensions(C, m):
    tables = exhaustive_tables(parity_check_matroid(C))
    polys = gwp_from_betti(tables, C.n, C.k)
    assert polys == gwp_from_phi_differences(tables, C.n, C.k)
    E = extend_scalars(C, m)
    dist = word_weight_distribution(E)
    assert {w: P(E.q) for w, P in enumerate(polys) if P(E.q)} == dist.counts


@settings(max_examples=30, deadline=None)
@given(small_codes(orders=(2, 3), max_n=7, max_k=3))
def test_spectra_round_trip(C):
    tables = exhaustive_tables(parity_check_matroid(C))
    polys = gwp_from_betti(tables, C.n, C.k)
    S = spectra_from_gwp(polys, C.q, C.k, C.n)
    assert gwp_from_spectra(S) == polys
    for r in range(C.k + 1):
        assert sum(S.row(r).values()) == gaussian_binomial(C.k, r, C.q)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_spectral_identities(q):
    tables = betti_tables(field_of_order(q))
    n = q * q + q + 1
    polys = gwp_from_betti(tables, n, 6)
    assert all(P(1) == 0 for P in polys[1:])
    for m in range(1, 7):
        assert sum(P(q ** m) for P in polys) == q ** (6 * m)
    S = spectra_from_gwp(polys, q, 6, n)
    assert hamming_weights(tables[0]) == hamming_weights(S)


def test_spectra_rejects_bad_polynomials():
    with pytest.raises(SolveError):
        spectra_from_gwp([IntPolynomial([1]), IntPolynomial([0] * 8 + [1])], 2, 6)
    with pytest.raises(SolveError):
        spectra_from_gwp([IntPolynomial([1]), IntPolynomial([-1])], 2, 1)


def test_gwp_requires_all_levels():
    tables = betti_tables(field_of_order(2))
    with pytest.raises(InvalidInput):
        gwp_from_betti(tables[:-1], 7, 6)


def test_hamming_weights_input_checks():
    with pytest.raises(InvalidInput):
        hamming_weights([1, 2])
    with pytest.raises(InvalidInput):
        hamming_weights(SpectraTable(2, 3, 2, {(1, 2): 1}))
