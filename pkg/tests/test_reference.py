import pytest

from veronese.errors import InvalidInput, SolveError
from veronese.reference import (
    BETTI_FORMULAS,
    SPECTRA_FORMULAS,
    SPECTRA_Q2,
    SPECTRA_Q3,
    betti_closed_form,
    evaluate,
    gwp_closed_form,
    hamming_ladder,
    conic_class_counts,
    qpoly,
    spectra_closed_form,
    spectra_parametric,
    total_conics,
)
from veronese.weights import spectra_from_gwp


def test_qpoly_parser():
    assert qpoly("2q^8+3q^7-6q+1") == {8: 2, 7: 3, 1: -6, 0: 1}
    assert qpoly("q") == {1: 1}
    assert evaluate("q^2+q+1", 4) == 21
    with pytest.raises(ValueError):
        qpoly("2x")
    with pytest.raises(SolveError):
        evaluate("q+1", 2, 2)


def test_fixture_sizes():
    assert len(BETTI_FORMULAS) == 27 and len(SPECTRA_FORMULAS) == 21
    assert len(SPECTRA_Q2) == 18 and len(SPECTRA_Q3) == 20


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 11, 13, 16])
def test_closed_forms_are_integral_and_consistent(q):
    tables = betti_closed_form(q)
    assert len(tables) == 6
    P = gwp_closed_form(q)
    S = spectra_from_gwp(P, q, 6, q * q + q + 1)
    assert S.entries == spectra_closed_form(q).entries


@pytest.mark.parametrize("q,table", [(2, SPECTRA_Q2), (3, SPECTRA_Q3)])
def test_parametric_formulas_reach_small_q(q, table):
    S = spectra_parametric(q)
    assert {k: v for k, v in S.entries.items() if k != (0, 0)} == table


def test_census_formula_sums():
    for q in (2, 3, 4, 5, 7, 8, 9):
        assert sum(conic_class_counts(q)) == total_conics(q)
    assert tuple(conic_class_counts(3)) == (13, 78, 234, 39)


def test_ladder_and_guards():
    assert hamming_ladder(4) == [12, 15, 16, 19, 20, 21]
    with pytest.raises(InvalidInput):
        betti_closed_form(3)
    with pytest.raises(InvalidInput):
        spectra_closed_form(1)
