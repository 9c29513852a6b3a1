"""Hypothesis strategies shared by the property tests."""

from hypothesis import assume, strategies as st

from veronese.code import LinearCode
from veronese.field import field_of_order
from veronese.linalg import rank


@st.composite
def small_codes(draw, orders=(2, 3, 4), max_n=8, max_k=4):
    q = draw(st.sampled_from(orders))
    F = field_of_order(q)
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, min(max_k, n)))
    rows = [[draw(st.integers(0, q - 1)) for _ in range(n)] for _ in range(k)]
    assume(rank(F, rows) == k)
    return LinearCode(F, rows)
