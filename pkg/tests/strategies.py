"""Hypothesis strategies for small exact matrices and algebras."""

from fractions import Fraction

from hypothesis import strategies as st

from bihomdi import linalg as la
from bihomdi.field import GF, QQ

small_rationals = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))


def matrices(rows, cols, field=QQ, elements=None):
    if elements is None:
        elements = small_rationals if field is QQ else st.integers(0, field.p - 1)
    return st.lists(
        st.lists(elements, min_size=cols, max_size=cols), min_size=rows, max_size=rows
    ).map(lambda data: la.array(data, field))


@st.composite
def sized_matrices(draw, max_rows=5, max_cols=5, field=QQ):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return draw(matrices(r, c, field))


fields = st.sampled_from([QQ, GF(2), GF(3), GF(5)])
