from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from graphcx import complexes as cx
from graphcx import exactla as la

small_ints = st.integers(min_value=-3, max_value=3)


@st.composite
def matrices(draw, max_dim=7):
    nr = draw(st.integers(0, max_dim))
    nc = draw(st.integers(0, max_dim))
    rows = [[draw(small_ints) if draw(st.booleans()) else 0 for _ in range(nc)] for _ in range(nr)]
    return la.SparseMatrix(nr, nc, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v})


def to_sympy(m):
    return sympy.Matrix(m.nrows, m.ncols, lambda i, j: sympy.Rational(m.entries.get((i, j), 0)))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_against_sympy(m):
    want = to_sympy(m).rank() if m.nrows and m.ncols else 0
    assert la.rank(m) == want
    assert la.rank_dense(m) == want


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_kernel_basis_is_a_basis(m):
    ker = la.kernel_basis(m)
    assert len(ker) == m.ncols - la.rank(m)
    for v in ker:
        assert m.apply(v) == {}
    if ker:
        assert la.span_rank(ker, m.ncols) == len(ker)


@settings(max_examples=80, deadline=None)
@given(matrices(), st.lists(small_ints, min_size=7, max_size=7))
def test_image_membership(m, coeffs):
    x = {j: Fraction(c) for j, c in enumerate(coeffs[:m.ncols]) if c}
    y = m.apply(x)
    w = la.image_membership(m, y)
    assert w is not None
    assert m.apply(w) == y


def test_image_membership_rejects():
    m = la.SparseMatrix.from_dense([[1, 0], [0, 0]])
    assert la.image_membership(m, {1: Fraction(1)}) is None
    with pytest.raises(la.DimensionError):
        la.image_membership(m, {5: Fraction(1)})


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
def test_determinant_against_sympy(rows):
    m = la.SparseMatrix.from_dense(rows)
    assert la.determinant(m) == Fraction(int(sympy.Matrix(rows).det()))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_text_round_trip(m):
    assert la.SparseMatrix.from_text(m.to_text()) == m


def test_text_format_is_stable():
    m = la.SparseMatrix(2, 3, {(1, 2): Fraction(-1, 2), (0, 0): 3})
    assert m.to_text() == "2 3 2\n0 0 3/1\n1 2 -1/2\n"


def test_no_explicit_zeros():
    m = la.SparseMatrix(2, 2, {(0, 0): 0, (1, 1): 2})
    assert list(m.entries) == [(1, 1)]


def test_betti_requires_a_complex():
    d1 = la.SparseMatrix.from_dense([[1, 1]])
    d2 = la.SparseMatrix.from_dense([[1], [0]])
    with pytest.raises(la.ChainError):
        la.betti(d1, d2)
    with pytest.raises(la.DimensionError):
        la.betti(d1, la.SparseMatrix(3, 1))


def test_betti_of_a_circle():
    # simplicial circle: three vertices, three edges
    d1 = la.SparseMatrix.from_dense([[-1, 0, 1], [1, -1, 0], [0, 1, -1]])
    assert la.betti(la.SparseMatrix(0, 3), d1) == 1
    assert la.betti(d1, la.SparseMatrix(3, 0)) == 1


def test_real_boundary_ranks_against_sympy():
    c = cx.GraphComplex("commutative", 3)
    for k in c.degrees():
        d = c.boundary(k)
        if d.nrows and d.ncols:
            assert la.rank(d) == to_sympy(d).rank()
