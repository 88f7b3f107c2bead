from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from taux.linalg import (
    QMatrix,
    column_space_basis,
    complement_basis,
    hstack,
    inverse,
    is_invertible,
    kernel_basis,
    matrix_power,
    rank,
    rref,
    solve,
    vstack,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    vals = draw(st.lists(small, min_size=r * c, max_size=r * c))
    return QMatrix(r, c, tuple(vals))


def _sympy(m: QMatrix):
    return sympy.Matrix(m.rows, m.cols, [sympy.Rational(x.numerator, x.denominator) for x in m.entries])


@given(matrices())
def test_rank_matches_sympy(m):
    assert rank(m) == _sympy(m).rank()


@given(matrices())
def test_rank_nullity(m):
    k = kernel_basis(m)
    assert k.cols == m.cols - rank(m)
    assert (m @ k).is_zero()
    assert rank(k) == k.cols


@given(matrices())
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.T)


@given(matrices(), st.data())
def test_solve_finds_a_solution_when_consistent(m, data):
    x0 = QMatrix(m.cols, 1, tuple(data.draw(st.lists(small, min_size=m.cols, max_size=m.cols))))
    b = m @ x0
    x = solve(m, b)
    assert x is not None and m @ x == b


def test_solve_inconsistent():
    m = QMatrix.from_rows([[1, 1], [2, 2]])
    assert solve(m, QMatrix.from_rows([[1], [3]])) is None


@given(st.integers(1, 4), st.data())
@settings(max_examples=30)
def test_inverse_round_trip(n, data):
    vals = data.draw(st.lists(small, min_size=n * n, max_size=n * n))
    m = QMatrix(n, n, tuple(vals))
    if not is_invertible(m):
        with pytest.raises(ValueError):
            inverse(m)
        return
    assert m @ inverse(m) == QMatrix.identity(n)


@given(matrices())
def test_rref_is_reduced(m):
    red, piv = rref(m)
    for r, c in enumerate(piv):
        assert red[r][c] == 1
        assert all(red[k][c] == 0 for k in range(len(red)) if k != r)


@given(matrices())
def test_column_space_and_complement(m):
    basis = column_space_basis(m)
    assert basis.cols == rank(m)
    comp = complement_basis(basis)
    assert rank(hstack([basis, comp], rows=m.rows)) == m.rows


def test_matrix_power_and_stacks():
    j = QMatrix.from_rows([[0, 1], [0, 0]])
    assert matrix_power(j, 2).is_zero()
    assert matrix_power(j, 0) == QMatrix.identity(2)
    s = vstack([QMatrix.identity(2), j])
    assert s.shape == (4, 2)
    assert QMatrix.from_rows([[Fraction(1, 3)]])[0, 0] == Fraction(1, 3)


def test_shape_errors():
    with pytest.raises(ValueError):
        QMatrix(2, 2, (Fraction(1),))
    with pytest.raises(ValueError):
        QMatrix.from_rows([[1, 2], [3]])
