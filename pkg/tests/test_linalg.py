from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bhtranspose.errors import SingularMatrixError
from bhtranspose.linalg import determinant, identity, invert, matmul, row_sums, transpose
from oracles import cofactor_det

F256_MATRIX = ((17, 0, 1, 0), (1, 5, 0, 0), (0, 1, 3, 0), (0, 0, 0, 2))


def test_determinant_examples():
    assert determinant(identity(3)) == 1
    assert determinant([[2]]) == 2
    # frozen from oracles.cofactor_det
    assert determinant(F256_MATRIX) == 512
    assert cofactor_det([list(r) for r in F256_MATRIX]) == 512


def test_determinant_needs_pivoting():
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1
    assert determinant([[0, 1], [0, 1]]) == 0


def test_invert_examples():
    assert invert(identity(4)) == identity(4)
    diag = [[2, 0], [0, 3]]
    assert invert(diag) == ((Fraction(1, 2), 0), (0, Fraction(1, 3)))
    inv = invert(F256_MATRIX)
    assert matmul(F256_MATRIX, inv) == identity(4)


def test_invert_singular():
    with pytest.raises(SingularMatrixError):
        invert([[1, 2], [2, 4]])


def test_row_sums():
    assert row_sums(identity(3)) == (1, 1, 1)
    assert row_sums([[Fraction(1, 2), 0], [0, Fraction(1, 3)]]) == (Fraction(1, 2), Fraction(1, 3))
    q = row_sums(invert(transpose(F256_MATRIX)))
    assert q == tuple(Fraction(w, 256) for w in (13, 35, 81, 128))


def test_non_square():
    with pytest.raises(ValueError):
        determinant([[1, 2, 3], [4, 5, 6]])


matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 20), min_size=n, max_size=n), min_size=n, max_size=n)
)


@settings(max_examples=300, deadline=None)
@given(matrices)
def test_inverse_is_exact(A):
    if cofactor_det(A) == 0:
        with pytest.raises(SingularMatrixError):
            invert(A)
        return
    assert matmul(A, invert(A)) == identity(len(A))


@settings(max_examples=300, deadline=None)
@given(matrices)
def test_determinant_matches_cofactor_and_transpose(A):
    if len(A) <= 5:
        assert determinant(A) == cofactor_det(A)
    assert determinant(transpose(A)) == determinant(A)
