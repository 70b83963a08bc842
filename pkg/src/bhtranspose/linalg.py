"""Exact dense linear algebra over the integers and rationals.

Matrices are plain sequences of rows.  Integer input stays integer through
elimination (Bareiss-style fraction-free updates); rationals only appear in
the final inverse.  No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import SingularMatrixError

IntMatrix = tuple[tuple[int, ...], ...]
RationalMatrix = tuple[tuple[Fraction, ...], ...]


def _check_square(A: Sequence[Sequence[int]]) -> int:
    n = len(A)
    for row in A:
        if len(row) != n:
            raise ValueError(f"matrix is not square: {n} rows, row of length {len(row)}")
    return n


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by Bareiss elimination.

    Every intermediate division is exact, so the entries stay integers and
    are bounded by minors of ``A``.
    """
    n = _check_square(A)
    if n == 0:
        return 1
    M = [list(map(int, row)) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k] != 0:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (pivot * M[i][j] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]


def invert(A: Sequence[Sequence[int]]) -> RationalMatrix:
    """Exact inverse of an integer matrix.

    Runs fraction-free Gauss-Jordan on ``[A | I]``.  When elimination ends the
    left block is ``p*I`` for the last pivot ``p`` and the right block is
    ``p*A^-1``; a single rational division per entry finishes the job.

    Raises :class:`SingularMatrixError` if ``det(A) == 0``.
    """
    n = _check_square(A)
    M = [list(map(int, row)) + [int(i == j) for j in range(n)] for i, row in enumerate(A)]
    width = 2 * n
    prev = 1
    for k in range(n):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k] != 0:
                    M[k], M[r] = M[r], M[k]
                    break
            else:
                raise SingularMatrixError("matrix is singular")
        pivot = M[k][k]
        row_k = M[k]
        for i in range(n):
            if i == k:
                continue
            row_i = M[i]
            factor = row_i[k]
            for j in range(width):
                num = pivot * row_i[j] - factor * row_k[j]
                q, rem = divmod(num, prev)
                assert rem == 0, "fraction-free elimination lost exactness"
                row_i[j] = q
        prev = pivot
    return tuple(tuple(Fraction(M[i][n + j], prev) for j in range(n)) for i in range(n))


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> tuple[tuple, ...]:
    """Plain matrix product; entries may be ints or Fractions."""
    cols = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in A)


def transpose(A: Sequence[Sequence]) -> tuple[tuple, ...]:
    return tuple(tuple(col) for col in zip(*A))


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def row_sums(M: Sequence[Sequence]) -> tuple[Fraction, ...]:
    """Exact row sums ``q_i = sum_j M[i][j]``."""
    return tuple(sum((Fraction(x) for x in row), Fraction(0)) for row in M)
