"""Hankel transforms of sequence prefixes, computed exactly."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import SequenceLengthError
from .riordan import int_seq


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination.

    A zero pivot is replaced by any nonzero entry of the trailing block;
    each row or column swap flips the sign.
    """
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            found = next(
                ((i, j) for i in range(k, n) for j in range(k, n) if m[i][j] != 0),
                None,
            )
            if found is None:
                return 0
            i, j = found
            if i != k:
                m[k], m[i] = m[i], m[k]
                sign = -sign
            if j != k:
                for row in m:
                    row[k], row[j] = row[j], row[k]
                sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def rational_det(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a rational matrix: clear denominators, then Bareiss."""
    rows = [[Fraction(v) for v in row] for row in matrix]
    n = len(rows)
    d = lcm(*(v.denominator for row in rows for v in row)) if n else 1
    ints = [[int(v * d) for v in row] for row in rows]
    return Fraction(bareiss_det(ints), d**n)


def hankel_matrix(a: Sequence, n: int) -> list:
    return [[a[i + j] for j in range(n + 1)] for i in range(n + 1)]


def hankel_transform(a: Sequence, m: int) -> tuple:
    """h_0 .. h_m with h_n = det(a[i+j])_{0<=i,j<=n}."""
    a = int_seq(a)
    if len(a) < 2 * m + 1:
        raise SequenceLengthError(
            f"Hankel transform to index {m} needs {2 * m + 1} terms, got {len(a)}"
        )
    return tuple(rational_det(hankel_matrix(a, n)) for n in range(m + 1))


def prepend(a: Sequence, v) -> tuple:
    return int_seq([v, *a])
