"""The square array s[n][k] = t[n+k][k] of a triangle, and transforms of it."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import DomainError, PrecisionError
from .riordan import Triangle
from .series import as_coeff


class SquareGrid:
    """Fully populated N x N array of exact rationals."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence]):
        data = tuple(tuple(as_coeff(v) for v in row) for row in rows)
        N = len(data)
        if any(len(r) != N for r in data):
            raise ValueError("a square grid needs N rows of N entries")
        self._rows = data

    @classmethod
    def identity(cls, N: int) -> "SquareGrid":
        return cls([[int(i == j) for j in range(N)] for i in range(N)])

    @classmethod
    def zeros(cls, N: int) -> "SquareGrid":
        return cls([[0] * N for _ in range(N)])

    @property
    def size(self) -> int:
        return len(self._rows)

    def __getitem__(self, index):
        n, k = index
        return self._rows[n][k]

    def row(self, n: int) -> tuple:
        return self._rows[n]

    def dense(self) -> list:
        return [list(r) for r in self._rows]

    def leading(self, N: int) -> "SquareGrid":
        if N > self.size:
            raise PrecisionError(f"need a {N}x{N} block from a {self.size}x{self.size} grid")
        return SquareGrid([r[:N] for r in self._rows[:N]])

    def __eq__(self, other):
        if not isinstance(other, SquareGrid):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"SquareGrid(size={self.size})"


def square_from_triangle(t: Triangle, N: int) -> SquareGrid:
    if t.rows < 2 * N - 1:
        raise PrecisionError(f"a {N}x{N} square array needs {2 * N - 1} triangle rows, have {t.rows}")
    return SquareGrid([[t[n + k, k] for k in range(N)] for n in range(N)])


def diagonal_sums(s: SquareGrid, absolute: bool = False) -> tuple:
    """d_n = sum_k s[n-k][k] for n < N (antidiagonals fully inside the grid)."""
    val = abs if absolute else (lambda v: v)
    return tuple(
        sum((val(s[n - k, k]) for k in range(n + 1)), Fraction(0)) for n in range(s.size)
    )


def mod_reduce(s: SquareGrid, m: int) -> SquareGrid:
    if m < 2:
        raise DomainError(f"modulus must be at least 2, got {m}")
    rows = []
    for n in range(s.size):
        row = []
        for k in range(s.size):
            v = s[n, k]
            if v.denominator != 1:
                raise DomainError(f"entry ({n},{k}) = {v} is not an integer; cannot reduce mod {m}")
            row.append(v.numerator % m)
        rows.append(row)
    return SquareGrid(rows)


def conjugate_binomial(s: SquareGrid, N: int | None = None) -> SquareGrid:
    """B S B^T on the leading N x N block, B = Pascal's triangle."""
    N = s.size if N is None else N
    if N > s.size:
        raise PrecisionError(f"conjugation to size {N} needs a grid of at least that size")
    # B S first (B lower triangular), then (B S) B^T
    bs = [[sum((comb(n, i) * s[i, j] for i in range(n + 1)), Fraction(0)) for j in range(N)]
          for n in range(N)]
    return SquareGrid([[sum((bs[n][j] * comb(k, j) for j in range(k + 1)), Fraction(0))
                        for k in range(N)] for n in range(N)])
