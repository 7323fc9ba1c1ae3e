"""
The Riordan group over exact rationals.

A pair ``(g, f)`` with g(0) != 0, f(0) = 0, f'(0) != 0 stands for the
lower-triangular matrix ``t[n][k] = [x^n] g f^k``.  Pairs multiply by
``(g, f)(u, v) = (g u(f), v(f))``, which is ordinary matrix product of the
triangles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import PrecisionError, ValidationError
from .series import Series, as_coeff

IntSeq = tuple  # finite prefix of exact rationals; length >= 1


def int_seq(values: Iterable) -> tuple:
    out = tuple(as_coeff(v) for v in values)
    if not out:
        raise ValueError("a sequence prefix must have at least one term")
    return out


class Triangle:
    """Dense lower-triangular snapshot of the first ``rows`` rows of a matrix."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence]):
        data = []
        for n, row in enumerate(rows):
            row = [as_coeff(v) for v in row]
            if any(row[n + 1:]):
                raise ValueError(f"row {n} has nonzero entries above the diagonal")
            data.append(tuple(row[: n + 1]) + (Fraction(0),) * max(0, n + 1 - len(row)))
        self._rows = tuple(data)

    @property
    def rows(self) -> int:
        return len(self._rows)

    def __getitem__(self, index):
        n, k = index
        if not 0 <= n < self.rows:
            raise PrecisionError(f"row {n} outside a {self.rows}-row triangle")
        if k < 0 or k > n:
            return Fraction(0)
        return self._rows[n][k]

    def row(self, n: int) -> tuple:
        return self._rows[n]

    def dense(self) -> list:
        """Square list-of-lists with explicit zeros above the diagonal."""
        N = self.rows
        return [list(r) + [Fraction(0)] * (N - len(r)) for r in self._rows]

    def leading(self, N: int) -> "Triangle":
        if N > self.rows:
            raise PrecisionError(f"need {N} rows, triangle has {self.rows}")
        return Triangle(self._rows[:N])

    def column(self, k: int) -> tuple:
        return tuple(self[n, k] for n in range(self.rows))

    def __matmul__(self, other: "Triangle") -> "Triangle":
        N = min(self.rows, other.rows)
        out = []
        for n in range(N):
            out.append([
                sum((self[n, j] * other[j, k] for j in range(k, n + 1)), Fraction(0))
                for k in range(n + 1)
            ])
        return Triangle(out)

    def __eq__(self, other):
        if not isinstance(other, Triangle):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def first_mismatch(self, other) -> tuple | None:
        """First (n, k, mine, theirs) where two matrices differ, row-major."""
        other_rows = other.dense() if isinstance(other, Triangle) else other
        N = min(self.rows, len(other_rows))
        for n in range(N):
            for k in range(len(other_rows[n])):
                if self[n, k] != other_rows[n][k]:
                    return (n, k, self[n, k], other_rows[n][k])
        return None

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for r in self._rows for v in r)

    def __repr__(self):
        return f"Triangle(rows={self.rows})"


@dataclass(frozen=True)
class Membership:
    """Outcome of a subgroup test, valid only up to ``prec`` coefficients."""

    member: bool
    prec: int

    def __bool__(self):
        return self.member


class RiordanPair:
    """A validated Riordan array ``(g, f)`` known to a common precision."""

    __slots__ = ("g", "f")

    def __init__(self, g: Series, f: Series):
        if g.prec < 1 or f.prec < 2:
            raise PrecisionError("a Riordan pair needs g to 1 term and f to 2 terms")
        p = min(g.prec, f.prec)
        g, f = g.truncate(p), f.truncate(p)
        if g[0] == 0:
            raise ValidationError("g(0) = 0: g must be invertible")
        if f[0] != 0:
            raise ValidationError("f(0) != 0: f must vanish at the origin")
        if f[1] == 0:
            raise ValidationError("f'(0) = 0: f must have a nonzero linear term")
        self.g = g
        self.f = f

    @classmethod
    def identity(cls, prec: int) -> "RiordanPair":
        return cls(Series.constant(1, prec), Series.x(prec))

    @property
    def prec(self) -> int:
        return self.g.prec

    def truncate(self, prec: int) -> "RiordanPair":
        return RiordanPair(self.g.truncate(prec), self.f.truncate(prec))

    def __eq__(self, other):
        if not isinstance(other, RiordanPair):
            return NotImplemented
        return self.g == other.g and self.f == other.f

    def __hash__(self):
        return hash((self.g, self.f))

    def agrees(self, other: "RiordanPair", upto: int | None = None) -> bool:
        return self.g.agrees(other.g, upto) and self.f.agrees(other.f, upto)

    def __repr__(self):
        return f"RiordanPair(g={list(map(str, self.g))}, f={list(map(str, self.f))})"

    # -- matrix view --------------------------------------------------

    def entry(self, n: int, k: int) -> Fraction:
        if n >= self.prec:
            raise PrecisionError(f"entry row {n} needs precision {n + 1}, have {self.prec}")
        if k < 0 or k > n:
            return Fraction(0)
        return (self.g * self.f**k)[n]

    def columns(self, N: int):
        """Yield the column series g f^k for k < N, built incrementally."""
        col = self.g.truncate(N)
        f = self.f.truncate(N)
        for _ in range(N):
            yield col
            col = col * f

    def triangle(self, N: int) -> Triangle:
        if N > self.prec:
            raise PrecisionError(f"{N} rows need precision {N}, pair has {self.prec}")
        rows = [[Fraction(0)] * (n + 1) for n in range(N)]
        for k, col in enumerate(self.columns(N)):
            for n in range(k, N):
                rows[n][k] = col[n]
        return Triangle(rows)

    # -- group structure ----------------------------------------------

    def __mul__(self, other: "RiordanPair") -> "RiordanPair":
        if not isinstance(other, RiordanPair):
            return NotImplemented
        return RiordanPair(self.g * other.g.compose(self.f), other.f.compose(self.f))

    def inverse(self) -> "RiordanPair":
        fbar = self.f.revert()
        return RiordanPair(1 / self.g.compose(fbar), fbar)

    def apply(self, h: Series) -> Series:
        """Action on a power series: ``g * h(f)``."""
        return self.g * h.compose(self.f)

    def row_sums(self, N: int) -> tuple:
        if N > self.prec:
            raise PrecisionError(f"{N} row sums need precision {N}, pair has {self.prec}")
        return tuple(self.apply(Series.geometric(self.prec)).coeffs[:N])

    def a_sequence(self) -> Series:
        """A(x) with f = x A(f), i.e. A = x / revert(f)."""
        fbar = self.f.revert()
        return 1 / fbar.shift_down(1)

    # -- subgroups ----------------------------------------------------

    def is_bell(self) -> Membership:
        xg = self.g.shift_up(1)
        return Membership(self.f.agrees(xg), min(self.f.prec, xg.prec))

    def is_hitting_time(self) -> Membership:
        target = self.f.derivative() / self.f.shift_down(1)
        return Membership(self.g.agrees(target), target.prec)

    def is_associated(self) -> Membership:
        one = Series.constant(1, self.prec)
        return Membership(self.g == one, self.prec)


def new_pair(g: Series, f: Series) -> RiordanPair:
    return RiordanPair(g, f)


def multiply(r1: RiordanPair, r2: RiordanPair) -> RiordanPair:
    return r1 * r2


def inverse(r: RiordanPair) -> RiordanPair:
    return r.inverse()


def subgroup_check(r: RiordanPair, which: str) -> Membership:
    checks = {
        "bell": r.is_bell,
        "hitting_time": r.is_hitting_time,
        "associated": r.is_associated,
    }
    if which not in checks:
        raise ValueError(f"unknown subgroup {which!r}; choose from {sorted(checks)}")
    return checks[which]()


def check_a_sequence(t: Triangle, a: Series) -> tuple | None:
    """Verify t[n+1][k+1] = sum_j a_j t[n][k+j] on the triangle.

    Returns the first failing (n+1, k+1) cell, or None.
    """
    for n in range(t.rows - 1):
        for k in range(n + 1):
            if n - k >= a.prec:
                continue  # cell needs more of A than is known
            rhs = sum((a[j] * t[n, k + j] for j in range(n - k + 1)), Fraction(0))
            if rhs != t[n + 1, k + 1]:
                return (n + 1, k + 1)
    return None
