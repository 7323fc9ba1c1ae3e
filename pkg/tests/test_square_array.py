from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from catalan_halves import gallery
from catalan_halves.errors import DomainError, PrecisionError
from catalan_halves.expr import evaluate
from catalan_halves.riordan import RiordanPair
from catalan_halves.square_array import (
    SquareGrid, conjugate_binomial, diagonal_sums, mod_reduce, square_from_triangle,
)


def example(N=9):
    t = gallery.named("ex3_main").triangle(2 * N - 1)
    return square_from_triangle(t, N)


def test_second_row():
    assert example().row(1) == (1, 0, -1, 2, -3, 4, -5, 6, -7)


def test_corner_follows_definition():
    assert example()[0, 0] == 1


def test_interior_cell():
    assert example()[4, 2] == -5
    t = gallery.named("ex3_main").triangle(17)
    assert t[6, 2] == -5


def test_needs_source_rows():
    t = gallery.named("ex3_main").triangle(10)
    with pytest.raises(PrecisionError, match="11 triangle rows"):
        square_from_triangle(t, 6)


def test_diagonal_sums():
    assert diagonal_sums(example()) == (1,) + (0,) * 8


def test_absolute_diagonal_sums():
    want = evaluate("sqrt((1+2*x)/(1-2*x))", 9).coeffs
    assert diagonal_sums(example(), absolute=True) == want
    assert want[:6] == (1, 2, 2, 4, 6, 12)


def test_zero_grid():
    assert diagonal_sums(SquareGrid.zeros(4)) == (0, 0, 0, 0)
    assert conjugate_binomial(SquareGrid.zeros(4)) == SquareGrid.zeros(4)


def test_mod_two_display():
    golden = gallery.golden_corpus()["ex3_main_square_mod2"]
    s = mod_reduce(example(golden.size), 2)
    assert s.dense() == [list(r) for r in golden.rows]
    assert s.row(3)[:9] == (1, 0, 0, 0, 1, 0, 0, 0, 1)


def test_gould():
    assert diagonal_sums(mod_reduce(example(), 2))[:8] == (1, 2, 2, 4, 2, 4, 4, 8)


def test_mod_identity():
    assert mod_reduce(SquareGrid.identity(5), 2) == SquareGrid.identity(5)


def test_mod_rejects_rationals():
    with pytest.raises(DomainError, match="not an integer"):
        mod_reduce(SquareGrid([[Fraction(1, 2)]]), 2)


def test_mod_rejects_small_modulus():
    with pytest.raises(DomainError):
        mod_reduce(SquareGrid.identity(2), 1)


def test_conjugation_gives_riordan_array():
    conj = conjugate_binomial(example())
    R = RiordanPair(evaluate("(1+x)/(1-x)", 9), evaluate("x", 9))
    assert conj.dense() == R.triangle(9).dense()
    assert all(conj[n, n] == 1 for n in range(9))
    assert all(conj[n, k] == 2 for n in range(9) for k in range(n))


def test_conjugation_of_identity_is_vandermonde():
    conj = conjugate_binomial(SquareGrid.identity(7))
    assert all(conj[n, k] == comb(n + k, n) for n in range(7) for k in range(7))


def test_conjugation_size_check():
    with pytest.raises(PrecisionError):
        conjugate_binomial(SquareGrid.identity(3), 4)


def test_grid_validation_and_leading():
    with pytest.raises(ValueError):
        SquareGrid([[1, 2], [3]])
    with pytest.raises(PrecisionError):
        SquareGrid.identity(2).leading(3)


@given(st.sampled_from(gallery.names()), st.integers(2, 7))
def test_cells_are_shifted_columns(name, N):
    t = gallery.named(name).triangle(2 * N - 1)
    s = square_from_triangle(t, N)
    assert all(s[n, k] == t[n + k, k] for n in range(N) for k in range(N))


@given(st.sampled_from(gallery.names()), st.integers(2, 7))
def test_conjugation_truncation_stable(name, N):
    t = gallery.named(name).triangle(2 * N + 1)
    big = conjugate_binomial(square_from_triangle(t, N + 1))
    assert big.leading(N) == conjugate_binomial(square_from_triangle(t, N))
