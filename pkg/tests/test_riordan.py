from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given

from catalan_halves import gallery
from catalan_halves.errors import PrecisionError, ValidationError
from catalan_halves.expr import evaluate
from catalan_halves.riordan import (
    RiordanPair, Triangle, check_a_sequence, int_seq, inverse, multiply, new_pair,
    subgroup_check,
)
from catalan_halves.series import Series
from conftest import pairs


def P(g, f, prec=12):
    return RiordanPair(evaluate(g, prec), evaluate(f, prec))


PASCAL = P("1/(1-x)", "x/(1-x)")
CATALAN_1 = P("1", "x*c")


class TestValidation:
    def test_pascal_is_valid(self):
        assert new_pair(evaluate("1/(1-x)", 5), evaluate("x/(1-x)", 5)).prec == 5

    def test_g0_zero(self):
        with pytest.raises(ValidationError, match="g"):
            new_pair(Series.x(4), Series.x(4))

    def test_f1_zero(self):
        with pytest.raises(ValidationError, match="f"):
            new_pair(Series.constant(1, 4), Series.monomial(2, 4))

    def test_f0_nonzero(self):
        with pytest.raises(ValidationError):
            new_pair(Series.constant(1, 4), Series.geometric(4))

    def test_precision_is_shared_minimum(self):
        assert RiordanPair(Series.geometric(9), Series.x(5)).prec == 5


class TestEntries:
    def test_pascal_entry(self):
        assert PASCAL.entry(4, 2) == 6

    def test_catalan_entry(self):
        assert CATALAN_1.entry(6, 3) == 28

    def test_above_diagonal(self):
        assert PASCAL.entry(2, 5) == 0

    def test_entry_needs_precision(self):
        with pytest.raises(PrecisionError):
            PASCAL.entry(12, 0)

    @given(pairs(8))
    def test_diagonal(self, R):
        for n in range(8):
            assert R.entry(n, n) == R.g[0] * R.f[1] ** n

    def test_pascal_against_factorials(self):
        t = PASCAL.triangle(12)
        for n in range(12):
            for k in range(n + 1):
                assert t[n, k] == factorial(n) // (factorial(k) * factorial(n - k))


class TestTriangle:
    def test_catalan_display(self):
        golden = gallery.golden_corpus()["catalan_1_xc"]
        assert CATALAN_1.triangle(golden.size).dense() == [list(r) for r in golden.rows]

    def test_ex3_display(self):
        golden = gallery.golden_corpus()["ex3_main"]
        R = P("(1+2*x)/(1+x)", "-x/(1+x)", golden.size)
        assert R.triangle(golden.size).dense() == [list(r) for r in golden.rows]

    def test_identity(self):
        assert RiordanPair.identity(3).triangle(3).dense() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

    def test_too_many_rows(self):
        with pytest.raises(PrecisionError):
            PASCAL.triangle(13)

    def test_rejects_upper_entries(self):
        with pytest.raises(ValueError):
            Triangle([[1, 2], [0, 1]])

    def test_column_and_leading(self):
        t = PASCAL.triangle(6)
        assert t.column(1) == (0, 1, 2, 3, 4, 5)
        assert t.leading(3) == PASCAL.triangle(3)
        with pytest.raises(PrecisionError):
            t.leading(7)
        with pytest.raises(PrecisionError):
            t[6, 0]

    def test_first_mismatch(self):
        t = PASCAL.triangle(4)
        rows = t.dense()
        rows[3][1] = 99
        assert t.first_mismatch(rows) == (3, 1, 3, 99)
        assert t.first_mismatch(t) is None


class TestGroup:
    def test_halves_product(self):
        got = multiply(P("1", "-x*c"), P("1", "-x/(1+x)"))
        assert got == P("1", "x*c^2")

    def test_identity_element(self):
        assert PASCAL * RiordanPair.identity(12) == PASCAL
        assert RiordanPair.identity(12) * PASCAL == PASCAL

    def test_pascal_squared(self):
        B2 = PASCAL * PASCAL
        assert B2 == P("1/(1-2*x)", "x/(1-2*x)")
        assert B2.triangle(10) == PASCAL.triangle(10) @ PASCAL.triangle(10)

    def test_inverse_examples(self):
        assert inverse(P("1/(1-x)", "-x/(1+x)")) == P("(1+2*x)/(1+x)", "-x/(1+x)")
        assert inverse(P("1/(1+x)^2", "x/(1+x)^2")) == P("c^2", "x*c^2")
        assert inverse(RiordanPair.identity(5)) == RiordanPair.identity(5)

    @given(pairs(12), pairs(12), pairs(12))
    def test_axioms(self, A, B, C):
        one = RiordanPair.identity(12)
        assert (A * B) * C == A * (B * C)
        assert A * A.inverse() == one
        assert A.inverse() * A == one

    @given(pairs(8), pairs(8))
    def test_homomorphism(self, A, B):
        assert (A * B).triangle(8) == A.triangle(8) @ B.triangle(8)


class TestAction:
    def test_apply_one(self):
        assert PASCAL.apply(Series.constant(1, 12)) == PASCAL.g

    def test_four_power_row_sums(self):
        R = P("c/sqrt(1-4*x)", "x*c^2")
        assert R.apply(Series.geometric(12)) == evaluate("1/(1-4*x)", 12)

    def test_pascal_row_sums(self):
        assert PASCAL.apply(Series.geometric(12)).coeffs == tuple(2**n for n in range(12))

    def test_row_sums(self):
        assert P("c^2", "x*c^2").row_sums(5) == (1, 3, 10, 35, 126)
        assert RiordanPair.identity(4).row_sums(4) == (1, 1, 1, 1)
        assert P("c^2", "x*c^4").row_sums(6) == (1, 3, 12, 52, 232, 1049)

    def test_row_sums_precision(self):
        with pytest.raises(PrecisionError):
            P("c^2", "x*c^2", 4).row_sums(5)

    @given(pairs(8))
    def test_ftra(self, R):
        h = Series([1, 2, -1, 3, 0, 5, -2, 1])
        t = R.triangle(8)
        got = R.apply(h)
        for n in range(8):
            assert got[n] == sum((t[n, k] * h[k] for k in range(n + 1)), Fraction(0))


class TestASequence:
    def test_pascal(self):
        A = PASCAL.a_sequence()
        assert A.coeffs == (1, 1) + (0,) * (A.prec - 2)
        assert check_a_sequence(PASCAL.triangle(10), A) is None

    def test_catalan(self):
        assert CATALAN_1.a_sequence() == Series.geometric(CATALAN_1.a_sequence().prec)

    def test_identity(self):
        A = RiordanPair.identity(6).a_sequence()
        assert A == Series.constant(1, A.prec)

    def test_detects_bad_sequence(self):
        assert check_a_sequence(PASCAL.triangle(6), Series([1, 2, 0, 0, 0])) is not None

    @pytest.mark.parametrize("name", gallery.names())
    def test_every_gallery_array(self, name):
        R = gallery.named(name).at(10)
        assert check_a_sequence(R.triangle(10), R.a_sequence()) is None


class TestSubgroups:
    def test_pascal(self):
        assert subgroup_check(PASCAL, "bell")
        assert subgroup_check(PASCAL, "hitting_time")
        assert not subgroup_check(PASCAL, "associated")

    def test_associated(self):
        m = subgroup_check(CATALAN_1, "associated")
        assert m.member and m.prec == 12

    def test_unknown(self):
        with pytest.raises(ValueError):
            subgroup_check(PASCAL, "abelian")


def test_int_seq():
    assert int_seq([1, 2]) == (Fraction(1), Fraction(2))
    with pytest.raises(ValueError):
        int_seq([])


def test_binomial_oracle():
    t = gallery.named("pascal").triangle(12)
    assert all(t[n, k] == comb(n, k) for n in range(12) for k in range(n + 1))
