import re

import pytest
from hypothesis import given, strategies as st

from catalan_halves.errors import DomainError, ParseError, UnknownIdentifierError
from catalan_halves.expr import (
    BinOp, Call, Neg, Num, Pow, Sym, evaluate, parse_gf, to_text,
)
from catalan_halves.series import Series


def coeffs(text, prec, r=None):
    return evaluate(text, prec, r).coeffs


class TestExamples:
    def test_long_division(self):
        assert coeffs("(1+2*x)/(1+x)", 5) == (1, 1, -1, 1, -1)

    def test_xc(self):
        assert coeffs("x*c", 5) == (0, 1, 1, 2, 5)

    def test_reversion(self):
        assert evaluate("rev(x*(1-x))", 12) == evaluate("x*c", 12)

    def test_catalan_definition(self):
        assert evaluate("(1-sqrt(1-4*x))/(2*x)", 10) == evaluate("c", 10)

    def test_rationals_via_division(self):
        assert coeffs("1/2 + x/3", 2) == (pytest.approx(0.5), pytest.approx(1 / 3))
        assert str(evaluate("1/2", 1).coeffs[0]) == "1/2"

    def test_parameter(self):
        assert coeffs("1/(1-r*x)", 4, r=3) == (1, 3, 9, 27)

    def test_power_with_parameter_exponent(self):
        assert coeffs("(1+x)^r", 3, r=2) == (1, 2, 1)

    def test_negative_power(self):
        assert coeffs("(1-x)^-2", 4) == (1, 2, 3, 4)

    def test_cancelling_x(self):
        # working precision must grow to pay for the division by x^2
        assert evaluate("(x^2*c)/x^2", 6) == evaluate("c", 6)


class TestGrammar:
    def test_precedence(self):
        assert parse_gf("1+2*x^2") == BinOp("+", Num(1), BinOp("*", Num(2), Pow(Sym("x"), Num(2))))

    def test_unary_binds_below_power(self):
        assert parse_gf("-x^2") == Neg(Pow(Sym("x"), Num(2)))

    def test_power_right_associative(self):
        assert parse_gf("x^2^3") == Pow(Sym("x"), Pow(Num(2), Num(3)))

    def test_left_associative(self):
        assert parse_gf("1-x-x") == BinOp("-", BinOp("-", Num(1), Sym("x")), Sym("x"))

    def test_call(self):
        assert parse_gf("sqrt(1-4*x)") == Call("sqrt", BinOp("-", Num(1), BinOp("*", Num(4), Sym("x"))))


class TestErrors:
    def test_syntax_error_has_position(self):
        with pytest.raises(ParseError) as err:
            parse_gf("1+*x")
        assert err.value.position == 2
        assert "offset 2" in str(err.value)
        assert err.value.expected

    def test_unbalanced(self):
        with pytest.raises(ParseError, match=re.escape("expected one of: ')'")):
            parse_gf("(1+x")

    def test_bad_character(self):
        with pytest.raises(ParseError):
            parse_gf("1 $ x")

    def test_unknown_identifier(self):
        with pytest.raises(UnknownIdentifierError, match="'y'"):
            parse_gf("1+y")

    def test_parameter_needs_value(self):
        with pytest.raises(UnknownIdentifierError):
            evaluate("1-r*x", 4)

    def test_pole(self):
        with pytest.raises(DomainError, match="pole"):
            evaluate("1/x", 4)

    def test_odd_square_root(self):
        with pytest.raises(DomainError):
            evaluate("sqrt(x)", 4)

    def test_irrational_square_root(self):
        with pytest.raises(DomainError):
            evaluate("sqrt(2+x)", 4)

    def test_fractional_exponent(self):
        with pytest.raises(DomainError):
            evaluate("(1+x)^(1/2)", 4)

    def test_zero_denominator(self):
        with pytest.raises(DomainError):
            evaluate("1/(x-x)", 4)

    def test_bad_reversion(self):
        with pytest.raises(DomainError):
            evaluate("rev(1+x)", 4)


# random expression trees for the print/parse round trip
atoms = st.one_of(st.integers(0, 9).map(Num), st.sampled_from(["x", "r", "c"]).map(Sym))


def extend(children):
    return st.one_of(
        children.map(Neg),
        st.builds(BinOp, st.sampled_from("+-*/"), children, children),
        st.builds(Pow, children, st.integers(0, 3).map(Num)),
        st.builds(Call, st.sampled_from(["sqrt", "rev"]), children),
    )


trees = st.recursive(atoms, extend, max_leaves=12)


@given(trees)
def test_print_parse_fixed_point(tree):
    assert parse_gf(to_text(tree)) == tree


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=5))
def test_polynomial_text(cs):
    text = "+".join(f"({c})*x^{i}" for i, c in enumerate(cs))
    assert evaluate(text, len(cs)) == Series(cs)
