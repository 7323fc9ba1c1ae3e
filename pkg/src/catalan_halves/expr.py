"""
Generating-function expressions: a small precedence-climbing parser and an
exact evaluator to truncated power series.

Grammar, loosest binding first::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' unary)?          # right associative, integer exponent
    atom    := INT | 'x' | 'r' | 'c' | FUNC '(' expr ')' | '(' expr ')'
    FUNC    := 'sqrt' | 'rev'

``c`` is the Catalan generating function (1 - sqrt(1-4x)) / (2x).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError, ParseError, PrecisionError, UnknownIdentifierError
from .series import Series, catalan

FUNCTIONS = ("sqrt", "rev")
SYMBOLS = ("x", "r", "c")


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: "Node"


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Node"


Node = Union[Num, Sym, Neg, BinOp, Pow, Call]


@dataclass(frozen=True)
class Token:
    kind: str   # 'int', 'name', 'op', 'end'
    text: str
    pos: int


def tokenize(text: str) -> list:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("name", text[i:j], i))
            i = j
        elif ch in "+-*/^()":
            tokens.append(Token("op", ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str):
        if self.tok.text != text or self.tok.kind != "op":
            raise ParseError(f"unexpected {self._describe()}", self.tok.pos, [repr(text)])
        self.advance()

    def _describe(self) -> str:
        return "end of input" if self.tok.kind == "end" else repr(self.tok.text)

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self._describe()}", self.tok.pos,
                             ["'+'", "'-'", "'*'", "'/'", "'^'", "end of input"])
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.advance().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Node:
        if self.tok.kind == "op" and self.tok.text == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            return Pow(base, self.unary())
        return base

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "int":
            self.advance()
            return Num(int(t.text))
        if t.kind == "name":
            self.advance()
            if t.text in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(t.text, arg)
            if t.text in SYMBOLS:
                return Sym(t.text)
            raise UnknownIdentifierError(
                f"unknown identifier {t.text!r}", t.pos, SYMBOLS + FUNCTIONS)
        if t.kind == "op" and t.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {self._describe()}", t.pos,
                         ["integer", "x", "r", "c", "sqrt(", "rev(", "'('", "'-'"])


def parse_gf(text: str) -> Node:
    return _Parser(text).parse()


# -- pretty printing ---------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}
_UNARY, _POW, _ATOM = 3, 4, 5


def _level(node: Node) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return _UNARY
    if isinstance(node, Pow):
        return _POW
    return _ATOM


def _wrap(node: Node, needed: int) -> str:
    s = to_text(node)
    return f"({s})" if _level(node) < needed else s


def to_text(node: Node) -> str:
    """Render an AST so that parsing the text gives back the same AST."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Call):
        return f"{node.func}({to_text(node.arg)})"
    if isinstance(node, Neg):
        return "-" + _wrap(node.operand, _UNARY)
    if isinstance(node, Pow):
        return _wrap(node.base, _ATOM) + "^" + _wrap(node.exponent, _UNARY)
    lvl = _PREC[node.op]
    # left associative: an equal-precedence right operand needs parentheses
    return _wrap(node.left, lvl) + node.op + _wrap(node.right, lvl + 1)


# -- evaluation --------------------------------------------------------

@dataclass(frozen=True)
class _Laurent:
    """x^val * s, with s known to s.prec coefficients."""

    val: int
    s: Series

    @property
    def abs_prec(self) -> int:
        return self.val + self.s.prec

    def normalized(self) -> "_Laurent":
        v = self.s.valuation()
        if v is None:
            raise PrecisionError("value is zero to the working precision")
        if v == 0:
            return self
        return _Laurent(self.val + v, self.s.shift_down(v))

    def __add__(self, other):
        v = min(self.val, other.val)
        top = min(self.abs_prec, other.abs_prec)
        if top <= v:
            raise PrecisionError("no coefficients survive the addition")
        a = self.s.shift_up(self.val - v).truncate(top - v)
        b = other.s.shift_up(other.val - v).truncate(top - v)
        return _Laurent(v, a + b)

    def __neg__(self):
        return _Laurent(self.val, -self.s)

    def __mul__(self, other):
        return _Laurent(self.val + other.val, self.s * other.s)

    def reciprocal(self):
        n = self.normalized()
        return _Laurent(-n.val, n.s.reciprocal())

    def power(self, k: int):
        if k < 0:
            return self.reciprocal().power(-k)
        if k == 0:
            return _Laurent(0, Series.constant(1, self.s.prec))
        return _Laurent(self.val * k, self.s**k)

    def to_series(self) -> Series:
        if self.val < 0:
            v = self.s.valuation()
            if v is None or self.val + v < 0:
                if v is not None:
                    raise DomainError("expression has a pole at x = 0")
                raise PrecisionError("not enough precision to rule out a pole")
            n = self.normalized()
            return n.s.shift_up(n.val)
        return self.s.shift_up(self.val) if self.val else self.s


def _sqrt(v: _Laurent) -> _Laurent:
    n = v.normalized()
    if n.val % 2:
        raise DomainError("square root of a series with odd valuation")
    lead = n.s[0]
    root = _rational_sqrt(lead)
    if root is None:
        raise DomainError(f"square root needs a rational square leading coefficient, got {lead}")
    return _Laurent(n.val // 2, (n.s / lead).sqrt_one() * root)


def _rational_sqrt(q: Fraction):
    from math import isqrt

    if q <= 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def _constant_int(node: Node, r) -> int:
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Neg):
        return -_constant_int(node.operand, r)
    if isinstance(node, Sym) and node.name == "r" and r is not None:
        if Fraction(r).denominator != 1:
            raise DomainError("exponent r must be an integer")
        return int(r)
    if isinstance(node, BinOp) and node.op in "+-*":
        a, b = _constant_int(node.left, r), _constant_int(node.right, r)
        return {"+": a + b, "-": a - b, "*": a * b}[node.op]
    if isinstance(node, Pow):
        e = _constant_int(node.exponent, r)
        if e < 0:
            raise DomainError("exponent must be a nonnegative integer expression")
        return _constant_int(node.base, r) ** e
    raise DomainError("exponents must be integer constants")


def _eval(node: Node, W: int, r) -> _Laurent:
    if isinstance(node, Num):
        return _Laurent(0, Series.constant(node.value, W))
    if isinstance(node, Sym):
        if node.name == "x":
            return _Laurent(1, Series.constant(1, W))
        if node.name == "c":
            return _Laurent(0, catalan(W))
        if r is None:
            raise UnknownIdentifierError("identifier 'r' needs a value (supply --r)")
        return _Laurent(0, Series.constant(Fraction(r), W))
    if isinstance(node, Neg):
        return -_eval(node.operand, W, r)
    if isinstance(node, BinOp):
        a = _eval(node.left, W, r)
        b = _eval(node.right, W, r)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a + (-b)
        if node.op == "*":
            return a * b
        return a * b.reciprocal()
    if isinstance(node, Pow):
        return _eval(node.base, W, r).power(_constant_int(node.exponent, r))
    if isinstance(node, Call):
        arg = _eval(node.arg, W, r)
        if node.func == "sqrt":
            return _sqrt(arg)
        s = arg.to_series()
        if s.prec < 2:
            raise PrecisionError("rev needs at least two known coefficients")
        return _Laurent(0, s.revert())
    raise TypeError(f"not an expression node: {node!r}")


MAX_EXTRA_PRECISION = 64


def evaluate(node: Node | str, prec: int, r=None) -> Series:
    """Evaluate to a power series known to exactly ``prec`` coefficients.

    Working precision grows until the result is honestly known that far
    (divisions by x and reversions eat coefficients).
    """
    if isinstance(node, str):
        node = parse_gf(node)
    W = prec
    while True:
        try:
            s = _eval(node, W, r).to_series()
            if s.prec >= prec:
                return s.truncate(prec)
            deficit = prec - s.prec
        except PrecisionError:
            deficit = 1
        if W - prec >= MAX_EXTRA_PRECISION:
            raise DomainError(
                f"could not reach precision {prec} within {MAX_EXTRA_PRECISION} extra terms "
                "(expression may be identically zero where a unit is needed)")
        W += max(deficit, 1)
