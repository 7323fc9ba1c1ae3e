"""
Truncated formal power series with exact rational coefficients.

A ``Series`` with ``prec == N`` knows the coefficients of x^0 .. x^(N-1)
exactly and nothing beyond.  Every operation returns the longest prefix
it can vouch for, so precision loss is visible in the result rather
than silently padded with zeros.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

from .errors import DomainError, PrecisionError

Coeff = Fraction
Scalar = Union[int, Fraction]


def as_coeff(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"exact rational expected, got {type(value).__name__}")


class Series:
    """Immutable truncated power series ``sum c_n x^n + O(x^prec)``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar], prec: int | None = None):
        cs = [as_coeff(c) for c in coeffs]
        if prec is None:
            prec = len(cs)
        if prec < 1:
            raise PrecisionError(f"precision must be at least 1, got {prec}")
        if len(cs) < prec:
            cs.extend([Fraction(0)] * (prec - len(cs)))
        self._coeffs = tuple(cs[:prec])

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, value: Scalar, prec: int) -> "Series":
        return cls([value], prec)

    @classmethod
    def x(cls, prec: int) -> "Series":
        return cls([0, 1], prec)

    @classmethod
    def monomial(cls, n: int, prec: int, coeff: Scalar = 1) -> "Series":
        return cls([0] * n + [coeff], prec)

    @classmethod
    def geometric(cls, prec: int, ratio: Scalar = 1) -> "Series":
        """``1/(1 - ratio*x)``."""
        r = as_coeff(ratio)
        return cls([r**n for n in range(prec)], prec)

    # -- basic protocol -----------------------------------------------

    @property
    def prec(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def coeff(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n >= self.prec:
            raise PrecisionError(
                f"coefficient {n} requested from a series known to precision {self.prec}"
            )
        return self._coeffs[n]

    __getitem__ = coeff

    def __len__(self):
        return self.prec

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        terms = ", ".join(str(c) for c in self._coeffs)
        return f"Series([{terms}], prec={self.prec})"

    def agrees(self, other: "Series", upto: int | None = None) -> bool:
        """Coefficientwise equality on the shared known prefix."""
        n = min(self.prec, other.prec)
        if upto is not None:
            n = min(n, upto)
        return self._coeffs[:n] == other._coeffs[:n]

    def first_mismatch(self, other: "Series") -> int | None:
        for n, (a, b) in enumerate(zip(self._coeffs, other._coeffs)):
            if a != b:
                return n
        return None

    def truncate(self, prec: int) -> "Series":
        if prec > self.prec:
            raise PrecisionError(f"cannot raise precision {self.prec} to {prec} by truncation")
        return Series(self._coeffs[:prec])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    def valuation(self) -> int | None:
        """Index of the first nonzero known coefficient, None if all known are zero."""
        for n, c in enumerate(self._coeffs):
            if c:
                return n
        return None

    # -- shifts -------------------------------------------------------

    def shift_up(self, k: int = 1) -> "Series":
        """Multiply by x^k; one more coefficient becomes known per shift."""
        return Series([0] * k + list(self._coeffs), self.prec + k)

    def shift_down(self, k: int = 1) -> "Series":
        """Divide by x^k.  The first k coefficients must be zero."""
        if k == 0:
            return self
        if self.prec <= k:
            raise PrecisionError(f"dividing by x^{k} needs precision > {k}, have {self.prec}")
        if any(self._coeffs[:k]):
            raise DomainError(f"series is not divisible by x^{k}")
        return Series(self._coeffs[k:])

    # -- ring operations ---------------------------------------------

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            return other
        return Series.constant(as_coeff(other), self.prec)

    def __neg__(self):
        return Series([-c for c in self._coeffs])

    def __pos__(self):
        return self

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = min(self.prec, other.prec)
        return Series([self._coeffs[i] + other._coeffs[i] for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = min(self.prec, other.prec)
        return Series([self._coeffs[i] - other._coeffs[i] for i in range(n)])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_coeff(other)
            return Series([c * a for a in self._coeffs])
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.prec, other.prec)
        a, b = self._coeffs, other._coeffs
        out = []
        for k in range(n):
            s = Fraction(0)
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    s += a[i] * b[k - i]
            out.append(s)
        return Series(out)

    __rmul__ = __mul__

    def reciprocal(self) -> "Series":
        b = self._coeffs
        if b[0] == 0:
            raise DomainError("cannot invert a series with zero constant term")
        inv0 = 1 / b[0]
        q = [inv0]
        for n in range(1, self.prec):
            s = Fraction(0)
            for i in range(1, n + 1):
                if b[i]:
                    s += b[i] * q[n - i]
            q.append(-s * inv0)
        return Series(q)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_coeff(other)
            if c == 0:
                raise DomainError("division by zero scalar")
            return Series([a / c for a in self._coeffs])
        if not isinstance(other, Series):
            return NotImplemented
        b = other._coeffs
        if b[0] == 0:
            raise DomainError("division by a series with zero constant term")
        n = min(self.prec, other.prec)
        a = self._coeffs
        inv0 = 1 / b[0]
        q = []
        for k in range(n):
            s = a[k]
            for i in range(1, k + 1):
                if b[i]:
                    s -= b[i] * q[k - i]
            q.append(s * inv0)
        return Series(q)

    def __rtruediv__(self, other):
        return Series.constant(as_coeff(other), self.prec) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.reciprocal() ** (-k)
        result = Series.constant(1, self.prec)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- calculus and composition --------------------------------------

    def derivative(self) -> "Series":
        if self.prec == 1:
            raise PrecisionError("derivative of a precision-1 series has no known coefficients")
        return Series([n * c for n, c in enumerate(self._coeffs) if n])

    def compose(self, inner: "Series") -> "Series":
        """``self(inner(x))``; ``inner`` must vanish at 0."""
        if inner._coeffs[0] != 0:
            raise DomainError("inner series of a composition must have zero constant term")
        n = min(self.prec, inner.prec)
        inner = inner.truncate(n)
        # Horner from the top coefficient down; index i only matters below n.
        acc = Series.constant(self._coeffs[n - 1], n)
        for i in range(n - 2, -1, -1):
            acc = acc * inner + self._coeffs[i]
        return acc

    __call__ = compose

    def revert(self) -> "Series":
        """Compositional inverse by Newton iteration on ``self(g) = x``."""
        f = self
        if f._coeffs[0] != 0:
            raise DomainError("reversion needs a zero constant term")
        if f.prec < 2:
            raise PrecisionError("reversion needs at least the linear coefficient")
        f1 = f._coeffs[1]
        if f1 == 0:
            raise DomainError("reversion needs a nonzero linear coefficient")
        p = f.prec
        df = f.derivative()
        g = Series([0, 1 / f1])
        m = 2
        while m < p:
            m = min(2 * m, p)
            g = Series(g.coeffs, m)
            fm = f.truncate(m)
            # residual vanishes to order of the previous precision, so the
            # division can run one degree lower than m.
            residual = (fm.compose(g) - Series.x(m)).shift_down(1)
            slope = df.truncate(m - 1).compose(g.truncate(m - 1))
            g = g - (residual / slope).shift_up(1)
        return g

    def sqrt_one(self) -> "Series":
        """Square root with constant term 1 of a series with constant term 1."""
        s = self._coeffs
        if s[0] != 1:
            raise DomainError("sqrt_one needs constant term 1")
        r = [Fraction(1)]
        for n in range(1, self.prec):
            acc = s[n]
            for i in range(1, n):
                acc -= r[i] * r[n - i]
            r.append(acc / 2)
        return Series(r)


def x_series(prec: int) -> Series:
    return Series.x(prec)


def sqrt_one(s: Series) -> Series:
    return s.sqrt_one()


def revert(f: Series) -> Series:
    return f.revert()


def compose(outer: Series, inner: Series) -> Series:
    return outer.compose(inner)


def derivative(s: Series) -> Series:
    return s.derivative()


def coeff(s: Series, n: int) -> Fraction:
    return s.coeff(n)


def arith(a: Series, b: Series, op: str) -> Series:
    ops = {
        "add": Series.__add__,
        "sub": Series.__sub__,
        "mul": Series.__mul__,
        "div": Series.__truediv__,
    }
    try:
        return ops[op](a, b)
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None


def catalan(prec: int) -> Series:
    """c(x) = (1 - sqrt(1 - 4x)) / (2x), to ``prec`` coefficients."""
    if prec < 1:
        raise PrecisionError("precision must be at least 1")
    root = Series([1, -4], prec + 1).sqrt_one()
    return ((1 - root) / 2).shift_down(1)


def one_over_sqrt_1m4x(prec: int) -> Series:
    return Series([1, -4], prec).sqrt_one().reciprocal()
