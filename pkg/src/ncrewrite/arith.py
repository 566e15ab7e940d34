"""Exact arithmetic over the Gaussian rationals Q(i).

Rational parts are :class:`fractions.Fraction`, which is always stored
reduced with a positive denominator.  No floating point is used anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

Rational = Fraction

Scalar = Union["GaussianRational", int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class GaussianRational:
    """An exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return cls(x, 0)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_real(self) -> bool:
        return self.im == 0

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        return format_scalar(self)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            if b == 0 and d == 0:
                return GaussianRational(a * c, 0)
            return GaussianRational(a * c - b * d, a * d + b * c)
        try:
            o = _frac(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re * o, self.im * o)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)


def field_arithmetic(a, b, op: str) -> GaussianRational:
    """Apply ``op`` in {add, sub, mul, div} to two scalars.

    Raises ZeroDivisionError for ``div`` by zero.
    """
    a = GaussianRational.coerce(a)
    b = GaussianRational.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


def _fmt_frac(x: Fraction) -> str:
    return str(x)


def format_scalar(c: GaussianRational) -> str:
    """Textual form ``a/b + c/d*i`` with zero parts omitted."""
    re_, im = c.re, c.im
    if im == 0:
        return _fmt_frac(re_)
    if abs(im) == 1:
        imag = "i"
    else:
        imag = f"{_fmt_frac(abs(im))}*i"
    if re_ == 0:
        return imag if im > 0 else f"-{imag}"
    sign = "+" if im > 0 else "-"
    return f"{_fmt_frac(re_)} {sign} {imag}"


_IMAG_RE = re.compile(
    r"^\s*(?:(?P<re>-?\d+(?:/\d+)?)\s*(?P<op>[+-])\s*|(?P<neg>-)\s*)?"
    r"(?:(?P<im>\d+(?:/\d+)?)\s*\*\s*)?i\s*$"
)
_REAL_RE = re.compile(r"^\s*-?\d+(?:/\d+)?\s*$")


def parse_scalar(text: str) -> GaussianRational:
    """Inverse of :func:`format_scalar`."""
    if _REAL_RE.match(text):
        return GaussianRational(Fraction(text.strip()), 0)
    m = _IMAG_RE.match(text)
    if not m:
        raise ValueError(f"malformed Gaussian rational {text!r}")
    im = Fraction(m.group("im")) if m.group("im") else Fraction(1)
    if m.group("op") == "-" or m.group("neg"):
        im = -im
    re_ = Fraction(m.group("re")) if m.group("re") else Fraction(0)
    return GaussianRational(re_, im)
