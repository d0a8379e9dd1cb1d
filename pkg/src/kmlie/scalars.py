"""Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals.

Everything in the package is exact.  Plain ``int`` and ``Fraction`` values are
used for the rational field; :class:`GaussQ` adds ``a + b i`` with rational
``a``, ``b``.  A ``GaussQ`` with zero imaginary part compares and hashes equal
to the corresponding ``Fraction`` so that mixed-field equality is literal.
"""
from __future__ import annotations

import enum
import re
from fractions import Fraction
from numbers import Rational
from typing import Union


class Field(enum.Enum):
    RATIONAL = "rational"
    GAUSSIAN = "gaussian"

    @classmethod
    def parse(cls, value: "Field | str") -> "Field":
        if isinstance(value, Field):
            return value
        return cls(value.lower())


class GaussQ:
    """Gaussian rational ``re + im*i``."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rational | int = 0, im: Rational | int = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussQ):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussQ(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussQ(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussQ(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussQ(self.re * other, self.im * other)
        if not isinstance(other, GaussQ):
            return NotImplemented
        return GaussQ(self.re * other.re - self.im * other.im,
                      self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("GaussQ division by zero")
        return GaussQ((self.re * o.re + self.im * o.im) / den,
                      (self.im * o.re - self.re * o.im) / den)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussQ(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussQ(1) / (self ** -k)
        out = GaussQ(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, GaussQ):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "GaussQ":
        return GaussQ(self.re, -self.im)

    def __repr__(self):
        return f"GaussQ({self.re!s}, {self.im!s})"

    def __str__(self):
        return format_scalar(self)


I = GaussQ(0, 1)

Scalar = Union[int, Fraction, GaussQ]


def conj(x: Scalar) -> Scalar:
    if isinstance(x, GaussQ):
        return x.conjugate()
    return x


def is_real(x: Scalar) -> bool:
    return not isinstance(x, GaussQ) or x.im == 0


def real_part(x: Scalar) -> Fraction:
    if isinstance(x, GaussQ):
        return x.re
    return Fraction(x)


def normalize(x: Scalar) -> Scalar:
    """Collapse to the simplest exact type (int, Fraction or GaussQ)."""
    if isinstance(x, GaussQ):
        if x.im != 0:
            return x
        x = x.re
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def coerce(x: Scalar, field: Field) -> Scalar:
    if field is Field.RATIONAL:
        if not is_real(x):
            raise ValueError(f"{x} is not rational")
        return normalize(x)
    return x if isinstance(x, GaussQ) else GaussQ(x)


def _q(x: Fraction) -> str:
    return str(Fraction(x))


def format_scalar(x: Scalar) -> str:
    """Report format: rationals as ``p/q``, Gaussian rationals as ``p/q+r/si``."""
    if isinstance(x, GaussQ):
        if x.im == 0:
            return _q(x.re)
        sign = "+" if x.im >= 0 else "-"
        return f"{_q(x.re)}{sign}{_q(abs(x.im))}i"
    return _q(x)


def format_matrix_entry(x: Scalar) -> str:
    """Matrix export format ``(a/b) + (c/d)i``."""
    re_, im_ = (x.re, x.im) if isinstance(x, GaussQ) else (Fraction(x), Fraction(0))
    return f"({_q(re_)}) + ({_q(im_)})i"


_GAUSS_RE = re.compile(r"^\s*([+-]?[0-9/]+)\s*([+-])\s*([0-9/]*)\s*i\s*$")
_MATRIX_RE = re.compile(r"^\s*\(([^)]*)\)\s*\+\s*\(([^)]*)\)i\s*$")


def parse_scalar(text: str) -> Scalar:
    """Inverse of :func:`format_scalar` and :func:`format_matrix_entry`."""
    m = _MATRIX_RE.match(text)
    if m:
        return normalize(GaussQ(Fraction(m.group(1)), Fraction(m.group(2))))
    m = _GAUSS_RE.match(text)
    if m:
        im = Fraction(m.group(3) or 1)
        if m.group(2) == "-":
            im = -im
        return normalize(GaussQ(Fraction(m.group(1)), im))
    return normalize(Fraction(text.strip()))
