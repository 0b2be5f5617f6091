"""Exact Gaussian-rational scalars and the shared scalar text grammar.

Two numeric backends run through the same code paths: Python ``complex``
for floating point, and :class:`GaussianRational` for exact arithmetic.
Anything written against ``+ - * /`` and ``.conjugate()`` works with both.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational


class GaussianRational:
    """An element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, value) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Rational)):
            return cls(value, 0)
        raise TypeError(f"cannot convert {value!r} to an exact scalar")

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Rational)):
            return GaussianRational(self.re + other, self.im)
        if isinstance(other, (float, complex)):
            return complex(self) + other
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Rational)):
            return GaussianRational(self.re - other, self.im)
        if isinstance(other, (float, complex)):
            return complex(self) - other
        return NotImplemented

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            if not other.im:
                return GaussianRational(self.re * other.re, self.im * other.re)
            if not self.im:
                return GaussianRational(self.re * other.re, self.re * other.im)
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, Rational)):
            return GaussianRational(self.re * other, self.im * other)
        if isinstance(other, (float, complex)):
            return complex(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return GaussianRational(self.re / other, self.im / other)
        if isinstance(other, GaussianRational):
            den = other.re * other.re + other.im * other.im
            if den == 0:
                raise ZeroDivisionError("division by zero")
            return self * GaussianRational(other.re / den, -other.im / den)
        if isinstance(other, (float, complex)):
            return complex(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self if isinstance(
            other, (int, Rational)
        ) else NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussianRational(1) / self ** (-k)
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    @property
    def real(self) -> Fraction:
        return self.re

    @property
    def imag(self) -> Fraction:
        return self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return self.im == 0 and self.re == other
        if isinstance(other, (float, complex)):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        return format_scalar(self)


def is_exact(value) -> bool:
    return isinstance(value, (GaussianRational, int, Rational))


def to_exact(value) -> GaussianRational:
    """Coerce an int/Fraction/GaussianRational; floats are rejected."""
    return GaussianRational.coerce(value)


def abs2(value):
    """|value|^2, exact when the input is exact."""
    if isinstance(value, GaussianRational):
        return value.abs2()
    if isinstance(value, (int, Rational)):
        return value * value
    return value.real * value.real + value.imag * value.imag


def conj(value):
    if isinstance(value, (int, Rational)):
        return value
    return value.conjugate()


def exact_sqrt(q) -> Fraction:
    """Square root of a nonnegative rational; raises if it is irrational."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("negative argument")
    num, den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if num * num != q.numerator or den * den != q.denominator:
        raise ValueError(f"sqrt({q}) is irrational; use the float backend")
    return Fraction(num, den)


def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(value) -> str:
    """Canonical text: ``p/q`` for rationals, ``p/q+r/si`` for Gaussian ones."""
    if isinstance(value, (int, Rational)):
        return _format_rational(Fraction(value))
    if isinstance(value, GaussianRational):
        if not value.im:
            return _format_rational(value.re)
        im = _format_rational(abs(value.im))
        sign = "-" if value.im < 0 else "+"
        if not value.re:
            return f"{'-' if value.im < 0 else ''}{im}i"
        return f"{_format_rational(value.re)}{sign}{im}i"
    value = complex(value)
    if value.imag == 0:
        return repr(value.real)
    return f"{value.real!r}{'+' if value.imag >= 0 else '-'}{abs(value.imag)!r}i"


def parse_real(text: str, exact: bool = True):
    """Parse ``p/q``, an integer or a decimal (``0.25``, ``1e-3``)."""
    text = str(text).strip()
    if exact:
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed scalar {text!r}") from exc
    if "/" in text:
        num, den = text.split("/", 1)
        return float(num) / float(den)
    try:
        return float(text)
    except ValueError as exc:
        raise ValueError(f"malformed scalar {text!r}") from exc


def make_scalar(re: str, im: str = "0", exact: bool = True):
    """Build a scalar from the record form ``{re: ..., im: ...}``."""
    if exact:
        return GaussianRational(parse_real(re, True), parse_real(im, True))
    return complex(parse_real(re, False), parse_real(im, False))


def parse_gaussian(text: str) -> GaussianRational:
    """Inverse of :func:`format_scalar` for exact values, e.g. ``-1/2+3/4i``."""
    s = text.strip().replace(" ", "")
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s.endswith("i"):
        return GaussianRational(parse_real(s))
    body = s[:-1]
    # split at the last sign that is not a leading sign or exponent sign
    for pos in range(len(body) - 1, 0, -1):
        if body[pos] in "+-" and body[pos - 1] not in "eE":
            re_part, im_part = body[:pos], body[pos:]
            break
    else:
        re_part, im_part = "0", body
    if im_part in ("", "+"):
        im_part = "1"
    elif im_part == "-":
        im_part = "-1"
    return GaussianRational(parse_real(re_part), parse_real(im_part))
