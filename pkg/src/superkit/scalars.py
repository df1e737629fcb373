"""Exact Gaussian-rational complex scalars."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["ComplexScalar", "as_scalar", "parse_complex", "parse_rational", "rational_str", "I"]


def parse_rational(text) -> Fraction:
    """Parse "p/q", "p", or a decimal literal into a Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    text = str(text).strip()
    if not text:
        raise ValueError("empty rational")
    return Fraction(text)


def rational_str(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class ComplexScalar:
    """re + i*im with rational parts. Immutable and hashable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("ComplexScalar is immutable")

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexScalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexScalar(-self.re, -self.im)

    def __sub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexScalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __mul__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexScalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "ComplexScalar":
        n = self.norm2()
        if n == 0:
            raise ZeroDivisionError("inverse of zero scalar")
        return ComplexScalar(self.re / n, -self.im / n)

    def __truediv__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        result = ONE
        for _ in range(abs(n)):
            result = result * base
        return result

    def conj(self) -> "ComplexScalar":
        return ComplexScalar(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    # comparison -------------------------------------------------------
    def __eq__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"ComplexScalar({self})"

    def __str__(self):
        re_s, im_s = rational_str(self.re), rational_str(self.im)
        if self.im == 0:
            return re_s
        if self.re == 0:
            return f"{im_s}i"
        sign = "+" if self.im > 0 else "-"
        return f"{re_s}{sign}{rational_str(abs(self.im))}i"

    def to_pair(self) -> list[str]:
        return [rational_str(self.re), rational_str(self.im)]

    @classmethod
    def from_pair(cls, pair) -> "ComplexScalar":
        re_, im_ = pair
        return cls(parse_rational(re_), parse_rational(im_))


ZERO = ComplexScalar(0, 0)
ONE = ComplexScalar(1, 0)
I = ComplexScalar(0, 1)


def as_scalar(x):
    if isinstance(x, ComplexScalar):
        return x
    if isinstance(x, (int, Fraction, Rational)):
        return ComplexScalar(x, 0)
    if isinstance(x, complex):
        raise TypeError("floating complex values are not exact; use ComplexScalar")
    return NotImplemented


def parse_complex(text) -> ComplexScalar:
    """Parse forms like "1", "-1/2", "i", "-i", "2+3i", "1/2-1/3i", "0,1"."""
    if isinstance(text, ComplexScalar):
        return text
    if isinstance(text, (list, tuple)):
        return ComplexScalar.from_pair(text)
    s = str(text).replace(" ", "")
    if "," in s:
        return ComplexScalar.from_pair(s.split(",", 1))
    if not s:
        raise ValueError("empty complex literal")
    if s.endswith("i"):
        body = s[:-1]
        # split at the last sign that is not leading
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut > 0:
            re_part, im_part = body[:cut], body[cut:]
        else:
            re_part, im_part = "0", body
        if im_part in ("", "+"):
            im_part = "1"
        elif im_part == "-":
            im_part = "-1"
        return ComplexScalar(parse_rational(re_part), parse_rational(im_part))
    return ComplexScalar(parse_rational(s), 0)
