"""Rank-2 exterior algebra over an arbitrary commutative coefficient ring.

An element is ``c0 + c1*e1 + c2*e2 + c12*e1^e2``; the generators anticommute
and square to zero, the coefficients commute with everything.
"""

from __future__ import annotations

import enum

__all__ = [
    "ConjugationPolicy",
    "GrassmannElement",
    "grassmann_mul",
    "grassmann_conj",
    "hermitian_pair",
    "berezin_top",
    "body",
]


class ConjugationPolicy(enum.Enum):
    """How complex conjugation acts on the top form e1^e2.

    FIX keeps it (conj is an ordinary antilinear ring map), NEGATE flips its
    sign (conj reverses the order of products).
    """

    FIX = "fix"
    NEGATE = "negate"

    @classmethod
    def parse(cls, value) -> "ConjugationPolicy":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown conjugation policy {value!r} (use fix|negate)") from None


def _is_zero(x) -> bool:
    if isinstance(x, (int,)):
        return x == 0
    return x.is_zero()


def _conj(x):
    if isinstance(x, int):
        return x
    return x.conj()


class GrassmannElement:
    __slots__ = ("c0", "c1", "c2", "c12")

    def __init__(self, c0=0, c1=0, c2=0, c12=0):
        object.__setattr__(self, "c0", c0)
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)
        object.__setattr__(self, "c12", c12)

    def __setattr__(self, name, value):
        raise AttributeError("GrassmannElement is immutable")

    @property
    def coeffs(self):
        return (self.c0, self.c1, self.c2, self.c12)

    @classmethod
    def eta1(cls, one=1):
        return cls(0, one, 0, 0)

    @classmethod
    def eta2(cls, one=1):
        return cls(0, 0, one, 0)

    @classmethod
    def top(cls, one=1):
        return cls(0, 0, 0, one)

    def map(self, fn) -> "GrassmannElement":
        return GrassmannElement(*(fn(c) for c in self.coeffs))

    def _coerce(self, other):
        if isinstance(other, GrassmannElement):
            return other
        return GrassmannElement(other)

    def __add__(self, other):
        other = self._coerce(other)
        return GrassmannElement(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return self.map(lambda c: -c)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, GrassmannElement):
            # coefficient-ring scalar: commutes with generators
            return self.map(lambda c: c * other)
        return grassmann_mul(self, other)

    def __rmul__(self, other):
        return self.map(lambda c: other * c)

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coeffs)

    def is_even(self) -> bool:
        return _is_zero(self.c1) and _is_zero(self.c2)

    def is_odd(self) -> bool:
        return _is_zero(self.c0) and _is_zero(self.c12)

    def __eq__(self, other):
        other = self._coerce(other)
        return (self - other).is_zero()

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"GrassmannElement({self.c0!s}; {self.c1!s}; {self.c2!s}; {self.c12!s})"

    def conj(self, policy=ConjugationPolicy.FIX) -> "GrassmannElement":
        return grassmann_conj(self, policy)

    def d_odd(self, a: int) -> "GrassmannElement":
        """Left derivative with respect to the generator e_a."""
        if a == 1:
            return GrassmannElement(self.c1, 0, self.c12, 0)
        if a == 2:
            return GrassmannElement(self.c2, -self.c12, 0, 0)
        raise ValueError("odd index must be 1 or 2")


def grassmann_mul(a: GrassmannElement, b: GrassmannElement) -> GrassmannElement:
    return GrassmannElement(
        a.c0 * b.c0,
        a.c0 * b.c1 + a.c1 * b.c0,
        a.c0 * b.c2 + a.c2 * b.c0,
        a.c0 * b.c12 + a.c12 * b.c0 + a.c1 * b.c2 - a.c2 * b.c1,
    )


def grassmann_conj(a: GrassmannElement, policy=ConjugationPolicy.FIX) -> GrassmannElement:
    policy = ConjugationPolicy.parse(policy)
    top = _conj(a.c12)
    if policy is ConjugationPolicy.NEGATE:
        top = -top
    return GrassmannElement(_conj(a.c0), _conj(a.c1), _conj(a.c2), top)


def hermitian_pair(a: GrassmannElement, b: GrassmannElement, policy=ConjugationPolicy.FIX):
    """<a, b> = a * conj(b)."""
    return grassmann_mul(a, grassmann_conj(b, policy))


def berezin_top(a: GrassmannElement):
    return a.c12


def body(a: GrassmannElement):
    return a.c0
