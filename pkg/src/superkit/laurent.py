"""Finite Laurent sums in (y, ybar) and trigonometric polynomials on |y| = 1.

A ``LaurentFn`` stores ``{(m, n): c}`` meaning ``sum c * y**m * ybar**n``.
A ``CircleFn`` stores ``{k: c}`` meaning ``sum c * exp(i k phi)``.
Both are immutable and never keep zero coefficients.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import ComplexScalar, I, as_scalar, parse_complex

__all__ = ["LaurentFn", "CircleFn", "MonomialMap", "restrict_to_circle"]


def _clean(terms):
    return {k: v for k, v in terms.items() if not v.is_zero()}


class _TermAlgebra:
    """Shared dictionary arithmetic for LaurentFn / CircleFn."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            raise TypeError("terms must be a dict")
        self._terms = _clean({k: as_scalar(v) for k, v in terms.items()})
        self._hash = None

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    @classmethod
    def constant(cls, c):
        return cls({cls._unit_key: as_scalar(c)})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls.constant(1)

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        s = as_scalar(other)
        if s is NotImplemented:
            return NotImplemented
        return type(self).constant(s)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out[k] + v if k in out else v
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                k = self._key_add(k1, k2)
                p = v1 * v2
                out[k] = out[k] + p if k in out else p
        return type(self)(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = type(self).one()
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c) -> "_TermAlgebra":
        c = as_scalar(c)
        return type(self)({k: v * c for k, v in self._terms.items()})

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def inverse(self):
        """Inverse of a single-term element; anything else is not a unit here."""
        if not self.is_monomial():
            raise ZeroDivisionError(f"{self!s} is not a unit in the Laurent ring")
        (k, c), = self._terms.items()
        return type(self)({self._key_neg(k): c.inverse()})

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def constant_term(self) -> ComplexScalar:
        return self._terms.get(self._unit_key, ComplexScalar(0))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def max_abs_coefficient(self) -> float:
        if not self._terms:
            return 0.0
        return max(abs(complex(v)) for v in self._terms.values())


class LaurentFn(_TermAlgebra):
    """Finite sum of c * y^m * ybar^n."""

    _unit_key = (0, 0)

    @staticmethod
    def _key_add(a, b):
        return (a[0] + b[0], a[1] + b[1])

    @staticmethod
    def _key_neg(a):
        return (-a[0], -a[1])

    @classmethod
    def monomial(cls, m: int, n: int = 0, c=1) -> "LaurentFn":
        return cls({(m, n): as_scalar(c)})

    @classmethod
    def y(cls) -> "LaurentFn":
        return cls.monomial(1, 0)

    @classmethod
    def ybar(cls) -> "LaurentFn":
        return cls.monomial(0, 1)

    def conj(self) -> "LaurentFn":
        return LaurentFn({(n, m): c.conj() for (m, n), c in self._terms.items()})

    def diff(self, which: str = "y") -> "LaurentFn":
        """Wirtinger derivative d/dy (``which="y"``) or d/dybar (``"ybar"``)."""
        out = {}
        for (m, n), c in self._terms.items():
            if which == "y":
                if m:
                    out[(m - 1, n)] = c * m
            elif which == "ybar":
                if n:
                    out[(m, n - 1)] = c * n
            else:
                raise ValueError(f"unknown derivative {which!r}")
        return LaurentFn(out)

    def prime(self) -> "LaurentFn":
        return self.diff("y")

    def is_holomorphic(self) -> bool:
        return all(n == 0 for (_, n) in self._terms)

    def pullback(self, phi: "MonomialMap") -> "LaurentFn":
        """Substitute y = c * x**e (and ybar = conj(c) * xbar**e)."""
        return phi.pullback(self)

    def imag_part(self) -> "LaurentFn":
        return (self - self.conj()) * ComplexScalar(0, Fraction(-1, 2))

    def real_part(self) -> "LaurentFn":
        return (self + self.conj()) * Fraction(1, 2)

    def is_real(self) -> bool:
        return self == self.conj()

    def __call__(self, y: complex) -> complex:
        yb = y.conjugate()
        return sum(complex(c) * y**m * yb**n for (m, n), c in self._terms.items())

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (m, n), c in self.items():
            mon = "*".join(s for s in (_pow_str("y", m), _pow_str("ybar", n)) if s)
            parts.append(f"({c})" + (f"*{mon}" if mon else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentFn({self})"

    def to_json(self) -> dict:
        return {"terms": [[m, n, *c.to_pair()] for (m, n), c in self.items()]}

    @classmethod
    def from_json(cls, data) -> "LaurentFn":
        if isinstance(data, (int, str)):
            return cls.constant(parse_complex(data))
        terms = {}
        for row in data["terms"]:
            if len(row) != 4:
                raise ValueError(f"Laurent term must be [m, n, re, im], got {row!r}")
            m, n, re_, im_ = row
            key = (int(m), int(n))
            c = ComplexScalar.from_pair((re_, im_))
            terms[key] = terms[key] + c if key in terms else c
        return cls(terms)


def _pow_str(var, e):
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


class CircleFn(_TermAlgebra):
    """Trigonometric polynomial sum c_k exp(i k phi)."""

    _unit_key = 0

    @staticmethod
    def _key_add(a, b):
        return a + b

    @staticmethod
    def _key_neg(a):
        return -a

    @classmethod
    def exp(cls, k: int, c=1) -> "CircleFn":
        return cls({k: as_scalar(c)})

    @classmethod
    def cos(cls, n: int) -> "CircleFn":
        half = Fraction(1, 2)
        return cls({n: half}) + cls({-n: half})

    @classmethod
    def sin(cls, n: int) -> "CircleFn":
        # sin(n phi) = (e^{in phi} - e^{-in phi}) / (2i)
        c = ComplexScalar(0, Fraction(-1, 2))
        return cls({n: c}) + cls({-n: -c})

    def conj(self) -> "CircleFn":
        return CircleFn({-k: c.conj() for k, c in self._terms.items()})

    def diff(self) -> "CircleFn":
        return CircleFn({k: c * I * k for k, c in self._terms.items() if k})

    def prime(self) -> "CircleFn":
        return self.diff()

    def real_part(self) -> "CircleFn":
        return (self + self.conj()) * Fraction(1, 2)

    def imag_part(self) -> "CircleFn":
        return (self - self.conj()) * ComplexScalar(0, Fraction(-1, 2))

    def is_real(self) -> bool:
        return self == self.conj()

    def is_imaginary(self) -> bool:
        return self == -self.conj()

    def mean(self) -> ComplexScalar:
        """(1 / 2pi) * integral over the circle."""
        return self.constant_term()

    def degree_range(self) -> tuple[int, int]:
        if not self._terms:
            return (0, 0)
        keys = self._terms.keys()
        return (min(keys), max(keys))

    def at_quarter_turns(self, j: int) -> ComplexScalar:
        """Exact value at phi = j * pi / 2."""
        unit = [ComplexScalar(1), I, ComplexScalar(-1), -I]
        total = ComplexScalar(0)
        for k, c in self._terms.items():
            total = total + c * unit[(k * j) % 4]
        return total

    def at_eighth_turns_even(self, j: int) -> ComplexScalar:
        """Exact value at phi = j * pi / 4; requires every frequency k*j even."""
        unit = [ComplexScalar(1), I, ComplexScalar(-1), -I]
        total = ComplexScalar(0)
        for k, c in self._terms.items():
            if (k * j) % 2:
                raise ValueError("value at this angle leaves Q(i)")
            total = total + c * unit[((k * j) // 2) % 4]
        return total

    def __call__(self, phi):
        """Floating evaluation; ``phi`` may be a float or a numpy array."""
        import numpy as np

        phi = np.asarray(phi, dtype=float)
        out = np.zeros(phi.shape, dtype=complex)
        for k, c in self._terms.items():
            out = out + complex(c) * np.exp(1j * k * phi)
        return out if out.shape else complex(out)

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(
            f"({c})" + (f"*e^({k}i phi)" if k else "") for k, c in self.items()
        )

    def __repr__(self):
        return f"CircleFn({self})"

    def to_json(self) -> dict:
        return {"terms": [[k, *c.to_pair()] for k, c in self.items()]}

    @classmethod
    def from_json(cls, data) -> "CircleFn":
        terms = {}
        for row in data["terms"]:
            if len(row) != 3:
                raise ValueError(f"circle term must be [k, re, im], got {row!r}")
            k, re_, im_ = row
            c = ComplexScalar.from_pair((re_, im_))
            terms[int(k)] = terms[int(k)] + c if int(k) in terms else c
        return cls(terms)


def restrict_to_circle(u: LaurentFn) -> CircleFn:
    """Set y = exp(i phi), ybar = exp(-i phi)."""
    out = {}
    for (m, n), c in u.terms.items():
        k = m - n
        out[k] = out[k] + c if k in out else c
    return CircleFn(out)


class MonomialMap:
    """Reduced transition y = c * x**e with e in {+1, -1} and c != 0.

    ``pullback`` turns a function of y into a function of x.
    """

    __slots__ = ("c", "e")

    def __init__(self, c=1, e: int = 1):
        c = as_scalar(c)
        if c.is_zero():
            raise ValueError("monomial map needs a nonzero constant")
        if e not in (1, -1):
            raise ValueError("only y = c*x or y = c/x have Laurent inverses")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "e", e)

    def __setattr__(self, name, value):
        raise AttributeError("MonomialMap is immutable")

    def __eq__(self, other):
        return isinstance(other, MonomialMap) and (self.c, self.e) == (other.c, other.e)

    def __hash__(self):
        return hash((self.c, self.e))

    def __repr__(self):
        return f"MonomialMap(y = {self.c} * x^{self.e})"

    def as_laurent(self) -> LaurentFn:
        return LaurentFn.monomial(self.e, 0, self.c)

    def derivative(self) -> LaurentFn:
        """dy/dx as a function of x."""
        return LaurentFn.monomial(self.e - 1, 0, self.c * self.e)

    def inverse(self) -> "MonomialMap":
        # y = c x^e  =>  x = (y / c)^e = c^{-e} y^e
        return MonomialMap(self.c ** (-self.e), self.e)

    def compose(self, then: "MonomialMap") -> "MonomialMap":
        """x -> y -> z where self: y = c x^e and then: z = d y^f."""
        return MonomialMap(then.c * self.c**then.e, self.e * then.e)

    def pullback(self, u: LaurentFn) -> LaurentFn:
        cbar = self.c.conj()
        out = {}
        for (m, n), coef in u.terms.items():
            key = (self.e * m, self.e * n)
            val = coef * self.c**m * cbar**n
            out[key] = out[key] + val if key in out else val
        return LaurentFn(out)

    def __call__(self, x: complex) -> complex:
        return complex(self.c) * x**self.e

