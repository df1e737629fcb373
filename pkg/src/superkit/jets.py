"""Polynomials in field jets over circle functions, and their first variations.

A jet symbol is ``(field, conj, order)``: ``("psi1", True, 1)`` stands for the
derivative of conj(psi1).  A field and its conjugate are independent symbols;
reality constraints are imposed afterwards by a ``RealityAssignment``.
"""

from __future__ import annotations

import enum
from typing import NamedTuple

from .laurent import CircleFn
from .scalars import as_scalar

__all__ = [
    "FIELDS",
    "Jet",
    "JetPolynomial",
    "VariationForm",
    "Reality",
    "RealityAssignment",
    "field_jets",
    "euler_lagrange_variation",
    "vanishing_under_constraints",
    "infer_reality",
]

FIELDS = ("phi", "psi1", "psi2", "F")


class Jet(NamedTuple):
    field: str
    conj: bool = False
    order: int = 0

    def __str__(self):
        base = f"conj({self.field})" if self.conj else self.field
        return base + "'" * self.order

    def raised(self) -> "Jet":
        return Jet(self.field, self.conj, self.order + 1)

    def conjugate(self) -> "Jet":
        return Jet(self.field, not self.conj, self.order)


def _merge(m1, m2):
    powers = dict(m1)
    for s, p in m2:
        powers[s] = powers.get(s, 0) + p
    return tuple(sorted(powers.items()))


def _drop(mono, sym):
    """(power of sym, monomial with one factor of sym removed)."""
    powers = dict(mono)
    p = powers.get(sym, 0)
    if not p:
        return 0, None
    if p == 1:
        del powers[sym]
    else:
        powers[sym] = p - 1
    return p, tuple(sorted(powers.items()))


class JetPolynomial:
    """Finite sum of coefficient * monomial, coefficients in ``CircleFn``."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        out = {}
        for mono, c in (terms or {}).items():
            c = c if isinstance(c, CircleFn) else CircleFn.constant(c)
            if not c.is_zero():
                out[tuple(sorted(mono))] = c
        self._terms = out

    @classmethod
    def constant(cls, c) -> "JetPolynomial":
        return cls({(): c})

    @classmethod
    def symbol(cls, field, conj=False, order=0) -> "JetPolynomial":
        if field not in FIELDS:
            raise ValueError(f"unknown field {field!r}")
        return cls({((Jet(field, conj, order), 1),): CircleFn.one()})

    @property
    def terms(self):
        return dict(self._terms)

    def _coerce(self, other):
        if isinstance(other, JetPolynomial):
            return other
        if isinstance(other, CircleFn):
            return JetPolynomial({(): other})
        s = as_scalar(other)
        if s is NotImplemented:
            return NotImplemented
        return JetPolynomial({(): s})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out[k] + v if k in out else v
        return JetPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return JetPolynomial({k: -v for k, v in self._terms.items()})

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
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _merge(m1, m2)
                p = c1 * c2
                out[m] = out[m] + p if m in out else p
        return JetPolynomial(out)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def symbols(self) -> set:
        return {s for mono in self._terms for s, _ in mono}

    def fields(self) -> set:
        return {s.field for s in self.symbols()}

    def max_order(self) -> int:
        return max((s.order for s in self.symbols()), default=0)

    def conj(self) -> "JetPolynomial":
        return JetPolynomial({
            tuple((s.conjugate(), p) for s, p in mono): c.conj()
            for mono, c in self._terms.items()
        })

    def diff_symbol(self, sym: Jet) -> "JetPolynomial":
        out = JetPolynomial()
        for mono, c in self._terms.items():
            p, rest = _drop(mono, sym)
            if p:
                out = out + JetPolynomial({rest: c * p})
        return out

    def prime(self) -> "JetPolynomial":
        """Total derivative d/dphi."""
        out = JetPolynomial({m: c.prime() for m, c in self._terms.items()})
        for mono, c in self._terms.items():
            for s, _ in mono:
                p, rest = _drop(mono, s)
                out = out + JetPolynomial({_merge(rest, ((s.raised(), 1),)): c * p})
        return out

    def substitute(self, mapping) -> "JetPolynomial":
        """Replace jet symbols by polynomials; unmapped symbols stay."""
        out = JetPolynomial()
        for mono, c in self._terms.items():
            term = JetPolynomial({(): c})
            for s, p in mono:
                factor = mapping.get(s)
                if factor is None:
                    factor = JetPolynomial({((s, 1),): CircleFn.one()})
                for _ in range(p):
                    term = term * factor
            out = out + term
        return out

    def evaluate(self, fields: dict) -> CircleFn:
        """Ring map to CircleFn given a circle function per field name."""
        cache = {}

        def value(s: Jet):
            if s not in cache:
                u = fields[s.field]
                if s.conj:
                    u = u.conj()
                for _ in range(s.order):
                    u = u.prime()
                cache[s] = u
            return cache[s]

        total = CircleFn()
        for mono, c in self._terms.items():
            term = c
            for s, p in mono:
                term = term * value(s) ** p
            total = total + term
        return total

    def numeric(self, values: dict, phi):
        """Floating evaluation; ``values`` maps each jet symbol to an array on ``phi``."""
        import numpy as np

        total = np.zeros(np.shape(phi), dtype=complex)
        for mono, c in self._terms.items():
            term = c(phi)
            for s, p in mono:
                term = term * values[s] ** p
            total = total + term
        return total

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, c in sorted(self._terms.items(), key=lambda kv: [(str(s), p) for s, p in kv[0]]):
            factors = "*".join(str(s) + (f"^{p}" if p > 1 else "") for s, p in mono)
            parts.append(f"[{c}]" + (f"*{factors}" if factors else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"JetPolynomial({self})"

    def to_json(self) -> list:
        rows = []
        for mono, c in sorted(self._terms.items(), key=lambda kv: [(str(s), p) for s, p in kv[0]]):
            rows.append({
                "monomial": [[s.field, s.conj, s.order, p] for s, p in mono],
                "coefficient": c.to_json()["terms"],
            })
        return rows


def field_jets(conj=False, order=0) -> dict:
    """Field name -> jet-polynomial symbol, a convenience for building densities."""
    return {f: JetPolynomial.symbol(f, conj, order) for f in FIELDS}


class VariationForm:
    """Linear form sum coeff(key) * delta(key); key = (field, conj)."""

    def __init__(self, coeffs=None):
        self._coeffs = {k: v for k, v in (coeffs or {}).items() if not v.is_zero()}

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def __getitem__(self, key):
        return self._coeffs.get(key, JetPolynomial())

    def keys(self):
        return sorted(self._coeffs, key=lambda k: (FIELDS.index(k[0]), k[1]))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other):
        return isinstance(other, VariationForm) and self._coeffs == other._coeffs

    def __add__(self, other):
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out[k] + v if k in out else v
        return VariationForm(out)

    def scale(self, c) -> "VariationForm":
        return VariationForm({k: v * c for k, v in self._coeffs.items()})

    def restrict(self, fields) -> "VariationForm":
        return VariationForm({k: v for k, v in self._coeffs.items() if k[0] in fields})

    def evaluate(self, values: dict) -> dict:
        """Coefficients evaluated at concrete circle fields; zero entries dropped."""
        out = {}
        for k in self.keys():
            c = self._coeffs[k].evaluate(values)
            if not c.is_zero():
                out[k] = c
        return out

    @staticmethod
    def label(key) -> str:
        field, conj = key
        return f"delta conj({field})" if conj else f"delta {field}"

    def __str__(self):
        if not self._coeffs:
            return "0"
        return " + ".join(f"({self._coeffs[k]})*{self.label(k)}" for k in self.keys())


class Reality(enum.Enum):
    REAL = "real"
    IMAGINARY = "imaginary"
    ZERO = "zero"
    FREE = "free"


class RealityAssignment(dict):
    """field -> Reality; unlisted fields are FREE."""

    def __init__(self, mapping=None, **kw):
        super().__init__()
        for k, v in {**(mapping or {}), **kw}.items():
            if k not in FIELDS:
                raise ValueError(f"unknown field {k!r}")
            self[k] = v if isinstance(v, Reality) else Reality(str(v).lower())

    def of(self, field) -> Reality:
        return self.get(field, Reality.FREE)


def infer_reality(u: CircleFn) -> Reality:
    if u.is_zero():
        return Reality.ZERO
    if u.is_real():
        return Reality.REAL
    if u.is_imaginary():
        return Reality.IMAGINARY
    return Reality.FREE


def euler_lagrange_variation(P: JetPolynomial) -> VariationForm:
    """dP/df - d/dphi (dP/df') for every field and conjugate, taken independently."""
    if P.max_order() > 1:
        raise ValueError("euler_lagrange_variation needs a first-order jet polynomial")
    coeffs = {}
    for field in FIELDS:
        for conj in (False, True):
            s0 = Jet(field, conj, 0)
            coeffs[(field, conj)] = P.diff_symbol(s0) - P.diff_symbol(s0.raised()).prime()
    return VariationForm(coeffs)


def _constraint_map(P_symbols, r: RealityAssignment) -> dict:
    mapping = {}
    for s in P_symbols:
        kind = r.of(s.field)
        if kind is Reality.ZERO:
            mapping[s] = JetPolynomial()
        elif s.conj and kind is Reality.REAL:
            mapping[s] = JetPolynomial.symbol(s.field, False, s.order)
        elif s.conj and kind is Reality.IMAGINARY:
            mapping[s] = -JetPolynomial.symbol(s.field, False, s.order)
    return mapping


def vanishing_under_constraints(v: VariationForm, r: RealityAssignment):
    """Impose reality constraints, then collect coefficients of independent variations.

    Real fields identify delta conj(f) with delta f; imaginary ones with its
    negative; zero fields drop out together with their variations.
    Returns ``(vanishes, residual)``.
    """
    symbols = set()
    for k in v.keys():
        symbols |= v[k].symbols()
    mapping = _constraint_map(symbols, r)
    sub = {k: v[k].substitute(mapping) for k in v.keys()}
    out = {}
    for field in FIELDS:
        plain = sub.get((field, False), JetPolynomial())
        bar = sub.get((field, True), JetPolynomial())
        kind = r.of(field)
        if kind is Reality.ZERO:
            continue
        if kind is Reality.REAL:
            out[(field, False)] = plain + bar
        elif kind is Reality.IMAGINARY:
            out[(field, False)] = plain - bar
        else:
            out[(field, False)] = plain
            out[(field, True)] = bar
    residual = VariationForm(out)
    return residual.is_zero(), residual
