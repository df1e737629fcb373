"""Superfields, the superparticle density and its component Lagrangian.

Component fields are commuting functions.  Everything that only needs ring
operations, conjugation and a derivative works over any coefficient type that
provides ``conj()`` and a derivative callable (Laurent sums, circle
polynomials, jet polynomials).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .atlas import (
    Atlas,
    TransitionData,
    apply_superconformal,
    berezinian,
    super_jacobian,
    superconformal_cocycle,
)
from .grassmann import ConjugationPolicy, GrassmannElement, hermitian_pair
from .laurent import LaurentFn
from .scalars import I

__all__ = [
    "FieldComponents",
    "Superfield",
    "DensityCochain",
    "FormCochain",
    "apply_D",
    "bracket_check",
    "superparticle_density",
    "m_density",
    "lagrangian_cochain",
    "m_cochain",
    "berezin_integral",
    "transport_field",
    "transport_density",
    "transport_lagrangian",
    "pullback_form",
    "coboundary_super",
    "coboundary_reduced",
    "good_field_residual",
    "hermitian_cocycle",
    "global_lagrangian_check",
    "compatibility_check",
]

HALF = Fraction(1, 2)


def _prime(c):
    return c.prime()


@dataclass(frozen=True)
class FieldComponents:
    """Phi = phi + psi1 e1 + psi2 e2 + F e1^e2 on a single chart."""

    phi: object
    psi1: object
    psi2: object
    F: object

    @classmethod
    def zero(cls):
        return cls(LaurentFn(), LaurentFn(), LaurentFn(), LaurentFn())

    @classmethod
    def from_grassmann(cls, g: GrassmannElement) -> "FieldComponents":
        return cls(g.c0, g.c1, g.c2, g.c12)

    def as_grassmann(self) -> GrassmannElement:
        return GrassmannElement(self.phi, self.psi1, self.psi2, self.F)

    def scale(self, c) -> "FieldComponents":
        return FieldComponents(*(x * c for x in (self.phi, self.psi1, self.psi2, self.F)))

    def __add__(self, other):
        return FieldComponents.from_grassmann(self.as_grassmann() + other.as_grassmann())

    def to_json(self) -> dict:
        return {"phi": self.phi.to_json(), "psi1": self.psi1.to_json(),
                "psi2": self.psi2.to_json(), "F": self.F.to_json()}

    @classmethod
    def from_json(cls, data) -> "FieldComponents":
        get = lambda k: LaurentFn.from_json(data[k]) if data.get(k) else LaurentFn()  # noqa: E731
        return cls(get("phi"), get("psi1"), get("psi2"), get("F"))


@dataclass(frozen=True)
class Superfield:
    """Components per chart."""

    charts: dict

    def on(self, chart) -> FieldComponents:
        try:
            return self.charts[chart]
        except KeyError:
            raise ValueError(f"superfield has no components on chart {chart!r}") from None

    @classmethod
    def global_from(cls, chart, comps: FieldComponents, atlas: Atlas) -> "Superfield":
        """Extend components given on one chart to every chart it overlaps."""
        charts = {chart: comps}
        for (u, v), t in atlas.transitions.items():
            if v == chart and u not in charts:
                charts[u] = transport_field(comps, t)
        return cls(charts)

    def is_global(self, atlas: Atlas) -> bool:
        for (u, v), t in atlas.transitions.items():
            if u in self.charts and v in self.charts:
                if transport_field(self.charts[v], t) != self.charts[u]:
                    return False
        return True

    def to_json(self) -> dict:
        return {"charts": {k: v.to_json() for k, v in self.charts.items()}}

    @classmethod
    def from_json(cls, data) -> "Superfield":
        charts = data.get("charts")
        if not isinstance(charts, dict) or not charts:
            raise ValueError("superfield JSON needs a non-empty 'charts' object")
        return cls({k: FieldComponents.from_json(v) for k, v in charts.items()})


@dataclass(frozen=True)
class DensityCochain:
    """Per-chart Berezin densities; the volume marker [dX de1 de2] is implicit."""

    charts: dict


@dataclass(frozen=True)
class FormCochain:
    """Per-chart one-form coefficients; the marker dy is implicit."""

    charts: dict

    def to_json(self) -> dict:
        return {"charts": {k: v.to_json() for k, v in self.charts.items()}}


def _components(phi, chart):
    if isinstance(phi, Superfield):
        return phi.on(chart)
    return phi


def apply_D(a: int, phi, chart=None, prime=_prime) -> GrassmannElement:
    comps = _components(phi, chart)
    return apply_superconformal(a, comps.as_grassmann(), prime)


def bracket_check(phi, chart=None, prime=_prime) -> GrassmannElement:
    """(D1 D2 + D2 D1) Phi / 2 + dPhi/dY; vanishes identically."""
    g = _components(phi, chart).as_grassmann()
    d1 = apply_superconformal(1, apply_superconformal(2, g, prime), prime)
    d2 = apply_superconformal(2, apply_superconformal(1, g, prime), prime)
    return (d1 + d2) * HALF + g.map(prime)


def _pairings(phi, chart, policy, prime):
    policy = ConjugationPolicy.parse(policy)
    d1 = apply_D(1, phi, chart, prime)
    d2 = apply_D(2, phi, chart, prime)
    return hermitian_pair(d1, d2, policy), hermitian_pair(d2, d1, policy)


def superparticle_density(phi, chart=None, policy=ConjugationPolicy.FIX, prime=_prime) -> GrassmannElement:
    """l = eps^{ab} <D_a Phi, D_b Phi> / 2 with eps^{12} = 1 = -eps^{21}."""
    p12, p21 = _pairings(phi, chart, policy, prime)
    return (p12 - p21) * HALF


def m_density(phi, chart=None, policy=ConjugationPolicy.FIX, prime=_prime) -> GrassmannElement:
    """m = s^{ab} <D_a Phi, D_b Phi> / 2 with s^{12} = s^{21} = 1."""
    p12, p21 = _pairings(phi, chart, policy, prime)
    return (p12 + p21) * HALF


def lagrangian_cochain(phi: Superfield, policy=ConjugationPolicy.FIX) -> DensityCochain:
    return DensityCochain({c: superparticle_density(phi, c, policy) for c in phi.charts})


def m_cochain(phi: Superfield, policy=ConjugationPolicy.FIX) -> DensityCochain:
    return DensityCochain({c: m_density(phi, c, policy) for c in phi.charts})


def berezin_integral(d) -> FormCochain | object:
    """Top coefficient; on a cochain, chart by chart."""
    if isinstance(d, DensityCochain):
        return FormCochain({c: v.c12 for c, v in d.charts.items()})
    return d.c12


# -- transport ----------------------------------------------------------------------


def transport_field(comps: FieldComponents, t: TransitionData) -> FieldComponents:
    """Components on ``t.src`` of a field given on ``t.dst``."""
    if not t.is_split:
        raise ValueError("non-split transport unsupported")
    return FieldComponents.from_grassmann(t.substitute(comps.as_grassmann()))


def transport_density(d: GrassmannElement, t: TransitionData, back: TransitionData | None = None) -> GrassmannElement:
    """Density on ``t.src`` rewritten on ``t.dst``: substitution times Ber J of the back map."""
    if back is None:
        back = t.inverse()
    return back.substitute(d) * berezinian(super_jacobian(back))


def transport_lagrangian(comps: FieldComponents, t: TransitionData, back: TransitionData | None = None,
                         policy=ConjugationPolicy.FIX, kind: str = "l", prime=_prime) -> GrassmannElement:
    """Push the density of ``kind`` ("l" or "m") built from ``comps`` on ``t.src`` to ``t.dst``.

    The Hermitian pairing is formed after each factor D_a Phi is carried over;
    conjugation acts on coefficients only, so it does not commute with the odd
    substitution unless zeta is real.
    """
    if back is None:
        back = t.inverse()
    policy = ConjugationPolicy.parse(policy)
    d1 = back.substitute(apply_D(1, comps, prime=prime))
    d2 = back.substitute(apply_D(2, comps, prime=prime))
    p12, p21 = hermitian_pair(d1, d2, policy), hermitian_pair(d2, d1, policy)
    if kind == "l":
        dens = (p12 - p21) * HALF
    elif kind == "m":
        dens = (p12 + p21) * HALF
    else:
        raise ValueError("kind must be 'l' or 'm'")
    return dens * berezinian(super_jacobian(back))


def pullback_form(coeff: LaurentFn, t: TransitionData) -> LaurentFn:
    """coeff(x) dx on ``t.src`` as a multiple of dy on ``t.dst``."""
    g = t.f.inverse()
    return g.pullback(coeff) * g.derivative()


def coboundary_super(phi: Superfield, atlas: Atlas, policy=ConjugationPolicy.FIX, kind: str = "l") -> dict:
    """(delta L)_{UV} = L_V - (transported L_U), on V."""
    density = superparticle_density if kind == "l" else m_density
    out = {}
    for (u, v) in atlas.pairs():
        if u in phi.charts and v in phi.charts:
            t, back = atlas.transition(u, v), atlas.transition(v, u)
            moved = transport_lagrangian(phi.on(u), t, back, policy, kind)
            out[(u, v)] = density(phi.on(v), policy=policy) - moved
    return out


def coboundary_reduced(form: FormCochain, atlas: Atlas) -> dict:
    out = {}
    for (u, v) in atlas.pairs():
        if u in form.charts and v in form.charts:
            out[(u, v)] = form.charts[v] - pullback_form(form.charts[u], atlas.transition(u, v))
    return out


def good_field_residual(phi: Superfield, atlas: Atlas, policy=ConjugationPolicy.FIX) -> dict:
    """Berezin integral of the super coboundary minus the reduced coboundary, per overlap."""
    sup = coboundary_super(phi, atlas, policy)
    red = coboundary_reduced(berezin_integral(lagrangian_cochain(phi, policy)), atlas)
    return {pair: _laurent(sup[pair].c12) - red[pair] for pair in sup}


def _laurent(c):
    return LaurentFn.constant(c) if isinstance(c, int) else c


# -- hermitian cocycle / compatibility -------------------------------------------------


def _require_maximal(atlas: Atlas):
    cocycle = superconformal_cocycle(atlas)
    if not (cocycle.ok and cocycle.diagonal):
        raise ValueError("atlas is not maximally superconformal")
    return cocycle


def hermitian_cocycle(atlas: Atlas, policy=ConjugationPolicy.FIX) -> dict:
    """G_{UV} = g_{UV,1} conj(g_{UV,2}), on V."""
    cocycle = _require_maximal(atlas)
    return {
        pair: hermitian_pair(cocycle.g(pair, 1), cocycle.g(pair, 2), policy)
        for pair in cocycle.entries
    }


def _imag(g: GrassmannElement) -> GrassmannElement:
    return g.map(lambda c: _laurent(c).imag_part())


def _real(g: GrassmannElement) -> GrassmannElement:
    return g.map(lambda c: _laurent(c).real_part())


def global_lagrangian_check(atlas: Atlas, policy=ConjugationPolicy.FIX) -> dict:
    """Hermitian cocycle, its component-wise real/imaginary parts and the real flag."""
    G = hermitian_cocycle(atlas, policy)
    parts = {pair: {"re": _real(g), "im": _imag(g)} for pair, g in G.items()}
    return {
        "G": G,
        "parts": parts,
        "real": all(p["im"].is_zero() for p in parts.values()),
    }


def _test_fields():
    basis = []
    mons = [LaurentFn.constant(1), LaurentFn.y(), LaurentFn.ybar(), LaurentFn.monomial(2, 1)]
    for slot in range(4):
        for m in mons:
            comps = [LaurentFn()] * 4
            comps[slot] = m
            basis.append(FieldComponents(*comps))
    return basis


def compatibility_check(atlas: Atlas, h: dict, policy=ConjugationPolicy.FIX, fields=None) -> dict:
    """Does transported L_U equal h_{UV} L_V for every pair and every test field?

    The density is a Hermitian form in Phi, so checking basis fields together
    with the sums Phi_i + Phi_j and Phi_i + i Phi_j decides it on their span.
    """
    _require_maximal(atlas)
    basis = list(fields) if fields is not None else _test_fields()
    probes = list(basis)
    for a, b in itertools.combinations(basis, 2):
        probes.append(a + b)
        probes.append(a + b.scale(I))
    failures = []
    for (u, v) in atlas.pairs():
        t, back = atlas.transition(u, v), atlas.transition(v, u)
        for n, comps in enumerate(probes):
            lhs = transport_lagrangian(transport_field(comps, t), t, back, policy)
            rhs = h[(u, v)] * superparticle_density(comps, policy=policy)
            if lhs != rhs:
                failures.append({"pair": [u, v], "probe": n, "difference": lhs - rhs})
    return {"compatible": not failures, "failures": failures, "probes": len(probes)}
