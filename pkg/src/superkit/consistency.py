"""Consistency of the component Lagrangian on the projective-line models.

Everything lives on the unit circle y = exp(i phi) of the overlap.  Field
derivatives there are d/dphi, and a field and its conjugate vary
independently until a ``RealityAssignment`` ties them together.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .atlas import SplitModelSpec, build_projective_atlas, superconformal_cocycle
from .grassmann import ConjugationPolicy, GrassmannElement, grassmann_conj, hermitian_pair
from .jets import (
    FIELDS,
    JetPolynomial,
    Reality,
    RealityAssignment,
    VariationForm,
    euler_lagrange_variation,
    infer_reality,
    vanishing_under_constraints,
)
from .lagrangian import FieldComponents, Superfield, apply_D, good_field_residual
from .laurent import CircleFn, LaurentFn, restrict_to_circle
from .reference_forms import reference_cocycle, reference_real_imag
from .scalars import ComplexScalar

__all__ = [
    "DeltaOperator",
    "delta_apply",
    "density_jets",
    "g_components",
    "nonexistence_check",
    "component_difference",
    "difference_from_parts",
    "circle_fields",
    "infer_assignment",
    "consistency_classify",
    "ConsistencyReport",
    "prop45_check",
    "prop46_type_analysis",
]

I = ComplexScalar(0, 1)
HALF = Fraction(1, 2)
PSI_FIELDS = ("psi1", "psi2")
BOSE_FIELDS = ("phi", "F")


def _circle(c):
    if isinstance(c, int):
        return CircleFn.constant(c)
    return c if isinstance(c, CircleFn) else restrict_to_circle(c)


def _to_circle(g: GrassmannElement) -> GrassmannElement:
    return g.map(_circle)


# -- the first-order operator ------------------------------------------------------------


@dataclass(frozen=True)
class DeltaOperator:
    """u -> 2 exp(-i m phi) u + exp(-i phi) sin(n phi) u'."""

    m: int
    n: int

    def apply(self, u: CircleFn) -> CircleFn:
        return CircleFn.exp(-self.m, 2) * u + CircleFn.exp(-1) * CircleFn.sin(self.n) * u.prime()

    def apply_conjugate(self, u: CircleFn) -> CircleFn:
        """The complex-conjugate operator: u -> 2 exp(i m phi) u + exp(i phi) sin(n phi) u'."""
        return CircleFn.exp(self.m, 2) * u + CircleFn.exp(1) * CircleFn.sin(self.n) * u.prime()


def delta_apply(op: DeltaOperator, u: CircleFn, conjugate: bool = False) -> CircleFn:
    return op.apply_conjugate(u) if conjugate else op.apply(u)


# -- densities over jets --------------------------------------------------------------


def _jet_prime(c):
    return c.prime()


def density_jets(policy=ConjugationPolicy.FIX) -> dict:
    """Pairings <D_a Phi, D_b Phi> and the l / m densities, with jet-polynomial coefficients."""
    s = {f: JetPolynomial.symbol(f) for f in FIELDS}
    comps = FieldComponents(s["phi"], s["psi1"], s["psi2"], s["F"])
    d1 = apply_D(1, comps, prime=_jet_prime)
    d2 = apply_D(2, comps, prime=_jet_prime)
    p12, p21 = hermitian_pair(d1, d2, policy), hermitian_pair(d2, d1, policy)
    l = (p12 - p21) * HALF
    m = (p12 + p21) * HALF
    return {"p12": p12, "p21": p21, "l": l, "m": m}


# -- hermitian cocycle on the circle ---------------------------------------------------


def _check_maximal(spec: SplitModelSpec):
    if spec.k1 + spec.k2 != 2 or spec.det_lambda != -1 or not spec.alpha.is_zero() or not spec.corner.is_zero():
        raise ValueError(f"{spec.label()} is not maximally superconformal")


def _cocycle_pair(spec: SplitModelSpec, source: str):
    if source == "pushforward":
        cocycle = superconformal_cocycle(build_projective_atlas(spec))
        return cocycle.g(("U", "V"), 1), cocycle.g(("U", "V"), 2)
    if source == "closed_form":
        return reference_cocycle(spec.k1, spec.k2, spec.lambda1, spec.lambda2)
    raise ValueError(f"unknown cocycle source {source!r}")


def _lam_unit(spec):
    return spec.lambda1 * spec.lambda2.conj() == 1


def g_components(spec: SplitModelSpec, policy=ConjugationPolicy.FIX, source: str = "pushforward") -> dict:
    """G = g1 conj(g2) on |y| = 1, split into real and imaginary parts coefficient-wise.

    ``source`` picks the cocycle: "pushforward" (computed), "closed_form" (the
    quoted formula for g) or "quoted_parts" (the quoted real/imaginary parts
    themselves; lambda1 conj(lambda2) = 1 only).
    """
    _check_maximal(spec)
    policy = ConjugationPolicy.parse(policy)
    if source == "quoted_parts":
        if not _lam_unit(spec):
            raise ValueError("quoted parts assume lambda1 conj(lambda2) = 1")
        re, im = reference_real_imag(spec.k1)
        G = re + im * CircleFn.constant(I)
    else:
        g1, g2 = _cocycle_pair(spec, source)
        G = _to_circle(hermitian_pair(g1, g2, policy))
        re = G.map(lambda c: _circle(c).real_part())
        im = G.map(lambda c: _circle(c).imag_part())
    return {
        "G": G,
        "R0": _circle(re.c0),
        "R12": _circle(re.c12),
        "I0": _circle(im.c0),
        "I12": _circle(im.c12),
    }


_ANGLES = [(j, f"{j}pi/4") for j in (1, 2, 3, 4, 5, 6, 7, 0)]


def _exact_value(u: CircleFn, j: int):
    """Value at phi = j pi/4 when it lies in Q(i), else None."""
    if j % 2 == 0:
        return u.at_quarter_turns(j // 2)
    try:
        return u.at_eighth_turns_even(j)
    except ValueError:
        return None


def nonexistence_check(spec: SplitModelSpec, policy=ConjugationPolicy.FIX, source: str = "pushforward") -> dict:
    """Is the imaginary part of G identically zero?  If not, give an exact witness angle."""
    parts = g_components(spec, policy, source)
    witness = None
    for name in ("I0", "I12"):
        u = parts[name]
        if u.is_zero():
            continue
        for j, label in _ANGLES:
            v = _exact_value(u, j)
            if v is not None and not v.is_zero():
                witness = {"component": name, "phi": label, "value": v, "i_times_value": v * I}
                break
        if witness:
            break
    imag_zero = parts["I0"].is_zero() and parts["I12"].is_zero()
    return {"imag_identically_zero": imag_zero, "global_compatible_excluded": not imag_zero,
            "witness": witness, "parts": parts}


# -- component difference -------------------------------------------------------------


def difference_from_parts(parts: dict, dens: dict) -> JetPolynomial:
    """R12 body(l) + i I12 body(m) + i I0 top(m)."""
    return (
        dens["l"].c0 * parts["R12"]
        + dens["m"].c0 * (parts["I12"] * I)
        + dens["m"].c12 * (parts["I0"] * I)
    )


def component_difference(spec: SplitModelSpec, phi=None, policy=ConjugationPolicy.FIX,
                         source: str = "pushforward", force: bool = False):
    """L_U - R0 L_V on the circle, as a jet polynomial (or evaluated at ``phi``).

    With a cocycle source the transported density is built directly as
    (G <D1,D2> - conj(G) <D2,D1>) / 2 and its top taken; with "quoted_parts"
    the real/imaginary decomposition is used.  A Laurent field that is not
    good is refused unless ``force`` is set.
    """
    policy = ConjugationPolicy.parse(policy)
    dens = density_jets(policy)
    parts = g_components(spec, policy, source)
    if source == "quoted_parts":
        poly = difference_from_parts(parts, dens)
    else:
        G = parts["G"]
        moved = (G * dens["p12"] - grassmann_conj(G, policy) * dens["p21"]) * HALF
        poly = moved.c12 - dens["l"].c12 * parts["R0"]
    if phi is None:
        return poly
    good = _good_residual(spec, phi, policy)
    if good is not None and not force and any(not r.is_zero() for r in good.values()):
        err = ValueError("field is not good; pass force=True to proceed formally")
        err.good_residual = good
        raise err
    return poly.evaluate(circle_fields(phi))


# -- fields ----------------------------------------------------------------------------


def circle_fields(phi) -> dict:
    """field name -> CircleFn on the circle, from components, a superfield or a dict."""
    if isinstance(phi, Superfield):
        phi = phi.on("V")
    if isinstance(phi, FieldComponents):
        phi = {"phi": phi.phi, "psi1": phi.psi1, "psi2": phi.psi2, "F": phi.F}
    return {f: _circle(phi.get(f, CircleFn())) for f in FIELDS}


def _good_residual(spec, phi, policy):
    """Good-field residual per overlap for Laurent fields on V, else None."""
    if isinstance(phi, Superfield):
        comps = phi.on("V")
    elif isinstance(phi, FieldComponents):
        comps = phi
    else:
        return None
    if not all(isinstance(c, LaurentFn) for c in (comps.phi, comps.psi1, comps.psi2, comps.F)):
        return None
    atlas = build_projective_atlas(spec)
    return good_field_residual(Superfield.global_from("V", comps, atlas), atlas, policy)


def infer_assignment(values: dict) -> RealityAssignment:
    """Reality of each field on the circle; phi is judged through phi' (constants never enter)."""
    out = {}
    for f in FIELDS:
        u = values[f].prime() if f == "phi" else values[f]
        out[f] = infer_reality(u)
    return RealityAssignment(out)


@dataclass
class ConsistencyReport:
    model: tuple
    policy: str
    source: str
    reality: dict
    necessary_ok: bool
    consistent: bool
    residual: VariationForm
    residual_values: dict
    good: bool | None = None
    good_residual_norm: float | None = None
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "model": list(self.model),
            "policy": self.policy,
            "source": self.source,
            "reality": {k: v.value for k, v in self.reality.items()},
            "good": self.good,
            "good_residual": self.good_residual_norm,
            "necessary_ok": self.necessary_ok,
            "consistent": self.consistent,
            "residual_terms": [
                {"variation": VariationForm.label(k), "coefficient": v.to_json()["terms"]}
                for k, v in self.residual_values.items()
            ],
            "notes": list(self.notes),
        }


def consistency_classify(spec: SplitModelSpec, phi, policy=ConjugationPolicy.FIX, reality=None,
                         source: str = "pushforward") -> ConsistencyReport:
    """First variation of L_U - R0 L_V under the field's reality constraints.

    ``necessary_ok`` covers the phi/F block only; ``consistent`` needs the whole
    evaluated variation to vanish.  Goodness is reported, never assumed.
    """
    policy = ConjugationPolicy.parse(policy)
    values = circle_fields(phi)
    assignment = RealityAssignment(reality) if reality is not None else infer_assignment(values)
    poly = component_difference(spec, policy=policy, source=source)
    _, residual = vanishing_under_constraints(euler_lagrange_variation(poly), assignment)
    evaluated = residual.evaluate(values)
    necessary = all(k[0] not in BOSE_FIELDS for k in evaluated)
    report = ConsistencyReport(
        model=(spec.k1, spec.k2),
        policy=policy.value,
        source=source,
        reality=dict(assignment),
        necessary_ok=necessary,
        consistent=not evaluated,
        residual=residual,
        residual_values=evaluated,
    )
    good = _good_residual(spec, phi, policy)
    if good is not None:
        norm = max((r.max_abs_coefficient() for r in good.values()), default=0.0)
        report.good = norm == 0.0
        report.good_residual_norm = norm
        if not report.good:
            report.notes.append("field is not good; classification is formal")
    return report


# -- the (2, 0) model: operator criterion and type analysis ---------------------------------


PI20 = SplitModelSpec(2, 0, I, I)
_D32 = DeltaOperator(3, 2)
_Dm32 = DeltaOperator(-3, 2)


def prop45_check(phi, policy=ConjugationPolicy.FIX, spec: SplitModelSpec = PI20) -> dict:
    """Necessary phi/F conditions plus conj(D(3,2)) psi1 = 0 and conj(D(-3,2)) psi2 = 0."""
    values = circle_fields(phi)
    a = _D32.apply_conjugate(values["psi1"])
    b = _Dm32.apply_conjugate(values["psi2"])
    report = consistency_classify(spec, phi, policy)
    passes = report.necessary_ok and a.is_zero() and b.is_zero()
    return {
        "passes": passes,
        "delta_psi1": a,
        "delta_psi2": b,
        "necessary_ok": report.necessary_ok,
        "classifier_consistent": report.consistent,
        "agrees": (not passes) or report.consistent,
    }


_TYPES = {"Re": Reality.REAL, "Im": Reality.IMAGINARY}


def _parse_type(kind):
    if kind is None:
        raise ValueError("type must be declared, e.g. ('Re', 'Re')")
    kind = tuple(kind)
    if len(kind) != 2 or any(k not in _TYPES for k in kind):
        raise ValueError(f"type must be a pair of 'Re'/'Im', got {kind!r}")
    return kind


def prop46_type_analysis(phi, kind=None, policy=ConjugationPolicy.FIX, spec: SplitModelSpec = PI20,
                         source: str = "pushforward") -> dict:
    """Specialise the psi block to a declared type and read off what must vanish.

    A psi that is identically zero has no variation.  ``must_vanish`` lists the
    psi fields occurring in the typed coefficient of a live psi variation, read
    before zero fields are frozen.
    """
    kind = _parse_type(kind)
    values = circle_fields(phi)
    assignment = infer_assignment(values)
    for f, k in zip(PSI_FIELDS, kind):
        assignment[f] = Reality.ZERO if values[f].is_zero() else _TYPES[k]
        if not values[f].is_zero():
            ok = values[f].is_real() if k == "Re" else values[f].is_imaginary()
            if not ok:
                raise ValueError(f"{f} is not of declared type {k}")
    variation = euler_lagrange_variation(component_difference(spec, policy=policy, source=source))
    _, residual = vanishing_under_constraints(variation, assignment)
    # read the coefficients before freezing, so a zero psi still shows up as the one forced
    typed = RealityAssignment({**assignment, **{f: _TYPES[k] for f, k in zip(PSI_FIELDS, kind)}})
    _, unfrozen = vanishing_under_constraints(variation, typed)
    coefficients = {f: unfrozen[(f, False)] for f in PSI_FIELDS if assignment[f] is not Reality.ZERO}
    must = sorted({g for c in coefficients.values() if not c.is_zero() for g in c.fields() if g in PSI_FIELDS})
    evaluated = residual.evaluate(values)
    return {
        "type": kind,
        "must_vanish": must,
        "coefficients": coefficients,
        "consistent": not evaluated,
        "necessary_ok": all(k[0] not in BOSE_FIELDS for k in evaluated),
        "residual_values": evaluated,
    }
