"""Recompute each quoted closed form and diff it term by term.

Every item has up to two layers: ``derived`` rebuilds the form from the quoted
form it is obtained from, ``first_principles`` rebuilds it from the pushforward
and the variational engine.  An item matches only when every layer does.
Mismatches are data, never exceptions.
"""

from __future__ import annotations

from fractions import Fraction

from .atlas import SplitModelSpec, build_projective_atlas, closed_form_cocycle, superconformal_cocycle
from .consistency import (
    PI20,
    component_difference,
    density_jets,
    g_components,
    prop46_type_analysis,
)
from .grassmann import ConjugationPolicy, GrassmannElement, hermitian_pair
from .jets import (
    FIELDS,
    JetPolynomial,
    Reality,
    RealityAssignment,
    VariationForm,
    euler_lagrange_variation,
    vanishing_under_constraints,
)
from .lagrangian import FieldComponents, Superfield, coboundary_super, m_density
from .laurent import CircleFn, LaurentFn, restrict_to_circle
from .reference_forms import (
    reference_circle_general,
    reference_circle_unit,
    reference_cocycle,
    reference_displayed_densities,
    reference_hermitian,
    reference_must_vanish,
    reference_pi20_parts,
    reference_pi20_variation,
    reference_real_imag,
    reference_type_variation,
    reference_variation_list,
)
from .scalars import ComplexScalar

__all__ = ["paper_check", "AUDIT_ITEMS", "DOCUMENTED_MISMATCHES"]

I = ComplexScalar(0, 1)
K_RANGE = range(-5, 8)
PSI = ("psi1", "psi2")

AUDIT_ITEMS = (
    "superconformal_derivatives",
    "cocycle_closed_form",
    "hermitian_product",
    "circle_unit",
    "difference_unit",
    "circle_general",
    "real_imag_parts",
    "pi20_parts",
    "displayed_densities",
    "variation_list",
    "pi20_variation",
    "type_variation",
    "must_vanish_index",
)

# The discrepancies the acceptance gate expects to see, and nothing else.
DOCUMENTED_MISMATCHES = frozenset({"circle_unit", "circle_general", "real_imag_parts", "must_vanish_index"})


def _circle(c):
    if isinstance(c, int):
        return CircleFn.constant(c)
    return c if isinstance(c, CircleFn) else restrict_to_circle(c)


def _on_circle(g):
    return g.map(_circle)


def _zero_like(c):
    return c.is_zero() if not isinstance(c, int) else c == 0


def _diff_grassmann(quoted, computed, where=None):
    out = []
    for name, q, c in zip(("body", "e1", "e2", "e12"), quoted.coeffs, computed.coeffs):
        if not _zero_like(q - c):
            row = {"component": name, "quoted": str(q), "computed": str(c), "difference": str(c - q)}
            if where is not None:
                row["at"] = where
            out.append(row)
    return out


def _diff_variation(quoted: VariationForm, computed: VariationForm, where=None):
    out = []
    for key in sorted(set(quoted.keys()) | set(computed.keys()), key=lambda k: (FIELDS.index(k[0]), k[1])):
        if quoted[key] != computed[key]:
            row = {"variation": VariationForm.label(key), "quoted": str(quoted[key]),
                   "computed": str(computed[key]), "difference": str(computed[key] - quoted[key])}
            if where is not None:
                row["at"] = where
            out.append(row)
    return out


def _layer(diff):
    return {"status": "match" if not diff else "mismatch", "diff": diff}


def _item(name, description, **layers):
    status = "match" if all(l["status"] == "match" for l in layers.values()) else "mismatch"
    return {"item": name, "description": description, "status": status, "layers": layers}


def _maximal_specs():
    for k1 in K_RANGE:
        for lam in ((I, I), (ComplexScalar(1), ComplexScalar(-1)), (ComplexScalar(2), ComplexScalar(Fraction(-1, 2)))):
            yield SplitModelSpec(k1, 2 - k1, *lam)


def _pushforward_pair(spec):
    cocycle = superconformal_cocycle(build_projective_atlas(spec))
    return cocycle.g(("U", "V"), 1), cocycle.g(("U", "V"), 2)


# -- items ------------------------------------------------------------------------------


def _superconformal_derivatives(policy):
    from .lagrangian import apply_D

    s = {f: JetPolynomial.symbol(f) for f in FIELDS}
    comps = FieldComponents(s["phi"], s["psi1"], s["psi2"], s["F"])
    d1 = apply_D(1, comps, prime=lambda c: c.prime())
    d2 = apply_D(2, comps, prime=lambda c: c.prime())
    q1 = GrassmannElement(s["psi1"], 0, s["F"] - s["phi"].prime(), s["psi1"].prime())
    q2 = GrassmannElement(s["psi2"], -(s["F"] + s["phi"].prime()), 0, -s["psi2"].prime())
    diff = _diff_grassmann(q1, d1, "a=1") + _diff_grassmann(q2, d2, "a=2")
    return _item("superconformal_derivatives", "expansion of D_a Phi in components",
                 first_principles=_layer(diff))


def _cocycle_closed_form(policy):
    general, direct = [], []
    for spec in _maximal_specs():
        quoted = reference_cocycle(spec.k1, spec.k2, spec.lambda1, spec.lambda2)
        via_formula = closed_form_cocycle(build_projective_atlas(spec).transition("U", "V"))
        pushed = _pushforward_pair(spec)
        for a in (0, 1):
            where = f"{spec.label()} a={a + 1}"
            general += _diff_grassmann(quoted[a], via_formula[a], where)
            direct += _diff_grassmann(quoted[a], pushed[a], where)
    return _item("cocycle_closed_form", "diagonal cocycle g_a on the standard atlas",
                 derived=_layer(general), first_principles=_layer(direct))


def _hermitian_product(policy):
    derived, direct = [], []
    for k1 in K_RANGE:
        spec = SplitModelSpec(k1, 2 - k1, I, I)
        quoted = reference_hermitian(k1, 2 - k1, I, I)
        q1, q2 = reference_cocycle(k1, 2 - k1, I, I)
        derived += _diff_grassmann(quoted, hermitian_pair(q1, q2, policy), spec.label())
        g1, g2 = _pushforward_pair(spec)
        direct += _diff_grassmann(quoted, hermitian_pair(g1, g2, policy), spec.label())
    return _item("hermitian_product", "G = g1 conj(g2) as a Laurent expression",
                 derived=_layer(derived), first_principles=_layer(direct))


def _circle_unit(policy):
    quoted = reference_circle_unit()
    from_quoted = _on_circle(reference_hermitian(1, 1, I, I))
    spec = SplitModelSpec(1, 1, I, I)
    g1, g2 = _pushforward_pair(spec)
    computed = _on_circle(hermitian_pair(g1, g2, policy))
    return _item("circle_unit", "G on |y| = 1 for (1, 1)",
                 derived=_layer(_diff_grassmann(quoted, from_quoted)),
                 first_principles=_layer(_diff_grassmann(quoted, computed)))


def _probe_fields():
    y, yb = LaurentFn.y(), LaurentFn.ybar()
    return [
        FieldComponents(y * yb, y, yb + LaurentFn.constant(I), LaurentFn.monomial(1, 1, 2)),
        FieldComponents(LaurentFn.monomial(2, 0, I), yb * yb, LaurentFn.monomial(-1, 2), y + yb),
        FieldComponents(LaurentFn(), LaurentFn.constant(1), LaurentFn.monomial(1, 0, I), LaurentFn()),
    ]


def _difference_unit(policy):
    spec = SplitModelSpec(1, 1, I, I)
    atlas = build_projective_atlas(spec)
    factor = CircleFn.sin(1) * (-2 * I)
    diff = []
    for n, comps in enumerate(_probe_fields()):
        phi = Superfield.global_from("V", comps, atlas)
        delta = coboundary_super(phi, atlas, policy)[("U", "V")]
        computed = _on_circle(-delta)
        quoted = GrassmannElement.top(1) * _on_circle(m_density(comps, policy=policy)) * factor
        diff += _diff_grassmann(quoted, computed, f"probe {n}")
    return _item("difference_unit", "transported L_U minus L_V equals -2i sin(phi) e12 M_V on (1, 1)",
                 first_principles=_layer(diff))


def _circle_general(policy):
    derived, direct = [], []
    for k1 in K_RANGE:
        spec = SplitModelSpec(k1, 2 - k1, I, I)
        quoted = reference_circle_general(k1)
        derived += _diff_grassmann(quoted, _on_circle(reference_hermitian(k1, 2 - k1, I, I)), spec.label())
        direct += _diff_grassmann(quoted, g_components(spec, policy)["G"], spec.label())
    return _item("circle_general", "G on |y| = 1 for every maximal (k1, 2 - k1)",
                 derived=_layer(derived), first_principles=_layer(direct))


def _split(G):
    re = G.map(lambda c: _circle(c).real_part())
    im = G.map(lambda c: _circle(c).imag_part())
    return re, im


def _real_imag_parts(policy):
    derived, direct = [], []
    for k1 in K_RANGE:
        spec = SplitModelSpec(k1, 2 - k1, I, I)
        qre, qim = reference_real_imag(k1)
        dre, dim = _split(reference_circle_general(k1))
        derived += _diff_grassmann(qre, dre, f"{spec.label()} re") + _diff_grassmann(qim, dim, f"{spec.label()} im")
        cre, cim = _split(g_components(spec, policy)["G"])
        direct += _diff_grassmann(qre, cre, f"{spec.label()} re") + _diff_grassmann(qim, cim, f"{spec.label()} im")
    return _item("real_imag_parts", "real and imaginary parts of G for every maximal model",
                 derived=_layer(derived), first_principles=_layer(direct))


def _pi20_parts(policy):
    qre, qim = reference_pi20_parts()
    dre, dim = reference_real_imag(2)
    cre, cim = _split(g_components(PI20, policy)["G"])
    return _item("pi20_parts", "real and imaginary parts of G on (2, 0)",
                 derived=_layer(_diff_grassmann(qre, dre, "re") + _diff_grassmann(qim, dim, "im")),
                 first_principles=_layer(_diff_grassmann(qre, cre, "re") + _diff_grassmann(qim, cim, "im")))


def _displayed_densities(policy):
    shown = reference_displayed_densities()
    dens = density_jets(policy)
    diff = []
    # the displayed bodies omit the overall 1/2 of the definition
    for name, computed in (("l_body", dens["l"].c0 * 2), ("m_body", dens["m"].c0 * 2), ("m_top", dens["m"].c12)):
        if shown[name] != computed:
            diff.append({"density": name, "quoted": str(shown[name]), "computed": str(computed)})
    return _item("displayed_densities", "bodies of l and m (up to the stated 1/2) and the top of m",
                 first_principles=_layer(diff))


def _variation_list(policy):
    shown = reference_displayed_densities()
    quoted = reference_variation_list()
    diff = []
    for name in ("l_body", "m_body", "m_top"):
        diff += _diff_variation(quoted[name], euler_lagrange_variation(shown[name]), name)
    return _item("variation_list", "first variations of the three displayed densities",
                 derived=_layer(diff))


def _quoted_convention_variation(re, im):
    """Variation built the quoted way: displayed densities, coefficients kept outside."""
    shown = reference_displayed_densities()
    total = VariationForm()
    for coeff, name in ((_circle(re.c12), "l_body"), (_circle(im.c12) * I, "m_body"), (_circle(im.c0) * I, "m_top")):
        total = total + euler_lagrange_variation(shown[name]).scale(coeff)
    return total.restrict(PSI)


def _pi20_variation(policy):
    quoted = reference_pi20_variation()
    derived = _quoted_convention_variation(*reference_pi20_parts())
    computed = euler_lagrange_variation(component_difference(PI20, policy=policy)).restrict(PSI)
    return _item("pi20_variation", "psi block of the variation of L_U - R0 L_V on (2, 0)",
                 derived=_layer(_diff_variation(quoted, derived)),
                 first_principles=_layer(_diff_variation(quoted, computed)))


_REALITY = {"Re": Reality.REAL, "Im": Reality.IMAGINARY}


def _specialise(v: VariationForm, kind):
    assignment = RealityAssignment({"psi1": _REALITY[kind[0]], "psi2": _REALITY[kind[1]],
                                    "phi": Reality.ZERO, "F": Reality.ZERO})
    return vanishing_under_constraints(v, assignment)[1]


def _type_variation(policy):
    derived, direct = [], []
    honest = euler_lagrange_variation(component_difference(PI20, policy=policy)).restrict(PSI)
    for kind in (("Re", "Re"), ("Im", "Re")):
        quoted = reference_type_variation(kind)
        derived += _diff_variation(quoted, _specialise(reference_pi20_variation(), kind), "/".join(kind))
        direct += _diff_variation(quoted, _specialise(honest, kind), "/".join(kind))
    return _item("type_variation", "variation on (2, 0) specialised to types (Re, Re) and (Im, Re)",
                 derived=_layer(derived), first_principles=_layer(direct))


def _must_vanish_index(policy):
    diff = []
    probe = {"phi": CircleFn(), "psi1": CircleFn.cos(1), "psi2": CircleFn(), "F": CircleFn()}
    for kind in (("Re", "Re"), ("Im", "Re")):
        field = dict(probe)
        if kind[0] == "Im":
            field["psi1"] = CircleFn.sin(1) * I
        result = prop46_type_analysis(field, kind, policy)
        quoted = reference_must_vanish(kind)
        if result["must_vanish"] != [quoted]:
            diff.append({"type": "/".join(kind), "quoted": quoted, "computed": result["must_vanish"]})
    return _item("must_vanish_index", "which psi the type analysis forces to vanish",
                 first_principles=_layer(diff))


_BUILDERS = {
    "superconformal_derivatives": _superconformal_derivatives,
    "cocycle_closed_form": _cocycle_closed_form,
    "hermitian_product": _hermitian_product,
    "circle_unit": _circle_unit,
    "difference_unit": _difference_unit,
    "circle_general": _circle_general,
    "real_imag_parts": _real_imag_parts,
    "pi20_parts": _pi20_parts,
    "displayed_densities": _displayed_densities,
    "variation_list": _variation_list,
    "pi20_variation": _pi20_variation,
    "type_variation": _type_variation,
    "must_vanish_index": _must_vanish_index,
}


def paper_check(policy=ConjugationPolicy.FIX, items=None) -> dict:
    """Run the audit; returns {"policy", "items": [...], "mismatches": [...]}."""
    policy = ConjugationPolicy.parse(policy)
    names = AUDIT_ITEMS if items is None else tuple(items)
    results = [_BUILDERS[n](policy) for n in names]
    return {
        "policy": policy.value,
        "items": results,
        "mismatches": [r["item"] for r in results if r["status"] != "match"],
    }
