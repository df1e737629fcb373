import pytest
from hypothesis import given, settings

from superkit.atlas import SplitModelSpec, build_projective_atlas
from superkit.grassmann import ConjugationPolicy, GrassmannElement as G
from superkit.lagrangian import (
    FieldComponents,
    Superfield,
    apply_D,
    berezin_integral,
    bracket_check,
    coboundary_super,
    compatibility_check,
    global_lagrangian_check,
    good_field_residual,
    hermitian_cocycle,
    lagrangian_cochain,
    m_density,
    superparticle_density,
    transport_density,
    transport_field,
)
from superkit.laurent import CircleFn, LaurentFn, restrict_to_circle
from superkit.scalars import ComplexScalar

from conftest import HALF, I, laurent, scalars

y, yb = LaurentFn.y(), LaurentFn.ybar()
ZERO = LaurentFn()
UNIT = SplitModelSpec(1, 1, I, I)


def comps_strategy():
    from hypothesis import strategies as st

    return st.builds(FieldComponents, laurent(2), laurent(2), laurent(2), laurent(2))


def test_D_on_constant_spinor():
    assert apply_D(1, FieldComponents(ZERO, LaurentFn.one(), ZERO, ZERO)) == G(LaurentFn.one())


def test_D_expansion_frozen():
    phi, p1, p2, F = y * yb, y * y, yb, y + LaurentFn.constant(I)
    c = FieldComponents(phi, p1, p2, F)
    assert apply_D(1, c) == G(p1, ZERO, F - phi.prime(), p1.prime())
    assert apply_D(2, c) == G(p2, -(F + phi.prime()), ZERO, -p2.prime())


@settings(max_examples=50, deadline=None)
@given(comps_strategy())
def test_body_of_D_is_spinor_and_bracket_vanishes(c):
    assert apply_D(1, c).c0 == c.psi1 and apply_D(2, c).c0 == c.psi2
    assert bracket_check(c).is_zero()


def test_densities_of_zero_field():
    assert superparticle_density(FieldComponents.zero()).is_zero()


def test_density_bodies_and_top_frozen():
    p1, p2, phi, F = y + yb * 2, y * yb * I, y * y, yb + 1
    c = FieldComponents(phi, p1, p2, F)
    ell, m = superparticle_density(c), m_density(c)
    assert ell.c0 == (p1 * p2.conj() - p2 * p1.conj()) * HALF
    assert m.c0 == (p1 * p2.conj() + p2 * p1.conj()) * HALF
    fermi = (p2.conj() * p1.prime() - p1.conj() * p2.prime()
             + p2 * p1.prime().conj() - p1 * p2.prime().conj()) * HALF
    bose = F * phi.prime().conj() - phi.prime() * F.conj()
    assert m.c12 == fermi + bose


@settings(max_examples=50, deadline=None)
@given(comps_strategy(), scalars)
def test_quadratic_scaling(c, s):
    norm = s * s.conj()
    for policy in ConjugationPolicy:
        assert superparticle_density(c.scale(s), policy=policy) == superparticle_density(c, policy=policy) * norm


def test_body_of_m_is_real_for_real_spinors():
    u, v = y + yb, y * y + yb * yb * 3
    assert m_density(FieldComponents(ZERO, u, v, ZERO)).c0.is_real()


def test_berezin_integral_extracts_top():
    assert berezin_integral(G(ZERO, ZERO, ZERO, y)) == y
    assert berezin_integral(G(y, yb, ZERO, ZERO)).is_zero()


@given(laurent(2), laurent(2), laurent(2))
def test_berezin_integral_linear_and_body_module(a, b, f):
    da, db = G(a, b, ZERO, b), G(b, ZERO, a, a)
    assert berezin_integral(da + db) == berezin_integral(da) + berezin_integral(db)
    assert berezin_integral(da * f) == berezin_integral(da) * f


def test_transport_frozen_values():
    t = build_projective_atlas(UNIT).transition("U", "V")
    one = LaurentFn.one()
    assert transport_field(FieldComponents(y, ZERO, ZERO, ZERO), t).phi == LaurentFn.monomial(-1)
    assert transport_field(FieldComponents(ZERO, one, ZERO, ZERO), t).psi1 == LaurentFn.monomial(-1, 0, I)
    assert transport_field(FieldComponents(ZERO, ZERO, ZERO, one), t).F == LaurentFn.monomial(-2, 0, -1)


@settings(max_examples=50, deadline=None)
@given(comps_strategy())
def test_transport_loop_is_identity(c):
    atlas = build_projective_atlas(SplitModelSpec(2, 0, ComplexScalar(1, 1), ComplexScalar(-1, 1) / 2))
    uv, vu = atlas.transition("U", "V"), atlas.transition("V", "U")
    assert transport_field(transport_field(c, uv), vu) == c


def test_transport_density_is_substitution_on_maximal_models():
    atlas = build_projective_atlas(UNIT)
    t, back = atlas.transition("U", "V"), atlas.transition("V", "U")
    d = G(LaurentFn.monomial(1), ZERO, ZERO, LaurentFn.monomial(-2))
    assert transport_density(d, t, back) == back.substitute(d)


def test_unit_model_difference_on_circle():
    atlas = build_projective_atlas(UNIT)
    c = FieldComponents(y * yb, y, yb + LaurentFn.constant(I), y * 2)
    phi = Superfield.global_from("V", c, atlas)
    delta = coboundary_super(phi, atlas)[("U", "V")]
    moved_minus_v = (-delta).map(restrict_to_circle)
    top = restrict_to_circle(m_density(c).c0) * CircleFn.sin(1) * (-2 * I)
    assert moved_minus_v == G(CircleFn(), CircleFn(), CircleFn(), top)


def test_good_field_residuals():
    atlas = build_projective_atlas(UNIT)
    zero = Superfield.global_from("V", FieldComponents.zero(), atlas)
    assert all(r.is_zero() for r in good_field_residual(zero, atlas).values())
    const = Superfield.global_from("V", FieldComponents(LaurentFn.constant(3), ZERO, ZERO, ZERO), atlas)
    assert all(r.is_zero() for r in good_field_residual(const, atlas).values())
    generic = Superfield.global_from("V", FieldComponents(y * yb * HALF, y, ZERO, ZERO), atlas)
    residual = good_field_residual(generic, atlas)
    assert residual[("U", "V")].max_abs_coefficient() == 0.25


def test_hermitian_cocycle_unit_model():
    G_uv = hermitian_cocycle(build_projective_atlas(UNIT))[("U", "V")]
    assert G_uv == G(y * yb, ZERO, ZERO, yb - y)
    check = global_lagrangian_check(build_projective_atlas(UNIT))
    assert not check["real"]


def test_global_lagrangian_needs_maximal_model():
    with pytest.raises(ValueError, match="maximally"):
        global_lagrangian_check(build_projective_atlas(SplitModelSpec(1, 2, I, I)))


def test_no_compatible_density_on_unit_model():
    atlas = build_projective_atlas(UNIT)
    h = hermitian_cocycle(atlas)
    assert not compatibility_check(atlas, h)["compatible"]
    one = {pair: G(LaurentFn.one()) for pair in h}
    assert not compatibility_check(atlas, one)["compatible"]


def test_superfield_json_round_trip():
    atlas = build_projective_atlas(UNIT)
    phi = Superfield.global_from("V", FieldComponents(y, yb, ZERO, y * yb), atlas)
    assert Superfield.from_json(phi.to_json()) == phi
    assert set(lagrangian_cochain(phi).charts) == {"U", "V"}
