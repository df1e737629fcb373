import pytest
from hypothesis import assume, given, settings, strategies as st

from superkit.atlas import (
    SplitModelSpec,
    TransitionData,
    closed_form_cocycle,
    berezinian,
    build_projective_atlas,
    check_cocycle_condition,
    classify_maximal,
    cocycle_residual_is_zero,
    super_jacobian,
    superconformal_cocycle,
    three_chart_atlas,
)
from superkit.grassmann import GrassmannElement as G
from superkit.laurent import LaurentFn, MonomialMap
from superkit.scalars import ComplexScalar

from conftest import I, scalars

UV = ("U", "V")
ONE = G(LaurentFn.one())


def x(k, c=1):
    return LaurentFn.monomial(k, 0, c)


def ber(spec, pair=UV):
    return berezinian(super_jacobian(build_projective_atlas(spec).transition(*pair)))


def test_transition_data_of_standard_models():
    t = build_projective_atlas(SplitModelSpec(1, 1, I, I)).transition(*UV)
    assert t.f == MonomialMap(1, -1)
    assert t.zeta == ((x(-1, I), LaurentFn()), (LaurentFn(), x(-1, I)))
    t = build_projective_atlas(SplitModelSpec(2, 0, I, I)).transition(*UV)
    assert t.zeta == ((x(-2, I), LaurentFn()), (LaurentFn(), x(0, I)))


def test_alpha_gives_non_split_transition():
    t = build_projective_atlas(SplitModelSpec(1, 1, I, I, alpha=x(-1))).transition(*UV)
    assert not t.is_split


def test_non_holomorphic_data_rejected():
    with pytest.raises(ValueError):
        TransitionData("U", "V", MonomialMap(1, -1), ((LaurentFn.ybar(), LaurentFn()), (LaurentFn(), x(0, 1))))


@pytest.mark.parametrize("pair", [UV, ("V", "U")])
def test_berezinian_trivial_on_maximal(pair):
    assert ber(SplitModelSpec(1, 1, I, I), pair) == ONE
    assert ber(SplitModelSpec(2, 0, ComplexScalar(1), ComplexScalar(-1)), pair) == ONE


def test_berezinian_minus_one_when_det_lambda_is_one():
    assert ber(SplitModelSpec(1, 1, ComplexScalar(1), ComplexScalar(1))) == -ONE


@pytest.mark.parametrize("k1", range(-5, 8))
def test_pushforward_closed_form(k1):
    spec = SplitModelSpec(k1, 2 - k1, I, I)
    cocycle = superconformal_cocycle(build_projective_atlas(spec))
    assert cocycle.ok and cocycle.diagonal
    for a, k in ((1, spec.k1), (2, spec.k2)):
        sign = 1 if a == 1 else -1
        expected = G(LaurentFn.monomial(k, 0, I), 0, 0, LaurentFn.monomial(k - 1, 0, I * (sign * k)))
        assert cocycle.g(UV, a) == expected


def test_unit_model_cocycle_frozen():
    cocycle = superconformal_cocycle(build_projective_atlas(SplitModelSpec(1, 1, I, I)))
    assert cocycle.g(UV, 1) == G(LaurentFn.monomial(1, 0, I), 0, 0, LaurentFn.constant(I))
    assert cocycle.g(UV, 2) == G(LaurentFn.monomial(1, 0, I), 0, 0, LaurentFn.constant(-I))


def test_independent_closed_form_agrees_with_pushforward():
    for k1 in range(-3, 5):
        spec = SplitModelSpec(k1, 2 - k1, ComplexScalar(2), ComplexScalar(-1, 0) / 2)
        atlas = build_projective_atlas(spec)
        cocycle = superconformal_cocycle(atlas)
        for pair in atlas.pairs():
            assert tuple(cocycle.g(pair, a) for a in (1, 2)) == closed_form_cocycle(atlas.transition(*pair))


@pytest.mark.parametrize("alpha", [x(-1), x(2, 3)])
def test_alpha_obstruction_is_twice_alpha(alpha):
    cocycle = superconformal_cocycle(build_projective_atlas(SplitModelSpec(1, 1, I, I, alpha=alpha)))
    assert not cocycle.ok
    assert cocycle.alpha_obstruction[UV] == MonomialMap(1, -1).pullback(alpha) * 2


def test_corner_makes_cocycle_non_diagonal():
    cocycle = superconformal_cocycle(build_projective_atlas(SplitModelSpec(1, 1, I, I, corner=x(-1))))
    assert not cocycle.diagonal
    assert not cocycle.entries[UV][1][0].is_zero()


def test_cocycle_exists_off_the_degree_line_only_with_residual():
    # k1 + k2 = 3: the pushforward leaves a nonzero residual on each pair
    cocycle = superconformal_cocycle(build_projective_atlas(SplitModelSpec(1, 2, I, I)))
    assert not cocycle.ok
    assert cocycle.failures


def test_two_chart_atlas_has_no_triple_condition():
    atlas = build_projective_atlas(SplitModelSpec(1, 1, I, I))
    assert check_cocycle_condition(superconformal_cocycle(atlas), atlas) == {}


@pytest.mark.parametrize("scaled", ["UV", "VW", "UW"])
def test_three_chart_fixture(scaled):
    good = three_chart_atlas(scaled=scaled)
    assert cocycle_residual_is_zero(check_cocycle_condition(superconformal_cocycle(good), good))
    bad = three_chart_atlas(scale=2, scaled=scaled)
    assert not cocycle_residual_is_zero(check_cocycle_condition(superconformal_cocycle(bad), bad))


def test_classify_examples():
    assert classify_maximal(SplitModelSpec(1, 1, I, I))["maximal"]
    assert classify_maximal(SplitModelSpec(2, 0, ComplexScalar(1), ComplexScalar(-1)))["maximal"]
    verdict = classify_maximal(SplitModelSpec(1, 1, ComplexScalar(1), ComplexScalar(1)))
    assert not verdict["maximal"] and verdict["reasons"] == ["det lambda != -1"]
    verdict = classify_maximal(SplitModelSpec(1, 1, I, I, alpha=x(-1)))
    assert verdict["reasons"] == ["not superconformal: alpha obstruction"]


def test_spec_json_round_trip():
    spec = SplitModelSpec(2, 0, I, ComplexScalar(1, 1), alpha=x(-1))
    assert SplitModelSpec.from_json(spec.to_json()) == spec


@st.composite
def transitions(draw):
    e = draw(st.sampled_from([1, -1]))
    c = draw(scalars)
    assume(c != 0)
    d1, d2 = draw(scalars), draw(scalars)
    assume(d1 != 0 and d2 != 0)
    zeta = (
        (x(draw(st.integers(-2, 2)), d1), x(draw(st.integers(-2, 2)), draw(scalars))),
        (LaurentFn(), x(draw(st.integers(-2, 2)), d2)),
    )
    alpha = x(draw(st.integers(-2, 2)), draw(scalars))
    return TransitionData("U", "V", MonomialMap(c, e), zeta, alpha)


@settings(max_examples=60, deadline=None)
@given(transitions())
def test_berezinian_multiplicative_round_trip(t):
    back = t.inverse()
    product = berezinian(super_jacobian(t)) * t.substitute(berezinian(super_jacobian(back)))
    assert product == ONE
