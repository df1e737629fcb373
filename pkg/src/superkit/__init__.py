"""Exact superconformal calculus on (1|2)-dimensional split models over CP^1."""

from .atlas import (
    Atlas,
    SplitModelSpec,
    TransitionData,
    berezinian,
    build_projective_atlas,
    check_cocycle_condition,
    classify_maximal,
    pushforward_superconformal,
    super_jacobian,
    superconformal_cocycle,
    three_chart_atlas,
)
from .audit import paper_check
from .consistency import (
    DeltaOperator,
    component_difference,
    consistency_classify,
    delta_apply,
    g_components,
    nonexistence_check,
    prop45_check,
    prop46_type_analysis,
)
from .grassmann import ConjugationPolicy, GrassmannElement, berezin_top, body, grassmann_conj, grassmann_mul
from .jets import JetPolynomial, Reality, RealityAssignment, VariationForm, euler_lagrange_variation
from .lagrangian import (
    FieldComponents,
    Superfield,
    berezin_integral,
    coboundary_reduced,
    coboundary_super,
    compatibility_check,
    global_lagrangian_check,
    good_field_residual,
    lagrangian_cochain,
    superparticle_density,
)
from .laurent import CircleFn, LaurentFn, MonomialMap, restrict_to_circle
from .scalars import ComplexScalar

__all__ = [
    "Atlas",
    "CircleFn",
    "ComplexScalar",
    "ConjugationPolicy",
    "DeltaOperator",
    "FieldComponents",
    "GrassmannElement",
    "JetPolynomial",
    "LaurentFn",
    "MonomialMap",
    "Reality",
    "RealityAssignment",
    "SplitModelSpec",
    "Superfield",
    "TransitionData",
    "VariationForm",
    "berezin_integral",
    "berezin_top",
    "berezinian",
    "body",
    "build_projective_atlas",
    "check_cocycle_condition",
    "classify_maximal",
    "coboundary_reduced",
    "coboundary_super",
    "compatibility_check",
    "component_difference",
    "consistency_classify",
    "delta_apply",
    "euler_lagrange_variation",
    "g_components",
    "global_lagrangian_check",
    "good_field_residual",
    "grassmann_conj",
    "grassmann_mul",
    "lagrangian_cochain",
    "nonexistence_check",
    "paper_check",
    "prop45_check",
    "prop46_type_analysis",
    "pushforward_superconformal",
    "restrict_to_circle",
    "super_jacobian",
    "superconformal_cocycle",
    "superparticle_density",
    "three_chart_atlas",
]

__version__ = "0.1.0"
