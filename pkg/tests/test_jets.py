import pytest

from superkit.jets import (
    JetPolynomial,
    Reality,
    RealityAssignment,
    VariationForm,
    euler_lagrange_variation,
    infer_reality,
    vanishing_under_constraints,
)
from superkit.laurent import CircleFn

from conftest import I

J = JetPolynomial.symbol
R, IM, Z = Reality.REAL, Reality.IMAGINARY, Reality.ZERO


def test_single_derivative_term():
    v = euler_lagrange_variation(J("psi2", True) * J("psi1", False, 1))
    assert v == VariationForm({("psi1", False): -J("psi2", True, 1), ("psi2", True): J("psi1", False, 1)})


def test_bose_block():
    v = euler_lagrange_variation(J("F") * J("phi", True, 1) - J("phi", False, 1) * J("F", True))
    assert v == VariationForm({
        ("F", False): J("phi", True, 1),
        ("F", True): -J("phi", False, 1),
        ("phi", False): J("F", True, 1),
        ("phi", True): -J("F", False, 1),
    })


M_BODY = J("psi1") * J("psi2", True) + J("psi1", True) * J("psi2")


def test_body_of_m_variation():
    assert euler_lagrange_variation(M_BODY) == VariationForm({
        ("psi1", False): J("psi2", True),
        ("psi1", True): J("psi2"),
        ("psi2", False): J("psi1", True),
        ("psi2", True): J("psi1"),
    })


def test_reality_types_for_body_of_m():
    v = euler_lagrange_variation(M_BODY)
    ok, _ = vanishing_under_constraints(v, RealityAssignment(psi1=R, psi2=IM))
    assert ok
    ok, residual = vanishing_under_constraints(v, RealityAssignment(psi1=R, psi2=R))
    assert not ok
    assert residual == VariationForm({("psi1", False): J("psi2") * 2, ("psi2", False): J("psi1") * 2})


def test_all_zero_fields_vanish():
    v = euler_lagrange_variation(M_BODY + J("F") * J("phi", True, 1))
    assert vanishing_under_constraints(v, RealityAssignment(phi=Z, psi1=Z, psi2=Z, F=Z))[0]


def test_higher_order_rejected():
    with pytest.raises(ValueError):
        euler_lagrange_variation(J("psi1", False, 2))


def test_total_derivative_includes_explicit_dependence():
    p = J("psi1") * CircleFn.sin(1)
    assert p.prime() == J("psi1", False, 1) * CircleFn.sin(1) + J("psi1") * CircleFn.cos(1)


def test_evaluate_matches_direct_substitution():
    u = CircleFn.exp(2, I) + CircleFn.cos(1)
    p = J("psi1", True, 1) * J("psi1")
    assert p.evaluate({"psi1": u}) == u.conj().prime() * u


def test_infer_reality():
    assert infer_reality(CircleFn()) is Z
    assert infer_reality(CircleFn.cos(3)) is R
    assert infer_reality(CircleFn.sin(1) * I) is IM
    assert infer_reality(CircleFn.exp(1)) is Reality.FREE


def test_unknown_field_rejected():
    with pytest.raises(ValueError):
        J("chi")
    with pytest.raises(ValueError):
        RealityAssignment(chi=R)
