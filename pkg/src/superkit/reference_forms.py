"""Closed forms as they are commonly quoted for the projective-line models.

These are reference data for the audit, written down term by term.  Some of
them disagree with what the library computes; ``superkit.audit`` reports how.
All circle forms assume lambda = (i, i) and y = exp(i phi).
"""

from __future__ import annotations

from fractions import Fraction

from .grassmann import GrassmannElement
from .jets import JetPolynomial, VariationForm
from .laurent import CircleFn, LaurentFn
from .scalars import ComplexScalar, as_scalar

__all__ = [
    "reference_cocycle",
    "reference_hermitian",
    "reference_circle_unit",
    "reference_circle_general",
    "reference_real_imag",
    "reference_pi20_parts",
    "reference_displayed_densities",
    "reference_variation_list",
    "reference_pi20_variation",
    "reference_type_variation",
    "reference_must_vanish",
]

_I = ComplexScalar(0, 1)
J = JetPolynomial.symbol


def _g(c0, c12):
    return GrassmannElement(c0, type(c0)(), type(c0)(), c12)


def reference_cocycle(k1, k2, lambda1, lambda2):
    """g_a = lambda_a y^k_a - (-1)^(a-1) k_a lambda_a y^(k_a - 1) e12."""
    out = []
    for sign, k, lam in ((1, k1, as_scalar(lambda1)), (-1, k2, as_scalar(lambda2))):
        out.append(_g(LaurentFn.monomial(k, 0, lam), LaurentFn.monomial(k - 1, 0, lam * (-sign * k))))
    return tuple(out)


def reference_hermitian(k1, k2, lambda1, lambda2):
    """lambda1 conj(lambda2) y^k1 ybar^k2 (1 + (k2 ybar^-1 - k1 y^-1) e12)."""
    lam = as_scalar(lambda1) * as_scalar(lambda2).conj()
    body = LaurentFn.monomial(k1, k2, lam)
    top = body * (LaurentFn.monomial(0, -1, k2) - LaurentFn.monomial(-1, 0, k1))
    return _g(body, top)


def reference_circle_unit():
    """1 - 2i sin(phi) e12."""
    return _g(CircleFn.one(), CircleFn.sin(1) * (-2 * _I))


def reference_circle_general(k1: int):
    """exp(2i(k1-1)phi) (1 - 2 k1 cos(phi) e12) - 2 exp(i(2k1-3)phi) e12."""
    lead = CircleFn.exp(2 * (k1 - 1))
    top = lead * CircleFn.cos(1) * (-2 * k1) - CircleFn.exp(2 * k1 - 3, 2)
    return _g(lead, top)


def reference_real_imag(k1: int):
    """Quoted real and imaginary parts with kt = k1 - 1."""
    kt = k1 - 1
    c, s = CircleFn.cos(1), CircleFn.sin(1)
    c2, s2 = CircleFn.cos(2 * kt), CircleFn.sin(2 * kt)
    re = _g(c2, (c * c2 * kt - s * s2) * -2)
    im = _g(s2, (c * s2 * kt + s * c2) * -2)
    return re, im


def reference_pi20_parts():
    """cos 2phi - 2 cos 3phi e12 and sin 2phi - 2 sin 3phi e12."""
    re = _g(CircleFn.cos(2), CircleFn.cos(3) * -2)
    im = _g(CircleFn.sin(2), CircleFn.sin(3) * -2)
    return re, im


def reference_displayed_densities() -> dict:
    """Body of l, body of m and the top of m, without the overall 1/2 on the bodies."""
    half = Fraction(1, 2)
    fermi = (
        J("psi2", True) * J("psi1", False, 1)
        - J("psi1", True) * J("psi2", False, 1)
        + J("psi2") * J("psi1", True, 1)
        - J("psi1") * J("psi2", True, 1)
    ) * half
    bose = J("F") * J("phi", True, 1) - J("phi", False, 1) * J("F", True)
    return {
        "l_body": J("psi1") * J("psi2", True) - J("psi1", True) * J("psi2"),
        "m_body": J("psi1") * J("psi2", True) + J("psi1", True) * J("psi2"),
        "m_top": fermi + bose,
    }


def reference_variation_list() -> dict:
    """Quoted first variations of the three displayed densities (last one verbatim)."""
    l_var = VariationForm({
        ("psi1", False): J("psi2", True),
        ("psi1", True): -J("psi2"),
        ("psi2", False): -J("psi1", True),
        ("psi2", True): J("psi1"),
    })
    m_var = VariationForm({
        ("psi1", False): J("psi2", True),
        ("psi1", True): J("psi2"),
        ("psi2", False): J("psi1", True),
        ("psi2", True): J("psi1"),
    })
    top_var = VariationForm({
        ("psi1", False): -J("psi2", True, 1),
        # quoted as psi1' paired with delta conj(psi1), alongside -psi2' conj(psi1)
        ("psi1", True): -J("psi2", False, 1) + J("psi1", False, 1),
        ("psi2", False): J("psi1", True, 1),
        ("F", False): J("phi", True, 1),
        ("F", True): -J("phi", False, 1),
        ("phi", False): J("F", True, 1),
        ("phi", True): -J("F", False, 1),
    })
    return {"l_body": l_var, "m_body": m_var, "m_top": top_var}


def reference_pi20_variation() -> VariationForm:
    """Quoted variation of L_U - R0 L_V on the (2, 0) model, psi block only."""
    s2 = CircleFn.sin(2) * _I
    e3, em3 = CircleFn.exp(3, 2), CircleFn.exp(-3, 2)
    return VariationForm({
        ("psi1", False): -(J("psi2", True) * e3 + J("psi2", True, 1) * s2),
        ("psi1", True): J("psi2") * em3 - J("psi2", False, 1) * s2,
        ("psi2", False): J("psi1", True) * em3 + J("psi1", True, 1) * s2,
        ("psi2", True): -(J("psi1") * e3 - J("psi1", False, 1) * s2),
    })


def reference_type_variation(kind) -> VariationForm:
    """Quoted specialisations: ("Re", "Re") uses 4 sinh(3i phi), ("Im", "Re") 4 cosh(3i phi)."""
    kind = tuple(kind)
    s2 = CircleFn.sin(2) * (2 * _I)
    if kind == ("Re", "Re"):
        h = CircleFn.sin(3) * (4 * _I)  # 4 sinh(3i phi)
        return VariationForm({
            ("psi1", False): -(J("psi2") * h),
            ("psi2", False): -(J("psi1") * h - J("psi1", False, 1) * s2),
        })
    if kind == ("Im", "Re"):
        h = CircleFn.cos(3) * 4  # 4 cosh(3i phi)
        return VariationForm({
            ("psi1", False): -(J("psi2") * h),
            ("psi2", False): -(J("psi1") * h + J("psi1", False, 1) * s2),
        })
    raise ValueError("quoted specialisations exist for (Re, Re) and (Im, Re) only")


def reference_must_vanish(kind) -> str:
    """Field the quoted statement requires to vanish for each type."""
    return "psi1" if tuple(kind)[1] == "Re" else "psi2"
