from hypothesis import given, settings

from superkit.grassmann import (
    ConjugationPolicy,
    GrassmannElement as G,
    berezin_top,
    body,
    grassmann_conj,
    hermitian_pair,
)
from superkit.laurent import LaurentFn

from conftest import I, grassmann, laurent

FIX, NEGATE = ConjugationPolicy.FIX, ConjugationPolicy.NEGATE
y, yb = LaurentFn.y(), LaurentFn.ybar()


def small():
    return grassmann(coeff=lambda: laurent(max_terms=2))


def test_odd_generators_anticommute():
    assert G.eta1() * G.eta2() == G.top()
    assert G.eta2() * G.eta1() == -G.top()
    assert G.eta1() * G.eta1() == G()


def test_hand_expanded_product():
    a = G(y * I, 0, 0, LaurentFn.constant(-I))
    b = G(yb * -I, 0, 0, LaurentFn.constant(-I))
    assert a * b == G(y * yb, 0, 0, y - yb)


def test_conjugation_policies_on_top():
    t = G(0, 0, 0, LaurentFn.constant(I))
    assert grassmann_conj(t, FIX) == G(0, 0, 0, LaurentFn.constant(-I))
    assert grassmann_conj(t, NEGATE) == G(0, 0, 0, LaurentFn.constant(I))


def test_conjugation_keeps_odd_generators():
    a = G(0, y, 0, 0)
    for policy in ConjugationPolicy:
        assert grassmann_conj(a, policy) == G(0, yb, 0, 0)


def test_hermitian_pair_examples():
    e1 = G.eta1(LaurentFn.one())
    assert hermitian_pair(e1, e1) == G()
    g1 = G(y * I, 0, 0, LaurentFn.constant(-I))
    g2 = G(y * I, 0, 0, LaurentFn.constant(I))
    assert hermitian_pair(g1, g2, FIX) == G(y * yb, 0, 0, y - yb)


def test_body_and_top_extraction():
    a = G(LaurentFn.constant(1), LaurentFn.constant(2), LaurentFn.constant(3), LaurentFn.constant(4))
    assert body(a) == 1 and berezin_top(a) == 4


@settings(max_examples=1000, deadline=None)
@given(small(), small(), small())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@settings(max_examples=200, deadline=None)
@given(small(), small())
def test_conj_fix_is_multiplicative(a, b):
    assert grassmann_conj(a * b, FIX) == grassmann_conj(a, FIX) * grassmann_conj(b, FIX)


@settings(max_examples=200, deadline=None)
@given(small(), small())
def test_conj_negate_reverses_order(a, b):
    assert grassmann_conj(a * b, NEGATE) == grassmann_conj(b, NEGATE) * grassmann_conj(a, NEGATE)


@settings(max_examples=200, deadline=None)
@given(small(), small())
def test_body_top_linear_body_multiplicative(a, b):
    assert body(a + b) == body(a) + body(b)
    assert berezin_top(a + b) == berezin_top(a) + berezin_top(b)
    assert body(a * b) == body(a) * body(b)


@given(small())
def test_conj_is_an_involution(a):
    for policy in ConjugationPolicy:
        assert grassmann_conj(grassmann_conj(a, policy), policy) == a
