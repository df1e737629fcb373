from fractions import Fraction

import pytest
from hypothesis import given

from superkit.laurent import CircleFn, LaurentFn, MonomialMap, restrict_to_circle
from superkit.scalars import ComplexScalar, parse_complex

from conftest import I, circle, laurent, scalars


def test_parse_complex_forms():
    assert parse_complex("i") == I
    assert parse_complex("1/2-3/4i") == ComplexScalar(Fraction(1, 2), Fraction(-3, 4))
    assert parse_complex(["0", "1"]) == I
    with pytest.raises(ValueError):
        parse_complex("1+2j+")


def test_wirtinger_derivative_of_mixed_monomial():
    y, yb = LaurentFn.y(), LaurentFn.ybar()
    assert (y * y * yb).diff("y") == y * yb * 2


def test_pullback_under_inversion():
    inv = MonomialMap(1, -1)
    for k in range(-3, 4):
        assert inv.pullback(LaurentFn.monomial(k)) == LaurentFn.monomial(-k)


def test_restrict_unit_modulus():
    assert restrict_to_circle(LaurentFn.y() * LaurentFn.ybar()) == CircleFn.one()


def test_trig_constructors():
    assert CircleFn.cos(2) == (CircleFn.exp(2) + CircleFn.exp(-2)) * Fraction(1, 2)
    assert CircleFn.sin(1).prime() == CircleFn.cos(1)
    assert CircleFn.sin(2).at_eighth_turns_even(1) == 1


def test_monomial_map_inverse_and_compose():
    f = MonomialMap(2, 1)
    assert f.compose(f.inverse()) == MonomialMap(1, 1)
    assert MonomialMap(ComplexScalar(3), -1).derivative() == LaurentFn.monomial(-2, 0, -3)


@given(laurent())
def test_restriction_commutes_with_conj(u):
    assert restrict_to_circle(u.conj()) == restrict_to_circle(u).conj()


@given(laurent())
def test_wirtinger_derivatives_commute(u):
    assert u.diff("y").diff("ybar") == u.diff("ybar").diff("y")


@given(laurent())
def test_conj_intertwines_derivatives(u):
    assert u.conj().diff("ybar") == u.diff("y").conj()


@given(circle(), circle())
def test_circle_derivative_is_a_derivation(a, b):
    assert (a * b).prime() == a.prime() * b + a * b.prime()


@given(circle())
def test_real_imag_split(u):
    assert u.real_part() + u.imag_part() * I == u
    assert u.real_part().is_real() and u.imag_part().is_real()


@given(laurent(), scalars)
def test_json_round_trip(u, c):
    assert LaurentFn.from_json(u.to_json()) == u
    v = restrict_to_circle(u) * c
    assert CircleFn.from_json(v.to_json()) == v
