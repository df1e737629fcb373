import numpy as np
import pytest

from superkit.consistency import density_jets
from superkit.families import random_circle_fn
from superkit.grassmann import ConjugationPolicy
from superkit.jets import FIELDS, JetPolynomial, Reality, euler_lagrange_variation
from superkit.laurent import CircleFn
from superkit.scalars import ComplexScalar

from fd_oracle import gateaux_fd, gateaux_symbolic

REL_TOL = 1e-8


def random_jet_polynomial(rng):
    p = JetPolynomial()
    for _ in range(rng.randint(1, 4)):
        term = JetPolynomial.constant(CircleFn.exp(rng.randint(-2, 2), ComplexScalar(rng.randint(-3, 3), rng.randint(-3, 3))))
        for _ in range(rng.randint(1, 3)):
            term = term * JetPolynomial.symbol(rng.choice(FIELDS), rng.random() < 0.5, rng.randint(0, 1))
        p = p + term
    return p


def random_fields(rng):
    return {f: random_circle_fn(rng, Reality.FREE, 2) for f in FIELDS}


def check(P, fields, pert):
    fd = gateaux_fd(P, fields, pert)
    sym = gateaux_symbolic(euler_lagrange_variation(P), fields, pert)
    scale = max(abs(sym), abs(fd), 1.0)
    return abs(fd - sym) / scale


def test_random_polynomials_match_finite_differences(rng):
    worst = max(check(random_jet_polynomial(rng), random_fields(rng), random_fields(rng)) for _ in range(100))
    assert worst < REL_TOL


@pytest.mark.parametrize("name", ["l", "m"])
@pytest.mark.parametrize("part", ["c0", "c12"])
def test_densities_match_finite_differences(rng, name, part):
    P = getattr(density_jets(ConjugationPolicy.FIX)[name], part)
    worst = max(check(P, random_fields(rng), random_fields(rng)) for _ in range(25))
    assert worst < REL_TOL


def test_oracle_detects_a_wrong_variation(rng):
    P = JetPolynomial.symbol("psi2", True) * JetPolynomial.symbol("psi1", False, 1)
    fields, pert = random_fields(rng), random_fields(rng)
    wrong = euler_lagrange_variation(P).scale(2)
    assert not np.isclose(gateaux_fd(P, fields, pert), gateaux_symbolic(wrong, fields, pert))
