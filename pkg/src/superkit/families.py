"""Seeded random trigonometric-polynomial fields of prescribed reality type."""

from __future__ import annotations

import os
import random
from fractions import Fraction

from .jets import FIELDS, Reality
from .laurent import CircleFn
from .scalars import ComplexScalar

__all__ = ["seed_from_env", "random_circle_fn", "random_field", "TYPE_NAMES"]

TYPE_NAMES = {"Re": Reality.REAL, "Im": Reality.IMAGINARY, "0": Reality.ZERO, "C": Reality.FREE}


def seed_from_env(default: int = 0) -> int:
    value = os.environ.get("SUPERKIT_SEED")
    return int(value) if value not in (None, "") else default


def _coeff(rng):
    return Fraction(rng.randint(-4, 4), rng.randint(1, 3))


def random_circle_fn(rng: random.Random, reality: Reality, degree: int = 3) -> CircleFn:
    """Nonzero unless ``reality`` is ZERO; REAL and IMAGINARY are exact."""
    if reality is Reality.ZERO:
        return CircleFn()
    while True:
        u = CircleFn()
        for k in range(-degree, degree + 1):
            u = u + CircleFn.exp(k, ComplexScalar(_coeff(rng), _coeff(rng)))
        if reality is Reality.REAL:
            u = u + u.conj()
        elif reality is Reality.IMAGINARY:
            u = u - u.conj()
        # phi is judged through its derivative, so a constant phi would read as zero
        if not u.prime().is_zero():
            return u


def random_field(rng: random.Random, types: dict, degree: int = 3) -> dict:
    """field name -> CircleFn; ``types`` maps field names to Reality (missing: ZERO)."""
    return {f: random_circle_fn(rng, types.get(f, Reality.ZERO), degree) for f in FIELDS}
