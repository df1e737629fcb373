"""Centered finite-difference Gateaux derivative of the circle integral of a jet polynomial."""

import numpy as np



GRID = np.linspace(0.0, 2 * np.pi, 256, endpoint=False)


def _jet_values(fields, symbols):
    out = {}
    for s in symbols:
        u = fields[s.field].conj() if s.conj else fields[s.field]
        for _ in range(s.order):
            u = u.prime()
        out[s] = u(GRID)
    return out


def _shifted(values, pert, eps):
    return {s: v + eps * pert[s] for s, v in values.items()}


def integral(P, values):
    # uniform rule is exact for trigonometric polynomials of degree < 256
    return P.numeric(values, GRID).mean() * 2 * np.pi


def gateaux_fd(P, fields, perturbation, eps=1e-5):
    symbols = P.symbols()
    base = _jet_values(fields, symbols)
    pert = _jet_values(perturbation, symbols)
    return (integral(P, _shifted(base, pert, eps)) - integral(P, _shifted(base, pert, -eps))) / (2 * eps)


def gateaux_symbolic(variation, fields, perturbation):
    total = 0j
    for (field, conj), coeff in variation.coeffs.items():
        h = perturbation[field].conj() if conj else perturbation[field]
        total += complex((coeff.evaluate(fields) * h).mean()) * 2 * np.pi
    return total


