"""(1|2)-dimensional atlases, superconformal pushforwards and cocycles.

Every chart carries one even coordinate and two odd ones.  Functions on a chart
are ``GrassmannElement``s whose coefficients are ``LaurentFn``s in that chart's
even coordinate; the Laurent variable is always called ``y`` internally, the
chart decides what it means.

A transition ``t`` from chart ``src`` to chart ``dst`` is

    Y   = f(X) + alpha(X) * th1 th2
    e^a = sum_b zeta[a][b](X) * th^b

with ``f`` a ``MonomialMap`` and ``alpha``, ``zeta`` holomorphic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .grassmann import GrassmannElement
from .laurent import LaurentFn, MonomialMap
from .scalars import ComplexScalar, as_scalar, parse_complex

__all__ = [
    "TransitionData",
    "Atlas",
    "SplitModelSpec",
    "SuperconformalCocycle",
    "PushforwardResult",
    "build_projective_atlas",
    "super_jacobian",
    "berezinian",
    "apply_superconformal",
    "pushforward_superconformal",
    "superconformal_cocycle",
    "check_cocycle_condition",
    "classify_maximal",
    "three_chart_atlas",
    "closed_form_cocycle",
]

_ZERO = LaurentFn()
_ONE = LaurentFn.one()


def _odd(c1, c2) -> GrassmannElement:
    return GrassmannElement(_ZERO, c1, c2, _ZERO)


def _even(c0, c12=_ZERO) -> GrassmannElement:
    return GrassmannElement(c0, _ZERO, _ZERO, c12)


def _det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def _inv2(m):
    det = _det2(m)
    if det.is_zero() or not det.is_monomial():
        raise ValueError("odd transition matrix is not invertible over Laurent functions")
    inv = det.inverse()
    return (
        (m[1][1] * inv, -m[0][1] * inv),
        (-m[1][0] * inv, m[0][0] * inv),
    )


def _matmul2(a, b):
    return tuple(
        tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)) for i in range(2)
    )


@dataclass(frozen=True)
class TransitionData:
    src: str
    dst: str
    f: MonomialMap
    zeta: tuple
    alpha: LaurentFn = field(default_factory=LaurentFn)

    def __post_init__(self):
        zeta = tuple(tuple(LaurentFn(c.terms) if isinstance(c, LaurentFn) else LaurentFn.constant(c)
                           for c in row) for row in self.zeta)
        object.__setattr__(self, "zeta", zeta)
        for c in (self.alpha, *zeta[0], *zeta[1]):
            if not c.is_holomorphic():
                raise ValueError("transition data must be holomorphic")
        _inv2(zeta)  # raises if singular

    @property
    def pair(self):
        return (self.src, self.dst)

    @property
    def is_split(self) -> bool:
        return self.alpha.is_zero()

    @property
    def is_diagonal(self) -> bool:
        return self.zeta[0][1].is_zero() and self.zeta[1][0].is_zero()

    def det_zeta(self) -> LaurentFn:
        return _det2(self.zeta)

    def even_coordinate(self) -> GrassmannElement:
        """Y as a function on the source chart."""
        return _even(self.f.as_laurent(), self.alpha)

    def odd_coordinate(self, a: int) -> GrassmannElement:
        row = self.zeta[a - 1]
        return _odd(row[0], row[1])

    def substitute(self, element: GrassmannElement) -> GrassmannElement:
        """Pull a function on the target chart back to the source chart."""
        shift = self.alpha

        def sub(c):
            if isinstance(c, int):
                c = LaurentFn.constant(c)
            base = self.f.pullback(c)
            if shift.is_zero() or c.is_zero():
                return _even(base)
            if not c.is_holomorphic():
                raise ValueError("non-split substitution of a non-holomorphic function")
            return _even(base, self.f.pullback(c.diff("y")) * shift)

        e1 = self.odd_coordinate(1)
        e2 = self.odd_coordinate(2)
        return (
            sub(element.c0)
            + sub(element.c1) * e1
            + sub(element.c2) * e2
            + sub(element.c12) * (e1 * e2)
        )

    def inverse(self) -> "TransitionData":
        g = self.f.inverse()
        zinv = _inv2(self.zeta)
        zeta_back = tuple(tuple(g.pullback(c) for c in row) for row in zinv)
        beta = _ZERO
        if not self.alpha.is_zero():
            det_back = g.pullback(self.det_zeta())
            beta = -(g.derivative() * g.pullback(self.alpha) * det_back.inverse())
        return TransitionData(self.dst, self.src, g, zeta_back, beta)

    def compose(self, then: "TransitionData") -> "TransitionData":
        """self: A -> B followed by then: B -> C.  Split transitions only."""
        if self.dst != then.src:
            raise ValueError("transitions do not chain")
        if not (self.is_split and then.is_split):
            raise ValueError("composition implemented for split transitions only")
        later = tuple(tuple(self.f.pullback(c) for c in row) for row in then.zeta)
        return TransitionData(
            self.src, then.dst, self.f.compose(then.f), _matmul2(later, self.zeta)
        )

    def __repr__(self):
        return f"TransitionData({self.src}->{self.dst}, {self.f!r}, alpha={self.alpha})"


@dataclass(frozen=True)
class Atlas:
    charts: tuple
    transitions: dict
    triples: tuple = ()

    def __post_init__(self):
        for (u, v), t in self.transitions.items():
            if (v, u) not in self.transitions:
                raise ValueError(f"transition {v}->{u} missing")
            if t.pair != (u, v):
                raise ValueError(f"transition stored under {(u, v)} is {t.pair}")

    def transition(self, u, v) -> TransitionData:
        return self.transitions[(u, v)]

    def pairs(self):
        return sorted(self.transitions)

    def loop_is_identity(self, u, v) -> bool:
        """Composing u->v with v->u gives the identity on generators."""
        t, s = self.transitions[(u, v)], self.transitions[(v, u)]
        gens = [
            _even(LaurentFn.y()),
            GrassmannElement.eta1(_ONE).map(_fill),
            GrassmannElement.eta2(_ONE).map(_fill),
        ]
        return all(t.substitute(s.substitute(gen)) == gen for gen in gens)


def _fill(c):
    return LaurentFn() if isinstance(c, int) and c == 0 else c


@dataclass(frozen=True)
class SplitModelSpec:
    """Trivialisation data of Pi_{(-k1,-k2)}(lambda), optionally deformed.

    ``alpha`` is the nilpotent shift of the even coordinate and ``corner`` the
    upper off-diagonal entry of the odd transition; both are functions of x.
    """

    k1: int
    k2: int
    lambda1: ComplexScalar = ComplexScalar(0, 1)
    lambda2: ComplexScalar = ComplexScalar(0, 1)
    alpha: LaurentFn = field(default_factory=LaurentFn)
    corner: LaurentFn = field(default_factory=LaurentFn)

    def __post_init__(self):
        object.__setattr__(self, "lambda1", as_scalar(self.lambda1))
        object.__setattr__(self, "lambda2", as_scalar(self.lambda2))
        if (self.lambda1 * self.lambda2).is_zero():
            raise ValueError("lambda1 and lambda2 must be nonzero")

    @property
    def det_lambda(self) -> ComplexScalar:
        return self.lambda1 * self.lambda2

    def label(self) -> str:
        return f"Pi({-self.k1},{-self.k2})({self.lambda1},{self.lambda2})"

    def to_json(self) -> dict:
        out = {
            "k1": self.k1,
            "k2": self.k2,
            "lambda1": self.lambda1.to_pair(),
            "lambda2": self.lambda2.to_pair(),
        }
        if not self.alpha.is_zero():
            out["alpha"] = self.alpha.to_json()
        if not self.corner.is_zero():
            out["corner"] = self.corner.to_json()
        return out

    @classmethod
    def from_json(cls, data) -> "SplitModelSpec":
        return cls(
            int(data["k1"]),
            int(data["k2"]),
            parse_complex(data.get("lambda1", ["0", "1"])),
            parse_complex(data.get("lambda2", ["0", "1"])),
            LaurentFn.from_json(data["alpha"]) if data.get("alpha") else LaurentFn(),
            LaurentFn.from_json(data["corner"]) if data.get("corner") else LaurentFn(),
        )


def build_projective_atlas(spec: SplitModelSpec) -> Atlas:
    """Standard two-chart atlas of CP^1 lifted with the given odd data (y = 1/x)."""
    zeta = (
        (LaurentFn.monomial(-spec.k1, 0, spec.lambda1), spec.corner),
        (LaurentFn(), LaurentFn.monomial(-spec.k2, 0, spec.lambda2)),
    )
    t = TransitionData("U", "V", MonomialMap(1, -1), zeta, spec.alpha)
    return Atlas(("U", "V"), {("U", "V"): t, ("V", "U"): t.inverse()})


# -- super Jacobian / Berezinian -------------------------------------------------


def super_jacobian(t: TransitionData) -> dict:
    """Blocks of d(Y, e)/d(X, th) on the source chart.

    ``A`` = dY/dX, ``B[b]`` = dY/dth^b, ``C[a]`` = de^a/dX, ``D[a][b]`` = de^a/dth^b.
    """
    Y = t.even_coordinate()
    etas = [t.odd_coordinate(1), t.odd_coordinate(2)]
    dx = lambda g: g.map(lambda c: c.diff("y") if not isinstance(c, int) else 0)  # noqa: E731
    return {
        "A": dx(Y),
        "B": [Y.d_odd(1), Y.d_odd(2)],
        "C": [dx(e) for e in etas],
        "D": [[e.d_odd(b).c0 for b in (1, 2)] for e in etas],
    }


def berezinian(J: dict) -> GrassmannElement:
    """Berezinian of the chain-rule matrix (d_X, d_th) = M (d_Y, d_e).

    M has even block A, odd blocks C (row) and B (column), odd-odd block D^T, so
    Ber = (A - C D^-T B) / det D = (A + B D^-1 C) / det D.
    """
    D = J["D"]
    det = _det2(D)
    if det.is_zero() or not det.is_monomial():
        raise ValueError("degenerate odd block")
    Dinv = _inv2(D)
    schur = J["A"]
    for b in range(2):
        for a in range(2):
            schur = schur + J["B"][b] * Dinv[b][a] * J["C"][a]
    return schur * det.inverse()


# -- superconformal vector fields --------------------------------------------------


def apply_superconformal(a: int, h: GrassmannElement, prime=None) -> GrassmannElement:
    """D_a h = dh/de_a - e_b dh/dY  (b the other index)."""
    if prime is None:
        prime = lambda c: c.prime()  # noqa: E731
    dh = h.map(lambda c: 0 if isinstance(c, int) else prime(c))
    other = GrassmannElement.eta2(1) if a == 1 else GrassmannElement.eta1(1)
    return h.d_odd(a) - other * dh


@dataclass
class PushforwardResult:
    """Pushforward of D_{src,a} written on the target chart.

    ``coeffs[b]`` is the candidate g^b_a read off the d/de^b components;
    ``residual`` is the d/dY component minus what those coefficients predict.
    """

    pair: tuple
    a: int
    components: tuple
    coeffs: tuple
    residual: GrassmannElement

    @property
    def ok(self) -> bool:
        return self.residual.is_zero()


def pushforward_superconformal(t: TransitionData, a: int, back: TransitionData | None = None) -> PushforwardResult:
    if back is None:
        back = t.inverse()
    src_components = [apply_superconformal(a, t.even_coordinate())]
    src_components += [apply_superconformal(a, t.odd_coordinate(b)) for b in (1, 2)]
    comps = tuple(back.substitute(c) for c in src_components)
    g1, g2 = comps[1], comps[2]
    e1 = GrassmannElement(_ZERO, _ONE, _ZERO, _ZERO)
    e2 = GrassmannElement(_ZERO, _ZERO, _ONE, _ZERO)
    predicted = -(g1 * e2 + g2 * e1)
    return PushforwardResult(t.pair, a, comps, (g1, g2), comps[0] - predicted)


@dataclass
class SuperconformalCocycle:
    """Candidate pushforward coefficients over every ordered chart pair.

    ``entries[pair][a-1][b-1]`` is g^b_a.  ``ok`` is true when every pairwise
    pushforward closes on the D's (zero residual).
    """

    entries: dict
    residuals: dict
    diagonal: bool
    ok: bool
    failures: list
    alpha_obstruction: dict

    def g(self, pair, a: int) -> GrassmannElement:
        return self.entries[pair][a - 1][a - 1]


def _alpha_obstruction(t: TransitionData, res1: GrassmannElement, res2: GrassmannElement, back):
    if not t.is_diagonal:
        return None
    z1 = back.substitute(_even(t.zeta[0][0])).c0
    z2 = back.substitute(_even(t.zeta[1][1])).c0
    n1 = _as_laurent(res1.c2) * z2
    n2 = _as_laurent(res2.c1) * z1
    return n1 - n2


def _as_laurent(c):
    return LaurentFn.constant(c) if isinstance(c, int) else c


def superconformal_cocycle(atlas: Atlas) -> SuperconformalCocycle:
    entries, residuals, failures, obstruction = {}, {}, [], {}
    diagonal = True
    for pair in atlas.pairs():
        t = atlas.transition(*pair)
        back = atlas.transition(pair[1], pair[0])
        r1 = pushforward_superconformal(t, 1, back)
        r2 = pushforward_superconformal(t, 2, back)
        entries[pair] = (r1.coeffs, r2.coeffs)
        residuals[pair] = (r1.residual, r2.residual)
        for r in (r1, r2):
            if not r.ok:
                failures.append({"pair": list(pair), "a": r.a, "residual": r.residual})
        if not (r1.coeffs[1].is_zero() and r2.coeffs[0].is_zero()):
            diagonal = False
        obstruction[pair] = _alpha_obstruction(t, r1.residual, r2.residual, back)
    return SuperconformalCocycle(entries, residuals, diagonal, not failures, failures, obstruction)


def check_cocycle_condition(g: SuperconformalCocycle, atlas: Atlas) -> dict:
    """g_UV * g_VW - g_UW on every declared triple, in the W chart."""
    out = {}
    for (u, v, w) in atlas.triples:
        try:
            g_uv, g_vw, g_uw = g.entries[(u, v)], g.entries[(v, w)], g.entries[(u, w)]
            t_wv = atlas.transition(w, v)
        except KeyError as exc:
            raise ValueError(f"missing triple data for {(u, v, w)}: {exc}") from None
        res = []
        for a in range(2):
            row = []
            for b in range(2):
                acc = -g_uw[a][b]
                for c in range(2):
                    acc = acc + t_wv.substitute(g_uv[a][c]) * g_vw[c][b]
                row.append(acc)
            res.append(tuple(row))
        out[(u, v, w)] = tuple(res)
    return out


def cocycle_residual_is_zero(residuals: dict) -> bool:
    return all(e.is_zero() for m in residuals.values() for row in m for e in row)


def classify_maximal(spec: SplitModelSpec) -> dict:
    """Maximality of a trivialisation: the closed-form clauses and the computed verdict."""
    clauses = {
        "alpha_zero": spec.alpha.is_zero(),
        "diagonal": spec.corner.is_zero(),
        "degree_sum_2": spec.k1 + spec.k2 == 2,
        "det_lambda_minus_1": spec.det_lambda == -1,
    }
    messages = {
        "alpha_zero": "not superconformal: alpha obstruction",
        "diagonal": "zeta not diagonal",
        "degree_sum_2": "k1 + k2 != 2",
        "det_lambda_minus_1": "det lambda != -1",
    }
    reasons = [messages[k] for k, ok in clauses.items() if not ok]
    cocycle = superconformal_cocycle(build_projective_atlas(spec))
    return {
        "maximal": all(clauses.values()),
        "reasons": reasons,
        "clauses": clauses,
        "computed_maximal": cocycle.ok and cocycle.diagonal,
        "cocycle": cocycle,
    }


# -- fixtures and closed forms -------------------------------------------------------


def _scale_first(t: TransitionData, scale) -> TransitionData:
    (a, b), row = t.zeta
    return TransitionData(t.src, t.dst, t.f, ((a * scale, b), row), t.alpha)


def three_chart_atlas(scale=1, scaled: str = "UV") -> Atlas:
    """Three charts on C^x: x -> y = 2x -> z = 1/y, with U -> W the composite.

    At ``scale == 1`` det(zeta) equals the derivative of the reduced transition on
    every overlap.  Otherwise zeta^1_1 of the ``scaled`` overlap ("UV", "VW" or
    "UW") is multiplied by ``scale`` after the composite is formed.
    """
    if scaled not in ("UV", "VW", "UW"):
        raise ValueError(f"scaled must be UV, VW or UW, got {scaled!r}")
    scale = as_scalar(scale)
    i = ComplexScalar(0, 1)
    # det zeta_UV = 2 = dy/dx and det zeta_VW = -y^-2 = dz/dy
    uv = TransitionData(
        "U", "V", MonomialMap(2, 1),
        ((LaurentFn.constant(1), LaurentFn()), (LaurentFn(), LaurentFn.constant(2))),
    )
    vw = TransitionData(
        "V", "W", MonomialMap(1, -1),
        ((LaurentFn.monomial(-1, 0, i), LaurentFn()), (LaurentFn(), LaurentFn.monomial(-1, 0, i))),
    )
    uw = uv.compose(vw)
    forward = {"UV": uv, "VW": vw, "UW": uw}
    forward[scaled] = _scale_first(forward[scaled], scale)
    transitions = {}
    for t in forward.values():
        transitions[t.pair] = t
        back = t.inverse()
        transitions[back.pair] = back
    triples = (("U", "V", "W"), ("W", "V", "U"), ("V", "W", "U"))
    return Atlas(("U", "V", "W"), transitions, triples)


def closed_form_cocycle(t: TransitionData):
    """zeta_a + (-1)^(a-1) det(zeta_back) d(zeta_a)/dx e12, written on the target chart.

    Closed form for diagonal split transitions; an independent route to the
    pushforward coefficients.
    """
    if not (t.is_diagonal and t.is_split):
        raise ValueError("closed form requires diagonal split transitions")
    g = t.f.inverse()
    det_back = t.det_zeta().inverse()
    out = []
    for a in (1, 2):
        z = t.zeta[a - 1][a - 1]
        sign = 1 if a == 1 else -1
        top = det_back * z.diff("y") * sign
        out.append(_even(g.pullback(z), g.pullback(top)))
    return tuple(out)
