"""Local vanishing conditions at special points of the silhouette.

For each typed cluster this module produces affine generators whose
localization, together with the N-th power of the cluster's maximal
ideals, cuts out the conductor ideal of the normalization map at every
point of the cluster.  The node/triple formulas are 2x2 minors of
derivative matrices of (f, f^2); triple points need one extra generator,
a fixed degree-4 expression in the derivatives of f.  All formulas are
verified on normal forms and under random (linear and quadratic)
coordinate changes by `verify_normal_forms`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .analysis import SpecialPointType
from .groebner import Ideal, buchberger, ideal_equal, in_ideal
from .mpoly import MPoly, PolyError
from .zerodim import AFF, ZeroDimCluster

SATURATION_EXPONENT = {
    SpecialPointType.NODE_B: 1,
    SpecialPointType.CUSP_B: 1,
    SpecialPointType.NODE_W: 3,
    SpecialPointType.TRIPLE_W: 4,
    SpecialPointType.TRANSVERSAL_DISTINCT: 2,
    SpecialPointType.TRANSVERSAL_PINCH: 1,
    SpecialPointType.TANGENTIAL: 3,
}


@dataclass
class ConductorCondition:
    cluster: ZeroDimCluster
    generators: list
    N: int
    type: SpecialPointType


def _derivs(f, names):
    out = f
    for n in names:
        out = out.diff(n)
    return out


def _minors_2x5(f):
    """2x2 minors of the second-derivative rows of f and f^2."""
    f2 = f * f
    row1 = [_derivs(f, s) for s in ("xx", "xy", "yy", "x", "y")]
    row2 = [_derivs(f2, s) for s in ("xx", "xy", "yy", "x", "y")]
    out = []
    for i in range(5):
        for j in range(i + 1, 5):
            out.append(row1[i] * row2[j] - row1[j] * row2[i])
    return out


def _minors_2x4_third(f):
    f2 = f * f
    row1 = [_derivs(f, s) for s in ("xxx", "xxy", "xyy", "yyy")]
    row2 = [_derivs(f2, s) for s in ("xxx", "xxy", "xyy", "yyy")]
    out = []
    for i in range(4):
        for j in range(i + 1, 4):
            out.append(row1[i] * row2[j] - row1[j] * row2[i])
    return out


def triple_point_extra(f):
    """The degree-4 derivative expression completing the triple-point ideal."""
    fxx = _derivs(f, "xx")
    fxy = _derivs(f, "xy")
    fyy = _derivs(f, "yy")
    fxxx = _derivs(f, "xxx")
    fxxy = _derivs(f, "xxy")
    fxyy = _derivs(f, "xyy")
    fyyy = _derivs(f, "yyy")
    fxxxy = _derivs(f, "xxxy")
    fxxyy = _derivs(f, "xxyy")
    fxyyy = _derivs(f, "xyyy")
    return (
        3 * f * fxxx * fxyy * fxyyy
        - 3 * f * fxxy**2 * fxyyy
        - 3 * f * fxxx * fyyy * fxxyy
        + 3 * f * fxxy * fxyy * fxxyy
        + 3 * f * fxxy * fyyy * fxxxy
        - 3 * f * fxyy**2 * fxxxy
        + 2 * fxx * fxy * fxxy * fyyy
        - 2 * fxx * fxy * fxyy**2
        + 2 * fxx * fyy * fxxx * fyyy
        - 2 * fxx * fyy * fxxy * fxyy
        - 4 * fxy**2 * fxxx * fyyy
        + 4 * fxy**2 * fxxy * fxyy
        + 2 * fxy * fyy * fxxx * fxyy
        - 2 * fxy * fyy * fxxy**2
    )


def generators_for_type(sptype, U, V, cluster=None):
    """Affine generator list of the local condition for one special-point
    type; `U` and `V` are the dehomogenized singular image and proper
    silhouette."""
    t = SpecialPointType
    if sptype in (t.NODE_B, t.CUSP_B):
        if cluster is None:
            raise PolyError("point conditions need the cluster ideal")
        return list(cluster.ideal.gens)
    if sptype is t.NODE_W:
        return _minors_2x5(U)
    if sptype is t.TRIPLE_W:
        return _minors_2x4_third(U) + [triple_point_extra(U)]
    if sptype is t.TRANSVERSAL_DISTINCT:
        return [V, U * U]
    if sptype is t.TRANSVERSAL_PINCH:
        return [MPoly.const(U.vars, 1)]
    if sptype is t.TANGENTIAL:
        return [
            V * U,
            4 * V * U.diff("y") - U * V.diff("y"),
            4 * V * U.diff("x") - U * V.diff("x"),
        ]
    raise PolyError(f"no conductor condition for provisional type {sptype}")


def condition_for(cluster, sptype, U, V):
    """ConductorCondition for a typed cluster (provisional types rejected)."""
    if sptype is SpecialPointType.TRANSVERSAL:
        raise PolyError("transversal clusters need a pinch designation first")
    gens = generators_for_type(sptype, U, V, cluster)
    return ConductorCondition(cluster, gens, SATURATION_EXPONENT[sptype], sptype)


# -- normal-form and equivariance verification ---------------------------------


def _mk(s):
    from .mpoly import parse_poly

    return parse_poly(s, AFF)


def _maximal_power(n):
    x, y = _mk("x"), _mk("y")
    gens = []
    for i in range(n + 1):
        gens.append(x**i * y ** (n - i))
    return gens


NORMAL_FORMS = {
    SpecialPointType.NODE_B: {"V": "x*y", "U": "1", "expected": ["x", "y"]},
    SpecialPointType.CUSP_B: {"V": "x^3 - y^2", "U": "1", "expected": ["x", "y"]},
    SpecialPointType.NODE_W: {"V": "1", "U": "x*y", "expected": ["x^2", "y^2"]},
    SpecialPointType.TRIPLE_W: {
        "V": "1",
        "U": "x*y*(x - y)",
        "expected": ["x^2 - x*y + y^2", "x*y*(x + y)"],
    },
    SpecialPointType.TRANSVERSAL_DISTINCT: {"V": "x", "U": "y", "expected": ["x", "y^2"]},
    SpecialPointType.TRANSVERSAL_PINCH: {"V": "x^2*y", "U": "1", "expected": ["1"]},
    SpecialPointType.TANGENTIAL: {
        "V": "y",
        "U": "x^2 - y",
        "expected": ["x*y", "3*y + x^2"],
    },
}


def _condition_ideal(sptype, U, V, N):
    origin = ZeroDimCluster.from_shape([Fraction(0), Fraction(1)], [])
    gens = generators_for_type(sptype, U, V, origin)
    return Ideal(AFF, [g for g in gens if not g.is_zero()] + _maximal_power(N))


def _substitution(rng, quadratic):
    while True:
        a = [Fraction(rng.randint(-5, 5)) for _ in range(4)]
        if a[0] * a[3] - a[1] * a[2] != 0:
            break
    b = [Fraction(rng.randint(-3, 3)) for _ in range(6)] if quadratic else [Fraction(0)] * 6
    x, y = _mk("x"), _mk("y")
    sx = a[0] * x + a[1] * y + b[0] * x**2 + b[1] * x * y + b[2] * y**2
    sy = a[2] * x + a[3] * y + b[3] * x**2 + b[4] * x * y + b[5] * y**2
    return sx, sy


def _apply_subst(p, sx, sy):
    aux = ("x", "y", "u", "v")
    q = p.extend(aux)
    q = q.substitute("x", MPoly.var(aux, "u")).substitute("y", MPoly.var(aux, "v"))
    q = q.substitute("u", sx.extend(aux)).substitute("v", sy.extend(aux))
    return MPoly(AFF, {(e[0], e[1]): c for e, c in q.terms.items()})


def verify_normal_forms(per_type=3, seed=2024, quadratic_extra=True):
    """Check each conductor formula on its normal form and under random
    substitutions; returns a report dict with a list of failures."""
    rng = random.Random(seed)
    failures = []
    checked = {}
    for sptype, data in NORMAL_FORMS.items():
        N = SATURATION_EXPONENT[sptype]
        U0, V0 = _mk(data["U"]), _mk(data["V"])
        expected0 = [_mk(s) for s in data["expected"]]
        trials = [(None, None)]
        quad_types = (SpecialPointType.TRIPLE_W, SpecialPointType.TANGENTIAL)
        for _ in range(per_type):
            trials.append(_substitution(rng, False))
        if quadratic_extra and sptype in quad_types:
            for _ in range(per_type):
                trials.append(_substitution(rng, True))
        ok = 0
        for sx, sy in trials:
            if sx is None:
                U, V = U0, V0
                expected = expected0
            else:
                U = _apply_subst(U0, sx, sy) if not U0.is_constant() else U0
                V = _apply_subst(V0, sx, sy) if not V0.is_constant() else V0
                expected = [_apply_subst(g, sx, sy) for g in expected0]
            got = _condition_ideal(sptype, U, V, N)
            want = Ideal(AFF, expected + _maximal_power(N))
            if ideal_equal(got, want):
                ok += 1
            else:
                failures.append((sptype.value, str(sx), str(sy)))
        checked[sptype.value] = ok
    return {"checked": checked, "failures": failures}
