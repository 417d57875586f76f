"""Silhouette analysis: split D = U^2 V and classify the special points.

After a seeded random coordinate change of the plane, every category of
special points is read off univariate data: multiplicities of squarefree
factors in disc_y(V), disc_y(U) and Res_y(U, V), with the y-coordinate of
each point recovered by a modular gcd (shape basis).  A battery of
certificates (degree, multiplicity, coprimality, fiber-degree, Hessian)
rejects non-generic charts, which are retried with fresh randomness, so an
accepted classification is unconditionally correct.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from . import unipoly as up
from .linalg import QMatrix
from .mpoly import MPoly, PolyError
from .polytools import resultant_var, squarefree_decomposition, univariate_factor
from .zerodim import AFF, PLANE, ZeroDimCluster


class NonGoodInput(PolyError):
    """The silhouette violates an expectation of a good projection."""


class GenericityFailure(Exception):
    """Internal: this chart is unlucky, try another coordinate change."""


class SpecialPointType(Enum):
    NODE_B = "nodeB"
    CUSP_B = "cuspB"
    NODE_W = "nodeW"
    TRIPLE_W = "tripleW"
    TANGENTIAL = "tangential"
    TRANSVERSAL = "transversal"  # provisional: pinch status undecided
    TRANSVERSAL_DISTINCT = "transversalDistinct"
    TRANSVERSAL_PINCH = "transversalPinch"


@dataclass
class SilhouetteData:
    D: MPoly
    U: MPoly
    V: MPoly
    d: int
    clusters: list
    matrix: list
    seed: int
    counts: dict
    U_aff: MPoly = None
    V_aff: MPoly = None
    transversal_classes: list = field(default_factory=list)

    @property
    def deg_u(self):
        return self.U.degree()

    @property
    def deg_v(self):
        return self.V.degree()


def _surface_degree(n):
    """d with d(d-1) = n, or None."""
    from math import isqrt

    s = isqrt(1 + 4 * n)
    if s * s != 1 + 4 * n or (1 + s) % 2:
        return None
    d = (1 + s) // 2
    return d if d >= 3 else None


def to_affine(p):
    """Homogeneous ternary (x, y, z) -> affine (x, y) at z = 1."""
    q = p.dehomogenize("z")
    return MPoly(AFF, {(e[0], e[1]): c for e, c in q.terms.items()})


def from_affine(p, degree):
    """Affine (x, y) -> homogeneous ternary of the given degree."""
    out = {}
    for e, c in p.terms.items():
        k = degree - e[0] - e[1]
        if k < 0:
            raise PolyError("degree too small to homogenize")
        out[(e[0], e[1], k)] = c
    return MPoly(PLANE, out)


def _ylists(p):
    """Affine bivariate -> list over y-degree of x-coefficient lists."""
    d = p.degree_in("y")
    out = []
    for k in range(d + 1):
        c = p.coefficient_in("y", k)
        out.append(up.from_mpoly(c, "x") if not c.is_zero() else [])
    return out


def _sqf_by_multiplicity(p, allowed, what):
    """Squarefree split of a univariate MPoly keyed by multiplicity."""
    parts = {}
    for f, m in squarefree_decomposition(p):
        if m not in allowed:
            raise NonGoodInput(
                f"unexpected multiplicity {m} in {what} (expected {sorted(allowed)})"
            )
        parts[m] = up.from_mpoly(f, "x")
    return parts


def _pair_clusters(curve_ylists, other_ylists, modulus, expect_deg, what):
    """Shape clusters over the roots of `modulus`, paired by modular gcd.

    Splits the modulus when the gcd computation meets a zero divisor, so
    several clusters may come back.  `expect_deg` is the required y-degree
    of the gcd (1, or 2 for triple points where the fiber root is double).
    """
    out = []
    stack = [up.content_int(modulus)]
    while stack:
        m = stack.pop()
        if up.deg(m) == 0:
            continue
        try:
            g = up.gcd_mod(curve_ylists, other_ylists, m)
        except up.SplitNeeded as s:
            f1 = up.content_int(s.factor)
            f2 = up.content_int(up.divmod_poly(m, s.factor)[0])
            stack.extend([f1, f2])
            continue
        if len(g) - 1 != expect_deg:
            raise GenericityFailure(f"{what}: fiber gcd degree {len(g) - 1} != {expect_deg}")
        if expect_deg == 1:
            rho = up.rem(up.neg(g[0]), m)
        else:
            # expect (y - rho)^k: read rho off the subleading coefficient
            rho = up.rem(up.scale(up.neg(g[-2]), Fraction(1, expect_deg)), m)
            check = [up.rem(c, m) for c in _binom_power(rho, expect_deg, m)]
            gc = [up.rem(c, m) for c in g]
            if any(up.trim(up.sub(a, b)) for a, b in zip(check, gc)):
                raise GenericityFailure(f"{what}: fiber gcd is not a perfect power")
        out.append(ZeroDimCluster.from_shape(m, rho))
    out.sort(key=lambda c: (c.cardinality, str(c.eliminant_x)))
    return out


def _binom_power(rho, k, m):
    """Coefficients in y of (y - rho)^k, each a unipoly in x."""
    # start with (y - rho)
    poly = [up.neg(rho), [Fraction(1)]]
    for _ in range(k - 1):
        new = [[] for _ in range(len(poly) + 1)]
        for i, c in enumerate(poly):
            new[i] = up.rem(up.add(new[i], up.mul(c, up.neg(rho))), m)
            new[i + 1] = up.add(new[i + 1], c)
        poly = new
    return poly


def _eval_mod_cluster(p, cluster):
    """Image of an affine bivariate polynomial in Q[x]/(phi) via y -> rho."""
    phi, rho = cluster.shape
    yl = _ylists(p)
    acc = []
    for c in reversed(yl):
        acc = up.rem(up.add(up.mul(acc, rho), c), phi)
    return acc


def _require_zero_mod(p, cluster, what):
    if up.trim(_eval_mod_cluster(p, cluster)):
        raise GenericityFailure(f"{what}: expected vanishing on cluster")


def _require_invertible_mod(p, cluster, what):
    phi, _ = cluster.shape
    img = _eval_mod_cluster(p, cluster)
    if up.deg(up.gcd_poly(img, phi)) != 0:
        raise GenericityFailure(f"{what}: expected invertibility on cluster")


def _random_matrix(rng):
    while True:
        m = [[Fraction(rng.randint(-4, 4)) for _ in range(3)] for _ in range(3)]
        if QMatrix(m).rank() == 3:
            return m


def _pairwise_coprime(polys):
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if up.deg(up.gcd_poly(polys[i], polys[j])) != 0:
                return False
    return True


def split_fat_silhouette(D):
    """D -> (U, V) with D proportional to U^2 V, both squarefree coprime."""
    parts = dict()
    for f, m in squarefree_decomposition(D):
        if m not in (1, 2):
            raise NonGoodInput(f"fat silhouette has a multiplicity-{m} component")
        parts[m] = f
    U = parts.get(2, MPoly.const(D.vars, 1))
    V = parts.get(1)
    if V is None:
        raise NonGoodInput("fat silhouette has no reduced part (proper silhouette missing)")
    return U.primitive(), V.primitive()


def analyze(D, seed=0, pair=None, retries=8):
    """Analyze a fat silhouette into typed special-point clusters.

    `D` is a homogeneous ternary polynomial of degree d(d-1); alternatively
    `pair=(U, V)` supplies the two components directly and bypasses the
    squarefree decomposition.
    """
    if set(D.vars) != set(PLANE):
        raise NonGoodInput("silhouette must be a polynomial in x, y, z")
    if not D.is_homogeneous() or D.is_zero():
        raise NonGoodInput("silhouette must be nonzero homogeneous")
    d = _surface_degree(D.degree())
    if d is None:
        raise NonGoodInput(f"degree {D.degree()} is not d(d-1) for an integer d >= 3")
    if pair is not None:
        U, V = pair
        U, V = U.primitive(), V.primitive()
    else:
        U, V = split_fat_silhouette(D)
    u, v = max(U.degree(), 0), V.degree()
    if 2 * u + v != d * (d - 1):
        raise NonGoodInput("component degrees do not fit 2 deg U + deg V = d(d-1)")

    rng = random.Random(seed)
    last = None
    for _ in range(retries):
        m3 = _random_matrix(rng)
        try:
            return _analyze_chart(D, U, V, d, m3, seed)
        except GenericityFailure as g:
            last = g
            continue
    raise NonGoodInput(f"genericity retries exhausted: {last}")


def _analyze_chart(D, U, V, d, m3, seed):
    u, v = max(U.degree(), 0), V.degree()
    Uc = U.coordinate_change(m3).primitive() if u else U
    Vc = V.coordinate_change(m3).primitive()
    Ua = to_affine(Uc) if u else MPoly.const(AFF, 1)
    Va = to_affine(Vc)
    if Va.degree_in("y") != v:
        raise GenericityFailure("V passes through (0:1:0)")
    if u and Ua.degree_in("y") != u:
        raise GenericityFailure("U passes through (0:1:0)")

    clusters = []

    # nodes and cusps of the proper silhouette
    discV = resultant_var(Va, Va.diff("y"), "y").primitive()
    if discV.is_zero():
        raise NonGoodInput("disc of proper silhouette vanishes (V not squarefree?)")
    if discV.degree_in("x") != v * (v - 1):
        raise GenericityFailure("branch points of V at infinity")
    partsV = _sqf_by_multiplicity(discV, {1, 2, 3}, "disc(V)")
    Vy = _ylists(Va)
    Vyp = _ylists(Va.diff("y"))
    Vx = Va.diff("x")
    node_b = []
    if 2 in partsV:
        node_b = _pair_clusters(Vy, Vyp, partsV[2], 1, "nodes of B")
    cusp_b = []
    if 3 in partsV:
        cusp_b = _pair_clusters(Vy, Vyp, partsV[3], 1, "cusps of B")
    hessV = Va.diff("x").diff("x") * Va.diff("y").diff("y") - Va.diff("x").diff("y") ** 2
    for c in node_b:
        _require_zero_mod(Vx, c, "node of B singular")
        _require_invertible_mod(hessV, c, "node of B nondegenerate")
        clusters.append((c, SpecialPointType.NODE_B))
    for c in cusp_b:
        _require_zero_mod(Vx, c, "cusp of B singular")
        _require_zero_mod(hessV, c, "cusp of B degenerate Hessian")
        clusters.append((c, SpecialPointType.CUSP_B))

    # nodes and triple points of the singular image
    if u >= 2:
        discU = resultant_var(Ua, Ua.diff("y"), "y").primitive()
        if discU.is_zero():
            raise NonGoodInput("disc of singular image vanishes")
        if discU.degree_in("x") != u * (u - 1):
            raise GenericityFailure("branch points of U at infinity")
        partsU = _sqf_by_multiplicity(discU, {1, 2, 6}, "disc(U)")
        Uy = _ylists(Ua)
        Uyp = _ylists(Ua.diff("y"))
        Ux = Ua.diff("x")
        hessU = Ua.diff("x").diff("x") * Ua.diff("y").diff("y") - Ua.diff("x").diff("y") ** 2
        if 2 in partsU:
            for c in _pair_clusters(Uy, Uyp, partsU[2], 1, "nodes of W"):
                _require_zero_mod(Ux, c, "node of W singular")
                _require_invertible_mod(hessU, c, "node of W nondegenerate")
                clusters.append((c, SpecialPointType.NODE_W))
        if 6 in partsU:
            for c in _pair_clusters(Uy, Uyp, partsU[6], 2, "triple points of W"):
                _require_zero_mod(Ux, c, "triple point of W singular")
                clusters.append((c, SpecialPointType.TRIPLE_W))
    else:
        partsU = {}

    # intersections of the two components
    if u >= 1:
        resUV = resultant_var(Ua, Va, "y").primitive()
        if resUV.degree_in("x") != u * v:
            raise GenericityFailure("intersection points at infinity")
        partsR = _sqf_by_multiplicity(resUV, {1, 2}, "res(U, V)")
        Uy = _ylists(Ua)
        Vy2 = _ylists(Va)
        if 1 in partsR:
            for c in _pair_clusters(Uy, Vy2, partsR[1], 1, "transversal intersections"):
                clusters.append((c, SpecialPointType.TRANSVERSAL))
        if 2 in partsR:
            for c in _pair_clusters(Uy, Vy2, partsR[2], 1, "tangential intersections"):
                clusters.append((c, SpecialPointType.TANGENTIAL))
    else:
        partsR = {}

    # all special x-coordinates must be globally distinct
    eliminants = [up.from_mpoly(c.eliminant_x, "x") for c, _ in clusters]
    if not _pairwise_coprime(eliminants):
        raise GenericityFailure("special points share an x-coordinate")

    counts = {t.value: 0 for t in (
        SpecialPointType.NODE_B,
        SpecialPointType.CUSP_B,
        SpecialPointType.NODE_W,
        SpecialPointType.TRIPLE_W,
        SpecialPointType.TANGENTIAL,
        SpecialPointType.TRANSVERSAL,
    )}
    for c, t in clusters:
        counts[t.value] += c.cardinality

    data = SilhouetteData(
        D=D,
        U=Uc if u else MPoly.const(PLANE, 1),
        V=Vc,
        d=d,
        clusters=clusters,
        matrix=m3,
        seed=seed,
        counts=counts,
        U_aff=Ua,
        V_aff=Va,
    )
    return data


def split_transversal_classes(data):
    """Split provisional transversal clusters into Q-irreducible classes."""
    classes = []
    for c, t in data.clusters:
        if t is not SpecialPointType.TRANSVERSAL:
            continue
        for f, m in univariate_factor(c.eliminant_x):
            if m != 1:
                raise NonGoodInput("transversal eliminant not squarefree")
            classes.append(_split_by(c, f))
    classes.sort(key=lambda cl: (cl.cardinality, str(cl.eliminant_x)))
    data.transversal_classes = classes
    return classes


def _split_by(cluster, factor):
    from .zerodim import split_cluster

    return split_cluster(cluster, factor)
