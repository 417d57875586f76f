"""Zero-dimensional ideals in two affine variables.

Clusters of special points are Galois-stable finite point sets represented
by radical ideals over Q.  After a generic coordinate change every cluster
admits a shape basis (phi(x), y - rho(x)); local vanishing conditions are
then imposed through finite quotient algebras, either generically (Groebner
staircase) or through a fast truncated algebra attached to the shape basis.
"""

from __future__ import annotations

from fractions import Fraction

from . import unipoly as up
from .groebner import GroebnerBasis, Ideal, buchberger, normal_form
from .linalg import QMatrix, Subspace, kernel
from .mpoly import GREVLEX, MPoly, PolyError

AFF = ("x", "y")
PLANE = ("x", "y", "z")


class NotZeroDimensional(PolyError):
    pass


def ternary_monomials(e):
    """Degree-e exponents over (x, y, z), grevlex descending (deterministic)."""
    exps = [
        (a, b, e - a - b)
        for a in range(e, -1, -1)
        for b in range(e - a, -1, -1)
    ]
    exps.sort(key=GREVLEX.key, reverse=True)
    return exps


def form_from_vector(vec, e, vars=PLANE):
    exps = ternary_monomials(e)
    return MPoly(vars, {exp: c for exp, c in zip(exps, vec) if c != 0})


class ZeroDimCluster:
    """A radical zero-dimensional ideal holding a Galois-stable point set.

    `shape` optionally carries (phi, rho) coefficient lists with
    ideal = (phi(x), y - rho(x)), phi squarefree, deg rho < deg phi.
    """

    def __init__(self, ideal, eliminant_x, cardinality, radical=True, shape=None):
        self.ideal = ideal
        self.eliminant_x = eliminant_x
        self.cardinality = cardinality
        self.radical = radical
        self.shape = shape

    @staticmethod
    def from_shape(phi, rho, vars=AFF):
        """Cluster from a shape basis given as unipoly coefficient lists."""
        phi = up.content_int(phi)
        rho = up.rem(rho, phi)
        px = up.to_mpoly(phi, vars, "x")
        gen2 = MPoly.var(vars, "y") - up.to_mpoly(rho, vars, "x")
        ideal = Ideal(vars, [px, gen2])
        return ZeroDimCluster(ideal, px, up.deg(phi), radical=True, shape=(phi, rho))

    def __repr__(self):
        return f"ZeroDimCluster(card {self.cardinality}, eliminant {self.eliminant_x})"


def eliminant(ideal, var):
    """Generator of I n Q[var] for a zero-dimensional ideal.

    Computed through a lex Groebner basis with `var` last; raises
    NotZeroDimensional when the elimination ideal is zero.
    """
    n = len(ideal.vars)
    i = ideal.vars.index(var)
    perm = [j for j in range(n) if j != i] + [i]
    from .mpoly import MonomialOrder

    gb = buchberger(ideal, MonomialOrder("lex", perm=perm))
    best = None
    for g in gb.elements:
        if all(all(e[j] == 0 for j in range(n) if j != i) for e in g.terms):
            if best is None or g.degree_in(var) < best.degree_in(var):
                best = g
    if best is None or best.is_zero():
        raise NotZeroDimensional(f"elimination ideal in {var!r} is zero")
    return best.primitive()


def radical_zero_dim(ideal):
    """Radical of a zero-dimensional ideal (Seidenberg: add squarefree
    parts of the eliminants in each variable)."""
    gens = list(ideal.gens)
    for v in ideal.vars:
        e = eliminant(ideal, v)
        coeffs = up.from_mpoly(e, v)
        sf = up.squarefree_part(coeffs)
        gens.append(up.to_mpoly(sf, ideal.vars, v))
    return Ideal(ideal.vars, gens)


def split_cluster(cluster, factor):
    """Sub-cluster of points whose x-coordinate is a root of `factor`."""
    fl = up.from_mpoly(factor, "x")
    phi = up.from_mpoly(cluster.eliminant_x, "x")
    if up.rem(phi, fl):
        raise PolyError("factor does not divide the cluster eliminant")
    if cluster.shape is not None:
        _, rho = cluster.shape
        return ZeroDimCluster.from_shape(fl, up.rem(rho, fl), cluster.ideal.vars)
    gens = list(cluster.ideal.gens) + [factor]
    ideal = Ideal(cluster.ideal.vars, gens)
    el = up.to_mpoly(up.content_int(fl), cluster.ideal.vars, "x")
    return ZeroDimCluster(ideal, el, up.deg(fl), radical=cluster.radical)


class QuotientAlgebra:
    """Finite quotient Q[vars]/I with a staircase monomial basis."""

    def __init__(self, ideal, gb=None):
        self.ideal = ideal
        self.gb = gb if gb is not None else buchberger(ideal, GREVLEX)
        leads = [g.leading(GREVLEX)[0] for g in self.gb.elements]
        n = len(ideal.vars)
        if any(c.is_constant() and not c.is_zero() for c in self.gb.elements):
            self.basis = []
            self._index = {}
            return
        # the staircase must be finite in every variable
        bounds = []
        for i in range(n):
            pure = [e[i] for e in leads if all(e[j] == 0 for j in range(n) if j != i)]
            if not pure:
                raise NotZeroDimensional("quotient algebra is infinite dimensional")
            bounds.append(min(pure))
        basis = []

        def rec(prefix):
            if len(prefix) == n:
                e = tuple(prefix)
                if not any(all(le[j] <= e[j] for j in range(n)) for le in leads):
                    basis.append(e)
                return
            for k in range(bounds[len(prefix)]):
                rec(prefix + [k])

        rec([])
        basis.sort(key=GREVLEX.key)
        self.basis = basis
        self._index = {e: i for i, e in enumerate(basis)}

    @property
    def dim(self):
        return len(self.basis)

    def reduce_vector(self, p):
        """Coordinates of p's image in the quotient, in the monomial basis."""
        nf = normal_form(p, self.gb)
        vec = [Fraction(0)] * self.dim
        for e, c in nf.terms.items():
            vec[self._index[e]] = c
        return vec


class LocalAlgebra:
    """Truncation Q[x,y] / (phi, y-rho)^N for a shape-basis cluster.

    Elements are lists c[0..N-1] of univariate coefficient lists, where the
    class of a polynomial is sum_j c_j(x) * (y-rho)^j with c_j reduced
    modulo phi^(N-j).
    """

    def __init__(self, phi, rho, N):
        self.phi = list(phi)
        self.rho = list(rho)
        self.N = N
        self.phi_pows = [[Fraction(1)]]
        for _ in range(N):
            self.phi_pows.append(up.mul(self.phi_pows[-1], self.phi))
        self.block_dims = [up.deg(phi) * (N - j) for j in range(N)]
        self.dim = sum(self.block_dims)

    def zero(self):
        return [[] for _ in range(self.N)]

    def one(self):
        e = self.zero()
        e[0] = [Fraction(1)]
        return e

    def x_elem(self):
        e = self.zero()
        e[0] = [Fraction(0), Fraction(1)]
        e[0] = up.rem(e[0], self.phi_pows[self.N])
        return e

    def y_elem(self):
        e = self.zero()
        e[0] = up.rem(list(self.rho), self.phi_pows[self.N])
        if self.N > 1:
            e[1] = [Fraction(1)]
        return e

    def add(self, a, b):
        return [up.rem(up.add(a[j], b[j]), self.phi_pows[self.N - j]) for j in range(self.N)]

    def mul(self, a, b):
        out = self.zero()
        for s in range(self.N):
            if not a[s]:
                continue
            for t in range(self.N - s):
                if not b[t]:
                    continue
                j = s + t
                out[j] = up.add(out[j], up.mul(a[s], b[t]))
        return [up.rem(out[j], self.phi_pows[self.N - j]) for j in range(self.N)]

    def embed(self, p):
        """Image of an MPoly using variables x and (optionally) y."""
        xi = p.vars.index("x")
        yi = p.vars.index("y") if "y" in p.vars else None
        ycoeffs = {}
        for e, c in p.terms.items():
            ydeg = e[yi] if yi is not None else 0
            ycoeffs.setdefault(ydeg, {})
            d = ycoeffs[ydeg]
            d[e[xi]] = d.get(e[xi], Fraction(0)) + c
        result = self.zero()
        ye = self.y_elem()
        ypow = self.one()
        last = 0
        for k in sorted(ycoeffs):
            for _ in range(k - last):
                ypow = self.mul(ypow, ye)
            last = k
            cx = ycoeffs[k]
            cl = [Fraction(0)] * (max(cx) + 1)
            for i, c in cx.items():
                cl[i] = c
            celem = self.zero()
            celem[0] = up.rem(up.trim(cl), self.phi_pows[self.N])
            result = self.add(result, self.mul(celem, ypow))
        return result

    def vector(self, a):
        vec = []
        for j in range(self.N):
            c = a[j]
            block = [Fraction(0)] * self.block_dims[j]
            for i, v in enumerate(c):
                block[i] = v
            vec.extend(block)
        return vec

    def basis_elements(self):
        out = []
        for j in range(self.N):
            for i in range(self.block_dims[j]):
                e = self.zero()
                e[j] = [Fraction(0)] * i + [Fraction(1)]
                out.append(e)
        return out


def _power_ideal_gens(gens, N):
    if N <= 1:
        return list(gens)
    frontier = [MPoly.const(gens[0].vars, 1)]
    for _ in range(N):
        frontier = sorted(
            {f * g for f in frontier for g in gens},
            key=lambda q: sorted(q.terms),
        )
    return list(frontier)


def condition_rows(local_gens, cluster, N, e, use_shape=True):
    """Rows of the linear map whose kernel is the space of degree-e forms
    lying in (local_gens) + P^N; columns indexed by ternary_monomials(e).

    The fast path uses the cluster's shape basis (truncated local algebra);
    the generic path reduces through the Groebner staircase of the quotient
    algebra.  Both realize the same membership test.
    """
    exps = ternary_monomials(e)
    if use_shape and cluster.shape is not None:
        phi, rho = cluster.shape
        A = LocalAlgebra(phi, rho, N)
        rows = []
        basis = A.basis_elements()
        for g in local_gens:
            gi = A.embed(g)
            for b in basis:
                rows.append(A.vector(A.mul(gi, b)))
        R = Subspace(A.dim, rows)
        xe = A.x_elem()
        ye = A.y_elem()
        xpows = [A.one()]
        ypows = [A.one()]
        for _ in range(e):
            xpows.append(A.mul(xpows[-1], xe))
            ypows.append(A.mul(ypows[-1], ye))
        cols = [R.reduce(A.vector(A.mul(xpows[a], ypows[b]))) for (a, b, _c) in exps]
        return [[cols[j][i] for j in range(len(cols))] for i in range(A.dim)]
    # generic route: quotient algebra of (local_gens) + P^N
    vars = cluster.ideal.vars
    gens = [g if g.vars == vars else g.extend(vars) for g in local_gens]
    pn = _power_ideal_gens(list(cluster.ideal.gens), N)
    alg = QuotientAlgebra(Ideal(vars, gens + pn))
    if alg.dim == 0:
        return []
    x = MPoly.var(vars, "x")
    y = MPoly.var(vars, "y")
    cols = [alg.reduce_vector(x**a * y**b) for (a, b, _c) in exps]
    return [[cols[j][i] for j in range(len(cols))] for i in range(alg.dim)]


def membership_conditions(local_gens, cluster, N, e, use_shape=True):
    """Subspace of ternary degree-e forms whose dehomogenization lies in
    (local_gens) + P^N, where P is the cluster's radical ideal."""
    exps = ternary_monomials(e)
    rows = condition_rows(local_gens, cluster, N, e, use_shape)
    rows = [r for r in rows if any(c != 0 for c in r)]
    if not rows:
        n = len(exps)
        return Subspace(n, [[Fraction(int(i == j)) for j in range(n)] for i in range(n)])
    return kernel(QMatrix(rows))
