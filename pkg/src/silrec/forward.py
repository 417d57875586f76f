"""Forward direction: surface and center -> silhouette, plus fixtures.

Given a quaternary form F and a projection center off the surface, the
fat silhouette is the primitive associate of Res_w(F, dF/dw) after moving
the center to (0:0:0:1).  Fixture surfaces (the cubic family, a quartic
with a singular conic, the Roman surface, seeded random smooth surfaces)
drive tests and the acceptance suite.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .linalg import QMatrix
from .modp import irrelevant_modp
from .mpoly import MPoly, PolyError, parse_poly
from .polytools import resultant_var
from .zerodim import PLANE

P3 = ("x", "y", "z", "w")


class CenterOnSurface(PolyError):
    pass


class ProjectionCenter:
    """Homogeneous coordinates of the projection center, not all zero."""

    def __init__(self, coords):
        self.coords = tuple(Fraction(c) for c in coords)
        if len(self.coords) != 4 or all(c == 0 for c in self.coords):
            raise PolyError("center needs 4 homogeneous coordinates, not all zero")

    def __repr__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"


def center_matrix(p):
    """Invertible matrix whose last column is the center; the complement
    columns are the standard basis vectors away from the center's largest
    coordinate, so the image plane is a coordinate plane."""
    coords = p.coords
    j = max(range(4), key=lambda i: (abs(coords[i]), i))
    cols = [[Fraction(int(i == k)) for i in range(4)] for k in range(4) if k != j]
    cols.append(list(coords))
    return [[cols[c][r] for c in range(4)] for r in range(4)]


def move_center(F, p):
    """Linear change of P^3 coordinates taking the center to (0:0:0:1);
    the projection becomes (x:y:z:w) -> (x:y:z)."""
    if not isinstance(p, ProjectionCenter):
        p = ProjectionCenter(p)
    if F.evaluate(p.coords) == 0:
        raise CenterOnSurface(f"center {p} lies on the surface")
    m = center_matrix(p)
    return F.coordinate_change(m).primitive()


def discriminant_surface(F):
    """Fat silhouette: primitive associate of Res_w(F, dF/dw), ternary.

    Requires a recentered surface (constant nonzero coefficient of w^d).
    """
    d = F.degree()
    lead = F.coefficient_in("w", d)
    if lead.is_zero() or not lead.is_constant():
        raise CenterOnSurface("surface not recentered: coefficient of w^d must be a nonzero constant")
    Fw = F.diff("w")
    D = resultant_var(F, Fw, "w")
    if D.is_zero():
        raise PolyError("discriminant vanishes identically (non-reduced surface)")
    D = D.primitive()
    return MPoly(PLANE, {(e[0], e[1], e[2]): c for e, c in D.terms.items()})


def fat_contour_ideal(F):
    """The ideal (F, dF/dw) in four variables."""
    from .groebner import Ideal

    return Ideal(P3, [F, F.diff("w")])


# -- fixtures -------------------------------------------------------------------


def cubic_surface(A, B):
    """w^3 + A(x,y,z) w + B(x,y,z) for ternary forms A (deg 2), B (deg 3)."""
    A4 = A.extend(P3) if A.vars != P3 else A
    B4 = B.extend(P3) if B.vars != P3 else B
    w = MPoly.var(P3, "w")
    return w**3 + A4 * w + B4


DEL_PEZZO_EQUATION = "(x^2 + y^2 - w^2)^2 - z^2*(x^2 - y^2) + z^4"
DEL_PEZZO_CENTER = (Fraction(2987, 918), Fraction(58, 33), Fraction(29, 6), Fraction(1))

STEINER_EQUATION = "x^2*y^2 + x^2*z^2 + y^2*z^2 + x*y*z*w"
# The classical Roman-surface equation vanishes at (0:0:0:1) (the triple
# point), so the projection must come from elsewhere; this center gives a
# good projection with the expected special-point counts.
STEINER_CENTER = (Fraction(3), Fraction(5), Fraction(7), Fraction(11))

SMOOTH_CERT_PRIMES = (1000003, 999983, 1000033)


def random_ternary(degree, rng, bound=9, vars=PLANE):
    terms = {}
    for a in range(degree + 1):
        for b in range(degree - a + 1):
            c = degree - a - b
            terms[(a, b, c)] = Fraction(rng.randint(-bound, bound))
    return MPoly(vars, terms)


def random_cubic(seed):
    rng = random.Random(seed)
    while True:
        A = random_ternary(2, rng)
        B = random_ternary(3, rng)
        if not A.is_zero() and not B.is_zero():
            return cubic_surface(A, B)


def is_smooth_surface(F):
    """Certify smoothness: the Jacobian ideal is irrelevant.

    Checked modulo a large prime; emptiness of the projective singular
    scheme mod p implies emptiness over Q because the scheme is projective
    over the integers.  A singular surface can never pass; a smooth one
    passes for all but finitely many primes, so a False may be retried
    with another prime.
    """
    partials = [F.diff(v) for v in P3]
    return any(irrelevant_modp(partials, q) for q in SMOOTH_CERT_PRIMES)


def random_smooth_surface(d, seed, bound=9, tries=20):
    """Seeded random smooth surface of degree d, monic in w."""
    rng = random.Random(seed)
    w = MPoly.var(P3, "w")
    for _ in range(tries):
        terms = {}
        for a in range(d + 1):
            for b in range(d - a + 1):
                for c in range(d - a - b + 1):
                    e = (a, b, c, d - a - b - c)
                    terms[e] = Fraction(rng.randint(-bound, bound))
        terms[(0, 0, 0, d)] = Fraction(1)
        F = MPoly(P3, terms)
        if is_smooth_surface(F):
            return F
    raise PolyError(f"no smooth surface found in {tries} tries (seed {seed})")


def fixtures():
    """Named paper surfaces with their projection centers."""
    tsch = cubic_surface(parse_poly("x", PLANE), parse_poly("y", PLANE))
    return {
        "cubic": (tsch, ProjectionCenter((0, 0, 0, 1))),
        "delpezzo": (parse_poly(DEL_PEZZO_EQUATION, P3), ProjectionCenter(DEL_PEZZO_CENTER)),
        "steiner": (parse_poly(STEINER_EQUATION, P3), ProjectionCenter(STEINER_CENTER)),
    }
