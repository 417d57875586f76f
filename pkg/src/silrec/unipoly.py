"""Dense univariate polynomial helpers over Q.

Polynomials are lists of Fractions, constant term first, with no trailing
zeros (the zero polynomial is the empty list).  These are internal working
objects for eliminants, modular pairing and verification; the public
currency of the package stays MPoly.
"""

from __future__ import annotations

from fractions import Fraction

from .mpoly import MPoly, PolyError


class SplitNeeded(PolyError):
    """Raised when arithmetic modulo m(x) hits a zero divisor.

    Carries a nontrivial factor of the modulus so the caller can split the
    computation over the coprime factors (D5 style).
    """

    def __init__(self, factor):
        super().__init__("zero divisor encountered; modulus splits")
        self.factor = factor


def trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def deg(p):
    return len(p) - 1


def from_mpoly(p, name):
    """Coefficient list of an MPoly that uses only the variable `name`."""
    i = p._vindex(name)
    for e in p.terms:
        if any(k and j != i for j, k in enumerate(e)):
            raise PolyError(f"polynomial is not univariate in {name!r}")
    out = [Fraction(0)] * (p.degree_in(name) + 1)
    for e, c in p.terms.items():
        out[e[i]] = c
    return trim(out)

def to_mpoly(p, vars, name):
    vars = tuple(vars)
    i = vars.index(name)
    terms = {}
    for k, c in enumerate(p):
        if c:
            e = [0] * len(vars)
            e[i] = k
            terms[tuple(e)] = c
    return MPoly(vars, terms)


def add(p, q):
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def neg(p):
    return [-c for c in p]


def sub(p, q):
    return add(p, neg(q))


def mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def scale(p, c):
    c = Fraction(c)
    if c == 0:
        return []
    return [a * c for a in p]


def divmod_poly(p, d):
    if not d:
        raise PolyError("univariate division by zero")
    p = list(p)
    q = [Fraction(0)] * max(0, len(p) - len(d) + 1)
    lead = d[-1]
    for i in range(len(p) - len(d), -1, -1):
        c = p[i + len(d) - 1] / lead
        if c == 0:
            continue
        q[i] = c
        for j, b in enumerate(d):
            p[i + j] -= c * b
    return trim(q), trim(p)


def rem(p, d):
    return divmod_poly(p, d)[1]


def monic(p):
    if not p:
        return p
    lead = p[-1]
    return [c / lead for c in p]


def gcd_poly(p, q):
    """Monic gcd over Q."""
    a, b = list(p), list(q)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def squarefree_part(p):
    if deg(p) <= 0:
        return monic(p)
    return monic(divmod_poly(p, gcd_poly(p, derivative(p)))[0])


def derivative(p):
    return trim([c * i for i, c in enumerate(p)][1:])


def evaluate(p, x):
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def content_int(p):
    """Clear denominators and content: primitive integer coefficient list."""
    from math import gcd as igcd

    if not p:
        return []
    den = 1
    for c in p:
        den = den * c.denominator // igcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = igcd(g, c)
    if ints[-1] < 0:
        g = -g
    return [Fraction(c // g) for c in ints]


# -- arithmetic modulo a squarefree modulus m(x) -------------------------------


def mod_inverse(a, m):
    """Inverse of a modulo m; raises SplitNeeded(g) when gcd(a, m) = g != 1."""
    g, s = _half_xgcd(a, m)
    if deg(g) != 0:
        raise SplitNeeded(monic(g))
    return scale(rem(s, m), 1 / g[0])


def _half_xgcd(a, b):
    """(g, s) with g = gcd and s*a = g mod b."""
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
    return r0, s0


def gcd_mod(f, g, m):
    """Monic gcd of f, g in (Q[x]/m)[y] where f, g are lists of Q[x]-coeffs.

    f, g are dense in y: f[j] is the Q[x] coefficient of y^j, itself a
    coefficient list.  Raises SplitNeeded when a leading coefficient is a
    zero divisor mod m, carrying the discovered factor of m.
    """

    def yrem(p, d):
        # remainder of p by d in y, coefficients reduced mod m; d monic-izable
        dlead_inv = mod_inverse(d[-1], m)
        p = [rem(c, m) for c in p]
        d = [rem(mul(c, dlead_inv), m) for c in d]
        while len(p) >= len(d) and p:
            c = p[-1]
            if not c:
                p.pop()
                continue
            shift = len(p) - len(d)
            for j in range(len(d) - 1):
                p[shift + j] = rem(sub(p[shift + j], mul(c, d[j])), m)
            p.pop()
            while p and not p[-1]:
                p.pop()
        return p

    a = [rem(c, m) for c in f]
    b = [rem(c, m) for c in g]
    while b and not b[-1]:
        b.pop()
    while a and not a[-1]:
        a.pop()
    while b:
        a, b = b, yrem(a, b)
        while b and not b[-1]:
            b.pop()
    if not a:
        return []
    lead_inv = mod_inverse(a[-1], m)
    return [rem(mul(c, lead_inv), m) for c in a]
