"""Higher polynomial operations: gcd, squarefree split, resultants, factoring.

The resultant is computed by the subresultant PRS (Cohen's sub-resultant
algorithm) with polynomial coefficients; a naive Sylvester determinant is
kept alongside as the agreement oracle.  Univariate factorization over Q is
delegated to sympy.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import det_bareiss
from .mpoly import GREVLEX, MPoly, PolyError, exact_div


def coeff_list(p, name):
    """Coefficients of p as a polynomial in `name` (each free of `name`)."""
    d = p.degree_in(name)
    return [p.coefficient_in(name, k) for k in range(d + 1)]


def from_coeff_list(coeffs, name):
    vars = coeffs[0].vars
    v = MPoly.var(vars, name)
    out = MPoly.zero(vars)
    for k, c in enumerate(coeffs):
        out = out + c * v**k
    return out


def _pseudo_rem(A, B):
    """Pseudo-remainder of coefficient lists: lc(B)^(dA-dB+1) A = Q B + R."""
    dA, dB = len(A) - 1, len(B) - 1
    lc = B[-1]
    R = list(A)
    steps = dA - dB + 1
    while len(R) - 1 >= dB and any(not c.is_zero() for c in R):
        while R and R[-1].is_zero():
            R.pop()
        if len(R) - 1 < dB:
            break
        dR = len(R) - 1
        top = R[-1]
        R = [c * lc for c in R]
        shift = dR - dB
        for j in range(dB + 1):
            R[shift + j] = R[shift + j] - top * B[j]
        R.pop()
        steps -= 1
        while R and R[-1].is_zero():
            R.pop()
    zero = lc - lc
    for _ in range(max(0, steps)):
        R = [c * lc for c in R]
    return R if R else [zero]


def _trim(coeffs):
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def resultant_var(p, q, name):
    """Resultant of p and q as polynomials in `name`; exact subresultant PRS."""
    dp, dq = p.degree_in(name), q.degree_in(name)
    if dp <= 0 or dq <= 0:
        raise PolyError(f"resultant needs positive degree in {name!r}")
    # rational content out front keeps the PRS over integer coefficients
    cp, cq = p.content(), q.content()
    A = _trim(coeff_list(p * (1 / cp), name))
    B = _trim(coeff_list(q * (1 / cq), name))
    t = MPoly.const(p.vars, cp**dq * cq**dp)
    s = 1
    if len(A) < len(B):
        A, B = B, A
        if (dp % 2) and (dq % 2):
            s = -s
    g = MPoly.const(p.vars, 1)
    h = MPoly.const(p.vars, 1)
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        delta = dA - dB
        if (dA % 2) and (dB % 2):
            s = -s
        R = _trim(_pseudo_rem(A, B))
        A = B
        denom = g * h**delta
        B = [exact_div(c, denom) for c in R] if R else []
        g = A[-1]
        if delta > 0:
            h = exact_div(g**delta, h ** (delta - 1))
        if not B:
            return MPoly.zero(p.vars)
        if len(B) - 1 == 0:
            dA = len(A) - 1
            h = exact_div(B[0] ** dA, h ** (dA - 1)) if dA > 0 else MPoly.const(p.vars, 1)
            return t * h * s


def resultant_sylvester(p, q, name):
    """Resultant via the Sylvester determinant (oracle for the PRS route)."""
    dp, dq = p.degree_in(name), q.degree_in(name)
    if dp <= 0 or dq <= 0:
        raise PolyError(f"resultant needs positive degree in {name!r}")
    A = coeff_list(p, name)
    B = coeff_list(q, name)
    n = dp + dq
    zero = MPoly.zero(p.vars)
    rows = []
    for i in range(dq):
        row = [zero] * n
        for k, c in enumerate(A):
            row[i + dp - k] = c
        rows.append(row)
    for i in range(dp):
        row = [zero] * n
        for k, c in enumerate(B):
            row[i + dq - k] = c
        rows.append(row)
    return det_bareiss(
        rows,
        mul=lambda a, b: a * b,
        sub=lambda a, b: a - b,
        div=exact_div,
        is_zero=lambda a: a.is_zero(),
        one=MPoly.const(p.vars, 1),
    )


def discriminant(p, name):
    """Primitive associate of Res_name(p, dp/dname)."""
    d = p.diff(name)
    if d.is_zero():
        raise PolyError(f"polynomial is constant in {name!r}")
    if d.degree_in(name) == 0:
        # degree 1 in name: no critical points, discriminant is a constant
        return MPoly.const(p.vars, 1)
    return resultant_var(p, d, name).primitive()


# -- gcd and squarefree decomposition ------------------------------------------


def _gcd_prs(A, B):
    """Primitive PRS gcd of primitive coefficient lists (positive length)."""
    while True:
        if len(B) - 1 == 0:
            return None  # coprime up to content
        R = _trim(_pseudo_rem(A, B))
        if not R:
            return B
        A, B = B, _primitive_list(R)


def _primitive_list(coeffs):
    g = None
    for c in coeffs:
        if c.is_zero():
            continue
        g = c if g is None else gcd_multivariate(g, c)
        if g.is_constant():
            break
    if g is None:
        return coeffs
    if g.is_constant():
        inv = 1 / g.constant_value()
        return [c * inv for c in coeffs]
    return [exact_div(c, g) if not c.is_zero() else c for c in coeffs]


def gcd_multivariate(p, q):
    """Primitive gcd over Q with positive leading coefficient (grevlex)."""
    if p.is_zero() and q.is_zero():
        return MPoly.zero(p.vars)
    if p.is_zero():
        return q.primitive()
    if q.is_zero():
        return p.primitive()
    if p.is_constant() or q.is_constant():
        return MPoly.const(p.vars, 1)
    common = [
        v for v in p.vars if p.degree_in(v) > 0 and q.degree_in(v) > 0
    ]
    if not common:
        return MPoly.const(p.vars, 1)
    # main variable: smallest combined degree keeps the PRS short
    name = min(common, key=lambda v: p.degree_in(v) + q.degree_in(v))
    A = coeff_list(p, name)
    B = coeff_list(q, name)
    cont_a = _content_of_list(A)
    cont_b = _content_of_list(B)
    A = [exact_div(c, cont_a) for c in A]
    B = [exact_div(c, cont_b) for c in B]
    cont = gcd_multivariate(cont_a, cont_b)
    if len(A) < len(B):
        A, B = B, A
    g = _gcd_prs(A, B)
    if g is None:
        return cont.primitive()
    gp = _primitive_list(g)
    return (cont * from_coeff_list(gp, name)).primitive()


def _content_of_list(coeffs):
    g = None
    for c in coeffs:
        if c.is_zero():
            continue
        g = c if g is None else gcd_multivariate(g, c)
        if g.is_constant():
            return MPoly.const(c.vars, 1)
    return g


def squarefree_decomposition(p):
    """Yun decomposition: [(f_i, m_i)] with p = c * prod f_i^{m_i}.

    Factors are primitive, squarefree, pairwise coprime; multiplicities are
    strictly increasing.
    """
    if p.is_zero():
        raise PolyError("squarefree decomposition of zero")
    if p.is_constant():
        return []
    name = next(v for v in p.vars if p.degree_in(v) > 0)
    A = coeff_list(p, name)
    cont = _content_of_list(A)
    pp = from_coeff_list([exact_div(c, cont) for c in A], name).primitive()
    parts = {}
    dp = pp.diff(name)
    g = gcd_multivariate(pp, dp)
    c = exact_div(pp, g)
    d = exact_div(dp, g) - c.diff(name)
    i = 1
    while not c.is_constant():
        a = gcd_multivariate(c, d)
        if not a.is_constant():
            parts[i] = parts.get(i, MPoly.const(p.vars, 1)) * a
        c = exact_div(c, a)
        d = exact_div(d, a) - c.diff(name)
        i += 1
    for f, m in squarefree_decomposition(cont):
        parts[m] = parts.get(m, MPoly.const(p.vars, 1)) * f
    return sorted(
        ((f.primitive(), m) for m, f in parts.items() if not f.is_constant()),
        key=lambda fm: fm[1],
    )


# -- univariate factorization (sympy-backed) -----------------------------------


def univariate_factor(p):
    """Complete factorization over Q of a univariate polynomial.

    Returns [(irreducible primitive factor, multiplicity)] sorted by
    (degree, text); the product reconstitutes p up to a rational constant.
    """
    import sympy

    if p.is_zero():
        raise PolyError("factorization of zero")
    used = [v for v in p.vars if p.degree_in(v) > 0]
    if not used:
        return []
    if len(used) > 1:
        raise PolyError("univariate_factor requires a univariate input")
    name = used[0]
    x = sympy.Symbol(name)
    d = p.degree_in(name)
    coeffs = []
    for k in range(d, -1, -1):
        c = p.coefficient_in(name, k)
        coeffs.append(sympy.Rational(c.constant_value()) if not c.is_zero() else 0)
    spoly = sympy.Poly(coeffs, x, domain="QQ")
    _, factors = spoly.factor_list()
    out = []
    for f, m in factors:
        fc = f.all_coeffs()  # highest degree first
        terms = {}
        n = len(fc) - 1
        idx = p.vars.index(name)
        for k, c in enumerate(fc):
            if c != 0:
                e = [0] * len(p.vars)
                e[idx] = n - k
                terms[tuple(e)] = Fraction(int(c.p), int(c.q))
        out.append((MPoly(p.vars, terms).primitive(), int(m)))
    out.sort(key=lambda fm: (fm[0].degree(), str(fm[0])))
    return out
