"""Buchberger-style Groebner engine over Q with elimination-based operations.

Polynomials enter and leave as MPoly; internally the engine works on
primitive integer coefficient dicts to keep arithmetic fraction-free.
Default order is grevlex; lex and block orders drive elimination,
saturation, intersection and quotients (all via the auxiliary-variable
trick).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .mpoly import GREVLEX, MPoly, PolyError, elimination_order, exact_div


class Ideal:
    """Finite generator list in a named variable context."""

    def __init__(self, vars, gens, homogeneous=None):
        self.vars = tuple(vars)
        self.gens = []
        for g in gens:
            if g.vars != self.vars:
                raise PolyError("generator context mismatch")
            if not g.is_zero():
                self.gens.append(g.primitive())
        if homogeneous is None:
            homogeneous = all(g.is_homogeneous() for g in self.gens)
        elif homogeneous and not all(g.is_homogeneous() for g in self.gens):
            raise PolyError("homogeneous flag set but a generator is not homogeneous")
        self.homogeneous = homogeneous

    def __repr__(self):
        return f"Ideal({self.vars}, {len(self.gens)} gens)"


# -- integer-coefficient working form ------------------------------------------


def _to_int_terms(p):
    c = p.content()
    lead_exp, lead_c = p.leading(GREVLEX)
    if lead_c < 0:
        c = -c
    inv = 1 / c
    return {e: int(v * inv) for e, v in p.terms.items()}


def _strip_content(terms, key):
    if not terms:
        return terms
    g = 0
    for c in terms.values():
        g = gcd(g, c)
    lead = max(terms, key=key)
    if terms[lead] < 0:
        g = -g
    if g not in (0, 1):
        return {e: c // g for e, c in terms.items()}
    return terms


def _spoly(f, g, lf, lg, key):
    L = tuple(max(a, b) for a, b in zip(lf, lg))
    cf, cg = f[lf], g[lg]
    d = gcd(cf, cg)
    mf = tuple(a - b for a, b in zip(L, lf))
    mg = tuple(a - b for a, b in zip(L, lg))
    out = {}
    for e, c in f.items():
        e2 = tuple(a + b for a, b in zip(e, mf))
        out[e2] = out.get(e2, 0) + c * (cg // d)
    for e, c in g.items():
        e2 = tuple(a + b for a, b in zip(e, mg))
        s = out.get(e2, 0) - c * (cf // d)
        if s:
            out[e2] = s
        else:
            out.pop(e2, None)
    return {e: c for e, c in out.items() if c}


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _reduce_full(p, leads, polys, key):
    """Full normal form of integer-term dict p against (leads, polys)."""
    work = dict(p)
    rem = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        if not c:
            continue
        hit = -1
        for i, le in enumerate(leads):
            if _divides(le, m):
                hit = i
                break
        if hit < 0:
            rem[m] = rem.get(m, 0) + c
            continue
        g = polys[hit]
        le = leads[hit]
        lg = g[le]
        d = gcd(c, lg)
        mult_all = abs(lg // d)
        if lg // d < 0:
            b = -(c // d)
        else:
            b = c // d
        if mult_all != 1:
            work = {e: v * mult_all for e, v in work.items()}
            rem = {e: v * mult_all for e, v in rem.items()}
            # c itself was popped; account for it via b below against scaled g
        shift = tuple(a - x for a, x in zip(m, le))
        for e, v in g.items():
            if e == le:
                continue
            e2 = tuple(a + x for a, x in zip(e, shift))
            s = work.get(e2, 0) - b * v
            if s:
                work[e2] = s
            else:
                work.pop(e2, None)
    return _strip_content(rem, key)


class GroebnerBasis:
    """Reduced Groebner basis with primitive integer elements."""

    def __init__(self, vars, order, int_elements):
        self.vars = tuple(vars)
        self.order = order
        key = order.key
        elems = sorted(int_elements, key=lambda t: key(max(t, key=key)))
        self._ints = elems
        self._leads = [max(t, key=key) for t in elems]
        self.elements = [
            MPoly(self.vars, {e: Fraction(c) for e, c in t.items()}) for t in elems
        ]

    def normal_form_terms(self, terms):
        return _reduce_full(terms, self._leads, self._ints, self.order.key)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"GroebnerBasis({len(self.elements)} elements, {self.order!r})"


def buchberger(ideal, order=GREVLEX):
    """Reduced Groebner basis of the ideal under the given order."""
    key = order.key
    G = []
    for g in ideal.gens:
        t = _to_int_terms(g)
        if t:
            G.append(t)
    if not G:
        return GroebnerBasis(ideal.vars, order, [])
    G = [_strip_content(t, key) for t in G]
    leads = [max(t, key=key) for t in G]

    def lcm_exp(a, b):
        return tuple(max(x, y) for x, y in zip(a, b))

    pairs = {}

    def add_pair(i, j):
        L = lcm_exp(leads[i], leads[j])
        pairs[(i, j)] = L

    n = len(G)
    for i in range(n):
        for j in range(i + 1, n):
            add_pair(i, j)

    while pairs:
        (i, j), L = min(pairs.items(), key=lambda kv: (key(kv[1]), kv[0]))
        del pairs[(i, j)]
        li, lj = leads[i], leads[j]
        # first criterion: coprime leading monomials
        if all(a + b == c for a, b, c in zip(li, lj, L)):
            continue
        # chain criterion (strict form: both sub-lcms proper)
        skip = False
        for k in range(len(G)):
            if k in (i, j) or not _divides(leads[k], L):
                continue
            if lcm_exp(leads[i], leads[k]) != L and lcm_exp(leads[j], leads[k]) != L:
                skip = True
                break
        if skip:
            continue
        s = _spoly(G[i], G[j], li, lj, key)
        r = _reduce_full(s, leads, G, key)
        if r:
            G.append(r)
            leads.append(max(r, key=key))
            m = len(G) - 1
            for t in range(m):
                add_pair(t, m)

    # minimalize: drop elements whose lead is divisible by another lead
    keep = []
    for i in range(len(G)):
        li = leads[i]
        if any(
            j != i and _divides(leads[j], li) and (leads[j] != li or j < i)
            for j in range(len(G))
        ):
            continue
        keep.append(i)
    # interreduce tails
    reduced = []
    keep_leads = [leads[i] for i in keep]
    keep_polys = [G[i] for i in keep]
    for idx in range(len(keep)):
        others_leads = keep_leads[:idx] + keep_leads[idx + 1 :]
        others = keep_polys[:idx] + keep_polys[idx + 1 :]
        r = _reduce_full(keep_polys[idx], others_leads, others, key)
        reduced.append(_strip_content(r, key))
    return GroebnerBasis(ideal.vars, order, reduced)


def normal_form(p, gb):
    """Exact remainder of p modulo the Groebner basis; idempotent, and
    p - normal_form(p) lies in the ideal."""
    if p.vars != gb.vars:
        raise PolyError("context mismatch in normal_form")
    if p.is_zero():
        return p
    key = gb.order.key
    work = {e: Fraction(c) for e, c in p.terms.items()}
    rem = {}
    leads, polys = gb._leads, gb._ints
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        if c == 0:
            continue
        hit = -1
        for i, le in enumerate(leads):
            if _divides(le, m):
                hit = i
                break
        if hit < 0:
            rem[m] = c
            continue
        g = polys[hit]
        le = leads[hit]
        f = c / g[le]
        shift = tuple(a - x for a, x in zip(m, le))
        for e, v in g.items():
            if e == le:
                continue
            e2 = tuple(a + x for a, x in zip(e, shift))
            s = work.get(e2, Fraction(0)) - f * v
            if s:
                work[e2] = s
            else:
                work.pop(e2, None)
    return MPoly(gb.vars, rem)


def in_ideal(p, gb):
    return normal_form(p, gb).is_zero()


def eliminate(ideal, drop_names, order=None):
    """Generators of the elimination ideal I n Q[vars minus drop_names].

    The result is an Ideal over the same context whose generators do not
    involve the dropped variables.
    """
    drop = [ideal.vars.index(v) for v in drop_names]
    if order is None:
        order = elimination_order(len(ideal.vars), drop)
    gb = buchberger(ideal, order)
    kept = []
    for g in gb.elements:
        if all(all(e[i] == 0 for i in drop) for e in g.terms):
            kept.append(g)
    return Ideal(ideal.vars, kept)


def _fresh_var(vars):
    name = "t"
    while name in vars:
        name += "_"
    return name


def saturate(ideal, f):
    """Saturation I : f^infinity via the auxiliary-variable trick."""
    if f.is_zero():
        raise PolyError("cannot saturate by zero")
    t = _fresh_var(ideal.vars)
    big = (t,) + ideal.vars
    gens = [g.extend(big) for g in ideal.gens]
    tf = MPoly.var(big, t) * f.extend(big)
    gens.append(MPoly.const(big, 1) - tf)
    elim = eliminate(Ideal(big, gens), [t])
    return Ideal(ideal.vars, [g.drop_var(t) for g in elim.gens])


def intersect_ideals(I, J):
    """Intersection via t*I + (1-t)*J and elimination of t."""
    if I.vars != J.vars:
        raise PolyError("context mismatch in intersect_ideals")
    t = _fresh_var(I.vars)
    big = (t,) + I.vars
    tv = MPoly.var(big, t)
    one = MPoly.const(big, 1)
    gens = [tv * g.extend(big) for g in I.gens]
    gens += [(one - tv) * g.extend(big) for g in J.gens]
    elim = eliminate(Ideal(big, gens), [t])
    return Ideal(I.vars, [g.drop_var(t) for g in elim.gens])


def quotient(I, f):
    """Colon ideal I : (f), via intersection with (f) and exact division."""
    if f.is_zero():
        raise PolyError("quotient by zero")
    inter = intersect_ideals(I, Ideal(I.vars, [f]))
    return Ideal(I.vars, [exact_div(g, f) for g in inter.gens])


def ideal_contains(I, J, order=GREVLEX):
    """True when every generator of J lies in I."""
    gb = buchberger(I, order)
    return all(in_ideal(g, gb) for g in J.gens)


def ideal_equal(I, J, order=GREVLEX):
    return ideal_contains(I, J, order) and ideal_contains(J, I, order)
