"""Minimal Buchberger engine over a prime field, for smoothness certificates.

A homogeneous ideal J in Q[x,y,z,w] with integer generators defines a
projective scheme over Z; if its fiber over one prime p is empty, the
generic fiber is empty too (the image of a projective scheme over Spec Z
is closed).  So checking that the Jacobian ideal becomes irrelevant mod p
certifies smoothness of the rational surface.  Coefficients stay machine
sized, which keeps the check fast.
"""

from __future__ import annotations

from .mpoly import GREVLEX


def _to_modp(p, q):
    out = {}
    for e, c in p.terms.items():
        v = (c.numerator * pow(c.denominator, -1, q)) % q
        if v:
            out[e] = v
    return out


def _reduce(work, leads, polys, q, key):
    work = dict(work)
    rem = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        if not c:
            continue
        hit = -1
        for i, le in enumerate(leads):
            if all(x <= y for x, y in zip(le, m)):
                hit = i
                break
        if hit < 0:
            rem[m] = c
            continue
        g = polys[hit]
        le = leads[hit]
        f = (c * pow(g[le], -1, q)) % q
        shift = tuple(a - x for a, x in zip(m, le))
        for e, v in g.items():
            if e == le:
                continue
            e2 = tuple(a + x for a, x in zip(e, shift))
            s = (work.get(e2, 0) - f * v) % q
            if s:
                work[e2] = s
            else:
                work.pop(e2, None)
    return rem


def groebner_modp(polys, q, order=GREVLEX):
    """Leading exponents of a Groebner basis of the reduction mod q."""
    key = order.key
    G = [t for t in (_to_modp(p, q) for p in polys) if t]
    leads = [max(t, key=key) for t in G]

    def lcm_exp(a, b):
        return tuple(max(x, y) for x, y in zip(a, b))

    pairs = {}
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            pairs[(i, j)] = lcm_exp(leads[i], leads[j])
    while pairs:
        (i, j), L = min(pairs.items(), key=lambda kv: (key(kv[1]), kv[0]))
        del pairs[(i, j)]
        li, lj = leads[i], leads[j]
        if all(a + b == c for a, b, c in zip(li, lj, L)):
            continue
        skip = False
        for k in range(len(G)):
            if k in (i, j) or not all(x <= y for x, y in zip(leads[k], L)):
                continue
            if lcm_exp(li, leads[k]) != L and lcm_exp(lj, leads[k]) != L:
                skip = True
                break
        if skip:
            continue
        mi = tuple(a - b for a, b in zip(L, li))
        mj = tuple(a - b for a, b in zip(L, lj))
        ci, cj = G[i][li], G[j][lj]
        s = {}
        for e, c in G[i].items():
            e2 = tuple(a + b for a, b in zip(e, mi))
            s[e2] = (s.get(e2, 0) + c * cj) % q
        for e, c in G[j].items():
            e2 = tuple(a + b for a, b in zip(e, mj))
            v = (s.get(e2, 0) - c * ci) % q
            if v:
                s[e2] = v
            else:
                s.pop(e2, None)
        s = {e: c for e, c in s.items() if c}
        r = _reduce(s, leads, G, q, key)
        if r:
            G.append(r)
            leads.append(max(r, key=key))
            for t in range(len(G) - 1):
                pairs[(t, len(G) - 1)] = lcm_exp(leads[t], leads[-1])
    return leads


def irrelevant_modp(polys, q):
    """True when the homogeneous ideal cuts out nothing in projective space
    over the algebraic closure of F_q (lead ideal contains a power of each
    variable)."""
    leads = groebner_modp(polys, q)
    nvars = len(polys[0].vars)
    for i in range(nvars):
        if not any(all(e[j] == 0 for j in range(nvars) if j != i) and e[i] > 0 for e in leads):
            return False
    return True
