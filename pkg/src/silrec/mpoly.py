"""Sparse multivariate polynomials with exact rational coefficients.

Polynomials are immutable maps from exponent tuples to nonzero Fractions,
tagged with an ordered variable context such as ``('x', 'y', 'z', 'w')``.
The default monomial order is graded reverse lexicographic with respect to
the context order; lex and block elimination orders are available for
division and elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Exp = tuple  # exponent vector, one slot per context variable

MAX_EXPONENT = 99999


class PolyError(ValueError):
    pass


class ParseError(PolyError):
    """Syntax or semantic error in polynomial text, with byte offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class ContextMismatch(PolyError):
    pass


def grevlex_key(exp):
    """Sort key increasing with the monomial under grevlex."""
    return (sum(exp), tuple(-e for e in reversed(exp)))


class MonomialOrder:
    """A monomial order: 'grevlex', 'lex', or 'elim' (block, grevlex/grevlex).

    `perm` optionally reorders variables: perm[i] is the index (into the
    context) of the i-th most significant variable.  For 'elim', the first
    `block` permuted variables dominate the rest.
    """

    def __init__(self, kind="grevlex", perm=None, block=0):
        if kind not in ("grevlex", "lex", "elim"):
            raise PolyError(f"unknown monomial order kind {kind!r}")
        self.kind = kind
        self.perm = tuple(perm) if perm is not None else None
        self.block = block

    def _arrange(self, exp):
        if self.perm is None:
            return exp
        return tuple(exp[i] for i in self.perm)

    def key(self, exp):
        e = self._arrange(exp)
        if self.kind == "grevlex":
            return grevlex_key(e)
        if self.kind == "lex":
            return e
        head, tail = e[: self.block], e[self.block :]
        return (grevlex_key(head), grevlex_key(tail))

    def __repr__(self):
        if self.kind == "elim":
            return f"MonomialOrder('elim', perm={self.perm}, block={self.block})"
        if self.perm is not None:
            return f"MonomialOrder({self.kind!r}, perm={self.perm})"
        return f"MonomialOrder({self.kind!r})"


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def elimination_order(nvars, drop):
    """Block order putting the variable indices in `drop` first."""
    drop = list(drop)
    rest = [i for i in range(nvars) if i not in drop]
    return MonomialOrder("elim", perm=drop + rest, block=len(drop))


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise PolyError(f"not a rational coefficient: {c!r}")


class MPoly:
    """Sparse polynomial over Q in a fixed variable context."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean = {}
        for exp, c in terms.items():
            c = _as_fraction(c)
            if c == 0:
                continue
            if len(exp) != n:
                raise ContextMismatch(f"exponent {exp} has wrong arity for {self.vars}")
            clean[tuple(exp)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(vars):
        return MPoly(vars, {})

    @staticmethod
    def const(vars, c):
        c = Fraction(c)
        if c == 0:
            return MPoly.zero(vars)
        return MPoly(vars, {(0,) * len(vars): c})

    @staticmethod
    def var(vars, name):
        vars = tuple(vars)
        if name not in vars:
            raise PolyError(f"unknown variable {name!r} in context {vars}")
        exp = [0] * len(vars)
        exp[vars.index(name)] = 1
        return MPoly(vars, {tuple(exp): Fraction(1)})

    @staticmethod
    def monomial(vars, exp, c=1):
        return MPoly(vars, {tuple(exp): Fraction(c)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise PolyError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name):
        i = self._vindex(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def leading(self, order=GREVLEX):
        """(exponent, coefficient) of the leading term under `order`."""
        if not self.terms:
            raise PolyError("zero polynomial has no leading term")
        exp = max(self.terms, key=order.key)
        return exp, self.terms[exp]

    def sorted_terms(self, order=GREVLEX, reverse=True):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=reverse)

    def coefficient_in(self, name, k):
        """Coefficient of name**k, a polynomial in the same context."""
        i = self._vindex(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                e2 = list(e)
                e2[i] = 0
                out[tuple(e2)] = c
        return MPoly(self.vars, out)

    def _vindex(self, name):
        try:
            return self.vars.index(name)
        except ValueError:
            raise PolyError(f"unknown variable {name!r} in context {self.vars}") from None

    def _check_ctx(self, other):
        if self.vars != other.vars:
            raise ContextMismatch(f"contexts differ: {self.vars} vs {other.vars}")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        self._check_ctx(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return MPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c0 = Fraction(other)
            if c0 == 0:
                return MPoly.zero(self.vars)
            return MPoly(self.vars, {e: c * c0 for e, c in self.terms.items()})
        self._check_ctx(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return MPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise PolyError("exponent must be a non-negative integer")
        result = MPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(self.vars, other)
        raise PolyError(f"cannot coerce {other!r} to a polynomial")

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.vars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- calculus and substitution ------------------------------------------

    def diff(self, name):
        i = self._vindex(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = c * e[i]
        return MPoly(self.vars, out)

    def substitute(self, name, value):
        """Substitute a polynomial (same context) or rational for a variable."""
        i = self._vindex(name)
        if isinstance(value, (int, Fraction)):
            value = MPoly.const(self.vars, value)
        self._check_ctx(value)
        by_pow = {}
        for e, c in self.terms.items():
            k = e[i]
            e2 = list(e)
            e2[i] = 0
            by_pow.setdefault(k, {})[tuple(e2)] = by_pow.get(k, {}).get(tuple(e2), 0) + c
        powers = {0: MPoly.const(self.vars, 1)}

        def vpow(k):
            if k not in powers:
                powers[k] = vpow(k - 1) * value
            return powers[k]

        result = MPoly.zero(self.vars)
        for k in sorted(by_pow):
            result = result + MPoly(self.vars, by_pow[k]) * vpow(k)
        return result

    def evaluate(self, point):
        """Evaluate at a rational point (one value per context variable)."""
        if len(point) != len(self.vars):
            raise PolyError(
                f"evaluation arity mismatch: {len(point)} values for {len(self.vars)} variables"
            )
        point = [Fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for b, k in zip(point, e):
                if k:
                    v *= b**k
            total += v
        return total

    def homogenize(self, name):
        """Homogenize with `name`, which must not occur in the polynomial."""
        i = self._vindex(name)
        if self.degree_in(name) > 0:
            raise PolyError(f"cannot homogenize: {name!r} already occurs")
        d = self.degree()
        out = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[i] = d - sum(e)
            out[tuple(e2)] = c
        return MPoly(self.vars, out)

    def dehomogenize(self, name):
        """Set `name` to 1; requires a homogeneous input."""
        if not self.is_homogeneous():
            raise PolyError("dehomogenize requires a homogeneous polynomial")
        i = self._vindex(name)
        out = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[i] = 0
            out[tuple(e2)] = out.get(tuple(e2), 0) + c
        return MPoly(self.vars, out)

    def drop_var(self, name):
        """Forget a variable the polynomial does not use."""
        i = self._vindex(name)
        if self.degree_in(name) > 0:
            raise PolyError(f"variable {name!r} occurs; cannot drop")
        new_vars = self.vars[:i] + self.vars[i + 1 :]
        return MPoly(new_vars, {e[:i] + e[i + 1 :]: c for e, c in self.terms.items()})

    def extend(self, new_vars):
        """Reinterpret in a larger context containing all current variables."""
        new_vars = tuple(new_vars)
        idx = [new_vars.index(v) for v in self.vars]
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * len(new_vars)
            for j, k in zip(idx, e):
                e2[j] = k
            out[tuple(e2)] = c
        return MPoly(new_vars, out)

    def coordinate_change(self, matrix):
        """Substitute variable i by sum_j matrix[i][j] * var_j (an invertible
        square rational matrix of size equal to the context arity)."""
        n = len(self.vars)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise PolyError("coordinate change matrix has wrong shape")
        from .linalg import QMatrix

        if QMatrix([[Fraction(a) for a in row] for row in matrix]).rank() != n:
            raise PolyError("coordinate change matrix is singular")
        images = []
        for i in range(n):
            img = MPoly.zero(self.vars)
            for j in range(n):
                a = Fraction(matrix[i][j])
                if a:
                    img = img + MPoly.var(self.vars, self.vars[j]) * a
            images.append(img)
        result = MPoly.zero(self.vars)
        one = MPoly.const(self.vars, 1)
        power_cache = [dict() for _ in range(n)]

        def power(i, k):
            if k == 0:
                return one
            cache = power_cache[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * images[i]
            return cache[k]

        for e, c in self.terms.items():
            term = MPoly.const(self.vars, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    # -- normalization ------------------------------------------------------

    def content(self):
        """Positive rational c with self/c primitive integer (0 for zero)."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self, order=GREVLEX):
        """Primitive integer associate with positive leading coefficient."""
        if not self.terms:
            return self
        c = self.content()
        _, lead = self.leading(order)
        if lead < 0:
            c = -c
        return self * (1 / c)

    # -- printing ------------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MPoly({self.vars}, {format_poly(self)!r})"


# -- text format --------------------------------------------------------------


def _format_monomial(vars, exp):
    parts = []
    for v, k in zip(vars, exp):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def format_poly(p, order=GREVLEX):
    """Deterministic text form: terms in decreasing monomial order."""
    if p.is_zero():
        return "0"
    pieces = []
    for i, (exp, c) in enumerate(p.sorted_terms(order)):
        mono = _format_monomial(p.vars, exp)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if i == 0:
            pieces.append(body if sign == "+" else "-" + body)
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


class _Tokenizer:
    SYMBOLS = "+-*/^()"

    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.tokens = []
        self._scan()
        self.index = 0

    def _scan(self):
        text = self.text
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch in self.SYMBOLS:
                self.tokens.append((ch, ch, i))
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.tokens.append(("int", text[i:j], i))
                i = j
                continue
            if ch.isalpha() or ch == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.tokens.append(("name", text[i:j], i))
                i = j
                continue
            raise ParseError(f"unexpected character {ch!r}", i)
        self.tokens.append(("end", "", len(text)))

    def peek(self):
        return self.tokens[self.index]

    def next(self):
        tok = self.tokens[self.index]
        self.index += 1
        return tok


def parse_poly(text, vars):
    """Parse polynomial text over the given variable context.

    Grammar: sums/differences of terms; '*' is required between factors;
    '/' divides by a nonzero constant; '^' takes a non-negative integer
    literal.  Raises ParseError with a byte offset on malformed input.
    """
    vars = tuple(vars)
    tz = _Tokenizer(text)

    def parse_expr():
        kind, _, off = tz.peek()
        sign = 1
        while kind in ("+", "-"):
            tz.next()
            if kind == "-":
                sign = -sign
            kind, _, off = tz.peek()
        result = parse_term() * sign
        while True:
            kind, _, _ = tz.peek()
            if kind not in ("+", "-"):
                break
            tz.next()
            nxt = parse_term()
            result = result + nxt if kind == "+" else result - nxt
        return result

    def parse_term():
        result = parse_factor()
        while True:
            kind, _, off = tz.peek()
            if kind == "*":
                tz.next()
                result = result * parse_factor()
            elif kind == "/":
                tz.next()
                divisor = parse_factor()
                if not divisor.is_constant() or divisor.is_zero():
                    raise ParseError("division only by a nonzero constant", off)
                result = result * (1 / divisor.constant_value())
            else:
                break
        return result

    def parse_factor():
        base = parse_base()
        kind, _, _ = tz.peek()
        if kind == "^":
            tz.next()
            ekind, val, off = tz.next()
            if ekind != "int":
                raise ParseError("exponent must be an integer literal", off)
            n = int(val)
            if n > MAX_EXPONENT:
                raise ParseError(f"exponent {n} exceeds limit {MAX_EXPONENT}", off)
            return base**n
        return base

    def parse_base():
        kind, val, off = tz.next()
        if kind == "int":
            return MPoly.const(vars, int(val))
        if kind == "name":
            if val not in vars:
                raise ParseError(f"unknown variable {val!r}", off)
            return MPoly.var(vars, val)
        if kind == "(":
            inner = parse_expr()
            kind2, _, off2 = tz.next()
            if kind2 != ")":
                raise ParseError("expected ')'", off2)
            return inner
        if kind == "-":
            return -parse_base()
        raise ParseError(f"unexpected token {val!r}" if val else "unexpected end of input", off)

    result = parse_expr()
    kind, val, off = tz.peek()
    if kind != "end":
        raise ParseError(f"unexpected token {val!r}", off)
    return result


def divrem_single(p, d, order=GREVLEX):
    """Division with remainder by a single nonzero polynomial.

    Returns (q, r) with p = q*d + r and no monomial of r divisible by the
    leading monomial of d under `order`.
    """
    p._check_ctx(d)
    if d.is_zero():
        raise PolyError("division by zero polynomial")
    dexp, dcoef = d.leading(order)
    q = {}
    r = {}
    work = dict(p.terms)
    key = order.key
    while work:
        exp = max(work, key=key)
        c = work.pop(exp)
        diff = tuple(a - b for a, b in zip(exp, dexp))
        if any(k < 0 for k in diff):
            r[exp] = c
            continue
        factor = c / dcoef
        q[diff] = q.get(diff, 0) + factor
        for e2, c2 in d.terms.items():
            if e2 == dexp:
                continue
            e = tuple(a + b for a, b in zip(diff, e2))
            s = work.get(e, 0) - factor * c2
            if s == 0:
                work.pop(e, None)
            else:
                work[e] = s
    return MPoly(p.vars, q), MPoly(p.vars, r)


def exact_div(p, d, order=GREVLEX):
    """Exact quotient p/d; raises PolyError when the division is not exact."""
    q, r = divrem_single(p, d, order)
    if not r.is_zero():
        raise PolyError("division is not exact")
    return q
