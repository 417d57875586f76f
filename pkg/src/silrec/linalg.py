"""Dense exact linear algebra over Q: RREF, kernel, solving, subspaces."""

from __future__ import annotations

from fractions import Fraction


def _size(c):
    return c.numerator.bit_length() + c.denominator.bit_length()


class QMatrix:
    """Dense rational matrix (row-major list of lists of Fraction)."""

    def __init__(self, rows):
        self.data = [[Fraction(c) for c in row] for row in rows]
        self.nrows = len(self.data)
        self.ncols = len(self.data[0]) if self.data else 0
        if any(len(r) != self.ncols for r in self.data):
            raise ValueError("ragged matrix")
        self._rref = None

    @staticmethod
    def identity(n):
        return QMatrix([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(nrows, ncols):
        return QMatrix([[Fraction(0)] * ncols for _ in range(nrows)])

    def transpose(self):
        return QMatrix([[self.data[i][j] for i in range(self.nrows)] for j in range(self.ncols)])

    def rref(self):
        """(rows, pivot_columns) of the reduced row echelon form."""
        if self._rref is not None:
            return self._rref
        m = [row[:] for row in self.data]
        pivots = []
        r = 0
        for c in range(self.ncols):
            if r >= len(m):
                break
            # smallest-entry pivot keeps fractions modest
            best = None
            for i in range(r, len(m)):
                if m[i][c] != 0 and (best is None or _size(m[i][c]) < _size(m[best][c])):
                    best = i
            if best is None:
                continue
            m[r], m[best] = m[best], m[r]
            inv = 1 / m[r][c]
            m[r] = [a * inv for a in m[r]]
            for i in range(len(m)):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        m = [row for row in m if any(a != 0 for a in row)]
        self._rref = (m, pivots)
        return self._rref

    def rank(self):
        return len(self.rref()[1])

    def inverse(self):
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        aug = QMatrix([row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(self.data)])
        rows, pivots = aug.rref()
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return QMatrix([row[n:] for row in rows])

    def mul_vec(self, v):
        return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.data]

    def __repr__(self):
        return f"QMatrix({self.nrows}x{self.ncols})"


class Subspace:
    """Linear subspace of Q^n with a canonical RREF basis."""

    def __init__(self, ambient, vectors):
        self.ambient = ambient
        if vectors:
            rows, _ = QMatrix(vectors).rref()
        else:
            rows = []
        self.basis = [tuple(row) for row in rows]

    @property
    def dim(self):
        return len(self.basis)

    def reduce(self, v):
        """Residual of v after elimination against the basis."""
        v = [Fraction(c) for c in v]
        for row in self.basis:
            p = next(i for i, a in enumerate(row) if a != 0)
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def contains(self, v):
        return all(c == 0 for c in self.reduce(v))

    def contains_space(self, other):
        return all(self.contains(v) for v in other.basis)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __repr__(self):
        return f"Subspace(dim {self.dim} of Q^{self.ambient})"


def kernel(M):
    """Basis of the right kernel {v : Mv = 0}."""
    rows, pivots = M.rref()
    free = [c for c in range(M.ncols) if c not in pivots]
    vectors = []
    for f in free:
        v = [Fraction(0)] * M.ncols
        v[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        vectors.append(v)
    return Subspace(M.ncols, vectors)


def intersect(s1, s2):
    """Intersection of two subspaces of the same ambient space."""
    if s1.ambient != s2.ambient:
        raise ValueError("ambient dimensions differ")
    if not s1.basis or not s2.basis:
        return Subspace(s1.ambient, [])
    # v = a . B1 = b . B2  <=>  (a, b) in kernel of [B1^T | -B2^T]
    n = s1.ambient
    k1, k2 = len(s1.basis), len(s2.basis)
    stacked = QMatrix(
        [
            [s1.basis[i][r] for i in range(k1)] + [-s2.basis[j][r] for j in range(k2)]
            for r in range(n)
        ]
    )
    vectors = []
    for v in kernel(stacked).basis:
        a = v[:k1]
        vec = [sum((a[i] * s1.basis[i][r] for i in range(k1)), Fraction(0)) for r in range(n)]
        vectors.append(vec)
    return Subspace(n, vectors)


def solve(M, b):
    """Solve Mx = b.

    Returns (particular_solution, kernel_subspace), or None when the system
    is inconsistent (a distinguished outcome, not an exception).
    """
    b = [Fraction(c) for c in b]
    if len(b) != M.nrows:
        raise ValueError("right-hand side has wrong length")
    aug = QMatrix([row + [bv] for row, bv in zip(M.data, b)])
    rows, pivots = aug.rref()
    if M.ncols in pivots:
        return None
    x = [Fraction(0)] * M.ncols
    for row, p in zip(rows, pivots):
        x[p] = row[-1]
    return x, kernel(M)


def det_bareiss(rows, *, mul, sub, div, is_zero, one):
    """Fraction-free Bareiss determinant over any integral domain.

    `rows` is a square list-of-lists; the ring is described by the supplied
    operations (div must be exact division).  Used as the Sylvester-matrix
    oracle for resultants.
    """
    m = [row[:] for row in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix not square")
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if is_zero(m[k][k]):
            swap = next((i for i in range(k + 1, n) if not is_zero(m[i][k])), None)
            if swap is None:
                x = m[k][k]
                return sub(x, x)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j]))
                m[i][j] = div(num, prev)
            m[i][k] = None
        prev = m[k][k]
    result = m[n - 1][n - 1]
    if sign < 0:
        zero = sub(result, result)
        result = sub(zero, result)
    return result
