"""Exact integer/rational linear algebra: rank, integer kernels, row spaces.

No floating point anywhere.  Rank uses fraction-free Bareiss elimination on
integer matrices (rational input is cleared row-wise first); integer kernels
come from a row-style Hermite normal form with minimal-pivot selection.
"""

from fractions import Fraction
from math import gcd, lcm


class RationalMatrix:
    """Dense matrix of exact rationals with fixed shape."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        rows = [tuple(Fraction(x) for x in row) for row in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        self.rows = tuple(rows)
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0

    def integer_rows(self):
        """Rows scaled to integers (rank-preserving)."""
        out = []
        for row in self.rows:
            mult = lcm(*(x.denominator for x in row)) if row else 1
            out.append([int(x * mult) for x in row])
        return out

    def stack(self, other):
        if other.ncols != self.ncols:
            raise ValueError("column count mismatch")
        return RationalMatrix(list(self.rows) + list(other.rows))

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __repr__(self):
        return "RationalMatrix(%dx%d)" % (self.nrows, self.ncols)


def integer_rank(rows):
    """Rank of an integer matrix by Bareiss fraction-free elimination."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
    return r


def rational_rank(matrix):
    if isinstance(matrix, RationalMatrix):
        return integer_rank(matrix.integer_rows())
    return integer_rank([list(map(int, row)) for row in matrix])


def hermite_normal_form(rows):
    """(H, U) with U unimodular, U*M = H in row-style Hermite normal form.

    Pivot selection by minimal absolute value limits entry growth.
    """
    h = [list(r) for r in rows]
    nrows = len(h)
    ncols = len(h[0]) if h else 0
    u = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        while True:
            nz = [i for i in range(r, nrows) if h[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(h[i][c]))
            h[r], h[piv] = h[piv], h[r]
            u[r], u[piv] = u[piv], u[r]
            done = True
            for i in range(r + 1, nrows):
                if h[i][c]:
                    q = h[i][c] // h[r][c]
                    if q:
                        for j in range(ncols):
                            h[i][j] -= q * h[r][j]
                        for j in range(nrows):
                            u[i][j] -= q * u[r][j]
                    if h[i][c]:
                        done = False
            if done:
                break
        if h[r][c]:
            if h[r][c] < 0:
                h[r] = [-x for x in h[r]]
                u[r] = [-x for x in u[r]]
            # reduce entries above the pivot
            for i in range(r):
                q = h[i][c] // h[r][c]
                if q:
                    for j in range(ncols):
                        h[i][j] -= q * h[r][j]
                    for j in range(nrows):
                        u[i][j] -= q * u[r][j]
            r += 1
    return h, u


def kernel_lattice_basis(rows):
    """Basis of the integer kernel {v : M v = 0} via HNF of the transpose."""
    rows = [list(r) for r in rows]
    if not rows:
        raise ValueError("empty matrix")
    ncols = len(rows[0])
    transpose = [[rows[i][j] for i in range(len(rows))] for j in range(ncols)]
    h, u = hermite_normal_form(transpose)
    basis = [tuple(u[i]) for i in range(ncols) if not any(h[i])]
    return basis


def rowspace_contains(a, b):
    """True iff rowspace(a) is contained in rowspace(b) over the rationals."""
    if a.ncols != b.ncols:
        raise ValueError("column count mismatch")
    rb = rational_rank(b)
    return rational_rank(b.stack(a)) == rb


def solve_linear(aug_rows):
    """Solve a rational linear system from augmented rows [a_1..a_n | rhs].

    Returns one solution tuple or None if inconsistent; free variables are 0.
    """
    m = [list(map(Fraction, r)) for r in aug_rows]
    if not m:
        return ()
    ncols = len(m[0]) - 1
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    for i in range(r, len(m)):
        if m[i][ncols] != 0 and not any(m[i][:ncols]):
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = m[i][ncols]
    return tuple(sol)
