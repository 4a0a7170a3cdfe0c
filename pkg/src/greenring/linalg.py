"""Exact linear algebra over exact fields (Fraction, Cyclotomic) and over the integers.

Matrices are plain lists of lists.  Field entries only need +, -, *, /,
equality with 0/1 and multiplication by Python ints; both ``fractions.Fraction``
and :class:`greenring.cyclotomic.Cyclotomic` qualify.  Everything here is
division-exact, no floating point.
"""

from __future__ import annotations

from fractions import Fraction


def _zero_like(x):
    return x * 0


def _one_like(x):
    return x * 0 + 1


def mat_copy(mat):
    return [list(row) for row in mat]


def mat_mul(a, b):
    # entries are often zero (monomial group matrices); skip dead products
    rows, inner, cols = len(a), len(b), len(b[0])
    zero = a[0][0] * b[0][0] * 0
    out = []
    for i in range(rows):
        arow = a[i]
        nonzero = [(k, arow[k]) for k in range(inner) if arow[k]]
        row = []
        for j in range(cols):
            acc = None
            for k, x in nonzero:
                y = b[k][j]
                if y:
                    acc = x * y if acc is None else acc + x * y
            row.append(zero if acc is None else acc)
        out.append(row)
    return out


def mat_vec(a, v):
    zero = a[0][0] * v[0] * 0
    out = []
    for i in range(len(a)):
        acc = None
        arow = a[i]
        for k in range(len(v)):
            x = arow[k]
            if x and v[k]:
                acc = x * v[k] if acc is None else acc + x * v[k]
        out.append(zero if acc is None else acc)
    return out


def sum_entries(entries):
    acc = entries[0]
    for e in entries[1:]:
        acc = acc + e
    return acc


def identity_matrix(n, one=None):
    one = Fraction(1) if one is None else one
    zero = one * 0
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(mat):
    return [list(col) for col in zip(*mat)]


def kronecker(a, b):
    """Kronecker product a (x) b."""
    ra, ca, rb, cb = len(a), len(a[0]), len(b), len(b[0])
    zero = a[0][0] * b[0][0] * 0
    out = []
    for i in range(ra):
        for k in range(rb):
            out.append(
                [
                    a[i][j] * b[k][l] if (a[i][j] and b[k][l]) else zero
                    for j in range(ca)
                    for l in range(cb)
                ]
            )
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[e * c for e in row] for row in a]


def mat_trace(a):
    return sum_entries([a[i][i] for i in range(len(a))])


def mat_eq(a, b):
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
        for ra, rb in zip(a, b)
    )


def is_zero_matrix(a):
    return all(e == 0 for row in a for e in row)


def row_echelon(mat):
    """In-place Gaussian elimination to reduced row echelon form.

    Returns the list of pivot column indices.  Exact over any field.
    """
    if not mat:
        return []
    rows, cols = len(mat), len(mat[0])
    pivots = []
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, rows):
            if mat[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = _one_like(mat[r][c]) / mat[r][c]
        mat[r] = [e * inv if e else e for e in mat[r]]
        pivot = mat[r]
        for i in range(rows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [
                    e - f * p if p else e for e, p in zip(mat[i], pivot)
                ]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def rank(mat):
    return len(row_echelon(mat_copy(mat)))


def nullspace(mat):
    """Basis of the right kernel, as a list of column vectors."""
    if not mat:
        return []
    work = mat_copy(mat)
    cols = len(work[0])
    pivots = row_echelon(work)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    some = mat[0][0]
    zero, one = _zero_like(some), _one_like(some)
    basis = []
    for f in free:
        vec = [zero] * cols
        vec[f] = one
        for r, p in enumerate(pivots):
            vec[p] = -work[r][f]
        basis.append(vec)
    return basis


def solve(mat, rhs):
    """One solution of mat @ x = rhs, or None if inconsistent."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    work = [list(mat[i]) + [rhs[i]] for i in range(rows)]
    pivots = row_echelon(work)
    if pivots and pivots[-1] == cols:
        return None
    some = rhs[0] if rows else Fraction(0)
    zero = _zero_like(some)
    x = [zero] * cols
    for r, p in enumerate(pivots):
        x[p] = work[r][cols]
    return x


def inverse(mat):
    """Inverse of a square matrix over a field; None if singular."""
    n = len(mat)
    one = _one_like(mat[0][0])
    work = [list(mat[i]) + list(identity_matrix(n, one)[i]) for i in range(n)]
    pivots = row_echelon(work)
    if pivots != list(range(n)):
        return None
    return [work[i][n:] for i in range(n)]


def column_space_basis(mat):
    """Pivot columns of mat, as a list of column vectors."""
    if not mat or not mat[0]:
        return []
    pivots = row_echelon(mat_copy(mat))
    return [[mat[i][c] for i in range(len(mat))] for c in pivots]


class ColumnSolver:
    """Repeated exact solves against a fixed full-column-rank matrix.

    Factors [columns | I] to row echelon form once; afterwards each solve is
    a single matrix-vector product with the recorded row transform.
    """

    def __init__(self, columns):
        self.columns = columns
        self.rank = len(columns)
        self.dim = len(columns[0]) if columns else 0
        one = _one_like(columns[0][0]) if columns else None
        work = [
            [columns[j][i] for j in range(self.rank)]
            + [one if i == k else one * 0 for k in range(self.dim)]
            for i in range(self.dim)
        ]
        pivots = row_echelon(work)
        if pivots[: self.rank] != list(range(self.rank)):
            raise ValueError("columns are not linearly independent")
        self._transform = [row[self.rank:] for row in work]

    def coordinates(self, vec):
        """Coordinates of vec in the column basis; None if outside the span."""
        image = mat_vec(self._transform, vec)
        if any(image[self.rank:]):
            return None
        return image[: self.rank]

    def restrict(self, mat):
        """Matrix of the action of mat on the span, in the column basis.

        Requires the span to be mat-invariant; returns None otherwise.
        """
        out = []
        for col in self.columns:
            image = mat_vec(mat, col)
            coords = self.coordinates(image)
            if coords is None:
                return None
            out.append(coords)
        return transpose(out)


# ---------------------------------------------------------------------------
# Integer matrices: Smith normal form and exact rank certificates.


def smith_normal_form(mat):
    """Diagonal of the Smith normal form of an integer matrix.

    Returns the list of non-negative invariant factors d_1 | d_2 | ... padded
    with zeros up to min(rows, cols).  Pure integer row/column reduction.
    """
    work = [[int(e) for e in row] for row in mat]
    rows = len(work)
    cols = len(work[0]) if rows else 0
    diag = []
    s = 0
    while s < min(rows, cols):
        # find a nonzero entry of least absolute value in the trailing block
        best = None
        for i in range(s, rows):
            for j in range(s, cols):
                v = work[i][j]
                if v != 0 and (best is None or abs(v) < abs(work[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        work[s], work[bi] = work[bi], work[s]
        for row in work:
            row[s], row[bj] = row[bj], row[s]
        # clear the edging; swapping back in smaller remainders until clean
        while True:
            dirty = False
            for i in range(s + 1, rows):
                if work[i][s] != 0:
                    q = work[i][s] // work[s][s]
                    for j in range(s, cols):
                        work[i][j] -= q * work[s][j]
                    if work[i][s] != 0:
                        work[s], work[i] = work[i], work[s]
                        dirty = True
            for j in range(s + 1, cols):
                if work[s][j] != 0:
                    q = work[s][j] // work[s][s]
                    for i in range(s, rows):
                        work[i][j] -= q * work[i][s]
                    if work[s][j] != 0:
                        for row in work:
                            row[s], row[j] = row[j], row[s]
                        dirty = True
            if not dirty:
                break
        if work[s][s] < 0:
            for j in range(s, cols):
                work[s][j] = -work[s][j]
        diag.append(work[s][s])
        s += 1
    # enforce the divisibility chain d_k | d_{k+1}
    changed = True
    while changed:
        changed = False
        for k in range(len(diag) - 1):
            a, b = diag[k], diag[k + 1]
            if a and b and b % a != 0:
                from math import gcd

                g = gcd(a, b)
                diag[k], diag[k + 1] = g, a * b // g
                changed = True
    diag += [0] * (min(rows, cols) - len(diag))
    return diag


def integer_rank(mat):
    return sum(1 for d in smith_normal_form(mat) if d != 0)


def is_unimodular(mat):
    """True iff the square integer matrix has determinant +-1."""
    if len(mat) != len(mat[0]):
        return False
    diag = smith_normal_form(mat)
    return all(d == 1 for d in diag)


# ---------------------------------------------------------------------------
# Univariate polynomials over a field, low degree first (for root counting).


def poly_trim(p, zero):
    while p and p[-1] == 0:
        p.pop()
    if not p:
        p.append(zero)
    return p


def poly_mul(p, q):
    zero = _zero_like(p[0])
    out = [zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return poly_trim(out, zero)


def poly_deg(p):
    d = len(p) - 1
    while d > 0 and p[d] == 0:
        d -= 1
    return d if p[d] != 0 else -1


def poly_divmod(p, q):
    zero = _zero_like(p[0])
    dq = poly_deg(q)
    if dq < 0:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [zero] * max(poly_deg(p) - dq + 1, 1)
    inv_lead = _one_like(q[dq]) / q[dq]
    while poly_deg(rem) >= dq:
        d = poly_deg(rem)
        c = rem[d] * inv_lead
        quo[d - dq] = quo[d - dq] + c
        for i in range(dq + 1):
            rem[d - dq + i] = rem[d - dq + i] - c * q[i]
    return poly_trim(quo, zero), poly_trim(rem, zero)


def poly_gcd(p, q):
    zero = _zero_like(p[0])
    a, b = poly_trim(list(p), zero), poly_trim(list(q), zero)
    while poly_deg(b) >= 0:
        _, r = poly_divmod(a, b)
        a, b = b, r
    d = poly_deg(a)
    if d >= 0 and a[d] != 1:
        inv = _one_like(a[d]) / a[d]
        a = [c * inv for c in a]
    return a


def poly_derivative(p):
    zero = _zero_like(p[0])
    if len(p) == 1:
        return [zero]
    return [p[i] * i for i in range(1, len(p))]


def distinct_root_count(p):
    """Number of distinct roots of p over an algebraic closure.

    Exact: deg p minus deg gcd(p, p'), the degree of the square-free part.
    """
    d = poly_deg(p)
    if d <= 0:
        return 0
    g = poly_gcd(p, poly_derivative(p))
    return d - poly_deg(g)
