"""Matrices over k[z]: determinants and the three normal forms.

Everything is exact.  The determinant uses Bareiss fraction-free elimination
(all intermediate divisions are exact in k[z]); Smith, Hermite and column
reduction are the classical Euclidean algorithms with unimodular tracking.
"""

from .poly import Poly, poly_gcd


class PolyMatrix:
    def __init__(self, field, rows, cols, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @staticmethod
    def from_rows(field, rowlists):
        rows = len(rowlists)
        cols = len(rowlists[0]) if rows else 0
        flat = []
        for r in rowlists:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(r)
        return PolyMatrix(field, rows, cols, flat)

    @staticmethod
    def from_cols(field, collists):
        cols = len(collists)
        rows = len(collists[0]) if cols else 0
        return PolyMatrix.from_rows(
            field, [[collists[j][i] for j in range(cols)] for i in range(rows)]
        )

    @staticmethod
    def identity(field, n):
        one, zero = Poly.one(field), Poly.zero(field)
        return PolyMatrix.from_rows(
            field, [[one if i == j else zero for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def diagonal(field, polys):
        n = len(polys)
        zero = Poly.zero(field)
        return PolyMatrix.from_rows(
            field, [[polys[i] if i == j else zero for j in range(n)] for i in range(n)]
        )

    def entry(self, i, j):
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def col(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def columns(self):
        return [self.col(j) for j in range(self.cols)]

    def to_rowlists(self):
        return [self.row(i) for i in range(self.rows)]

    def __mul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        F = self.field
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                acc = Poly.zero(F)
                for t in range(self.cols):
                    acc = acc + ri[t] * other.entry(t, j)
                out.append(acc)
        return PolyMatrix(F, self.rows, other.cols, out)

    def mul_vec(self, vec):
        """Apply to a column vector of Poly."""
        F = self.field
        out = []
        for i in range(self.rows):
            acc = Poly.zero(F)
            for t in range(self.cols):
                acc = acc + self.entry(i, t) * vec[t]
            out.append(acc)
        return out

    def scale_poly(self, p):
        return PolyMatrix(self.field, self.rows, self.cols, [e * p for e in self.entries])

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        return PolyMatrix.from_cols(self.field, self.columns() + other.columns())

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.field == other.field
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(repr(e) for e in self.row(i)) for i in range(self.rows))
        return f"PolyMatrix[{body}]"


def det(M):
    """Fraction-free determinant (Bareiss)."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    F = M.field
    if n == 0:
        return Poly.one(F)
    a = [M.row(i) for i in range(n)]
    sign = 1
    prev = Poly.one(F)
    for t in range(n - 1):
        if a[t][t].is_zero:
            pivot_row = next((i for i in range(t + 1, n) if not a[i][t].is_zero), None)
            if pivot_row is None:
                return Poly.zero(F)
            a[t], a[pivot_row] = a[pivot_row], a[t]
            sign = -sign
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                num = a[i][j] * a[t][t] - a[i][t] * a[t][j]
                a[i][j] = num.exact_div(prev)
            a[i][t] = Poly.zero(F)
        prev = a[t][t]
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def is_unimodular(M):
    """True iff the determinant is a nonzero constant."""
    if M.rows != M.cols:
        raise ValueError("unimodularity of a non-square matrix")
    return det(M).degree == 0


def smith_normal_form(M):
    """U*M*V = D, D diagonal with monic d_1 | d_2 | ... | d_n, U and V
    unimodular.  Raises ValueError for singular (or non-square) input."""
    if M.rows != M.cols:
        raise ValueError("Smith form of a non-square matrix")
    n = M.rows
    F = M.field
    a = [M.row(i) for i in range(n)]
    U = [PolyMatrix.identity(F, n).row(i) for i in range(n)]
    V = [[Poly.one(F) if i == j else Poly.zero(F) for i in range(n)] for j in range(n)]
    # V kept as a list of columns so column ops are row ops on V's transpose
    for t in range(n):
        while True:
            # minimal-degree nonzero entry of the trailing block
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if not a[i][j].is_zero and (
                        best is None or a[i][j].degree < a[best[0]][best[1]].degree
                    ):
                        best = (i, j)
            if best is None:
                raise ValueError("singular matrix")
            bi, bj = best
            if bi != t:
                a[t], a[bi] = a[bi], a[t]
                U[t], U[bi] = U[bi], U[t]
            if bj != t:
                for row in a:
                    row[t], row[bj] = row[bj], row[t]
                V[t], V[bj] = V[bj], V[t]
            pivot = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                if a[i][t].is_zero:
                    continue
                q, r = divmod(a[i][t], pivot)
                for j in range(n):
                    a[i][j] = a[i][j] - q * a[t][j]
                    U[i][j] = U[i][j] - q * U[t][j]
                if not r.is_zero:
                    dirty = True
            for j in range(t + 1, n):
                if a[t][j].is_zero:
                    continue
                q, r = divmod(a[t][j], pivot)
                for i in range(n):
                    a[i][j] = a[i][j] - q * a[i][t]
                    V[j][i] = V[j][i] - q * V[t][i]
                if not r.is_zero:
                    dirty = True
            if dirty:
                continue
            # pivot must divide the rest of the block for the chain d_t | d_{t+1}
            offender = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if not (a[i][j] % pivot).is_zero:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(n):
                a[t][j] = a[t][j] + a[offender][j]
                U[t][j] = U[t][j] + U[offender][j]
    # monic pivots: scale row t of D and of U by the same constant
    for t in range(n):
        c = a[t][t].lc
        if c != F.one:
            inv = F.inv(c)
            a[t][t] = a[t][t].scale(inv)
            U[t] = [u.scale(inv) for u in U[t]]
    Um = PolyMatrix.from_rows(F, U)
    Dm = PolyMatrix.diagonal(F, [a[t][t] for t in range(n)])
    Vm = PolyMatrix.from_cols(F, V)
    return Um, Dm, Vm


def _column_echelon(field, cols, transform=False):
    """Triangularize columns over k[z] by unimodular column operations.

    Returns (pivots, cols, trans): pivots[i] is the column index holding the
    pivot of row i (or None), trailing non-pivot columns are zero.  When
    transform is set, trans mirrors every operation on an identity, so
    original_matrix * trans_matrix = echelon_matrix column by column.
    """
    m = len(cols[0]) if cols else 0
    g = len(cols)
    cols = [list(c) for c in cols]
    trans = None
    if transform:
        trans = [
            [Poly.one(field) if i == j else Poly.zero(field) for i in range(g)]
            for j in range(g)
        ]
    free = list(range(g))
    pivots = [None] * m
    for i in range(m - 1, -1, -1):
        while True:
            live = [j for j in free if not cols[j][i].is_zero]
            if not live:
                break
            piv = min(live, key=lambda j: cols[j][i].degree)
            if len(live) == 1:
                pivots[i] = piv
                free.remove(piv)
                break
            for j in live:
                if j == piv:
                    continue
                q = cols[j][i] // cols[piv][i]
                for r in range(m):
                    cols[j][r] = cols[j][r] - q * cols[piv][r]
                if transform:
                    for r in range(g):
                        trans[j][r] = trans[j][r] - q * trans[piv][r]
    return pivots, cols, trans


def _reduce_echelon(field, pivots, cols, trans=None):
    """Monic pivots and degree-reduced off-pivot entries (canonical form)."""
    g = len(cols)
    pivot_rows = [i for i in range(len(pivots)) if pivots[i] is not None]
    for i in pivot_rows:
        j = pivots[i]
        c = cols[j][i].lc
        if c != field.one:
            inv = field.inv(c)
            cols[j] = [e.scale(inv) for e in cols[j]]
            if trans is not None:
                trans[j] = [e.scale(inv) for e in trans[j]]
    for j in range(g):
        for i in sorted(pivot_rows, reverse=True):
            pj = pivots[i]
            if pj == j:
                continue
            if cols[j][i].degree >= cols[pj][i].degree:
                q = cols[j][i] // cols[pj][i]
                for r in range(len(cols[j])):
                    cols[j][r] = cols[j][r] - q * cols[pj][r]
                if trans is not None:
                    for r in range(len(trans[j])):
                        trans[j][r] = trans[j][r] - q * trans[pj][r]
    return cols, trans


def hermite_basis(M):
    """Canonical m x m basis of the column span of an m x g matrix of rank m.

    Output is upper triangular with monic diagonal pivots and off-pivot
    entries of smaller degree than their row pivot; equal modules give equal
    matrices.  Raises ValueError on rank-deficient input.
    """
    F = M.field
    pivots, cols, _ = _column_echelon(F, M.columns())
    if any(p is None for p in pivots):
        raise ValueError("generators do not span a rank-m module")
    cols, _ = _reduce_echelon(F, pivots, cols)
    ordered = [cols[pivots[i]] for i in range(M.rows)]
    return PolyMatrix.from_cols(F, ordered)


def hermite_with_transform(M):
    """(H, V) with M*V = H, V unimodular and H the column echelon of M.

    H has the pivot columns first (in row order) followed by zero columns;
    the matching columns of V spanning ker(M) come last.
    """
    F = M.field
    pivots, cols, trans = _column_echelon(F, M.columns(), transform=True)
    cols, trans = _reduce_echelon(F, pivots, cols, trans)
    pivot_js = [pivots[i] for i in range(M.rows) if pivots[i] is not None]
    other_js = [j for j in range(M.cols) if j not in pivot_js]
    order = pivot_js + other_js
    H = PolyMatrix.from_cols(F, [cols[j] for j in order])
    V = PolyMatrix.from_cols(F, [trans[j] for j in order])
    return H, V


def column_reduce(M):
    """Column-reduce a nonsingular square matrix.

    Returns (M', degs): M' is column-equivalent to M, its column-leading
    coefficient matrix is nonsingular, degs are the column degrees and
    sum(degs) = deg det(M).
    """
    if M.rows != M.cols:
        raise ValueError("column reduction of a non-square matrix")
    if det(M).is_zero:
        raise ValueError("singular matrix")
    F = M.field
    n = M.rows
    cols = [list(c) for c in M.columns()]
    while True:
        degs = [max(e.degree for e in c) for c in cols]
        lead = [[cols[j][i].coeff(degs[j]) if degs[j] >= 0 else F.zero for j in range(n)] for i in range(n)]
        combo = _field_kernel_vector(F, lead)
        if combo is None:
            return PolyMatrix.from_cols(F, cols), degs
        jstar = max((j for j in range(n) if combo[j] != F.zero), key=lambda j: degs[j])
        for j in range(n):
            if j == jstar or combo[j] == F.zero:
                continue
            c = F.div(combo[j], combo[jstar])
            shift = degs[jstar] - degs[j]
            for r in range(n):
                cols[jstar][r] = cols[jstar][r] + cols[j][r].scale(c).shift(shift)


def _field_kernel_vector(field, rows):
    """One nonzero kernel vector of a square field matrix, or None."""
    n = len(rows)
    a = [list(r) for r in rows]
    where = []  # (pivot_row, pivot_col)
    prow = 0
    for col in range(n):
        piv = next((r for r in range(prow, n) if a[r][col] != field.zero), None)
        if piv is None:
            continue
        a[prow], a[piv] = a[piv], a[prow]
        inv = field.inv(a[prow][col])
        a[prow] = [field.mul(inv, e) for e in a[prow]]
        for r in range(n):
            if r != prow and a[r][col] != field.zero:
                c = a[r][col]
                a[r] = [field.sub(a[r][k], field.mul(c, a[prow][k])) for k in range(n)]
        where.append((prow, col))
        prow += 1
    if prow == n:
        return None
    pivot_cols = {c for _, c in where}
    freecol = next(c for c in range(n) if c not in pivot_cols)
    v = [field.zero] * n
    v[freecol] = field.one
    for r, c in where:
        v[c] = field.neg(a[r][freecol])
    return v
