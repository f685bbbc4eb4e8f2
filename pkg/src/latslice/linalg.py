"""Exact linear algebra over a base field: echelon forms, kernels, canonical
subspace representatives, subspace enumeration over finite fields, and
characteristic polynomials.

Field matrices are plain lists of rows; subspaces are represented by their
reduced column echelon basis (a canonical form, so equality of subspaces is
equality of representations).
"""

from itertools import combinations, product

from .poly import Poly
from .polymatrix import PolyMatrix, det


def zeros(field, n):
    return [field.zero] * n

def identity(field, n):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]

def mat_vec(field, A, v):
    return [
        _dot(field, row, v)
        for row in A
    ]

def _dot(field, a, b):
    acc = field.zero
    for x, y in zip(a, b):
        acc = field.add(acc, field.mul(x, y))
    return acc

def mat_mul(field, A, B):
    cols = list(zip(*B))
    return [[_dot(field, row, col) for col in cols] for row in A]


def rref(field, rows):
    """Reduced row echelon form; returns (matrix, pivot_columns)."""
    a = [list(r) for r in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != field.zero), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = field.inv(a[r][c])
        a[r] = [field.mul(inv, e) for e in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != field.zero:
                f = a[i][c]
                a[i] = [field.sub(a[i][k], field.mul(f, a[r][k])) for k in range(ncols)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def rank(field, rows):
    return len(rref(field, rows)[1])


def kernel_basis(field, rows):
    """Basis of the right kernel, as a list of vectors."""
    if not rows:
        return []
    ncols = len(rows[0])
    a, pivots = rref(field, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = zeros(field, ncols)
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(a[r][fc])
        basis.append(v)
    return basis


def solve(field, A, b):
    """One solution of A x = b, or None."""
    ncols = len(A[0]) if A else 0
    aug = [list(row) + [bv] for row, bv in zip(A, b)]
    a, pivots = rref(field, aug)
    if ncols in pivots:
        return None
    x = zeros(field, ncols)
    for r, pc in enumerate(pivots):
        x[pc] = a[r][ncols]
    return x


def _echelon_columns(field, columns):
    """Reduced echelon basis of the span: run rref on the vectors as rows and
    keep the nonzero rows, each of which is one basis vector."""
    if not columns:
        return []
    a, pivots = rref(field, [list(c) for c in columns])
    return [list(r) for r in a[: len(pivots)]]


def canonical_subspace(field, columns):
    """Canonical representation of span(columns): reduced column echelon
    basis, pivots ordered top to bottom."""
    return _echelon_columns(field, columns)


def subspace_contains(field, W, v):
    """Is v in the span of the echelon columns W?"""
    return reduce_mod_subspace(field, W, v) == zeros(field, len(v))


def pivot_rows(field, W):
    return [next(i for i, e in enumerate(col) if e != field.zero) for col in W]


def reduce_mod_subspace(field, W, v):
    """Canonical representative of v modulo the echelon-basis subspace W:
    entries at the pivot rows of W are cleared."""
    v = list(v)
    for col in W:
        r = next((i for i, e in enumerate(col) if e != field.zero), None)
        if r is None:
            continue
        c = field.div(v[r], col[r])
        if c != field.zero:
            v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, col)]
    return v


def subspaces(field, n, d):
    """All d-dimensional subspaces of F^n, each as a reduced column echelon
    basis.  Finite fields only; count is the Gaussian binomial [n choose d]_q."""
    if not field.is_finite:
        raise ValueError("subspace enumeration needs a finite field")
    if d == 0:
        yield []
        return
    els = list(field.elements())
    for pivots in combinations(range(n), d):
        free_positions = []
        for c, pr in enumerate(pivots):
            for r in range(pr + 1, n):
                if r not in pivots:
                    free_positions.append((c, r))
        for values in product(els, repeat=len(free_positions)):
            cols = []
            for c, pr in enumerate(pivots):
                col = zeros(field, n)
                col[pr] = field.one
                cols.append(col)
            for (c, r), val in zip(free_positions, values):
                cols[c][r] = val
            yield cols


def char_poly(field, A):
    """Characteristic polynomial det(z*I - A), monic, computed exactly."""
    n = len(A)
    entries = []
    for i in range(n):
        for j in range(n):
            diag = Poly.x(field) if i == j else Poly.zero(field)
            entries.append(diag - Poly.const(field, A[i][j]))
    return det(PolyMatrix(field, n, n, entries))
