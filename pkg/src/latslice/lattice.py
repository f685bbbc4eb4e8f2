"""Full-rank k[z]-lattices in k[z]^m, lattice chains, Hecke types at marked
points, triviality and splitting-type tests, and factorization over disjoint
point sets.

Lattices are stored by their canonical Hermite basis, so equality is
structural and independent of the presenting generators.
"""

from . import linalg
from .poly import Poly, linear_roots
from .polymatrix import (
    PolyMatrix,
    column_reduce,
    det,
    hermite_basis,
    hermite_with_transform,
    smith_normal_form,
)


class HeckeType:
    """A weakly decreasing integer vector: a dominant GL_m coweight."""

    def __init__(self, entries):
        entries = tuple(int(e) for e in entries)
        if any(entries[i] < entries[i + 1] for i in range(len(entries) - 1)):
            raise ValueError("entries must be weakly decreasing")
        self.entries = entries

    @staticmethod
    def minuscule(m, j):
        """omega_j for GL_m: (1^j, 0^(m-j))."""
        if not 1 <= j <= m - 1:
            raise ValueError("need 1 <= j <= m-1")
        return HeckeType((1,) * j + (0,) * (m - j))

    @property
    def total(self):
        return sum(self.entries)

    @property
    def is_zero(self):
        return all(e == 0 for e in self.entries)

    def __eq__(self, other):
        return isinstance(other, HeckeType) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"HeckeType{self.entries}"


class ColouredDivisor:
    """A finite map from points of the affine line to nonzero Hecke types."""

    def __init__(self, assignments):
        self.assignments = {x: t for x, t in dict(assignments).items() if not t.is_zero}

    @property
    def total(self):
        return sum(t.total for t in self.assignments.values())

    def support(self):
        return set(self.assignments)

    def restrict(self, points):
        return ColouredDivisor({x: t for x, t in self.assignments.items() if x in points})

    def __eq__(self, other):
        return isinstance(other, ColouredDivisor) and self.assignments == other.assignments

    def __repr__(self):
        return f"ColouredDivisor({self.assignments!r})"


class Lattice:
    """A full-rank k[z]-submodule of k[z]^m, held in canonical Hermite form."""

    def __init__(self, field, basis):
        if basis.cols < basis.rows:
            raise ValueError("not enough generators for a full-rank lattice")
        self.field = field
        self.m = basis.rows
        self.basis = hermite_basis(basis)

    def __eq__(self, other):
        return (
            isinstance(other, Lattice)
            and self.field == other.field
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field, self.basis))

    def __repr__(self):
        return f"Lattice(m={self.m}, basis={self.basis!r})"


def standard_lattice(m, field):
    if m < 1:
        raise ValueError("rank must be positive")
    return Lattice(field, PolyMatrix.identity(field, m))


def transition_matrix(outer, inner):
    """basis(outer)^-1 * basis(inner); polynomial iff inner is contained in
    outer.  Returns None when some entry fails to be polynomial."""
    _check_pair(outer, inner)
    B = outer.basis
    d = det(B)
    m = outer.m
    # adjugate via Cramer: solve column by column with exact division by det
    cols = []
    for j in range(m):
        target = inner.basis.col(j)
        col = []
        for i in range(m):
            # replace column i of B by target, take det
            repl = PolyMatrix.from_cols(
                B.field, [target if t == i else B.col(t) for t in range(m)]
            )
            q, r = divmod(det(repl), d)
            if not r.is_zero:
                return None
            col.append(q)
        cols.append(col)
    return PolyMatrix.from_cols(outer.field, cols)


def contains(outer, inner):
    """True iff inner is a sublattice of outer."""
    return transition_matrix(outer, inner) is not None


def colength(outer, inner):
    """dim of outer/inner as a field vector space = deg det(transition)."""
    T = transition_matrix(outer, inner)
    if T is None:
        raise ValueError("inner is not contained in outer")
    return int(det(T).degree)


def hecke_type_at(outer, inner, x):
    """(z-x)-adic valuations of the Smith divisors of the transition matrix,
    sorted weakly decreasing: the GL_m Hecke type of the modification at x."""
    T = transition_matrix(outer, inner)
    if T is None:
        raise ValueError("inner is not contained in outer")
    _, D, _ = smith_normal_form(T)
    vals = [D.entry(i, i).valuation_at(x) for i in range(T.rows)]
    return HeckeType(sorted(vals, reverse=True))


def divisor_of_pair(outer, inner):
    """The coloured divisor of the pair: x -> hecke_type_at(outer, inner, x)
    over all roots of det(transition).  Over Q an irreducible nonlinear
    residual factor is an error (no field extensions)."""
    T = transition_matrix(outer, inner)
    if T is None:
        raise ValueError("inner is not contained in outer")
    d = det(T)
    roots, residual = linear_roots(d)
    if residual.degree >= 1:
        raise ValueError(
            f"determinant has a rootless factor over the base field: {residual!r}"
        )
    _, D, _ = smith_normal_form(T)
    divisors = [D.entry(i, i) for i in range(T.rows)]
    assignments = {}
    for x in roots:
        vals = sorted((p.valuation_at(x) for p in divisors), reverse=True)
        assignments[x] = HeckeType(vals)
    return ColouredDivisor(assignments)


def lattice_sum(L1, L2):
    _check_pair(L1, L2)
    return Lattice(L1.field, hermite_basis(L1.basis.hstack(L2.basis)))


def intersect(L1, L2):
    """Module-theoretic intersection, via the kernel of [B1 | B2]."""
    _check_pair(L1, L2)
    m = L1.m
    stacked = L1.basis.hstack(L2.basis)  # m x 2m, rank m
    H, V = hermite_with_transform(stacked)
    gens = []
    for j in range(m, 2 * m):  # kernel columns: (a; b) with B1 a = B2 b
        a = [V.entry(i, j) for i in range(m)]
        gens.append(L1.basis.mul_vec(a))
    return Lattice(L1.field, PolyMatrix.from_cols(L1.field, gens))


def quotient_presentation(L):
    """The quotient k[z]^m / L presented through the Smith form of its basis.

    U*B*V = D gives k[z]^m / L  =  (+) k[z]/(d_i)  via v -> U v, so a vector
    has field coordinates given blockwise by (U v)_i mod d_i.
    """
    U, D, _ = smith_normal_form(L.basis)
    divisors = [D.entry(i, i) for i in range(L.m)]
    return QuotientPresentation(L.field, U, divisors)


class QuotientPresentation:
    def __init__(self, field, U, divisors):
        self.field = field
        self.U = U
        self.divisors = divisors
        self.block_degrees = [int(d.degree) for d in divisors]
        self.dim = sum(self.block_degrees)

    def coords(self, vec):
        """Field coordinates of the class of a polynomial vector."""
        w = self.U.mul_vec(vec)
        out = []
        for wi, di, deg in zip(w, self.divisors, self.block_degrees):
            r = wi % di if deg > 0 else Poly.zero(self.field)
            out.extend(r.coeff(t) for t in range(deg))
        return out

    def monomial_coords(self, m, k):
        """Columns of coordinates of z^i e_j, i < k, in the basis ordering
        (e_1..e_m, z e_1..z e_m, ..., z^(k-1) e_1..z^(k-1) e_m)."""
        cols = []
        for i in range(k):
            for j in range(m):
                vec = [Poly.zero(self.field)] * m
                vec[j] = Poly.monomial(self.field, self.field.one, i)
                cols.append(self.coords(vec))
        return cols


def quotient_basis_trivial(L, k):
    """Do the m*k monomial classes {z^i e_j : 0 <= i < k} form a basis of
    k[z]^m / L?  Precondition: colength(standard, L) = m*k."""
    if k < 1:
        raise ValueError("k must be positive")
    pres = quotient_presentation(L)
    if pres.dim != L.m * k:
        raise ValueError(f"colength {pres.dim} != m*k = {L.m * k}")
    cols = pres.monomial_coords(L.m, k)
    rows = [list(r) for r in zip(*cols)]
    return linalg.rank(L.field, rows) == L.m * k


def splitting_type(L):
    """Grothendieck splitting type of the bundle glued from L over the affine
    line and the standard lattice at infinity.  Sign convention: the
    sublattice z^a k[z] of k[z] has splitting type (-a)."""
    _, degs = column_reduce(L.basis)
    return tuple(sorted((-d for d in degs), reverse=True))


def factorize(L, S1, S2):
    """Split L into lattices supported on the disjoint point sets S1, S2.

    L^(i) = L + f_i^c * standard, where f_i is the monic product of (z - x)
    over S_i and c the total colength; the divisor of L^(i) is the divisor of
    L restricted to S_i and the two factors intersect back to L.
    """
    S1, S2 = set(S1), set(S2)
    if S1 & S2:
        raise ValueError("point sets must be disjoint")
    F = L.field
    std = standard_lattice(L.m, F)
    div = divisor_of_pair(std, L)
    if not div.support() <= (S1 | S2):
        raise ValueError("divisor support not covered by the point sets")
    c = colength(std, L)
    out = []
    for S in (S1, S2):
        f = Poly.from_roots(F, sorted(S, key=_point_key)) ** c
        scaled = PolyMatrix.identity(F, L.m).scale_poly(f)
        out.append(lattice_sum(L, Lattice(F, scaled)))
    return out[0], out[1]


def _point_key(x):
    return (str(type(x)), str(x))


def _check_pair(L1, L2):
    if L1.field != L2.field or L1.m != L2.m:
        raise ValueError("lattices live in different ambient modules")


class LatticeChain:
    """A decreasing chain L_0 = k[z]^m > L_1 > ... > L_n with marked points
    x_i and minuscule types pi_i (step i is a colength-pi_i modification at
    x_i).  L_0 is implicit."""

    def __init__(self, m, field, points, types, lattices):
        self.m = m
        self.field = field
        self.points = tuple(points)
        self.types = tuple(int(t) for t in types)
        self.lattices = tuple(lattices)
        self.n = len(self.points)
        if not (len(self.types) == len(self.lattices) == self.n):
            raise ValueError("points, types and lattices must have equal length")
        if any(not 1 <= t <= m - 1 for t in self.types):
            raise ValueError("types must lie in 1..m-1")

    @property
    def end(self):
        return self.lattices[-1] if self.lattices else standard_lattice(self.m, self.field)

    def __eq__(self, other):
        return (
            isinstance(other, LatticeChain)
            and (self.m, self.field) == (other.m, other.field)
            and self.points == other.points
            and self.types == other.types
            and self.lattices == other.lattices
        )

    def __hash__(self):
        return hash((self.m, self.field, self.points, self.types, self.lattices))

    def __repr__(self):
        return (
            f"LatticeChain(m={self.m}, points={self.points}, types={self.types})"
        )


def validate_chain(chain):
    """Check every chain invariant; returns a list of failure strings (empty
    means valid).  Step i must be a containment of colength pi_i whose whole
    Hecke type is omega_(pi_i) concentrated at x_i."""
    failures = []
    prev = standard_lattice(chain.m, chain.field)
    for i, (x, j, L) in enumerate(zip(chain.points, chain.types, chain.lattices), 1):
        T = transition_matrix(prev, L)
        if T is None:
            failures.append(f"step {i}: L_{i} is not contained in L_{i-1}")
            prev = L
            continue
        c = int(det(T).degree)
        if c != j:
            failures.append(f"step {i}: colength {c} != type {j}")
        try:
            divisor = divisor_of_pair(prev, L)
        except ValueError as e:
            failures.append(f"step {i}: {e}")
            prev = L
            continue
        expected = (
            ColouredDivisor({x: HeckeType.minuscule(chain.m, j)})
            if c == j
            else None
        )
        if expected is not None and divisor != expected:
            failures.append(
                f"step {i}: modification is not omega_{j} concentrated at the marked point"
            )
        prev = L
    return failures
