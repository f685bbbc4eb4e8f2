"""Exact normal forms of polynomial matrices.

Walks through the three canonical forms on a 2x2 example over F_3 and shows
the postcondition identities holding exactly.
"""

from latslice.fields import GF
from latslice.poly import Poly
from latslice.polymatrix import (
    PolyMatrix,
    column_reduce,
    det,
    hermite_basis,
    is_unimodular,
    smith_normal_form,
)

F = GF(3)
z = Poly.x(F)
one = Poly.one(F)
zero = Poly.zero(F)

# the Jordan-like block [[z, 1], [0, z]]
M = PolyMatrix.from_rows(F, [[z, one], [zero, z]])
print("M =", M.to_rowlists())
print("det M =", det(M))

U, D, V = smith_normal_form(M)
print("\nSmith form D =", D.to_rowlists())
print("U * M * V == D:", U * M * V == D)
print("U, V unimodular:", is_unimodular(U), is_unimodular(V))

H = hermite_basis(M)
print("\nHermite column basis H =", H.to_rowlists())

R, degs = column_reduce(M)
print("\ncolumn-reduced form =", R.to_rowlists())
print("column degrees:", degs, " sum = deg det:", sum(degs) == det(M).degree)
