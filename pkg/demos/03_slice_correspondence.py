"""The bijection between lattice chains and flagged slice matrices.

A chain with trivial endpoint determines multiplication-by-z on the quotient
(a matrix in the slice) plus a compatible flag; the inverse map rebuilds the
chain from degree-bounded lifts.
"""

from latslice.fields import GF
from latslice.lattice import Lattice, LatticeChain
from latslice.poly import Poly
from latslice.polymatrix import PolyMatrix
from latslice.slicecorr import base_point, chain_to_slice, slice_to_chain, validate_point

F = GF(3)
z = Poly.x(F)
one = Poly.one(F)
zero = Poly.zero(F)

L1 = Lattice(F, PolyMatrix.from_cols(F, [[z, zero], [zero, one]]))
L2 = Lattice(F, PolyMatrix.from_cols(F, [[z, zero], [zero, z - one]]))
chain = LatticeChain(2, F, (F.zero, F.one), (1, 1), (L1, L2))

p = chain_to_slice(chain)
print("Y =", [list(r) for r in p.Y.entries])
print("flag dims:", p.flag.dims())
print("W_1 =", p.flag.subspace(0))
print("eigenvalues:", p.eigenvalues)
print("point valid:", validate_point(p) == [])

back = slice_to_chain(p)
print("\nroundtrip recovers the chain:", back == chain)

# the all-zero chain ending at z^k times the standard lattice maps to the
# nilpotent base matrix of the slice
zk = Poly.monomial(F, F.one, 2)
Lmid = Lattice(F, PolyMatrix.from_cols(F, [[z, zero], [zero, one]]))
La = Lattice(F, PolyMatrix.from_cols(F, [[z, zero], [zero, z]]))
Lb = Lattice(F, PolyMatrix.from_cols(F, [[z * z, zero], [zero, z]]))
Lend = Lattice(F, PolyMatrix.identity(F, 2).scale_poly(zk))
central = LatticeChain(2, F, (F.zero,) * 4, (1, 1, 1, 1), (Lmid, La, Lb, Lend))
print("\ncentral chain maps to the base point:",
      chain_to_slice(central).Y == base_point(2, 2, F))
