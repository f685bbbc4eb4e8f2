"""Lattices in k[z]^2 as modifications of the standard lattice.

Builds a two-step chain of elementary modifications at the points 0 and 1,
reads off Hecke types and coloured divisors, and factorizes the endpoint by
support.
"""

from latslice.fields import QQ
from latslice.lattice import (
    Lattice,
    LatticeChain,
    colength,
    divisor_of_pair,
    factorize,
    hecke_type_at,
    intersect,
    splitting_type,
    standard_lattice,
    validate_chain,
)
from latslice.poly import Poly
from latslice.polymatrix import PolyMatrix

F = QQ
z = Poly.x(F)
one = Poly.one(F)
zero = Poly.zero(F)

std = standard_lattice(2, F)
L1 = Lattice(F, PolyMatrix.from_cols(F, [[z, zero], [zero, one]]))
L2 = Lattice(F, PolyMatrix.from_cols(F, [[z, zero], [zero, z - one]]))

print("colength of L1:", colength(std, L1))
print("hecke type of L1 at 0:", hecke_type_at(std, L1, F.zero).entries)
print("divisor of L2:", divisor_of_pair(std, L2))
print("splitting type of L2:", splitting_type(L2))

chain = LatticeChain(2, F, (F.zero, F.one), (1, 1), (L1, L2))
print("\nchain valid:", validate_chain(chain) == [])

# the endpoint decomposes along its two support points
A, B = factorize(L2, {F.zero}, {F.one})
print("\nfactor at 0:", divisor_of_pair(std, A))
print("factor at 1:", divisor_of_pair(std, B))
print("intersection reconstructs L2:", intersect(A, B) == L2)
