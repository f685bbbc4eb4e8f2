"""Counting fibers over finite fields and fitting polynomials in q.

Three counting regimes: unconstrained chains (a product of Gaussian
binomials), the trivial locus (where the chain and slice models must agree),
and the central fiber (whose counts grow like a polynomial with leading
coefficient the tensor-invariant dimension).
"""

from latslice.fields import GF
from latslice.countlab import FiberQuery, count_chain_fiber, count_slice_fiber, fit_q_polynomial
from latslice.reptheory import WeightSeq, gaussian_binomial, invariant_dim

# unconstrained: every step freely picks a hyperplane-type modification
F = GF(3)
pts = (F.zero, F.one, F.from_int(2), F.zero)
q = FiberQuery(2, 2, (1, 1, 1, 1), pts, F, "any")
print("any-count:", count_chain_fiber(q).count, "== (q+1)^4 =", (3 + 1) ** 4)

# trivial locus: two models of the same variety
q = FiberQuery(2, 1, (1, 1), (F.zero, F.one), F, "trivial")
print("\ntrivial chain count:", count_chain_fiber(q).count)
print("slice count:        ", count_slice_fiber(q).count)

# central fiber: counts over growing fields, fitted exactly
samples = []
for p in (2, 3, 5):
    Fp = GF(p)
    q = FiberQuery(2, 2, (1, 1, 1, 1), (Fp.zero,) * 4, Fp, "exact-zk")
    samples.append((p, count_chain_fiber(q).count))
print("\ncentral-fiber samples:", samples)
fit = fit_q_polynomial(samples)
print("fit coefficients (ascending):", fit.coefficients)
print("leading coefficient:", fit.coefficients[-1],
      "= invariant_dim:", invariant_dim(WeightSeq(2, (1, 1, 1, 1))))
print("gaussian_binomial(2,1,q) at q=3:", gaussian_binomial(2, 1, 3))
