"""Scalar linear algebra: echelon forms, kernels, subspace enumeration."""

import random

import sympy

from latslice import linalg
from latslice.fields import GF, QQ
from latslice.reptheory import gaussian_binomial


def test_rref_pivots():
    F = GF(5)
    rows = [[1, 2, 3], [2, 4, 1], [0, 0, 4]]
    a, pivots = linalg.rref(F, rows)
    assert pivots == [0, 2]
    assert a[0][:2] == [1, 2]


def test_kernel_and_solve():
    F = GF(3)
    rows = [[1, 1, 0], [0, 1, 1]]
    ker = linalg.kernel_basis(F, rows)
    assert len(ker) == 1
    assert linalg.mat_vec(F, rows, ker[0]) == [0, 0]
    x = linalg.solve(F, rows, [2, 1])
    assert linalg.mat_vec(F, rows, x) == [2, 1]
    assert linalg.solve(F, [[1, 0], [1, 0]], [0, 1]) is None


def test_canonical_subspace_is_canonical():
    F = GF(3)
    a = linalg.canonical_subspace(F, [[1, 2], [2, 4]])
    b = linalg.canonical_subspace(F, [[2, 4]])
    assert a == b
    assert len(a) == 1


def test_subspace_membership():
    F = GF(2)
    W = linalg.canonical_subspace(F, [[1, 0, 1], [0, 1, 1]])
    assert linalg.subspace_contains(F, W, [1, 1, 0])
    assert not linalg.subspace_contains(F, W, [0, 0, 1])


def test_subspace_enumeration_counts():
    for q in (2, 3):
        F = GF(q)
        for n in range(1, 4):
            for d in range(n + 1):
                got = list(linalg.subspaces(F, n, d))
                assert len(got) == gaussian_binomial(n, d, q)
                assert len({tuple(tuple(c) for c in W) for W in got}) == len(got)


def test_char_poly_matches_sympy():
    rng = random.Random(13)
    z = sympy.Symbol("z")
    for _ in range(20):
        n = rng.randint(1, 4)
        A = [[QQ.from_int(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        got = linalg.char_poly(QQ, A)
        expr = sum(int(c) * z**i for i, c in enumerate(got.to_list()))
        expect = sympy.Matrix([[int(e) for e in row] for row in A]).charpoly(z).as_expr()
        assert sympy.expand(expr - expect) == 0
