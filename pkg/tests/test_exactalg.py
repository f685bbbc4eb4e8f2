"""Field arithmetic, polynomials and the three matrix normal forms."""

import random
from fractions import Fraction

import pytest
import sympy

from latslice.fields import GF, QQ
from latslice.poly import Poly, linear_roots, poly_gcd
from latslice.polymatrix import (
    PolyMatrix,
    column_reduce,
    det,
    hermite_basis,
    hermite_with_transform,
    is_unimodular,
    smith_normal_form,
)

import oracles


def P(field, *coeffs):
    return Poly(field, [field.from_int(c) for c in coeffs])


class TestFields:
    def test_rationals(self):
        a = QQ.parse("2/3")
        b = QQ.parse("-1/6")
        assert QQ.add(a, b) == Fraction(1, 2)
        assert QQ.mul(a, QQ.inv(a)) == QQ.one

    def test_prime_field(self):
        F = GF(7)
        assert F.add(F.from_int(5), F.from_int(4)) == 2
        assert F.mul(F.from_int(3), F.inv(F.from_int(3))) == F.one
        assert sorted(F.elements()) == list(range(7))

    def test_nonprime_rejected(self):
        with pytest.raises(ValueError):
            GF(6)
        with pytest.raises(ValueError):
            GF(1)

    def test_codes_roundtrip(self):
        from latslice.fields import Field

        for F in (QQ, GF(2), GF(97)):
            assert Field.from_code(F.code) == F


class TestPoly:
    def test_arith(self):
        F = GF(5)
        a = P(F, 1, 2)  # 1 + 2z
        b = P(F, 0, 0, 1)  # z^2
        assert (a * b).to_list() == [0, 0, 1, 2]
        assert (a + a).to_list() == [2, 4]
        assert a.degree == 1 and b.degree == 2
        assert Poly.zero(F).is_zero

    def test_divmod_exact(self):
        F = QQ
        num = P(F, -1, 0, 1)  # z^2 - 1
        q, r = divmod(num, P(F, -1, 1))
        assert q.to_list() == [1, 1] and r.is_zero
        assert num.exact_div(P(F, 1, 1)).to_list() == [-1, 1]

    def test_gcd_common_factor(self):
        # gcd(z^2 - 1, z - 1) = z - 1
        F = QQ
        g = poly_gcd(P(F, -1, 0, 1), P(F, -1, 1))
        assert g.to_list() == [-1, 1]

    def test_gcd_monic_normalization(self):
        # gcd(0, 3z + 3) = z + 1
        F = QQ
        g = poly_gcd(Poly.zero(F), P(F, 3, 3))
        assert g.to_list() == [1, 1]

    def test_gcd_char2(self):
        # gcd(z^2 + 1, z^2 + z) over F_2 = z + 1, by hand: z^2+1 = (z+1)^2
        F = GF(2)
        g = poly_gcd(P(F, 1, 0, 1), P(F, 0, 1, 1))
        assert g.to_list() == [1, 1]

    def test_gcd_of_zeros(self):
        assert poly_gcd(Poly.zero(QQ), Poly.zero(QQ)).is_zero

    def test_eval_and_valuation(self):
        F = GF(3)
        p = P(F, 0, 0, 1) * P(F, 2, 1)  # z^2 (z + 2)
        assert p.eval(F.zero) == F.zero
        assert p.valuation_at(F.zero) == 2
        assert p.valuation_at(F.one) == 1  # z + 2 vanishes at 1 over F_3

    def test_linear_roots_finite(self):
        F = GF(5)
        p = P(F, 0, 1) * P(F, 0, 1) * P(F, -2, 1)
        roots, residual = linear_roots(p)
        assert roots == {F.zero: 2, F.from_int(2): 1}
        assert residual.degree == 0

    def test_linear_roots_rational(self):
        p = P(QQ, 0, 1) * P(QQ, -3, 1)
        roots, residual = linear_roots(p)
        assert roots == {Fraction(0): 1, Fraction(3): 1}
        assert residual.degree == 0

    def test_linear_roots_irreducible_residual(self):
        p = P(QQ, 1, 0, 1)  # z^2 + 1
        roots, residual = linear_roots(p)
        assert roots == {} and residual.degree == 2


def mat(field, rowlists):
    return PolyMatrix.from_rows(
        field, [[P(field, *e) if isinstance(e, (tuple, list)) else e for e in r] for r in rowlists]
    )


class TestDet:
    def test_identity(self):
        assert det(PolyMatrix.identity(QQ, 3)).to_list() == [1]

    def test_diagonal(self):
        F = GF(3)
        M = PolyMatrix.diagonal(F, [P(F, 0, 1), P(F, 0, 0, 1)])
        assert det(M).to_list() == [0, 0, 0, 1]

    def test_triangular(self):
        F = GF(3)
        M = mat(F, [[(0, 1), (1,)], [(0,), (0, 1)]])
        assert det(M).to_list() == [0, 0, 1]

    def test_matches_sympy(self):
        rng = random.Random(11)
        z = sympy.Symbol("z")
        for _ in range(25):
            n = rng.randint(1, 3)
            rows = [
                [[rng.randint(-3, 3) for _ in range(rng.randint(1, 3))] for _ in range(n)]
                for _ in range(n)
            ]
            M = mat(QQ, rows)
            expect = sympy.Matrix(
                [[sum(c * z**i for i, c in enumerate(e)) for e in r] for r in rows]
            ).det()
            got = sum(c * z**i for i, c in enumerate(det(M).to_list()))
            assert sympy.expand(got - expect) == 0


class TestSmith:
    def test_already_diagonal(self):
        F = QQ
        M = PolyMatrix.diagonal(F, [Poly.one(F), P(F, 0, 1)])
        U, D, V = smith_normal_form(M)
        assert D == M
        assert U == PolyMatrix.identity(F, 2) and V == PolyMatrix.identity(F, 2)

    def test_jordan_block(self):
        # [[z,1],[0,z]] has elementary divisors 1, z^2
        F = GF(3)
        M = mat(F, [[(0, 1), (1,)], [(0,), (0, 1)]])
        U, D, V = smith_normal_form(M)
        assert D.entry(0, 0).to_list() == [1]
        assert D.entry(1, 1).to_list() == [0, 0, 1]
        assert U * M * V == D
        divs = oracles.minor_gcd_divisors([[sympy.Symbol("z"), 1], [0, sympy.Symbol("z")]], modulus=3)
        assert [d.as_expr() for d in divs] == [1, sympy.Symbol("z") ** 2]

    def test_divisibility_reordering(self):
        F = QQ
        M = PolyMatrix.diagonal(F, [P(F, 0, 0, 1), P(F, 0, 1)])
        U, D, V = smith_normal_form(M)
        assert D.entry(0, 0).to_list() == [0, 1]
        assert D.entry(1, 1).to_list() == [0, 0, 1]

    def test_singular_rejected(self):
        F = QQ
        M = mat(F, [[(0, 1), (0, 1)], [(0, 1), (0, 1)]])
        with pytest.raises(ValueError):
            smith_normal_form(M)

    def test_against_minor_gcd_oracle(self):
        rng = random.Random(3)
        z = sympy.Symbol("z")
        for _ in range(15):
            n = rng.randint(2, 3)
            rows = [
                [[rng.randint(0, 2) for _ in range(rng.randint(1, 3))] for _ in range(n)]
                for _ in range(n)
            ]
            M = mat(GF(3), rows)
            if det(M).is_zero:
                continue
            _, D, _ = smith_normal_form(M)
            srows = [
                [sum(c * z**i for i, c in enumerate(e)) for e in r] for r in rows
            ]
            expect = oracles.minor_gcd_divisors(srows, modulus=3)
            for t, d in enumerate(expect):
                got = sum(
                    int(c) * z**i for i, c in enumerate(D.entry(t, t).to_list())
                )
                assert sympy.Poly(got, z, modulus=3) == d


class TestHermite:
    def test_full_module(self):
        F = QQ
        gens = PolyMatrix.from_cols(
            F, [[P(F, 0, 1), Poly.zero(F)], [Poly.one(F), Poly.zero(F)], [Poly.zero(F), Poly.one(F)]]
        )
        assert hermite_basis(gens) == PolyMatrix.identity(F, 2)

    def test_scaled(self):
        F = GF(2)
        M = PolyMatrix.diagonal(F, [P(F, 0, 1), P(F, 0, 1)])
        assert hermite_basis(M) == M

    def test_coprime_generators(self):
        # (z-1) e1, z e1 and e2 generate everything
        F = QQ
        gens = PolyMatrix.from_cols(
            F,
            [
                [P(F, -1, 1), Poly.zero(F)],
                [P(F, 0, 1), Poly.zero(F)],
                [Poly.zero(F), Poly.one(F)],
            ],
        )
        assert hermite_basis(gens) == PolyMatrix.identity(F, 2)

    def test_rank_deficient_rejected(self):
        F = QQ
        gens = PolyMatrix.from_cols(F, [[P(F, 0, 1), Poly.zero(F)]] * 2)
        with pytest.raises(ValueError):
            hermite_basis(gens)

    def test_canonical_under_regenerating(self):
        rng = random.Random(5)
        F = GF(3)
        for _ in range(25):
            M = mat(
                F,
                [
                    [[rng.randint(0, 2) for _ in range(rng.randint(1, 3))] for _ in range(2)]
                    for _ in range(2)
                ],
            )
            if det(M).is_zero:
                continue
            H = hermite_basis(M)
            # right-multiplying by a unimodular matrix keeps the module
            T = mat(F, [[(1,), (rng.randint(0, 2), rng.randint(0, 2))], [(0,), (1,)]])
            assert hermite_basis(M * T) == H

    def test_transform_tracks_kernel(self):
        F = GF(3)
        M = mat(F, [[(0, 1), (1,), (0, 1)], [(0,), (0, 1), (0, 1)]])
        H, V = hermite_with_transform(M)
        assert is_unimodular(V)
        assert M * V == H
        for j in range(2, 3):
            assert all(p.is_zero for p in H.col(j))


class TestColumnReduce:
    def test_diagonal_fixed(self):
        F = QQ
        M = PolyMatrix.diagonal(F, [P(F, 0, 1), P(F, 0, 0, 1)])
        R, degs = column_reduce(M)
        assert degs == [1, 2]

    def test_unimodular_degs_zero(self):
        F = GF(2)
        M = mat(F, [[(1,), (0, 1)], [(0,), (1,)]])
        R, degs = column_reduce(M)
        assert degs == [0, 0]

    def test_jordan_block(self):
        F = GF(3)
        M = mat(F, [[(0, 1), (1,)], [(0,), (0, 1)]])
        R, degs = column_reduce(M)
        assert sorted(degs) == [1, 1]

    def test_degree_sum_is_det_degree(self):
        rng = random.Random(17)
        for F in (GF(2), QQ):
            for _ in range(25):
                n = rng.randint(1, 3)
                M = mat(
                    F,
                    [
                        [
                            [rng.randint(-2, 2) for _ in range(rng.randint(1, 3))]
                            for _ in range(n)
                        ]
                        for _ in range(n)
                    ],
                )
                if det(M).is_zero:
                    continue
                R, degs = column_reduce(M)
                assert sum(degs) == det(M).degree


class TestUnimodular:
    def test_cases(self):
        F = QQ
        assert is_unimodular(PolyMatrix.identity(F, 2))
        assert not is_unimodular(PolyMatrix.diagonal(F, [P(F, 0, 1), Poly.one(F)]))
        assert is_unimodular(mat(F, [[(1,), (0, 1)], [(0,), (1,)]]))
