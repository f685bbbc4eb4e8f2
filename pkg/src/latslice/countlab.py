"""Finite-field enumeration of fibers in both models, exact polynomial-in-q
fitting, and the cross-model verification suites."""

import time
from fractions import Fraction
from itertools import permutations, product

from . import linalg
from .lattice import (
    Lattice,
    LatticeChain,
    colength,
    quotient_basis_trivial,
    standard_lattice,
)
from .poly import Poly
from .polymatrix import PolyMatrix
from .reptheory import WeightSeq, gaussian_binomial, invariant_dim
from .slicecorr import Flag, SliceMatrix, SlicePoint, chain_to_slice, slice_to_chain

END_CONDITIONS = ("any", "trivial", "exact-zk")


class FiberQuery:
    def __init__(self, m, k, types, points, field, end_condition="any"):
        if end_condition not in END_CONDITIONS:
            raise ValueError(f"unknown end condition {end_condition!r}")
        self.m = m
        self.k = k
        self.types = types if isinstance(types, WeightSeq) else WeightSeq(m, types)
        self.points = tuple(points)
        self.field = field
        self.end_condition = end_condition
        if len(self.points) != len(self.types):
            raise ValueError("points and types must have equal length")
        if end_condition != "any" and self.types.total != m * k:
            raise ValueError("total type must equal m*k for a trivial/exact end")

    def __repr__(self):
        return (
            f"FiberQuery(m={self.m}, k={self.k}, types={self.types.entries}, "
            f"points={self.points}, field={self.field!r}, end={self.end_condition})"
        )

    def to_json(self):
        return {
            "m": self.m,
            "k": self.k,
            "types": list(self.types.entries),
            "points": [self.field.format(x) for x in self.points],
            "field": self.field.code,
            "end": self.end_condition,
        }


class CountReport:
    def __init__(self, query, count, elapsed_ms, witnesses=None):
        self.query = query
        self.count = count
        self.elapsed_ms = elapsed_ms
        self.witnesses = witnesses
        if witnesses is not None and count != len(witnesses):
            raise ValueError("witness list does not match the count")

    def to_json(self):
        out = {
            "query": self.query.to_json(),
            "count": self.count,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.witnesses is not None:
            out["witnesses"] = len(self.witnesses)
        return out


def step_choices(L, x, j):
    """All sublattices L' with (z-x) L <= L' <= L and colength(L, L') = j:
    the codimension-j subspaces of the m-dimensional quotient L/(z-x)L."""
    F = L.field
    if not F.is_finite:
        raise ValueError("step enumeration needs a finite field")
    m = L.m
    if not 1 <= j <= m - 1:
        raise ValueError("need 1 <= j <= m-1")
    lin = Poly(F, (F.neg(x), F.one))
    shifted = L.basis.scale_poly(lin)
    out = []
    for S in linalg.subspaces(F, m, m - j):
        gens = [
            L.basis.mul_vec([Poly.const(F, c) for c in col]) for col in S
        ]
        gens += shifted.columns()
        out.append(Lattice(F, PolyMatrix.from_cols(F, gens)))
    return out


def _end_ok(query, L):
    if query.end_condition == "any":
        return True
    if query.end_condition == "trivial":
        return quotient_basis_trivial(L, query.k)
    zk = Poly.monomial(query.field, query.field.one, query.k)
    target = Lattice(query.field, PolyMatrix.identity(query.field, query.m).scale_poly(zk))
    return L == target


def count_chain_fiber(query, witnesses=False, jobs=1):
    """Depth-first enumeration of lattice chains for the query, filtered by
    its end condition."""
    if not query.field.is_finite:
        raise ValueError("chain counting needs a finite field")
    t0 = time.perf_counter()
    std = standard_lattice(query.m, query.field)
    if query.points:
        first = step_choices(std, query.points[0], query.types.entries[0])
    else:
        first = [std] if _end_ok(query, std) else []
    subtasks = [(query, L1, witnesses) for L1 in first]
    if not query.points:
        count = len(first)
        wit = [LatticeChain(query.m, query.field, (), (), ())] * count if witnesses else None
    elif jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_count_subtree_task, subtasks)
        count = sum(c for c, _ in results)
        wit = [w for _, ws in results for w in ws] if witnesses else None
    else:
        results = [_count_subtree_task(t) for t in subtasks]
        count = sum(c for c, _ in results)
        wit = [w for _, ws in results for w in ws] if witnesses else None
    elapsed = int((time.perf_counter() - t0) * 1000)
    return CountReport(query, count, elapsed, wit)


def _count_subtree_task(task):
    query, L1, witnesses = task
    count = 0
    found = []

    def rec(prefix):
        nonlocal count
        depth = len(prefix)
        if depth == len(query.points):
            if _end_ok(query, prefix[-1]):
                count += 1
                if witnesses:
                    found.append(
                        LatticeChain(
                            query.m,
                            query.field,
                            query.points,
                            query.types.entries,
                            prefix,
                        )
                    )
            return
        x = query.points[depth]
        j = query.types.entries[depth]
        for nxt in step_choices(prefix[-1], x, j):
            rec(prefix + [nxt])

    rec([L1])
    return count, found


def enumerate_slice_matrices(m, k, field):
    """All matrices in the slice over a finite field: the free entries are
    the last block column."""
    if not field.is_finite:
        raise ValueError("slice enumeration needs a finite field")
    N = m * k
    els = list(field.elements())
    base = [[field.zero] * N for _ in range(N)]
    for i in range(N - m):
        base[i + m][i] = field.one
    for values in product(els, repeat=N * m):
        rows = [list(r) for r in base]
        t = 0
        for i in range(N):
            for j in range(N - m, N):
                rows[i][j] = values[t]
                t += 1
        yield SliceMatrix(m, k, field, rows)


def _stable_flags(field, Yrows, points, types):
    """All flags W_1 < ... < W_n compatible with Y: Y-stable steps, scalar
    x_(n-i+1) and jump pi_(n-i+1) on W_i/W_(i-1)."""
    N = len(Yrows)
    n = len(points)

    def rec(i, W):
        if i > n:
            if len(W) == N:
                yield []
            return
        x = points[n - i]
        d = types[n - i]
        # quotient by W: coordinates at non-pivot rows
        pivots = linalg.pivot_rows(field, W)
        others = [r for r in range(N) if r not in pivots]
        if len(others) < d:
            return
        qmat = []
        for r in others:
            e = [field.zero] * N
            e[r] = field.one
            img = linalg.mat_vec(field, Yrows, e)
            img = [field.sub(a, field.mul(x, b)) for a, b in zip(img, e)]
            red = linalg.reduce_mod_subspace(field, W, img)
            qmat.append([red[t] for t in others])
        # rows of the induced (Y - x) on the quotient, as columns per r
        rows = [[qmat[c][r] for c in range(len(others))] for r in range(len(others))]
        ker = linalg.kernel_basis(field, rows)
        if len(ker) < d:
            return
        for S in linalg.subspaces(field, len(ker), d):
            lifted = []
            for col in S:
                v = [field.zero] * N
                for c, kv in zip(col, ker):
                    if c != field.zero:
                        for t, r in enumerate(others):
                            v[r] = field.add(v[r], field.mul(c, kv[t]))
                lifted.append(v)
            Wnew = linalg.canonical_subspace(field, [list(w) for w in W] + lifted)
            if len(Wnew) != len(W) + d:
                continue
            for rest in rec(i + 1, Wnew):
                yield [Wnew] + rest

    for flags in rec(1, []):
        yield flags


def count_slice_fiber(query, witnesses=False):
    """Enumerate slice matrices with the prescribed characteristic polynomial
    and their compatible flags; the slice model is the trivial locus, so the
    end condition must be 'trivial'."""
    if not query.field.is_finite:
        raise ValueError("slice counting needs a finite field")
    if query.end_condition != "trivial":
        raise ValueError("the slice model counts the trivial locus only")
    t0 = time.perf_counter()
    F = query.field
    target = Poly.one(F)
    for x, j in zip(query.points, query.types.entries):
        target = target * Poly(F, (F.neg(x), F.one)) ** j
    count = 0
    found = [] if witnesses else None
    for Y in enumerate_slice_matrices(query.m, query.k, F):
        Yrows = Y.rows()
        if linalg.char_poly(F, Yrows) != target:
            continue
        for flags in _stable_flags(F, Yrows, query.points, query.types.entries):
            count += 1
            if witnesses:
                found.append(SlicePoint(Y, Flag(F, Y.N, flags), query.points))
    elapsed = int((time.perf_counter() - t0) * 1000)
    return CountReport(query, count, elapsed, found)


class FitResult:
    def __init__(self, success, coefficients=None, reason=None):
        self.success = success
        self.coefficients = coefficients  # ascending powers of q
        self.reason = reason

    @property
    def degree(self):
        return len(self.coefficients) - 1 if self.coefficients else None

    def eval(self, q):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * q + c
        return acc

    def to_json(self):
        if self.success:
            return {"success": True, "coefficients": list(self.coefficients)}
        return {"success": False, "reason": self.reason}


def fit_q_polynomial(samples, degree=None):
    """Exact Lagrange interpolation of (q, count) samples over the rationals.

    When degree is given, the first degree+1 samples interpolate and the rest
    are held-out checks; otherwise all samples interpolate.  Success requires
    nonnegative integer coefficients and matching held-out samples.
    """
    samples = list(samples)
    if degree is None:
        fit_pts, held = samples, []
    else:
        if len(samples) < degree + 1:
            raise ValueError("not enough samples for the requested degree")
        fit_pts, held = samples[: degree + 1], samples[degree + 1 :]
    qs = [q for q, _ in fit_pts]
    if len(set(qs)) != len(qs):
        raise ValueError("sample q values must be distinct")
    n = len(fit_pts)
    coeffs = [Fraction(0)] * n
    for qi, ci in fit_pts:
        num = [Fraction(1)]
        den = Fraction(1)
        for qj, _ in fit_pts:
            if qj == qi:
                continue
            num = _poly_mul_q(num, [Fraction(-qj), Fraction(1)])
            den *= Fraction(qi - qj)
        scale = Fraction(ci) / den
        for t, c in enumerate(num):
            coeffs[t] += scale * c
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if any(c.denominator != 1 or c < 0 for c in coeffs):
        return FitResult(False, reason="coefficients are not nonnegative integers")
    ints = [int(c) for c in coeffs]
    res = FitResult(True, ints)
    for q, c in held:
        if res.eval(q) != c:
            return FitResult(False, reason=f"held-out sample at q={q} mismatches")
    return res


def _poly_mul_q(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


# ---------------------------------------------------------------------------
# verification suites


SUITES = (
    "roundtrip",
    "counts-equal",
    "triviality-agree",
    "factorization",
    "product-fibre",
    "central-leading",
)

DEFAULT_GRID = ((2, 1, (1, 1)), (2, 2, (1, 1, 1, 1)), (3, 1, (1, 2)), (3, 1, (1, 1, 1)))


def _case(params, expected, actual):
    return {
        "params": params,
        "expected": expected,
        "actual": actual,
        "pass": expected == actual,
    }


def _point_configs(field, n, distinct_only=False):
    els = list(field.elements())
    if distinct_only:
        return list(permutations(els, n)) if len(els) >= n else []
    return list(product(els, repeat=n))


def suite_counts_equal(grid=DEFAULT_GRID, qs=(2, 3), distinct_only=True):
    """Cross-model equality: trivial chain count = slice count (the bijection
    at the level of F_q points), per configuration."""
    from .fields import GF

    cases = []
    for m, k, types in grid:
        for q in qs:
            slice_cache = _slice_counts_by_eigenvalues(m, k, GF(q))
            for pts in _point_configs(GF(q), len(types), distinct_only):
                query = FiberQuery(m, k, types, pts, GF(q), "trivial")
                chain_count = count_chain_fiber(query).count
                slice_count = _slice_fiber_count_cached(query, slice_cache)
                cases.append(
                    _case(
                        {"m": m, "k": k, "types": list(types), "points": list(pts), "q": q},
                        chain_count,
                        slice_count,
                    )
                )
    return _suite_report("counts-equal", cases)


def _slice_counts_by_eigenvalues(m, k, field):
    """Bucket slice matrices by characteristic polynomial roots, computed
    once per (m, k, q)."""
    buckets = {}
    for Y in enumerate_slice_matrices(m, k, field):
        cp = linalg.char_poly(field, Y.rows())
        buckets.setdefault(cp, []).append(Y)
    return buckets


def _slice_fiber_count_cached(query, buckets):
    F = query.field
    target = Poly.one(F)
    for x, j in zip(query.points, query.types.entries):
        target = target * Poly(F, (F.neg(x), F.one)) ** j
    count = 0
    for Y in buckets.get(target, ()):
        Yrows = Y.rows()
        for _ in _stable_flags(F, Yrows, query.points, query.types.entries):
            count += 1
    return count


def suite_roundtrip(grid=DEFAULT_GRID, qs=(2, 3), randoms=200, seed=20240229):
    """Both roundtrip identities on every trivial-locus witness enumerated
    over distinct-point configurations, plus random chains over F_5 and Q."""
    import random

    from .fields import GF, QQ

    cases = []
    for m, k, types in grid:
        for q in qs:
            F = GF(q)
            for pts in _point_configs(F, len(types), distinct_only=True):
                query = FiberQuery(m, k, types, pts, F, "trivial")
                report = count_chain_fiber(query, witnesses=True)
                bad = 0
                for chain in report.witnesses:
                    p = chain_to_slice(chain)
                    if slice_to_chain(p) != chain or chain_to_slice(slice_to_chain(p)) != p:
                        bad += 1
                cases.append(
                    _case(
                        {
                            "m": m,
                            "k": k,
                            "types": list(types),
                            "points": list(pts),
                            "q": q,
                            "witnesses": report.count,
                        },
                        0,
                        bad,
                    )
                )
    rng = random.Random(seed)
    for m, k, types in grid:
        for field in (GF(5), QQ):
            bad = 0
            produced = 0
            attempts = 0
            while produced < randoms and attempts < randoms * 400:
                attempts += 1
                chain = _random_trivial_chain(rng, m, k, types, field)
                if chain is None:
                    continue
                produced += 1
                p = chain_to_slice(chain)
                if slice_to_chain(p) != chain:
                    bad += 1
            cases.append(
                _case(
                    {
                        "m": m,
                        "k": k,
                        "types": list(types),
                        "field": field.code,
                        "random_chains": produced,
                        "requested": randoms,
                    },
                    (0, randoms),
                    (bad, produced),
                )
            )
    return _suite_report("roundtrip", cases)


def _random_step(rng, L, x, j):
    """A random colength-j sublattice with (z-x)L <= L' <= L."""
    F = L.field
    m = L.m
    lin = Poly(F, (F.neg(x), F.one))
    if F.is_finite:
        els = list(F.elements())
        sample = lambda: els[rng.randrange(len(els))]
    else:
        sample = lambda: F.from_int(rng.randint(-3, 3))
    for _ in range(50):
        vecs = [[sample() for _ in range(m)] for _ in range(m - j)]
        if linalg.rank(F, vecs) == m - j:
            gens = [
                L.basis.mul_vec([Poly.const(F, c) for c in v]) for v in vecs
            ] + L.basis.scale_poly(lin).columns()
            return Lattice(F, PolyMatrix.from_cols(F, gens))
    return None


def _random_trivial_chain(rng, m, k, types, field):
    n = len(types)
    if field.is_finite:
        els = list(field.elements())
        points = tuple(els[rng.randrange(len(els))] for _ in range(n))
    else:
        points = tuple(field.from_int(rng.randint(-4, 4)) for _ in range(n))
    L = standard_lattice(m, field)
    lattices = []
    for x, j in zip(points, types):
        L = _random_step(rng, L, x, j)
        if L is None:
            return None
        lattices.append(L)
    if not quotient_basis_trivial(lattices[-1], k):
        return None
    return LatticeChain(m, field, points, types, lattices)


def suite_triviality_agree(grid=((2, 1), (2, 2), (3, 1)), qs=(2, 3)):
    """Two independent algorithms for the triviality condition must agree on
    every chain endpoint: monomial quotient basis <-> constant splitting."""
    from .fields import GF
    from .lattice import splitting_type

    cases = []
    for m, k in grid:
        for q in qs:
            F = GF(q)
            endpoints = set()
            for types in _compositions(m * k, m - 1):
                for pts in _point_configs(F, len(types)):
                    query = FiberQuery(m, k, types, pts, F, "any")
                    for chain in count_chain_fiber(query, witnesses=True).witnesses:
                        endpoints.add(chain.end)
            disagreements = 0
            for L in endpoints:
                a = quotient_basis_trivial(L, k)
                b = splitting_type(L) == (-k,) * m
                if a != b:
                    disagreements += 1
            cases.append(
                _case(
                    {"m": m, "k": k, "q": q, "endpoints": len(endpoints)},
                    0,
                    disagreements,
                )
            )
    return _suite_report("triviality-agree", cases)


def _default_types(m, k):
    """A canonical type sequence of 1s summing to m*k (always admissible)."""
    return (1,) * (m * k)


def _compositions(total, maxpart):
    """All ordered sequences with entries in 1..maxpart summing to total."""
    if total == 0:
        return [()]
    out = []
    for first in range(1, min(maxpart, total) + 1):
        for rest in _compositions(total - first, maxpart):
            out.append((first,) + rest)
    return out


def suite_factorization(grid=((2, 1), (2, 2), (3, 1)), qs=(2, 3)):
    """Factorization over two disjoint points: reconstruction by intersection,
    Hecke types split by support, the 'any'-count product law, and a witnessed
    failure of the product law for 'trivial' counts."""
    from .fields import GF
    from .lattice import divisor_of_pair, factorize, intersect

    cases = []
    for m, k in grid:
        for q in qs:
            F = GF(q)
            a, b = F.from_int(0), F.from_int(1)
            std = standard_lattice(m, F)
            # all endpoints of chains marked at the two points (any mix)
            endpoints = set()
            for types in _compositions(m * k, m - 1):
                for pts in product((a, b), repeat=len(types)):
                    query = FiberQuery(m, k, types, pts, F, "any")
                    for chain in count_chain_fiber(query, witnesses=True).witnesses:
                        endpoints.add(chain.end)
            bad = 0
            for L in endpoints:
                L1, L2 = factorize(L, {a}, {b})
                div = divisor_of_pair(std, L)
                ok = (
                    intersect(L1, L2) == L
                    and divisor_of_pair(std, L1) == div.restrict({a})
                    and divisor_of_pair(std, L2) == div.restrict({b})
                )
                if not ok:
                    bad += 1
            cases.append(
                _case({"m": m, "k": k, "q": q, "lattices": len(endpoints)}, 0, bad)
            )
            # 'any' count product law over a split configuration
            types = _default_types(m, k)
            half = len(types) // 2
            pts = (a,) * half + (b,) * (len(types) - half)
            whole = count_chain_fiber(FiberQuery(m, k, types, pts, F, "any")).count
            left = count_chain_fiber(
                FiberQuery(m, k, types[:half], pts[:half], F, "any")
            ).count
            right = count_chain_fiber(
                FiberQuery(m, k, types[half:], pts[half:], F, "any")
            ).count
            cases.append(
                _case(
                    {"m": m, "k": k, "q": q, "law": "any-product"},
                    whole,
                    left * right,
                )
            )
    # the trivial locus does not factor: witnessed counterexample
    from .fields import GF

    F = GF(2)
    a, b = 0, 1
    pts = (a, a, b, b)
    whole = count_chain_fiber(FiberQuery(2, 2, (1, 1, 1, 1), pts, F, "trivial")).count
    left = count_chain_fiber(FiberQuery(2, 1, (1, 1), (a, a), F, "trivial")).count
    right = count_chain_fiber(FiberQuery(2, 1, (1, 1), (b, b), F, "trivial")).count
    cases.append(
        _case(
            {"witness": "trivial counts do not factor", "q": 2,
             "whole": whole, "left": left, "right": right},
            True,
            whole != left * right,
        )
    )
    return _suite_report("factorization", cases)


def suite_product_fibre(grid=DEFAULT_GRID, qs=(2, 3)):
    """Regular-fibre product law: the 'any' count over distinct points is the
    product of Gaussian binomials."""
    from .fields import GF

    cases = []
    for m, k, types in grid:
        for q in qs:
            F = GF(q)
            configs = _point_configs(F, len(types), distinct_only=True)
            for pts in configs:
                query = FiberQuery(m, k, types, pts, F, "any")
                actual = count_chain_fiber(query).count
                expected = 1
                for j in types:
                    expected *= gaussian_binomial(m, j, q)
                cases.append(
                    _case(
                        {"m": m, "k": k, "types": list(types), "points": list(pts), "q": q},
                        expected,
                        actual,
                    )
                )
            if not configs:
                cases.append(
                    _case(
                        {"m": m, "k": k, "q": q,
                         "note": "no distinct configurations at this q"},
                        0,
                        0,
                    )
                )
    return _suite_report("product-fibre", cases)


def suite_central_leading(m=2, types=(1, 1, 1, 1), qs=(2, 3, 5), held_out=None):
    """Central-fibre law: exact-z^k counts over the all-zero configuration fit
    a polynomial in q whose degree is half the fibre dimension and whose
    leading coefficient is the invariant dimension."""
    from .fields import GF

    w = WeightSeq(m, types)
    if w.total % m:
        raise ValueError("types must satisfy the root-lattice condition")
    k = w.total // m
    samples = []
    for q in qs:
        F = GF(q)
        pts = (F.zero,) * len(types)
        query = FiberQuery(m, k, types, pts, F, "exact-zk")
        samples.append((q, count_chain_fiber(query).count))
    if held_out:
        F = GF(held_out)
        pts = (F.zero,) * len(types)
        samples.append(
            (held_out, count_chain_fiber(FiberQuery(m, k, types, pts, F, "exact-zk")).count)
        )
        fit = fit_q_polynomial(samples, degree=len(samples) - 2)
    else:
        fit = fit_q_polynomial(samples)
    cases = [
        _case({"samples": samples, "check": "integer fit"}, True, fit.success)
    ]
    if fit.success:
        half_dim = sum(j * (m - j) for j in types) // 2
        cases.append(_case({"check": "degree = half fibre dimension"}, half_dim, fit.degree))
        cases.append(
            _case(
                {"check": "leading coefficient = invariant dimension"},
                invariant_dim(w),
                fit.coefficients[-1],
            )
        )
    return _suite_report("central-leading", cases)


def _suite_report(name, cases):
    return {"suite": name, "cases": cases, "pass": all(c["pass"] for c in cases)}


def verify_suite(name, **budget):
    """Run one named verification suite; returns its structured report."""
    table = {
        "roundtrip": suite_roundtrip,
        "counts-equal": suite_counts_equal,
        "triviality-agree": suite_triviality_agree,
        "factorization": suite_factorization,
        "product-fibre": suite_product_fibre,
        "central-leading": suite_central_leading,
    }
    if name == "all":
        # suites have distinct budget signatures; 'all' runs each with its
        # documented defaults
        reports = [table[n]() for n in SUITES]
        return {
            "suite": "all",
            "reports": reports,
            "pass": all(r["pass"] for r in reports),
        }
    if name not in table:
        raise ValueError(f"unknown suite {name!r}")
    return table[name](**budget)
