"""Dense univariate polynomials over an exact field.

Coefficients are stored ascending; the zero polynomial is the empty tuple and
has degree NEG_INF (the documented sentinel for -infinity).
"""

from .fields import Field

NEG_INF = float("-inf")


class Poly:
    def __init__(self, field, coeffs=()):
        self.field = field
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == field.zero:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @staticmethod
    def zero(field):
        return Poly(field)

    @staticmethod
    def one(field):
        return Poly(field, (field.one,))

    @staticmethod
    def const(field, c):
        return Poly(field, (c,))

    @staticmethod
    def x(field):
        return Poly(field, (field.zero, field.one))

    @staticmethod
    def monomial(field, c, n):
        return Poly(field, (field.zero,) * n + (c,))

    @staticmethod
    def from_ints(field, ints):
        return Poly(field, [field.from_int(c) for c in ints])

    @staticmethod
    def from_roots(field, roots):
        """prod (z - r) over the given roots (with multiplicity)."""
        p = Poly.one(field)
        for r in roots:
            p = p * Poly(field, (field.neg(r), field.one))
        return p

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        """Leading coefficient; zero for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, n):
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else self.field.zero

    def __add__(self, other):
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, out)

    def __neg__(self):
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F)
        out = [F.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == F.zero:
                continue
            for j, bj in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return Poly(F, out)

    def scale(self, c):
        F = self.field
        return Poly(F, [F.mul(c, a) for a in self.coeffs])

    def shift(self, n):
        """Multiply by z^n."""
        if self.is_zero:
            return self
        return Poly(self.field, (self.field.zero,) * n + self.coeffs)

    def __pow__(self, n):
        out = Poly.one(self.field)
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        d = len(other.coeffs) - 1
        inv_lc = F.inv(other.lc)
        quo = [F.zero] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c == F.zero:
                continue
            q = F.mul(c, inv_lc)
            quo[i - d] = q
            for j, b in enumerate(other.coeffs):
                rem[i - d + j] = F.sub(rem[i - d + j], F.mul(q, b))
        return Poly(F, quo), Poly(F, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return q

    def monic(self):
        if self.is_zero:
            return self
        return self.scale(self.field.inv(self.lc))

    def eval(self, x):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def valuation_at(self, x):
        """The (z - x)-adic valuation; raises on the zero polynomial."""
        if self.is_zero:
            raise ValueError("valuation of the zero polynomial")
        lin = Poly(self.field, (self.field.neg(x), self.field.one))
        v, p = 0, self
        while True:
            q, r = divmod(p, lin)
            if not r.is_zero:
                return v
            v, p = v + 1, q

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def to_list(self):
        out = []
        for c in self.coeffs:
            if self.field.p is not None or c.denominator == 1:
                out.append(int(c))
            else:
                out.append(str(c))
        return out

    def __repr__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == self.field.zero:
                continue
            cs = self.field.format(c)
            if i == 0:
                terms.append(cs)
            else:
                zi = "z" if i == 1 else f"z^{i}"
                terms.append(zi if cs == "1" else f"{cs}*{zi}")
        return " + ".join(terms)


def poly_gcd(a, b):
    """Monic gcd; gcd(0, 0) = 0."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def linear_roots(p):
    """All roots of the linear factors of p, returned as {root: multiplicity},
    plus the residual factor with no roots in the field.

    Finite fields: exhaustive search, so the residual has no root at all.
    Rationals: rational-root extraction (no field extensions).
    """
    if p.is_zero:
        raise ValueError("root extraction from the zero polynomial")
    F = p.field
    roots = {}
    if F.is_finite:
        for x in F.elements():
            while p.degree >= 1 and p.eval(x) == F.zero:
                roots[x] = roots.get(x, 0) + 1
                p = p.exact_div(Poly(F, (F.neg(x), F.one)))
        return roots, p
    # rational roots r = c/d with c | constant term, d | leading coefficient,
    # after clearing denominators to an integer polynomial
    while p.degree >= 1:
        from math import lcm

        den = lcm(*(c.denominator for c in p.coeffs))
        ints = [int(c * den) for c in p.coeffs]
        lead = ints[-1]
        k = 0
        while ints[k] == 0:
            k += 1
        if k:
            roots[F.zero] = roots.get(F.zero, 0) + k
            p = p.exact_div(Poly.monomial(F, F.one, k))
            continue
        const = ints[0]
        found = None
        for c in _divisors(abs(const)):
            for d in _divisors(abs(lead)):
                for r in (F.parse(f"{c}/{d}"), F.parse(f"-{c}/{d}")):
                    if p.eval(r) == F.zero:
                        found = r
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots[found] = roots.get(found, 0) + 1
        p = p.exact_div(Poly(F, (F.neg(found), F.one)))
    return roots, p


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)
