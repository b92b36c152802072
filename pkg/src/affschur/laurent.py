"""Exact arithmetic in Z[v, v^-1] and Z[q].

Laurent polynomials in v carry all coefficients in the algebras built on
top of this module; plain polynomials in q (standing for v^2) are used
for Hall-polynomial interpolation and Kazhdan-Lusztig polynomials, and
are kept as a separate type so the two variable conventions never mix
silently.
"""

from __future__ import annotations

from fractions import Fraction


class LaurentPoly:
    """Integer-coefficient Laurent polynomial in v.

    Immutable by convention: the coefficient dict is private and never
    exposed mutably.  Zero coefficients are never stored.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, a in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                a = c.get(e, 0) + a
                if a:
                    c[e] = a
                elif e in c:
                    del c[e]
        self._c = c
        self._hash = None

    @staticmethod
    def v_power(e, coeff=1):
        return LaurentPoly({e: coeff}) if coeff else LaurentPoly()

    def items(self):
        return sorted(self._c.items())

    def coeff(self, e):
        return self._c.get(e, 0)

    def is_zero(self):
        return not self._c

    def is_nonneg(self):
        """True iff every coefficient is >= 0 (membership in N[v, v^-1])."""
        return all(a >= 0 for a in self._c.values())

    def support(self):
        return set(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._c.items())))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        c = dict(self._c)
        for e, a in other._c.items():
            b = c.get(e, 0) + a
            if b:
                c[e] = b
            elif e in c:
                del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: -a for e, a in self._c.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            out = LaurentPoly.__new__(LaurentPoly)
            out._c = {e: a * other for e, a in self._c.items()}
            out._hash = None
            return out
        c = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                e = e1 + e2
                b = c.get(e, 0) + a1 * a2
                if b:
                    c[e] = b
                elif e in c:
                    del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        out._hash = None
        return out

    __rmul__ = __mul__

    def bar(self):
        """The involution v -> v^-1 (negate every exponent)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {-e: a for e, a in self._c.items()}
        out._hash = None
        return out

    def shift(self, e):
        """Multiply by v^e."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {k + e: a for k, a in self._c.items()}
        out._hash = None
        return out

    def evaluate(self, x):
        """Evaluate at a nonzero rational value of v (exact)."""
        val = Fraction(0)
        fx = Fraction(x)
        for e, a in self._c.items():
            val += a * fx ** e
        return val

    def min_exp(self):
        return min(self._c) if self._c else None

    def max_exp(self):
        return max(self._c) if self._c else None

    def only_even_exponents(self):
        return all(e % 2 == 0 for e in self._c)

    def to_int_poly_in_q(self):
        """Reinterpret as a polynomial in q = v^2.

        Requires all exponents even and nonnegative.
        """
        if not self._c:
            return IntPoly(())
        if not self.only_even_exponents() or min(self._c) < 0:
            raise ValueError("not a polynomial in q = v^2: %s" % self)
        deg = max(self._c) // 2
        return IntPoly(tuple(self._c.get(2 * k, 0) for k in range(deg + 1)))

    def to_json(self):
        return [[e, str(a)] for e, a in self.items()]

    @staticmethod
    def from_json(data):
        return LaurentPoly({int(e): int(a) for e, a in data})

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for e, a in self.items():
            if e == 0:
                parts.append(str(a))
            else:
                va = "v" if e == 1 else ("v^%d" % e)
                if a == 1:
                    parts.append(va)
                elif a == -1:
                    parts.append("-" + va)
                else:
                    parts.append("%d*%s" % (a, va))
        return " + ".join(parts).replace("+ -", "- ")


LP_ZERO = LaurentPoly()
LP_ONE = LaurentPoly({0: 1})


class IntPoly:
    """Integer polynomial in q, coefficients stored from degree 0 up."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    def degree(self):
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def evaluate(self, q):
        val = 0
        for a in reversed(self.coeffs):
            val = val * q + a
        return val

    def constant_term(self):
        return self.coeff(0)

    def to_laurent(self):
        """Substitute q = v^2."""
        return LaurentPoly({2 * k: a for k, a in enumerate(self.coeffs) if a})

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self.coeff(k) + other.coeff(k) for k in range(n)))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, a in enumerate(self.coeffs):
            if not a:
                continue
            if k == 0:
                parts.append(str(a))
            elif k == 1:
                parts.append("%d*q" % a if a != 1 else "q")
            else:
                parts.append("%d*q^%d" % (a, k) if a != 1 else "q^%d" % k)
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return [str(a) for a in self.coeffs]

    @staticmethod
    def from_json(data):
        return IntPoly(tuple(int(a) for a in data))


class InterpolationError(ValueError):
    """Samples are inconsistent with the stated degree bound."""


def poly_interpolate(samples, degree_bound):
    """Unique integer polynomial of degree <= degree_bound through samples.

    samples is a list of (q, count) pairs with pairwise distinct q.
    Raises InterpolationError if the interpolant has a non-integer
    coefficient or a sample is missed, which signals that degree_bound
    was too small or the counts are inconsistent.
    """
    if len(samples) < degree_bound + 1:
        raise ValueError("need at least degree_bound + 1 samples")
    pts = samples[: degree_bound + 1]
    qs = [q for q, _ in pts]
    if len(set(qs)) != len(qs):
        raise ValueError("q-values must be pairwise distinct")
    # Lagrange interpolation over Q, accumulated coefficientwise.
    coeffs = [Fraction(0)] * (degree_bound + 1)
    for i, (qi, ci) in enumerate(pts):
        # numerator polynomial prod_{j != i} (q - qj)
        num = [Fraction(1)]
        denom = Fraction(1)
        for j, (qj, _) in enumerate(pts):
            if j == i:
                continue
            num = [Fraction(0)] + num
            for k in range(len(num) - 1):
                num[k] -= qj * num[k + 1]
            denom *= qi - qj
        w = Fraction(ci) / denom
        for k in range(len(num)):
            coeffs[k] += w * num[k]
    out = []
    for a in coeffs:
        if a.denominator != 1:
            raise InterpolationError(
                "non-integer coefficient %s (degree bound too small?)" % a
            )
        out.append(int(a))
    poly = IntPoly(tuple(out))
    for q, c in samples:
        if poly.evaluate(q) != c:
            raise InterpolationError(
                "interpolant misses sample (%d, %d)" % (q, c)
            )
    return poly
