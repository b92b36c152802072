"""The affine quantum Schur algebra S(n, r).

Elements are LaurentPoly-combinations of the normalized basis {[A]} with
A running over Theta(n, r).  Products are computed in the Hecke
endomorphism model: e_A e_B is read off from a T-basis product,
decomposed into double-coset sums.  The canonical basis theta_{A,r} is
obtained from the C'-expansion of the longest double-coset element; an
independent bar-triangular elimination is kept as an oracle.
"""

from __future__ import annotations

from .laurent import LaurentPoly, LP_ONE
from .affmat import AffMatrix, sqsubseteq, compositions
from . import affweyl
from .affweyl import (
    Composition,
    double_coset,
    jdelta,
    jdelta_inv,
    is_left_minimal,
    bruhat_leq,
)
from . import heckekl
from .heckekl import HeckeElt, t_mul, t_bar, x_lambda, double_coset_sum, cprime


class SchurElt:
    """Finitely supported combination of {[A] : A in Theta(n, r)}."""

    __slots__ = ("n", "r", "terms")

    def __init__(self, n, r, terms=None):
        self.n = n
        self.r = r
        t = {}
        if terms:
            for a, c in (terms.items() if isinstance(terms, dict) else terms):
                if a.n != n or a.sigma() != r:
                    raise ValueError("matrix outside Theta(%d, %d): %r" % (n, r, a))
                c0 = t.get(a)
                c = c if c0 is None else c0 + c
                if c:
                    t[a] = c
                elif a in t:
                    del t[a]
        self.terms = t

    @staticmethod
    def bracket(a_mat, r=None):
        """The basis element [A]."""
        return SchurElt(a_mat.n, a_mat.sigma() if r is None else r, {a_mat: LP_ONE})

    @staticmethod
    def zero(n, r):
        return SchurElt(n, r)

    def __add__(self, other):
        t = dict(self.terms)
        for a, c in other.terms.items():
            c0 = t.get(a)
            c = c if c0 is None else c0 + c
            if c:
                t[a] = c
            elif a in t:
                del t[a]
        out = SchurElt.__new__(SchurElt)
        out.n, out.r, out.terms = self.n, self.r, t
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if isinstance(c, int):
            c = LaurentPoly({0: c})
        out = SchurElt.__new__(SchurElt)
        out.n, out.r = self.n, self.r
        out.terms = {a: x * c for a, x in self.terms.items() if x * c}
        return out

    def coeff(self, a_mat):
        return self.terms.get(a_mat, LaurentPoly())

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, SchurElt):
            return NotImplemented
        return (self.n, self.r, self.terms) == (other.n, other.r, other.terms)

    def __repr__(self):
        parts = [
            "(%r)[%s]" % (c, dict(a.entries()))
            for a, c in sorted(self.terms.items(), key=lambda p: p[0].entries())
        ]
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        items = sorted(self.terms.items(), key=lambda p: p[0].entries())
        return {
            "n": self.n,
            "r": self.r,
            "terms": [[a.to_json(), c.to_json()] for a, c in items],
        }


def leq_bo(b_mat, a_mat):
    """B <=^Bo A: equal row/column sums and y_B <= y_A in Bruhat order."""
    if b_mat.ro() != a_mat.ro() or b_mat.co() != a_mat.co():
        return False
    _, yb, _ = jdelta_inv(b_mat)
    _, ya, _ = jdelta_inv(a_mat)
    return bruhat_leq(yb, ya)


_coset_factor_memo = {}


def _right_coset_factor(b_mat):
    """The set {w in D_mu cap S_mu d_B S_nu} with x_mu * sum T_w = T_{S_mu d_B S_nu}.

    The factorization identity is asserted at construction time.
    """
    res = _coset_factor_memo.get(b_mat)
    if res is not None:
        return res
    mu, d_b, nu = jdelta_inv(b_mat)
    _, _, elems = double_coset(mu, d_b, nu)
    reps = [w for w in elems if is_left_minimal(w, mu)]
    h = HeckeElt(d_b.r, {w: LP_ONE for w in reps})
    full = HeckeElt(d_b.r, {w: LP_ONE for w in elems})
    if t_mul(x_lambda(mu), h) != full:
        raise AssertionError("double-coset factorization failed for %r" % b_mat)
    res = (mu, h)
    _coset_factor_memo[b_mat] = res
    return res


def _decompose_invariant(h, lam, nu):
    """Write a (left-S_lambda, right-S_nu)-invariant element as a sum of
    double-coset sums; returns {matrix: coefficient} over e_A'' = T-coset sums.

    Coefficients are checked to be constant on each double coset.
    """
    out = {}
    remaining = dict(h.terms)
    while remaining:
        w = next(iter(remaining))
        d_min, _, elems = double_coset(lam, w, nu)
        c = remaining[w]
        for x in elems:
            cx = remaining.pop(x, None)
            if cx is None or cx != c:
                raise AssertionError(
                    "coefficient not constant on double coset of %r" % w
                )
        out[jdelta(lam, d_min, nu)] = c
    return out


_e_mult_memo = {}


def e_basis_mult(a_mat, b_mat):
    """Structure constants of e_A e_B = sum nu_{A,B,A''} e_{A''}.

    Zero (empty dict) unless co(A) = ro(B).
    """
    if a_mat.co() != b_mat.ro():
        return {}
    key = (a_mat, b_mat)
    res = _e_mult_memo.get(key)
    if res is not None:
        return res
    lam, d_a, mu = jdelta_inv(a_mat)
    mu2, h2 = _right_coset_factor(b_mat)
    assert mu.parts == mu2.parts
    _, _, nu = jdelta_inv(b_mat)
    h1 = double_coset_sum(lam, d_a, mu)
    prod = t_mul(h1, h2)
    res = _decompose_invariant(prod, lam, nu)
    _e_mult_memo[key] = res
    return res


def _bracket_mult(a_mat, b_mat):
    """[A][B] expanded in the bracket basis."""
    da, db = a_mat.d_exponent(), b_mat.d_exponent()
    out = {}
    for c_mat, nu_c in e_basis_mult(a_mat, b_mat).items():
        coeff = nu_c.shift(c_mat.d_exponent() - da - db)
        out[c_mat] = out.get(c_mat, LaurentPoly()) + coeff
    return out


def mult(x, y):
    """Product of SchurElts (bilinear over the bracket basis)."""
    if x.n != y.n or x.r != y.r:
        raise ValueError("mismatched n or r")
    out = SchurElt.zero(x.n, x.r)
    for a_mat, ca in x.terms.items():
        for b_mat, cb in y.terms.items():
            c = ca * cb
            if not c:
                continue
            for c_mat, coeff in _bracket_mult(a_mat, b_mat).items():
                out = out + SchurElt(x.n, x.r, {c_mat: coeff * c})
    return out


_theta_memo = {}


def theta(a_mat, r=None, cache=None):
    """The canonical basis element theta_{A,r}.

    Reads the C'-expansion of the longest double-coset element d+: the
    T-support of C'_{d+} is a union of (S_lambda, S_mu) double cosets,
    and the coefficient at the longest element y+ of each gives the
    bracket coefficient v^{l(y+) - l(d+)} P_{y+, d+}.
    """
    r = a_mat.sigma() if r is None else r
    if a_mat.sigma() != r:
        raise ValueError("sigma(A) != r")
    res = _theta_memo.get(a_mat)
    if res is not None:
        return res
    lam, d, mu = jdelta_inv(a_mat)
    _, d_plus, _ = double_coset(lam, d, mu)
    c = cprime(d_plus, cache)
    l_dp = d_plus.length()
    terms = {}
    visited = set()
    for w in c.terms:
        if w in visited:
            continue
        y_min, y_plus, elems = double_coset(lam, w, mu)
        visited |= elems
        coeff = c.coeff(y_plus).shift(y_plus.length())
        if coeff:
            terms[jdelta(lam, y_min, mu)] = coeff
    res = SchurElt(a_mat.n, r, terms)
    if res.coeff(a_mat) != LP_ONE:
        raise AssertionError("theta leading coefficient not 1 for %r" % a_mat)
    _theta_memo[a_mat] = res
    return res


_bar_basis_memo = {}


def bar_bracket(b_mat):
    """bar([B]) expanded in the bracket basis.

    Realized on x_mu: bar(f)(x_mu) = v^{2 l(w_{0,mu})} t_bar(f(x_mu)),
    then decomposed back into double-coset sums.
    """
    res = _bar_basis_memo.get(b_mat)
    if res is not None:
        return res
    lam, d, mu = jdelta_inv(b_mat)
    h = double_coset_sum(lam, d, mu).scale(
        LaurentPoly.v_power(-b_mat.d_exponent())
    )
    barh = t_bar(h).scale(LaurentPoly.v_power(2 * mu.longest_length()))
    e_coeffs = _decompose_invariant(barh, lam, mu)
    terms = {
        c_mat: c.shift(c_mat.d_exponent()) for c_mat, c in e_coeffs.items()
    }
    res = SchurElt(b_mat.n, b_mat.sigma(), terms)
    _bar_basis_memo[b_mat] = res
    return res


def bar(x):
    """The bar involution on the Schur algebra."""
    out = SchurElt.zero(x.n, x.r)
    for b_mat, c in x.terms.items():
        out = out + bar_bracket(b_mat).scale(c.bar())
    return out


def tau(x):
    """The anti-involution [A] -> [transpose(A)]."""
    out = SchurElt.zero(x.n, x.r)
    for a_mat, c in x.terms.items():
        out = out + SchurElt(x.n, x.r, {a_mat.transpose(): c})
    return out


def a_block(a_mat, j, r):
    """A(j, r) = sum over lambda in Lambda(n, r - sigma(A)) of
    v^{lambda . j} [A + diag(lambda)]; zero if sigma(A) > r.

    A must have zero diagonal.
    """
    if not a_mat.zero_diagonal():
        raise ValueError("a_block requires a zero-diagonal matrix")
    n = a_mat.n
    rem = r - a_mat.sigma()
    out = SchurElt.zero(n, r)
    if rem < 0:
        return out
    for lam in compositions(n, rem):
        dot = sum(l * ji for l, ji in zip(lam, j))
        out = out + SchurElt(
            n, r, {a_mat + AffMatrix.diag(n, lam): LaurentPoly.v_power(dot)}
        )
    return out


def _pick_maximal(mats):
    """Some key that is maximal for the strict containment order."""
    for c in mats:
        if not any(c != d and sqsubseteq(c, d) for d in mats):
            return c
    raise AssertionError("no maximal element (order not acyclic?)")


def canonical_expand(x):
    """Expand a SchurElt in the canonical basis by triangular substitution.

    Returns {A: coefficient} with x = sum coefficient * theta_{A,r}.
    """
    remaining = dict(x.terms)
    out = {}
    while remaining:
        c_mat = _pick_maximal(list(remaining))
        g = remaining[c_mat]
        out[c_mat] = g
        th = theta(c_mat, x.r)
        for b_mat, cb in th.terms.items():
            c0 = remaining.get(b_mat, LaurentPoly())
            c0 = c0 - cb * g
            if c0:
                remaining[b_mat] = c0
            elif b_mat in remaining:
                del remaining[b_mat]
    return out


def g_constants(a_mat, b_mat, r):
    """Structure constants of theta_{A,r} theta_{B,r} in the canonical basis.

    Empty when co(A) != ro(B).
    """
    if a_mat.co() != b_mat.ro():
        return {}
    prod = mult(theta(a_mat, r), theta(b_mat, r))
    return canonical_expand(prod)


def theta_by_elimination(a_mat, r=None):
    """Independent construction of theta_{A,r} by bar-triangular elimination.

    Starts from [A] and corrects lower terms until the element is
    bar-invariant, solving p - bar(p) = c with p in v^-1 Z[v^-1] at each
    step.  Used as an oracle against the closed-form construction.
    """
    r = a_mat.sigma() if r is None else r
    x = SchurElt.bracket(a_mat, r)
    for _ in range(10000):
        diff = bar(x) - x
        if diff.is_zero():
            return x
        b_mat = _pick_maximal(list(diff.terms))
        c = diff.coeff(b_mat)
        # c is bar-antisymmetric; its negative-exponent half p solves
        # p - bar(p) = c, which cancels the coefficient at b_mat
        if c.coeff(0) != 0 or c != -(c.bar()):
            raise AssertionError("non-antisymmetric correction at %r" % b_mat)
        p = LaurentPoly({e: a for e, a in c.items() if e < 0})
        x = x + SchurElt(x.n, r, {b_mat: p})
    raise AssertionError("bar-triangular elimination did not converge")


def is_triangular(th, a_mat):
    """Eq-3.2 shape: leading coefficient 1 on A, lower terms in
    v^-1 Z[v^-1] on matrices strictly below A."""
    for b_mat, c in th.terms.items():
        if b_mat == a_mat:
            if c != LP_ONE:
                return False
        else:
            if not (b_mat != a_mat and sqsubseteq(b_mat, a_mat)):
                return False
            if c.max_exp() is not None and c.max_exp() >= 0:
                return False
    return True


def clear_caches():
    _coset_factor_memo.clear()
    _e_mult_memo.clear()
    _theta_memo.clear()
    _bar_basis_memo.clear()
