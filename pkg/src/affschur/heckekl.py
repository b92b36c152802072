"""The extended affine Hecke algebra of period r.

T-basis multiplication follows T_{s_i}^2 = (v^2 - 1) T_{s_i} + v^2 and
T_w T_{w'} = T_{ww'} when lengths add; T_rho acts by length-preserving
translation.  The Kazhdan-Lusztig basis C'_w is built by the product
recursion C'_s C'_v = C'_{sv} + sum mu(z, v) C'_z, which yields every
polynomial P_{y,w} as a T-coefficient of C'_w.
"""

from __future__ import annotations

import os

from .laurent import LaurentPoly, IntPoly, LP_ONE
from . import affweyl
from .affweyl import AffPerm, identity, simple, rho, strip_rho, reduced_word

_V2_MINUS_1 = LaurentPoly({2: 1, 0: -1})
_V2 = LaurentPoly({2: 1})
_VINV = LaurentPoly({-1: 1})
_T_INV_LOW = LaurentPoly({-2: 1, 0: -1})  # v^-2 - 1
_T_INV_HIGH = LaurentPoly({-2: 1})


class HeckeElt:
    """Finitely supported LaurentPoly-combination of {T_w}."""

    __slots__ = ("r", "terms")

    def __init__(self, r, terms=None):
        self.r = r
        t = {}
        if terms:
            for w, c in (terms.items() if isinstance(terms, dict) else terms):
                if w.r != r:
                    raise ValueError("period mismatch in HeckeElt")
                c0 = t.get(w)
                c = c if c0 is None else c0 + c
                if c:
                    t[w] = c
                elif w in t:
                    del t[w]
        self.terms = t

    @staticmethod
    def basis(w):
        return HeckeElt(w.r, {w: LP_ONE})

    @staticmethod
    def zero(r):
        return HeckeElt(r)

    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.r == other.r and self.terms == other.terms

    def __add__(self, other):
        t = dict(self.terms)
        for w, c in other.terms.items():
            c0 = t.get(w)
            c = c if c0 is None else c0 + c
            if c:
                t[w] = c
            elif w in t:
                del t[w]
        out = HeckeElt.__new__(HeckeElt)
        out.r = self.r
        out.terms = t
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if isinstance(c, int):
            c = LaurentPoly({0: c})
        out = HeckeElt.__new__(HeckeElt)
        out.r = self.r
        out.terms = {w: a * c for w, a in self.terms.items() if a * c}
        return out

    def coeff(self, w):
        return self.terms.get(w, LaurentPoly())

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        parts = [
            "(%r)T_%s" % (c, w.window)
            for w, c in sorted(self.terms.items(), key=lambda p: p[0].window)
        ]
        return " + ".join(parts) if parts else "0"


_simple_step_memo = {}


def _mul_simple(h, i):
    """h * T_{s_i}, one quadratic-rule step."""
    r = h.r
    memo = _simple_step_memo
    t = {}

    def acc(w, c):
        c0 = t.get(w)
        c = c if c0 is None else c0 + c
        if c:
            t[w] = c
        elif w in t:
            del t[w]

    for w, c in h.terms.items():
        step = memo.get((w, i))
        if step is None:
            ws = w * simple(r, i)
            step = (ws, w.apply(i) < w.apply(i + 1))
            memo[(w, i)] = step
        ws, length_up = step
        if length_up:
            acc(ws, c)
        else:
            acc(w, c * _V2_MINUS_1)
            acc(ws, c * _V2)
    out = HeckeElt.__new__(HeckeElt)
    out.r = r
    out.terms = t
    return out


def _mul_rho(h, a):
    """h * T_rho^a (length-preserving translation of keys)."""
    if a == 0:
        return h
    shift = rho(h.r, a)
    out = HeckeElt.__new__(HeckeElt)
    out.r = h.r
    out.terms = {w * shift: c for w, c in h.terms.items()}
    return out


def mul_basis(h, w):
    """h * T_w, peeling a reduced word of the W_r part of w."""
    a, x = strip_rho(w)
    h = _mul_rho(h, a)
    # T_{rho^a x} = T_rho^a T_x and rho^a x = rho^a * x, so peel x after rho.
    for i in reduced_word(x):
        h = _mul_simple(h, i)
    return h


def t_mul(h1, h2):
    """Product in the T-basis, bilinear over the quadratic/braid rules."""
    if h1.r != h2.r:
        raise ValueError("mismatched periods")
    acc = {}
    for w, c in h2.terms.items():
        for y, d in mul_basis(h1, w).terms.items():
            c0 = acc.get(y)
            val = c * d if c0 is None else c0 + c * d
            if val:
                acc[y] = val
            elif y in acc:
                del acc[y]
    out = HeckeElt.__new__(HeckeElt)
    out.r = h1.r
    out.terms = acc
    return out


_t_inverse_memo = {}


def t_inverse(w):
    """(T_w)^-1 as a HeckeElt, via T_s^-1 = v^-2 T_s + (v^-2 - 1)."""
    res = _t_inverse_memo.get(w)
    if res is not None:
        return res
    r = w.r
    a, x = strip_rho(w)
    h = HeckeElt.basis(identity(r))
    for i in reversed(reduced_word(x)):
        s = simple(r, i)
        inv_s = HeckeElt(r, {s: _T_INV_HIGH, identity(r): _T_INV_LOW})
        h = t_mul(h, inv_s)
    h = _mul_rho(h, -a)
    _t_inverse_memo[w] = h
    return h


def t_bar(h):
    """The bar involution: v -> v^-1 on coefficients, T_w -> (T_{w^-1})^-1.

    The printed rule "T_w -> T_{w^-1}" does not fix C'_w; the inverse
    convention does and is the one used throughout.
    """
    out = HeckeElt.zero(h.r)
    for w, c in h.terms.items():
        out = out + t_inverse(w.inverse()).scale(c.bar())
    return out


class KLCache:
    """Shared cache of C'-expansions and Kazhdan-Lusztig polynomials.

    The P-table persists to disk as one record per line:
    r|window(y)|window(w)|coeffs(P), coefficients in decimal from degree
    0.  Loaded entries are validated against the classical degree bound.
    """

    def __init__(self, path=None):
        self.path = path
        self.cprime_table = {}  # (r, window) -> HeckeElt
        self.p_table = {}  # (r, y.window, w.window) -> IntPoly
        if path and os.path.exists(path):
            self.load(path)

    def load(self, path):
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                r_s, ywin, wwin, coeffs = line.split("|")
                r = int(r_s)
                y = tuple(int(t) for t in ywin.split(",")) if ywin else ()
                w = tuple(int(t) for t in wwin.split(",")) if wwin else ()
                p = IntPoly(tuple(int(t) for t in coeffs.split(",")) if coeffs else ())
                _validate_entry(r, y, w, p)
                self.p_table[(r, y, w)] = p

    def save(self, path=None):
        path = path or self.path
        if path is None:
            raise ValueError("no cache path configured")
        with open(path, "w") as fh:
            for (r, ywin, wwin), p in sorted(self.p_table.items()):
                fh.write(
                    "%d|%s|%s|%s\n"
                    % (
                        r,
                        ",".join(map(str, ywin)),
                        ",".join(map(str, wwin)),
                        ",".join(map(str, p.coeffs)),
                    )
                )


def _validate_entry(r, ywin, wwin, p):
    y = AffPerm(ywin)
    w = AffPerm(wwin)
    if y == w:
        if p != IntPoly((1,)):
            raise ValueError("diagonal KL entry must be 1")
        return
    bound = (w.length() - y.length() - 1) // 2
    if p.degree() > bound:
        raise ValueError(
            "KL degree bound violated for %s <= %s: %r" % (ywin, wwin, p)
        )


_default_cache = KLCache()


def default_cache():
    return _default_cache


def cprime(w, cache=None):
    """The Kazhdan-Lusztig basis element C'_w, expanded in the T-basis.

    C'_w = sum_{y <= w} v^{l(y) - l(w)} P_{y,w} T~_y, so the coefficient
    of T_y is v^{-l(w)} P_{y,w}(v^2).  For extended elements C'_{rho^a x}
    = T_rho^a C'_x.
    """
    cache = cache or _default_cache
    a, x = strip_rho(w)
    key = (x.r, x.window)
    c = cache.cprime_table.get(key)
    if c is None:
        c = _cprime_wr(x, cache)
        cache.cprime_table[key] = c
    if a == 0:
        return c
    shift = rho(w.r, a)
    out = HeckeElt.__new__(HeckeElt)
    out.r = w.r
    out.terms = {shift * y: coeff for y, coeff in c.terms.items()}
    return out


def _cprime_wr(x, cache):
    r = x.r
    if x.is_identity():
        h = HeckeElt.basis(identity(r))
        _record_p(h, x, cache)
        return h
    # left descent s of x
    for i in range(1, r + 1):
        if x.left_descent(i):
            break
    else:
        raise AssertionError("non-identity element without left descent")
    s = simple(r, i)
    v = s * x
    cv = cprime(v, cache)
    cs = HeckeElt(r, {s: _VINV, identity(r): _VINV})
    h = t_mul(cs, cv)
    corrections = []
    for z, coeff in cv.terms.items():
        if not z.left_descent(i):
            continue
        # mu(z, v): coefficient of q^{(l(v)-l(z)-1)/2} in P_{z,v}, i.e. the
        # v^{l(v) - l(z) - 1} coefficient of P(v^2) = v^{l(v)} * coeff.
        mu = coeff.coeff(-z.length() - 1)
        if mu:
            corrections.append((z, mu))
    for z, mu in corrections:
        h = h - cprime(z, cache).scale(mu)
    _record_p(h, x, cache)
    return h


def _record_p(h, w, cache):
    lw = w.length()
    for y, coeff in h.terms.items():
        p = coeff.shift(lw).to_int_poly_in_q()
        _validate_entry(w.r, y.window, w.window, p)
        cache.p_table[(w.r, y.window, w.window)] = p


def kl_poly(y, w, cache=None):
    """The Kazhdan-Lusztig polynomial P_{y,w} in q = v^2.

    Follows the extension rule P_{rho^a y, rho^b w} = delta_{a,b} P_{y,w}.
    """
    cache = cache or _default_cache
    ay, y0 = strip_rho(y)
    aw, w0 = strip_rho(w)
    if ay != aw:
        return IntPoly(())
    if y0 == w0:
        return IntPoly((1,))
    key = (w0.r, y0.window, w0.window)
    p = cache.p_table.get(key)
    if p is not None:
        return p
    c = cprime(w0, cache)
    return cache.p_table.get(key, IntPoly(()))


def x_lambda(lam, r=None):
    """x_lambda = sum of T_w over the Young subgroup."""
    r = lam.sigma() if r is None else r
    return HeckeElt(r, {w: LP_ONE for w in lam.young_subgroup(r)})


def double_coset_sum(lam, d, mu):
    """T_{S_lambda d S_mu} = sum of T_w over the double coset of d.

    d must be the minimal double-coset representative.
    """
    if not affweyl.is_distinguished(lam, d, mu):
        raise ValueError("d is not a minimal double-coset representative")
    _, _, elems = affweyl.double_coset(lam, d, mu)
    return HeckeElt(d.r, {w: LP_ONE for w in elems})


def clear_caches():
    _t_inverse_memo.clear()
    _simple_step_memo.clear()
    _default_cache.cprime_table.clear()
    _default_cache.p_table.clear()
