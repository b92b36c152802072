"""The extended affine symmetric group of period r.

Elements are r-periodic permutations of Z stored by their window
(w(1), ..., w(r)).  The group splits as <rho> x| W_r where rho is the
shift j -> j+1 and W_r is the affine Weyl group generated by s_1..s_r.
This module supplies composition, length, Bruhat order, Young-subgroup
and double-coset calculus, and the bijection with periodic matrices.
"""

from __future__ import annotations

import itertools

from .affmat import AffMatrix


class AffPerm:
    """Window representation of an r-periodic permutation of Z."""

    __slots__ = ("window", "_hash", "_len", "_inv")

    def __init__(self, window):
        window = tuple(window)
        r = len(window)
        if r < 1:
            raise ValueError("window must be nonempty")
        if len({x % r for x in window}) != r:
            raise ValueError("window values must be distinct modulo r: %s" % (window,))
        self.window = window
        self._hash = None
        self._len = None
        self._inv = None

    @property
    def r(self):
        return len(self.window)

    def apply(self, i):
        """Value w(i) for arbitrary integer i."""
        r = len(self.window)
        s = (i - 1) // r
        return self.window[i - s * r - 1] + s * r

    def inverse(self):
        if self._inv is None:
            r = len(self.window)
            inv = [0] * r
            for i, wi in enumerate(self.window, start=1):
                s = (wi - 1) // r
                inv[wi - s * r - 1] = i - s * r
            self._inv = AffPerm(inv)
            self._inv._inv = self
        return self._inv

    def __mul__(self, other):
        """Composition (x * y)(i) = x(y(i))."""
        if len(self.window) != len(other.window):
            raise ValueError("mismatched periods")
        return AffPerm(tuple(self.apply(v) for v in other.window))

    def __eq__(self, other):
        if not isinstance(other, AffPerm):
            return NotImplemented
        return self.window == other.window

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.window)
        return self._hash

    def __repr__(self):
        return "AffPerm%s" % (self.window,)

    def rho_part(self):
        """The integer a with w in rho^a W_r."""
        r = len(self.window)
        total = sum(self.window) - r * (r + 1) // 2
        if total % r:
            raise AssertionError("window sum not divisible by r")
        return total // r

    def is_identity(self):
        return self.window == tuple(range(1, len(self.window) + 1))

    def length(self):
        """Number of inversions (i, j) with 1 <= i <= r, i < j, w(i) > w(j)."""
        if self._len is None:
            r = len(self.window)
            total = 0
            for i in range(1, r + 1):
                wi = self.window[i - 1]
                for j0 in range(1, r + 1):
                    wj = self.window[j0 - 1]
                    hi = (wi - wj - 1) // r
                    lo = 0 if j0 > i else 1
                    if hi >= lo:
                        total += hi - lo + 1
            self._len = total
        return self._len

    def right_descent(self, i):
        """True iff l(w s_i) < l(w), i.e. w(i) > w(i+1)."""
        return self.apply(i) > self.apply(i + 1)

    def left_descent(self, i):
        """True iff l(s_i w) < l(w), i.e. w^-1(i) > w^-1(i+1)."""
        return self.inverse().apply(i) > self.inverse().apply(i + 1)


def identity(r):
    return AffPerm(range(1, r + 1))


def simple(r, i):
    """The simple reflection s_i (indices taken modulo r; s_r is affine)."""
    i = (i - 1) % r + 1
    w = list(range(1, r + 1))
    if i < r:
        w[i - 1], w[i] = w[i], w[i - 1]
    else:
        w[0] = 0
        w[r - 1] = r + 1
    return AffPerm(w)


def rho(r, power=1):
    return AffPerm(range(1 + power, r + 1 + power))


_reduced_word_memo = {}


def reduced_word(w):
    """A reduced word (list of generator indices 1..r) for w in W_r."""
    if w.rho_part() != 0:
        raise ValueError("reduced words are defined for W_r elements only")
    cached = _reduced_word_memo.get(w)
    if cached is not None:
        return cached
    start = w
    r = w.r
    word = []
    while not w.is_identity():
        for i in range(1, r + 1):
            if w.right_descent(i):
                w = w * simple(r, i)
                word.append(i)
                break
        else:
            raise AssertionError("non-identity element without right descent")
    word.reverse()
    _reduced_word_memo[start] = word
    return word


def strip_rho(w):
    """Write w = rho^a * x with x in W_r; returns (a, x)."""
    a = w.rho_part()
    if a == 0:
        return 0, w
    x = AffPerm(tuple(v - a for v in w.window))
    return a, x


_bruhat_memo = {}


def bruhat_leq(y, w):
    """Bruhat order on the extended group: rho parts equal and y <= w in W_r."""
    if y.r != w.r:
        raise ValueError("mismatched periods")
    ay, y0 = strip_rho(y)
    aw, w0 = strip_rho(w)
    if ay != aw:
        return False
    return _bruhat_leq_wr(y0, w0)


def _bruhat_leq_wr(y, w):
    if y.length() > w.length():
        return False
    if y == w:
        return True
    key = (y.window, w.window)
    res = _bruhat_memo.get(key)
    if res is not None:
        return res
    r = y.r
    # standard recursion on a right descent s of w
    for i in range(1, r + 1):
        if w.right_descent(i):
            s = simple(r, i)
            ws = w * s
            if y.right_descent(i):
                res = _bruhat_leq_wr(y * s, ws)
            else:
                res = _bruhat_leq_wr(y, ws)
            break
    else:
        res = y == w
    _bruhat_memo[key] = res
    return res


def lower_interval(w):
    """All y <= w, as distinct subwords of one reduced word of the W_r part.

    The interval is taken inside the coset rho^a W_r of w.
    """
    a, x = strip_rho(w)
    r = w.r
    word = reduced_word(x)
    current = {identity(r)}
    for i in word:
        s = simple(r, i)
        nxt = set(current)
        for y in current:
            nxt.add(y * s)
        current = nxt
    if a == 0:
        return current
    shift = rho(r, a)
    return {shift * y for y in current}


class Composition:
    """A weight in Lambda(n, r): n nonnegative parts, extended n-periodically."""

    __slots__ = ("n", "parts")

    def __init__(self, parts):
        parts = tuple(parts)
        if any(p < 0 for p in parts):
            raise ValueError("parts must be nonnegative")
        self.n = len(parts)
        self.parts = parts

    def sigma(self):
        return sum(self.parts)

    def part(self, i):
        """lambda_i for arbitrary integer i (n-periodic)."""
        return self.parts[(i - 1) % self.n]

    def block(self, m):
        """The block R^lambda_m of consecutive integers, for any m in Z.

        Writing m = i + kn with 1 <= i <= n, the block starts at
        k*r + lambda_1 + ... + lambda_{i-1} + 1 and has lambda_i elements.
        """
        k = (m - 1) // self.n
        i = m - k * self.n
        r = self.sigma()
        start = k * r + sum(self.parts[: i - 1])
        return list(range(start + 1, start + self.parts[i - 1] + 1))

    def block_of(self, x):
        """The index m with x in R^lambda_m."""
        r = self.sigma()
        if r == 0:
            raise ValueError("empty composition has no blocks")
        k = (x - 1) // r
        x0 = x - k * r
        run = 0
        for i, p in enumerate(self.parts, start=1):
            run += p
            if x0 <= run:
                return i + k * self.n
        raise AssertionError

    def young_generators(self):
        """Indices i with s_i in the Young subgroup (block interiors)."""
        gens = []
        pos = 0
        for p in self.parts:
            gens.extend(range(pos + 1, pos + p))
            pos += p
        return gens

    def young_subgroup(self, r=None):
        """All elements of the Young subgroup, as AffPerms."""
        r = self.sigma() if r is None else r
        blocks = [self.block(i + 1) for i in range(self.n) if self.parts[i]]
        out = []
        for perms in itertools.product(
            *(itertools.permutations(b) for b in blocks)
        ):
            w = list(range(1, r + 1))
            for b, p in zip(blocks, perms):
                for src, dst in zip(b, p):
                    w[src - 1] = dst
            out.append(AffPerm(w))
        return out

    def longest_length(self):
        """Length of the longest element w_{0,lambda}."""
        return sum(p * (p - 1) // 2 for p in self.parts)

    def longest_element(self):
        r = self.sigma()
        w = list(range(1, r + 1))
        pos = 0
        for p in self.parts:
            for t in range(p):
                w[pos + t] = pos + p - t
            pos += p
        return AffPerm(w)

    def __eq__(self, other):
        if not isinstance(other, Composition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "Composition%s" % (self.parts,)

    def to_json(self):
        return {"n": self.n, "parts": list(self.parts)}


def coset_decompose(w, lam, side):
    """Split w = u * d (side='left', u in S_lambda) or w = d * u (side='right').

    The distinguished factor d satisfies l(w) = l(u) + l(d) and is the
    minimal-length element of its coset.
    """
    gens = lam.young_generators()
    d = w
    u = identity(w.r)
    if side == "left":
        changed = True
        while changed:
            changed = False
            for i in gens:
                if d.left_descent(i):
                    s = simple(w.r, i)
                    d = s * d
                    u = u * s
                    changed = True
        return u, d
    elif side == "right":
        changed = True
        while changed:
            changed = False
            for i in gens:
                if d.right_descent(i):
                    s = simple(w.r, i)
                    d = d * s
                    u = s * u
                    changed = True
        return u, d
    raise ValueError("side must be 'left' or 'right'")


def is_left_minimal(w, lam):
    """True iff w is the minimal element of S_lambda * w."""
    return not any(w.left_descent(i) for i in lam.young_generators())


def is_right_minimal(w, mu):
    """True iff w is the minimal element of w * S_mu."""
    return not any(w.right_descent(i) for i in mu.young_generators())


def is_distinguished(lam, w, mu):
    return is_left_minimal(w, lam) and is_right_minimal(w, mu)


_double_coset_memo = {}


def double_coset(lam, w, mu):
    """The double coset S_lambda w S_mu.

    Returns (d_min, d_plus, elements): the unique shortest and longest
    elements and the full (finite) element set.
    """
    key = (lam.parts, w.window, mu.parts)
    res = _double_coset_memo.get(key)
    if res is not None:
        return res
    r = w.r
    right = mu.young_subgroup(r)
    seen = set()
    for u in lam.young_subgroup(r):
        uw = u * w
        for x in right:
            seen.add(uw * x)
    d_min = min(seen, key=lambda x: (x.length(), x.window))
    d_plus = max(seen, key=lambda x: (x.length(), x.window))
    # both extremes are unique in a double coset of Young subgroups
    res = (d_min, d_plus, frozenset(seen))
    _double_coset_memo[key] = res
    return res


def jdelta(lam, d, mu):
    """The matrix A = (|R^lambda_k  intersect  d R^mu_l|) in Theta(n, r)."""
    r = lam.sigma()
    if mu.sigma() != r:
        raise ValueError("sigma(lambda) != sigma(mu)")
    if not is_distinguished(lam, d, mu):
        raise ValueError("d is not a minimal double-coset representative")
    n = lam.n
    entries = {}
    for l in range(1, n + 1):
        for a in mu.block(l):
            x = d.apply(a)
            k = lam.block_of(x)
            # normalize row to 1..n, shifting the column index with it
            s = (k - 1) // n
            key = (k - s * n, l - s * n)
            entries[key] = entries.get(key, 0) + 1
    return AffMatrix(n, entries)


_jdelta_inv_memo = {}


def jdelta_inv(a_mat):
    """Invert the triple bijection: A -> (lambda, d, mu) with jdelta(...) == A.

    d is built by the monotone filling rule: row blocks are processed in
    increasing order over a periodic strip wide enough to cover the
    column support; within a row block, column blocks are visited in
    increasing order, and the a_{k,l} smallest unused members of R^mu_l
    map, in increasing order, onto the smallest unused members of
    R^lambda_k.  Correctness is enforced by a round-trip check.
    """
    res = _jdelta_inv_memo.get(a_mat)
    if res is not None:
        return res
    n = a_mat.n
    lam = Composition(a_mat.ro())
    mu = Composition(a_mat.co())
    r = a_mat.sigma()
    if r == 0:
        raise ValueError("zero matrix has no permutation attached")
    span = a_mat.col_span()
    width = max(abs(span[0] - 1), abs(span[1] - n)) // n + 2
    row_entries = {}  # row residue i -> sorted list of (col, mult)
    for (i, j), m in a_mat.entries():
        row_entries.setdefault(i, []).append((j, m))
    used_mu = {}  # block index l -> count consumed
    used_lam = {}
    images = {}  # position in Z -> image in Z
    for s in range(-width, width + 1):
        for i in range(1, n + 1):
            k = i + s * n
            for (j, m) in sorted(row_entries.get(i, [])):
                l = j + s * n
                mu_block = mu.block(l)
                lam_block = lam.block(k)
                um = used_mu.get(l, 0)
                ul = used_lam.get(k, 0)
                srcs = mu_block[um : um + m]
                dsts = lam_block[ul : ul + m]
                if len(srcs) < m or len(dsts) < m:
                    raise ValueError("row/column sums inconsistent with entries")
                used_mu[l] = um + m
                used_lam[k] = ul + m
                for src, dst in zip(srcs, dsts):
                    images[src] = dst
    window = []
    for j in range(1, r + 1):
        if j not in images:
            raise AssertionError("periodic strip too narrow in jdelta_inv")
        window.append(images[j])
    d = AffPerm(window)
    if not is_distinguished(lam, d, mu) or jdelta(lam, d, mu) != a_mat:
        raise AssertionError("monotone filling failed round-trip for %r" % a_mat)
    res = (lam, d, mu)
    _jdelta_inv_memo[a_mat] = res
    return res


def enumerate_wr(r, max_length):
    """All elements of W_r with length <= max_length, grouped by length."""
    gens = [simple(r, i) for i in range(1, r + 1)]
    by_len = [{identity(r)}]
    for l in range(1, max_length + 1):
        layer = set()
        for w in by_len[l - 1]:
            for s in gens:
                ws = w * s
                if ws.length() == l:
                    layer.add(ws)
        by_len.append(layer)
    return by_len


def clear_caches():
    _bruhat_memo.clear()
    _double_coset_memo.clear()
    _jdelta_inv_memo.clear()
    _reduced_word_memo.clear()
