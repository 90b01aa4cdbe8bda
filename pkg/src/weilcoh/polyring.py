"""Sparse multivariate polynomials with exact rational coefficients.

Two concrete rings matter here.  The Fock ring has variables z(alpha,i)
for 1 <= alpha <= n, 1 <= i <= k and w(i) for 1 <= i <= k, all of degree 1;
its polynomials form P_k.  The abstract invariant ring S_k has variables
rhat(i,j) for i <= j of degree 2 and what(i) of degree 1, and evaluates
into the Fock ring via rhat(i,j) |-> sum_alpha z(alpha,i) z(alpha,j),
what(i) |-> w(i).  A generic weighted ring covers one-off cases such as
Q[x] in the Koszul tests.

Monomials are dense exponent tuples; the term order is graded
lexicographic with z(1,1) < z(2,1) < ... < z(n,k) < w(1) < ... < w(k).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

__all__ = [
    "Ring",
    "FockRing",
    "SkRing",
    "Polynomial",
    "monomials_of_degree",
    "r_gen",
    "q_gen",
    "c_gen",
    "minor",
    "laplacian",
    "sk_evaluate",
    "son_act",
]


class Ring:
    """A polynomial ring described by variable names and weights."""

    def __init__(self, names, weights=None):
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.weights = tuple(weights) if weights else (1,) * self.nvars

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and self.names == other.names
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.names, self.weights))

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return Polynomial(self, {(0,) * self.nvars: Fraction(1)})

    def var(self, idx):
        e = [0] * self.nvars
        e[idx] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def monomial_degree(self, expo):
        return sum(e * w for e, w in zip(expo, self.weights))


class FockRing(Ring):
    """P_k: variables z(alpha,i) and w(i), all of degree 1.

    Index layout (also the term order): z(1,1), z(2,1), ..., z(n,1),
    z(1,2), ..., z(n,k), w(1), ..., w(k).
    """

    def __init__(self, n, k):
        if n < 1 or k < 1:
            raise ValueError("need n >= 1 and k >= 1")
        self.n = n
        self.k = k
        names = ["z(%d,%d)" % (a, i) for i in range(1, k + 1) for a in range(1, n + 1)]
        names += ["w(%d)" % i for i in range(1, k + 1)]
        super().__init__(names)

    def z(self, alpha, i):
        if not (1 <= alpha <= self.n and 1 <= i <= self.k):
            raise ValueError("z(%d,%d) out of range" % (alpha, i))
        return (i - 1) * self.n + (alpha - 1)

    def w(self, i):
        if not (1 <= i <= self.k):
            raise ValueError("w(%d) out of range" % i)
        return self.n * self.k + (i - 1)

    def z_var(self, alpha, i):
        return self.var(self.z(alpha, i))

    def w_var(self, i):
        return self.var(self.w(i))


class SkRing(Ring):
    """S_k: abstract variables rhat(i,j) (i <= j, degree 2) and what(i)
    (degree 1)."""

    def __init__(self, k):
        if k < 1:
            raise ValueError("need k >= 1")
        self.k = k
        pairs = [(i, j) for i in range(1, k + 1) for j in range(i, k + 1)]
        self._pair_index = {p: t for t, p in enumerate(pairs)}
        names = ["rhat(%d,%d)" % p for p in pairs]
        names += ["what(%d)" % i for i in range(1, k + 1)]
        weights = [2] * len(pairs) + [1] * k
        super().__init__(names, weights)

    def rhat(self, i, j):
        if i > j:
            i, j = j, i
        if not (1 <= i <= self.k and j <= self.k):
            raise ValueError("rhat(%d,%d) out of range" % (i, j))
        return self._pair_index[(i, j)]

    def what(self, i):
        if not (1 <= i <= self.k):
            raise ValueError("what(%d) out of range" % i)
        return len(self._pair_index) + (i - 1)

    def rhat_var(self, i, j):
        return self.var(self.rhat(i, j))

    def what_var(self, i):
        return self.var(self.what(i))


class Polynomial:
    """terms: exponent tuple -> nonzero Fraction."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    @staticmethod
    def _merge(ring, items):
        terms = {}
        for expo, coef in items:
            c = terms.get(expo, Fraction(0)) + coef
            if c:
                terms[expo] = c
            elif expo in terms:
                del terms[expo]
        return Polynomial(ring, terms)

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        return Polynomial._merge(
            self.ring, itertools.chain(self.terms.items(), other.terms.items())
        )

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = terms.get(e, Fraction(0)) + c1 * c2
                if c:
                    terms[e] = c
                elif e in terms:
                    del terms[e]
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def partial(self, vidx):
        """Formal partial derivative with respect to variable vidx."""
        items = []
        for e, c in self.terms.items():
            if e[vidx]:
                ne = list(e)
                ne[vidx] -= 1
                items.append((tuple(ne), c * e[vidx]))
        return Polynomial._merge(self.ring, items)

    def degree(self):
        """Weighted total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(self.ring.monomial_degree(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {self.ring.monomial_degree(e) for e in self.terms}
        return len(degs) <= 1

    def graded_part(self, d):
        return Polynomial(
            self.ring,
            {e: c for e, c in self.terms.items()
             if self.ring.monomial_degree(e) == d},
        )

    def coefficient(self, expo):
        return self.terms.get(tuple(expo), Fraction(0))

    def compose(self, images):
        """Ring map sending variable i to images[i] (a Polynomial).

        All images must share a common ring; returns the image of self.
        """
        target = images[0].ring
        out = target.zero()
        # cache powers per variable
        powers = [{0: target.one()} for _ in images]
        for e, c in self.terms.items():
            term = target.one().scale(c)
            for i, exp in enumerate(e):
                if exp:
                    cache = powers[i]
                    top = max(cache)
                    while top < exp:
                        cache[top + 1] = cache[top] * images[i]
                        top += 1
                    term = term * cache[exp]
            out = out + term
        return out

    def sign_flip(self, vidxs):
        """Substitute x |-> -x for each variable index in vidxs (cheap)."""
        vidxs = set(vidxs)
        terms = {}
        for e, c in self.terms.items():
            s = sum(e[i] for i in vidxs)
            terms[e] = -c if s % 2 else c
        return Polynomial(self.ring, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mon = "*".join(
                self.ring.names[i] + ("^%d" % x if x > 1 else "")
                for i, x in enumerate(e) if x
            )
            parts.append(("%s" % c) + ("*" + mon if mon else ""))
        return " + ".join(parts)


def monomials_of_degree(ring, d, varset=None):
    """All exponent tuples of weighted degree d supported on varset
    (default: every variable), in a fixed deterministic (lex) order."""
    if d < 0:
        return []
    if varset is None:
        varset = range(ring.nvars)
    vs = sorted(varset)
    out = []
    expo = [0] * ring.nvars

    def rec(pos, remaining):
        if remaining == 0:
            out.append(tuple(expo))
            return
        if pos == len(vs):
            return
        v = vs[pos]
        w = ring.weights[v]
        for e in range(remaining // w, -1, -1):
            expo[v] = e
            rec(pos + 1, remaining - e * w)
        expo[v] = 0

    rec(0, d)
    return out


def fock_varset(ring, which):
    """Variable index set of a FockRing: 'all', 'z-only' or 'w-only'."""
    if which == "all":
        return range(ring.nvars)
    if which == "z-only":
        return range(ring.n * ring.k)
    if which == "w-only":
        return range(ring.n * ring.k, ring.nvars)
    raise ValueError("unknown varset %r" % which)


def r_gen(ring, i, j):
    """r(i,j) = sum_alpha z(alpha,i) z(alpha,j), degree 2."""
    out = ring.zero()
    for a in range(1, ring.n + 1):
        out = out + ring.z_var(a, i) * ring.z_var(a, j)
    return out


def q_gen(ring, alpha):
    """q(alpha) = sum_i z(alpha,i) w(i), degree 2."""
    out = ring.zero()
    for i in range(1, ring.k + 1):
        out = out + ring.z_var(alpha, i) * ring.w_var(i)
    return out


def c_gen(ring, j):
    """c(j) = sum_i r(i,j) w(i), degree 3."""
    out = ring.zero()
    for i in range(1, ring.k + 1):
        out = out + r_gen(ring, i, j) * ring.w_var(i)
    return out


def minor(ring, I, J):
    """Determinant of the submatrix of (z(alpha,i)) with rows I, columns J.

    I is strictly increasing in 1..n, J strictly increasing in 1..k,
    |I| = |J|.  The empty minor is 1.
    """
    I, J = tuple(I), tuple(J)
    if len(I) != len(J):
        raise ValueError("|I| != |J|")
    if any(I[t] >= I[t + 1] for t in range(len(I) - 1)) or any(
        J[t] >= J[t + 1] for t in range(len(J) - 1)
    ):
        raise ValueError("index tuples must be strictly increasing")
    if I and not (1 <= I[0] and I[-1] <= ring.n):
        raise ValueError("row indices out of range")
    if J and not (1 <= J[0] and J[-1] <= ring.k):
        raise ValueError("column indices out of range")
    out = ring.zero()
    for perm in itertools.permutations(range(len(I))):
        sign = _perm_sign(perm)
        term = ring.one()
        for t, pt in enumerate(perm):
            term = term * ring.z_var(I[t], J[pt])
        out = out + term.scale(sign)
    return out


def _perm_sign(perm):
    sign = 1
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                sign = -sign
    return sign


def laplacian(p, i, j):
    """Delta_{ij} p = sum_alpha d^2 p / dz(alpha,i) dz(alpha,j)."""
    ring = p.ring
    out = ring.zero()
    for a in range(1, ring.n + 1):
        out = out + p.partial(ring.z(a, i)).partial(ring.z(a, j))
    return out


def sk_evaluate(p, ring):
    """Evaluate an S_k polynomial in a FockRing with matching k."""
    sk = p.ring
    if not isinstance(sk, SkRing) or sk.k != ring.k:
        raise ValueError("k mismatch between S_k polynomial and target ring")
    images = []
    for i in range(1, sk.k + 1):
        for j in range(i, sk.k + 1):
            images.append(r_gen(ring, i, j))
    for i in range(1, sk.k + 1):
        images.append(ring.w_var(i))
    return p.compose(images)


def son_act(a, b, p):
    """The so(n) generator X_ab acting as the derivation
    sum_i ( z(b,i) d/dz(a,i) - z(a,i) d/dz(b,i) ); w variables fixed."""
    if not a < b:
        raise ValueError("need a < b")
    ring = p.ring
    out = ring.zero()
    for i in range(1, ring.k + 1):
        out = out + ring.z_var(b, i) * p.partial(ring.z(a, i))
        out = out - ring.z_var(a, i) * p.partial(ring.z(b, i))
    return out
