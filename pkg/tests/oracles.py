"""Independent brute-force oracles used to freeze expected values.

Nothing here touches the package's lattice, incidence-algebra or recursion
code.  Flats come from testing every subset, characteristic polynomials from
Whitney's subset expansion, and P and Q from solving the two defining
equations (the original forms, not the rearranged recursion the library
uses) with sympy polynomials.
"""

from functools import lru_cache
from itertools import combinations

import sympy as sp

t = sp.Symbol("t")


class BruteMatroid:
    def __init__(self, n, rank):
        self.n = n
        self.rank = lru_cache(maxsize=None)(lambda s: rank(s))
        self.E = frozenset(range(n))

    def is_flat(self, A):
        r = self.rank(A)
        return all(self.rank(A | {e}) > r for e in self.E - A)

    @property
    def flats(self):
        subsets = (frozenset(c) for k in range(self.n + 1) for c in combinations(range(self.n), k))
        return [A for A in subsets if self.is_flat(A)]

    def interval(self, F, G):
        return [H for H in self.flats if F <= H <= G]

    def chi(self, F, G):
        """Whitney expansion for the minor on G - F (loopless since F is a flat)."""
        base = self.rank(F)
        r = self.rank(G) - base
        S = sorted(G - F)
        total = 0
        for k in range(len(S) + 1):
            for A in combinations(S, k):
                total += (-1) ** k * t ** (r - (self.rank(F | frozenset(A)) - base))
        return sp.expand(total)


def _solve_low(rhs, r):
    # x with deg x < r/2 and t^r x(1/t) - x == rhs
    poly = sp.Poly(sp.expand(rhs), t)
    x = 0
    for (k,), c in poly.terms():
        if 2 * k < r:
            x -= c * t ** k
    check = sp.expand(t ** r * x.subs(t, 1 / t) - x - rhs) if x != 0 else sp.expand(-rhs)
    assert check == 0, "no solution of the defining equation"
    return sp.expand(x)


def kl_oracle(M: BruteMatroid):
    P = {}

    def p(F, G):
        if (F, G) in P:
            return P[F, G]
        if F == G:
            val = sp.Integer(1)
        else:
            r = M.rank(G) - M.rank(F)
            rhs = sum((M.chi(F, H) * p(H, G) for H in M.interval(F, G) if H != F), sp.Integer(0))
            val = _solve_low(rhs, r)
        P[F, G] = val
        return val

    return p


def inverse_kl_oracle(M: BruteMatroid):
    """Q on intervals, from t^r (-1)^r Q(1/t) = sum_H (-1)^{r(F,H)} Q_FH t^{r(H,G)} chi_HG(1/t)."""
    Q = {}

    def q(F, G):
        if (F, G) in Q:
            return Q[F, G]
        if F == G:
            val = sp.Integer(1)
        else:
            r = M.rank(G) - M.rank(F)
            rhs = 0
            for H in M.interval(F, G):
                if H == G:
                    continue
                rHG = M.rank(G) - M.rank(H)
                rFH = M.rank(H) - M.rank(F)
                rhs += ((-1) ** rFH * q(F, H) * sp.expand(t ** rHG * M.chi(H, G).subs(t, 1 / t)))
            # (-1)^r (t^r Q(1/t) - Q) = rhs
            val = _solve_low(sp.expand((-1) ** r * rhs), r)
        Q[F, G] = val
        return val

    return q


def oracle_values(n, rank):
    """``(chi, P, Q)`` of the whole matroid as ascending integer lists."""
    M = BruteMatroid(n, rank)
    bottom = frozenset(A for A in M.E if M.rank(frozenset([A])) == 0)
    E = M.E

    def coeffs(expr):
        expr = sp.expand(expr)
        if expr == 0:
            return []
        return [int(c) for c in reversed(sp.Poly(expr, t).all_coeffs())]

    return (coeffs(M.chi(bottom, E)), coeffs(kl_oracle(M)(bottom, E)),
            coeffs(inverse_kl_oracle(M)(bottom, E)))


def uniform_rank(d):
    return lambda s: min(len(s), d)


def graphic_rank(edges):
    def rank(s):
        parent = {}

        def find(x):
            while parent.get(x, x) != x:
                x = parent[x]
            return x

        r = 0
        for i in s:
            a, b = find(edges[i][0]), find(edges[i][1])
            if a != b:
                parent[a] = b
                r += 1
        return r

    return rank


def brute_max_independent(n, bases, A):
    """Largest subset of A contained in some basis, by enumeration."""
    best = 0
    for k in range(len(A) + 1):
        for S in combinations(sorted(A), k):
            if any(set(S) <= set(B) for B in bases):
                best = max(best, k)
    return best
