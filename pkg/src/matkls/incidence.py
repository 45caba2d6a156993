"""The incidence algebra of a lattice of flats with coefficients in Z[t].

An :class:`IncidenceFunction` assigns a polynomial to every comparable pair
``(F, G)`` of flat indices.  Convolution sums over the lower subinterval
first::

    (f * g)[F, G] = sum_{F <= H <= G} f[F, H] * g[H, G]

The weak rank of ``[F, G]`` is ``rank(G) - rank(F)``; the bar involution
reverses each value against that rank.  ``chi = mu * bar(zeta)`` is the
characteristic function, a kernel (``bar(chi) == chi^-1``), and the
Kazhdan-Lusztig-Stanley solvers return the unique functions ``f`` with unit
diagonal, ``deg f[F, G] < r/2`` off the diagonal and ``bar(f) = k * f``
(right) or ``bar(g) = g * k`` (left).
"""

from __future__ import annotations

from .errors import InconsistentKernel, LatticeMismatch, NotAKernel, NotInvertible
from .matroid import FlatLattice
from .polynomial import ONE, ZERO, Polynomial, poly_bar


class IncidenceFunction:
    """Polynomial values on all intervals of a :class:`FlatLattice`."""

    __slots__ = ("lattice", "values")

    def __init__(self, lattice: FlatLattice, values: dict):
        self.lattice = lattice
        self.values = values

    @classmethod
    def from_callable(cls, lattice: FlatLattice, fn) -> "IncidenceFunction":
        return cls(lattice, {(i, j): fn(i, j) for i, j in lattice.pairs()})

    def __getitem__(self, pair) -> Polynomial:
        return self.values[pair]

    def __eq__(self, other):
        if not isinstance(other, IncidenceFunction):
            return NotImplemented
        return self.lattice is other.lattice and self.values == other.values

    def __mul__(self, other):
        return convolve(self, other)

    def __repr__(self):
        return f"IncidenceFunction(<{len(self.values)} intervals>)"

    def in_graded_ring(self) -> bool:
        """deg f[F, G] <= r(F, G) on every interval."""
        L = self.lattice
        return all(p.degree <= L.r(i, j) for (i, j), p in self.values.items())

    def in_half_ring(self) -> bool:
        """Unit diagonal and deg f[F, G] < r(F, G)/2 for F < G."""
        L = self.lattice
        for (i, j), p in self.values.items():
            if i == j:
                if p != ONE:
                    return False
            elif not 2 * p.degree < L.r(i, j):
                return False
        return True

    def diagonal_units(self) -> bool:
        return all(self.values[i, i] in (ONE, -ONE) for i in range(len(self.lattice)))


def delta(L: FlatLattice) -> IncidenceFunction:
    return IncidenceFunction.from_callable(L, lambda i, j: ONE if i == j else ZERO)


def zeta(L: FlatLattice) -> IncidenceFunction:
    return IncidenceFunction.from_callable(L, lambda i, j: ONE)


def convolve(f: IncidenceFunction, g: IncidenceFunction) -> IncidenceFunction:
    if f.lattice is not g.lattice:
        raise LatticeMismatch("convolution of functions on different lattices")
    L = f.lattice
    fv, gv = f.values, g.values
    out = {}
    for i, j in L.pairs():
        acc = ZERO
        for h in L.interval(i, j):
            a = fv[i, h]
            if a:
                b = gv[h, j]
                if b:
                    acc = acc + a * b
        out[i, j] = acc
    return IncidenceFunction(L, out)


def invert(f: IncidenceFunction) -> IncidenceFunction:
    """Two-sided inverse; exists iff every diagonal value is +1 or -1."""
    L = f.lattice
    fv = f.values
    for i in range(len(L)):
        if fv[i, i] not in (ONE, -ONE):
            raise NotInvertible(f"diagonal value at flat {i} is {fv[i, i]}")
    g = {}
    for i, j in L.pairs():
        if i == j:
            g[i, j] = fv[i, i]
            continue
        acc = ZERO
        for h in L.interval(i, j):
            if h != i:
                acc = acc + fv[i, h] * g[h, j]
        # f[i,i] is its own inverse
        g[i, j] = -(acc * fv[i, i][0])
    return IncidenceFunction(L, g)


def bar(f: IncidenceFunction) -> IncidenceFunction:
    L = f.lattice
    return IncidenceFunction(L, {(i, j): poly_bar(p, L.r(i, j)) for (i, j), p in f.values.items()})


def mobius(L: FlatLattice) -> IncidenceFunction:
    return invert(zeta(L))


def characteristic_function(L: FlatLattice) -> IncidenceFunction:
    """``mu * bar(zeta)``; its value on ``[bottom, top]`` is the characteristic polynomial."""
    z = zeta(L)
    return convolve(invert(z), bar(z))


def is_kernel(k: IncidenceFunction) -> bool:
    if not k.diagonal_units():
        raise NotInvertible("kernel candidate has a non-unit diagonal value")
    if any(k.values[i, i] != ONE for i in range(len(k.lattice))):
        return False
    if not k.in_graded_ring():
        return False
    return bar(k) == invert(k)


def _solve_half(rhs: Polynomial, r: int, where) -> Polynomial:
    # bar_r(x) - x = rhs with deg x < r/2: x is minus the low half of rhs
    x = -rhs.truncate(r / 2)
    if poly_bar(x, r) - x != rhs:
        raise InconsistentKernel(f"no solution of degree < {r}/2 on interval {where}")
    return x


def kls_solve_right(k: IncidenceFunction, check: bool = True) -> IncidenceFunction:
    """The unique ``f`` in the half ring with ``bar(f) == k * f``."""
    if check and not is_kernel(k):
        raise NotAKernel("right KLS function requested for a non-kernel")
    L = k.lattice
    kv = k.values
    f = {}
    for i, j in L.pairs():
        if i == j:
            f[i, j] = ONE
            continue
        acc = ZERO
        for h in L.interval(i, j):
            if h != i:
                a = kv[i, h]
                if a:
                    acc = acc + a * f[h, j]
        f[i, j] = _solve_half(acc, L.r(i, j), (i, j))
    return IncidenceFunction(L, f)


def kls_solve_left(k: IncidenceFunction, check: bool = True) -> IncidenceFunction:
    """The unique ``g`` in the half ring with ``bar(g) == g * k``."""
    if check and not is_kernel(k):
        raise NotAKernel("left KLS function requested for a non-kernel")
    L = k.lattice
    kv = k.values
    g = {}
    for i, j in L.pairs():
        if i == j:
            g[i, j] = ONE
            continue
        acc = ZERO
        for h in L.interval(i, j):
            if h != j:
                b = kv[h, j]
                if b:
                    acc = acc + g[i, h] * b
        g[i, j] = _solve_half(acc, L.r(i, j), (i, j))
    return IncidenceFunction(L, g)
