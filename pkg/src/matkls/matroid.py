"""Matroids given by rank oracles, and their lattices of flats.

Subsets of the ground set ``{0, ..., n-1}`` are handled internally as
integer bitmasks.  Public methods accept either a bitmask or any iterable of
element labels.
"""

from __future__ import annotations

import itertools
import os
import random
from functools import lru_cache
from math import comb

from .errors import (
    GroundSetTooLarge,
    MalformedSpec,
    NotAMatroid,
    NotComparable,
)

DEFAULT_MAX_GROUND = 20
# Exhaustive basis-exchange check only below this ground-set size.
EXCHANGE_CHECK_LIMIT = 12
# Cap on d-subsets examined when re-detecting uniform minors.
UNIFORM_DETECT_LIMIT = 5000


def max_ground_size() -> int:
    """Ground-set cap for lattice enumeration (``MATKLS_MAX_GROUND`` overrides)."""
    raw = os.environ.get("MATKLS_MAX_GROUND")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise MalformedSpec(f"MATKLS_MAX_GROUND must be an integer, got {raw!r}")
    return DEFAULT_MAX_GROUND


def to_mask(subset) -> int:
    if isinstance(subset, int):
        return subset
    mask = 0
    for e in subset:
        mask |= 1 << e
    return mask


def from_mask(mask: int) -> frozenset:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _popcount(x: int) -> int:
    return bin(x).count("1")


class Matroid:
    """A matroid on ``{0, ..., ground_size - 1}`` described by its rank function.

    ``kind`` is one of ``uniform``, ``boolean``, ``graph``, ``bases``,
    ``direct_sum`` or ``minor``; ``params`` holds the data that produced it.
    Instances are immutable; rank values are cached per instance.
    """

    def __init__(self, ground_size: int, rank_mask, kind: str, params: dict | None = None):
        self.ground_size = ground_size
        self.kind = kind
        self.params = dict(params or {})
        self._rank = lru_cache(maxsize=None)(rank_mask)
        self.full = (1 << ground_size) - 1

    # constructors ----------------------------------------------------

    @classmethod
    def uniform(cls, m: int, d: int) -> "Matroid":
        """U_{m,d}: rank ``d`` on ``m + d`` elements."""
        if m < 0 or d < 0:
            raise MalformedSpec("uniform matroid needs m, d >= 0")
        return cls(m + d, lambda a: min(_popcount(a), d), "uniform", {"m": m, "d": d})

    @classmethod
    def boolean(cls, n: int) -> "Matroid":
        if n < 0:
            raise MalformedSpec("boolean matroid needs n >= 0")
        return cls(n, _popcount, "boolean", {"n": n})

    @classmethod
    def graphic(cls, edges) -> "Matroid":
        """Cycle matroid of a multigraph; element ``i`` is ``edges[i]``."""
        try:
            edges = [tuple(int(v) for v in e) for e in edges]
        except (TypeError, ValueError):
            raise MalformedSpec("edges must be pairs of vertex labels")
        if any(len(e) != 2 for e in edges):
            raise MalformedSpec("edges must be pairs of vertex labels")

        def rank(mask):
            parent = {}

            def find(x):
                while parent.get(x, x) != x:
                    parent[x] = parent.get(parent[x], parent[x])
                    x = parent[x]
                return x

            r = 0
            i = 0
            while mask:
                if mask & 1:
                    u, v = edges[i]
                    ru, rv = find(u), find(v)
                    if ru != rv:
                        parent[ru] = rv
                        r += 1
                mask >>= 1
                i += 1
            return r

        return cls(len(edges), rank, "graph", {"edges": [list(e) for e in edges]})

    @classmethod
    def from_bases(cls, ground_size: int, bases, check: bool = True) -> "Matroid":
        try:
            masks = sorted({to_mask(b) for b in bases})
        except TypeError:
            raise MalformedSpec("bases must be lists of element labels")
        if not masks:
            raise MalformedSpec("a matroid has at least one basis")
        if any(m >> ground_size for m in masks):
            raise MalformedSpec("basis element outside the ground set")
        sizes = {_popcount(m) for m in masks}
        if len(sizes) != 1:
            raise NotAMatroid("bases of different cardinalities")
        if check and ground_size <= EXCHANGE_CHECK_LIMIT:
            _check_exchange(masks)

        def rank(a):
            return max(_popcount(a & b) for b in masks)

        params = {"ground_size": ground_size,
                  "bases": [sorted(from_mask(b)) for b in masks]}
        return cls(ground_size, rank, "bases", params)

    @classmethod
    def from_spec(cls, spec) -> "Matroid":
        """Build a matroid from its JSON description (dict or JSON text)."""
        import json

        if isinstance(spec, str):
            try:
                spec = json.loads(spec)
            except json.JSONDecodeError as exc:
                raise MalformedSpec(f"invalid JSON: {exc}")
        if not isinstance(spec, dict) or "type" not in spec:
            raise MalformedSpec("matroid spec must be an object with a 'type'")
        kind = spec["type"]
        allowed = {
            "uniform": {"m", "d"},
            "boolean": {"n"},
            "graph": {"edges"},
            "bases": {"ground_size", "bases"},
            "direct_sum": {"left", "right"},
        }
        if kind not in allowed:
            raise MalformedSpec(f"unknown matroid type {kind!r}")
        keys = set(spec) - {"type"}
        if keys != allowed[kind]:
            raise MalformedSpec(f"{kind} spec needs exactly the fields {sorted(allowed[kind])}")
        if kind in ("uniform", "boolean"):
            for k in allowed[kind]:
                if isinstance(spec[k], bool) or not isinstance(spec[k], int):
                    raise MalformedSpec(f"field {k!r} must be an integer")
        if kind == "uniform":
            return cls.uniform(spec["m"], spec["d"])
        if kind == "boolean":
            return cls.boolean(spec["n"])
        if kind == "graph":
            return cls.graphic(spec["edges"])
        if kind == "bases":
            if not isinstance(spec["ground_size"], int) or not isinstance(spec["bases"], list):
                raise MalformedSpec("bases spec needs an integer ground_size and a list of bases")
            return cls.from_bases(spec["ground_size"], spec["bases"])
        return direct_sum(cls.from_spec(spec["left"]), cls.from_spec(spec["right"]))

    def to_spec(self) -> dict:
        if self.kind in ("uniform", "boolean", "graph", "bases"):
            return {"type": self.kind,
                    **{k: v for k, v in self.params.items() if k != "labels"}}
        if self.kind == "direct_sum":
            return {"type": "direct_sum",
                    "left": self.params["left"].to_spec(),
                    "right": self.params["right"].to_spec()}
        # minors have no native description; fall back to their bases
        bases = [sorted(from_mask(b)) for b in self.bases()]
        return {"type": "bases", "ground_size": self.ground_size, "bases": bases}

    # rank queries ----------------------------------------------------

    def rank(self, subset=None) -> int:
        """Rank of ``subset`` (the whole ground set when omitted)."""
        if subset is None:
            return self._rank(self.full)
        return self._rank(to_mask(subset))

    @property
    def rk(self) -> int:
        return self._rank(self.full)

    def closure(self, subset) -> frozenset:
        return from_mask(self.closure_mask(to_mask(subset)))

    def closure_mask(self, a: int) -> int:
        r = self._rank(a)
        out = a
        for e in range(self.ground_size):
            bit = 1 << e
            if not a & bit and self._rank(a | bit) == r:
                out |= bit
        return out

    def bases(self) -> list:
        r = self.rk
        out = []
        for combo in itertools.combinations(range(self.ground_size), r):
            m = to_mask(combo)
            if self._rank(m) == r:
                out.append(m)
        return out

    def __repr__(self):
        if self.kind == "uniform":
            return f"U({self.params['m']},{self.params['d']})"
        if self.kind == "boolean":
            return f"B({self.params['n']})"
        if self.kind == "direct_sum":
            return f"({self.params['left']!r} + {self.params['right']!r})"
        return f"Matroid(kind={self.kind!r}, ground_size={self.ground_size}, rank={self.rk})"


def _check_exchange(masks):
    bases = set(masks)
    for b1 in masks:
        for b2 in masks:
            diff1 = b1 & ~b2
            diff2 = b2 & ~b1
            x = 0
            while diff1 >> x:
                if diff1 >> x & 1:
                    ok = False
                    y = 0
                    while diff2 >> y:
                        if diff2 >> y & 1 and (b1 & ~(1 << x)) | (1 << y) in bases:
                            ok = True
                            break
                        y += 1
                    if not ok:
                        raise NotAMatroid(
                            f"basis exchange fails for {sorted(from_mask(b1))}, "
                            f"{sorted(from_mask(b2))} at element {x}")
                x += 1


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    n1 = m1.ground_size
    low = (1 << n1) - 1
    r1, r2 = m1._rank, m2._rank

    def rank(a):
        return r1(a & low) + r2(a >> n1)

    return Matroid(n1 + m2.ground_size, rank, "direct_sum", {"left": m1, "right": m2})


def random_linear_matroid(ground_size: int, rank: int, rng: random.Random, p: int = 3) -> Matroid:
    """Column matroid of a random ``rank x ground_size`` matrix over GF(p),
    returned as a bases-defined matroid."""
    cols = [tuple(rng.randrange(p) for _ in range(rank)) for _ in range(ground_size)]

    def gf_rank(vectors):
        rows = [list(v) for v in vectors]
        r = 0
        for c in range(rank):
            piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = pow(rows[r][c], p - 2, p)
            rows[r] = [x * inv % p for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c] % p:
                    f = rows[i][c]
                    rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
            r += 1
        return r

    full = gf_rank(cols)
    bases = [list(c) for c in itertools.combinations(range(ground_size), full)
             if gf_rank([cols[i] for i in c]) == full]
    return Matroid.from_bases(ground_size, bases, check=False)


class FlatLattice:
    """The lattice of flats of a matroid.

    Flats are bitmasks sorted by rank, then lexicographically by their sorted
    element tuples.  Index 0 is the bottom flat ``closure(empty)`` and the last
    index is the ground set.
    """

    def __init__(self, matroid: Matroid, flats, ranks):
        self.matroid = matroid
        self.flats = list(flats)
        self.ranks = list(ranks)
        self.index = {f: i for i, f in enumerate(self.flats)}
        self.bottom = 0
        self.top = len(self.flats) - 1
        n = len(self.flats)
        fl = self.flats
        # above[i]: indices j with flats[i] <= flats[j], in index order
        self.above = [[j for j in range(i, n) if fl[i] & ~fl[j] == 0] for i in range(n)]

    def __len__(self):
        return len(self.flats)

    @property
    def rank(self) -> int:
        return self.ranks[self.top]

    def flat(self, i: int) -> frozenset:
        return from_mask(self.flats[i])

    def leq(self, i: int, j: int) -> bool:
        return self.flats[i] & ~self.flats[j] == 0

    def r(self, i: int, j: int) -> int:
        """Weak rank of the interval ``[i, j]``."""
        return self.ranks[j] - self.ranks[i]

    def interval(self, i: int, j: int) -> list:
        gj = self.flats[j]
        fl = self.flats
        return [h for h in self.above[i] if fl[h] & ~gj == 0]

    def pairs(self):
        """All comparable pairs ``(i, j)``, ordered by increasing weak rank."""
        out = [(i, j) for i in range(len(self.flats)) for j in self.above[i]]
        out.sort(key=lambda p: self.ranks[p[1]] - self.ranks[p[0]])
        return out

    def rank_counts(self, i: int | None = None, j: int | None = None) -> list:
        """Number of flats of each rank in ``[i, j]`` (whole lattice by default)."""
        i = self.bottom if i is None else i
        j = self.top if j is None else j
        counts = [0] * (self.r(i, j) + 1)
        base = self.ranks[i]
        for h in self.interval(i, j):
            counts[self.ranks[h] - base] += 1
        return counts

    def interval_kind(self, i: int | None = None, j: int | None = None):
        """Recognize ``[i, j]`` as a boolean or uniform lattice from rank counts.

        Returns ``("boolean", n)``, ``("uniform", m, d)`` or ``None``.  In a
        geometric lattice of rank d with a atoms there are at most C(a, k)
        flats of rank k, with equality for all k < d exactly when the lattice
        is that of U_{a-d,d}.
        """
        counts = self.rank_counts(i, j)
        d = len(counts) - 1
        if d == 0:
            return ("boolean", 0)
        atoms = counts[1] if d >= 1 else 0
        if all(counts[k] == comb(atoms, k) for k in range(d)):
            m = atoms - d
            if m == 0:
                return ("boolean", d)
            return ("uniform", m, d)
        return None


def build_lattice(matroid: Matroid, max_ground: int | None = None) -> FlatLattice:
    """Enumerate all flats breadth-first from ``closure(empty)``."""
    cap = max_ground_size() if max_ground is None else max_ground
    if matroid.ground_size > cap:
        raise GroundSetTooLarge(
            f"ground set of size {matroid.ground_size} exceeds the cap {cap}")
    full = matroid.full
    bottom = matroid.closure_mask(0)
    seen = {bottom}
    frontier = [bottom]
    while frontier:
        nxt = []
        for f in frontier:
            covered = f
            rest = full & ~f
            e = 0
            while rest >> e:
                bit = 1 << e
                if rest & bit and not covered & bit:
                    g = matroid.closure_mask(f | bit)
                    covered |= g
                    if g not in seen:
                        seen.add(g)
                        nxt.append(g)
                e += 1
        frontier = nxt
    flats = sorted(seen, key=lambda f: (matroid._rank(f), sorted(from_mask(f))))
    return FlatLattice(matroid, flats, [matroid._rank(f) for f in flats])


def minor(matroid: Matroid, lattice: FlatLattice, lower: int, upper: int) -> Matroid:
    """The minor whose lattice of flats is the interval ``[lower, upper]``.

    ``lower`` and ``upper`` are flat indices in ``lattice``.  The result lives
    on ``upper - lower`` relabelled as ``0..k-1`` (``params['labels']`` keeps
    the original elements) with rank ``A -> rk(A | lower) - rk(lower)``.
    """
    if not lattice.leq(lower, upper):
        raise NotComparable(f"flat {lower} is not below flat {upper}")
    f_mask = lattice.flats[lower]
    labels = sorted(from_mask(lattice.flats[upper] & ~f_mask))
    base = matroid._rank(f_mask)
    parent = matroid._rank

    def rank(a):
        m = f_mask
        i = 0
        while a:
            if a & 1:
                m |= 1 << labels[i]
            a >>= 1
            i += 1
        return parent(m) - base

    out = Matroid(len(labels), rank, "minor", {"labels": labels})
    _redetect_kind(out)
    return out


def _redetect_kind(m: Matroid) -> None:
    """Retag a minor as boolean or uniform when its rank profile says so."""
    n, r = m.ground_size, m.rk
    labels = m.params["labels"]
    if r == n:
        m.kind, m.params = "boolean", {"n": n, "labels": labels}
        return
    if r == 0:
        m.kind, m.params = "uniform", {"m": n, "d": 0, "labels": labels}
        return
    if comb(n, r) > UNIFORM_DETECT_LIMIT:
        return
    if all(m._rank(to_mask(c)) == r for c in itertools.combinations(range(n), r)):
        m.kind, m.params = "uniform", {"m": n - r, "d": r, "labels": labels}
