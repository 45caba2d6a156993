"""The standard matroid suite shared by the invariant and acceptance tests."""

from matkls.lab import connected_graphs
from matkls.matroid import Matroid

K3 = [[0, 1], [1, 2], [0, 2]]
K4 = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]


def standard_suite():
    """``(label, matroid)`` pairs: B_1..B_5, U_{m,d} for m, d <= 4, K3, K4 and
    every connected simple graph on 2 to 5 vertices."""
    out = [(f"B{n}", Matroid.boolean(n)) for n in range(1, 6)]
    out += [(f"U{m},{d}", Matroid.uniform(m, d)) for m in range(1, 5) for d in range(1, 5)]
    out += [("K3", Matroid.graphic(K3)), ("K4", Matroid.graphic(K4))]
    for n in range(2, 6):
        for edges in connected_graphs(n):
            out.append((f"G{n}:{edges}", Matroid.graphic(edges)))
    return out
