"""
Invariants of a few small matroids
==================================

Build matroids three ways (uniform, graphic, boolean), look at their lattices
of flats, and compute chi, P and Q with every available method.
"""

from matkls import Matroid, build_lattice, characteristic_polynomial, kl_polynomial
from matkls import inverse_kl_polynomial

# U(2,3): rank 3 on 5 elements, every 3-subset a basis
U = Matroid.uniform(2, 3)
L = build_lattice(U)
print(U, "has", len(L), "flats, counted by rank:", L.rank_counts())

# the complete graph K4 as a graphic matroid; flats are set partitions of 4 vertices
K4 = Matroid.graphic([[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]])
print("K4 has", len(build_lattice(K4)), "flats")

for name, M in [("U(2,3)", U), ("K4", K4), ("B(3)", Matroid.boolean(3))]:
    print(f"\n{name}")
    print("  chi =", characteristic_polynomial(M))
    # "all" runs every applicable method and raises if any two disagree
    print("  P   =", kl_polynomial(M, "all"))
    print("  Q   =", inverse_kl_polynomial(M, "all"))

# chi of a graphic matroid is the chromatic polynomial divided by t
print("\nK4 can be properly 4-coloured in", 4 * characteristic_polynomial(K4)(4), "ways")
