"""
The incidence algebra of a lattice of flats
===========================================

chi is a kernel: its bar is its inverse.  Solving for the right KLS function
of chi gives P on every interval at once, and inverting it gives Qhat.
"""

from matkls import (
    Matroid, bar, build_lattice, characteristic_function, convolve, delta,
    invert, is_kernel, kls_solve_left, kls_solve_right, mobius, zeta,
)

M = Matroid.uniform(2, 4)
L = build_lattice(M)
print(M, "with", len(L), "flats and", len(list(L.pairs())), "intervals")

print("zeta * mu == delta:", convolve(zeta(L), mobius(L)) == delta(L))

chi = characteristic_function(L)
print("chi is a kernel:", is_kernel(chi))

f = kls_solve_right(chi)
g = invert(f)
print("f * f^-1 == delta:", f * g == delta(L))
print("f^-1 is the left KLS function of bar(chi):", g == kls_solve_left(bar(chi)))

# the corner entries are the invariants of M itself
print("\nP(M)    =", f[L.bottom, L.top])
print("Qhat(M) =", g[L.bottom, L.top])
print("Q(M)    =", (-1) ** L.rank * g[L.bottom, L.top])
