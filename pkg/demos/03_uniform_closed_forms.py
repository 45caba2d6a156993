"""
Closed forms for uniform matroids
=================================

The closed formulas for Q and P of U(m,d) agree with the lattice recursion,
and they reach sizes where building the lattice is out of the question.
"""

import time

from matkls import Matroid, inverse_kl_polynomial, kl_polynomial
from matkls import p_uniform_closed, q_uniform_closed

print(" m  d  Q")
for m in range(1, 4):
    for d in range(1, 6):
        Q = q_uniform_closed(m, d)
        U = Matroid.uniform(m, d)
        assert Q == inverse_kl_polynomial(U, "recursion")
        assert p_uniform_closed(m, d) == kl_polynomial(U, "recursion")
        print(f"{m:2d} {d:2d}  {Q}")

start = time.perf_counter()
Q = q_uniform_closed(30, 40)
print(f"\nQ of U(30,40) has degree {Q.degree}; leading coefficient {Q.coeffs[-1]}")
print(f"computed in {time.perf_counter() - start:.3f} s")
