"""
Inverse KL polynomials need not be real-rooted
==============================================

Walk the uniform grid in enumeration order and stop at the first Q that has
fewer real roots than its degree.  Roots are counted exactly with Sturm
sequences over the rationals.
"""

from matkls import Matroid, count_real_roots, inverse_kl_polynomial
from matkls.lab import find_non_real_rooted, generate_family

spec, Q, count = find_non_real_rooted(generate_family("uniform", max_md=5))
print("first witness:", spec, "Q =", Q, "real roots:", count)
a0, a1, a2 = Q.coeffs
print("discriminant:", a1 * a1 - 4 * a2 * a0)

print("\nQ with d = 5:")
for m in range(1, 6):
    Q = inverse_kl_polynomial(Matroid.uniform(m, 5))
    print(f"  U({m},5): {Q}  real roots {count_real_roots(Q, multiplicity=True)} of {Q.degree}")
