"""Exact Kazhdan-Lusztig and inverse Kazhdan-Lusztig polynomials of matroids."""

from .errors import *  # noqa: F401,F403
from .incidence import (
    IncidenceFunction,
    bar,
    characteristic_function,
    convolve,
    delta,
    invert,
    is_kernel,
    kls_solve_left,
    kls_solve_right,
    mobius,
    zeta,
)
from .invariants import (
    InvariantBundle,
    characteristic_polynomial,
    inverse_kl_hat,
    inverse_kl_polynomial,
    invariant_bundle,
    kl_polynomial,
    p_uniform_closed,
    q_uniform_closed,
    relations_check,
)
from .matroid import FlatLattice, Matroid, build_lattice, direct_sum, minor
from .polynomial import Polynomial, count_real_roots, is_log_concave_no_internal_zeros

__version__ = "0.1.0"
