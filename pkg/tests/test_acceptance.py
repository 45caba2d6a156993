"""Acceptance criteria, one test per criterion; exact equality throughout.

The terminal summary (see conftest.py) prints one PASS/FAIL line each.
"""

import time

from matkls.incidence import (
    bar,
    characteristic_function,
    convolve,
    delta,
    invert,
    kls_solve_left,
    kls_solve_right,
    mobius,
    zeta,
)
from matkls.invariants import (
    characteristic_polynomial,
    constant_term_identity,
    inverse_kl_defining_identity,
    inverse_kl_hat,
    inverse_kl_polynomial,
    kl_defining_identity,
    kl_polynomial,
    lattice_of,
    multiplicativity_check,
    p_uniform_closed,
    q_uniform_closed,
    relations_check,
)
from matkls.lab import find_non_real_rooted, generate_family, scan
from matkls.matroid import Matroid, minor
from matkls.polynomial import ONE, Polynomial
from suite import K4, standard_suite

P = Polynomial


def test_criterion_01_boolean_closed_form():
    start = time.perf_counter()
    for n in range(1, 9):
        B = Matroid.boolean(n)
        for method in ("recursion", "kls"):
            assert inverse_kl_polynomial(B, method) == ONE, (n, method)
            assert kl_polynomial(B, method) == ONE, (n, method)
    assert time.perf_counter() - start < 10


def test_criterion_02_uniform_closed_forms():
    start = time.perf_counter()
    for m in range(1, 6):
        for d in range(1, 6):
            U = Matroid.uniform(m, d)
            assert q_uniform_closed(m, d) == inverse_kl_polynomial(U, "recursion"), (m, d)
            assert p_uniform_closed(m, d) == kl_polynomial(U, "recursion"), (m, d)
    assert inverse_kl_polynomial(Matroid.uniform(1, 2), "recursion") == P([2])
    assert inverse_kl_polynomial(Matroid.uniform(2, 3), "recursion") == P([6, 5])
    assert inverse_kl_polynomial(Matroid.uniform(2, 5), "recursion") == P([15, 35, 21])
    assert kl_polynomial(Matroid.uniform(2, 3), "recursion") == P([1, 5])
    assert kl_polynomial(Matroid.uniform(1, 3), "recursion") == P([1, 2])
    assert time.perf_counter() - start < 60


def test_criterion_03_relations():
    start = time.perf_counter()
    for label, M in standard_suite():
        assert all(relations_check(M)), label
    assert time.perf_counter() - start < 120


def test_criterion_04_kernel_and_algebra():
    for label, M in standard_suite():
        L = lattice_of(M)
        chi = characteristic_function(L)
        assert bar(chi) == invert(chi), label
        assert convolve(zeta(L), mobius(L)) == delta(L), label
        f = kls_solve_right(chi)
        assert convolve(f, invert(f)) == delta(L), label
        assert invert(f) == kls_solve_left(bar(chi)), label


def test_criterion_05_defining_identities():
    for label, M in standard_suite():
        assert kl_defining_identity(M), label
        assert inverse_kl_defining_identity(M), label


def test_criterion_06_minor_invariance():
    for M in (Matroid.uniform(2, 4), Matroid.graphic(K4)):
        L = lattice_of(M)
        g = invert(kls_solve_right(characteristic_function(L)))
        for i, j in L.pairs():
            N = Matroid.from_spec(minor(M, L, i, j).to_spec())
            assert g[i, j] == inverse_kl_hat(N, "recursion"), (M, i, j)


def test_criterion_07_multiplicativity():
    parts = [Matroid.boolean(2), Matroid.uniform(1, 2), Matroid.uniform(2, 2), Matroid.uniform(1, 3)]
    for a in parts:
        for b in parts:
            assert multiplicativity_check(a, b) == (True, True), (a, b)


def test_criterion_08_constant_term():
    for label, M in standard_suite():
        assert constant_term_identity(M, "recursion"), label
    U = Matroid.uniform(2, 5)
    assert inverse_kl_hat(U, "recursion")[0] == -15
    assert characteristic_polynomial(U, "recursion")[0] == -15


def test_criterion_09_conjectures_at_desk_scale():
    start = time.perf_counter()
    checks = ("nonneg", "logconcave", "internal_zeros")
    graphic = scan(generate_family("graphic", max_vertices=6, min_vertices=2), checks)
    uniform = scan(generate_family("uniform", max_md=8), checks)
    assert len(graphic.records) == 1 + 2 + 6 + 21 + 112
    assert len(uniform.records) == 64
    assert graphic.all_passed and uniform.all_passed
    assert time.perf_counter() - start < 600


def test_criterion_10_non_real_rooted_witness():
    witness = find_non_real_rooted(generate_family("uniform", max_md=5))
    assert witness is not None
    spec, Q, count = witness
    assert (spec, Q, count) == ({"type": "uniform", "m": 2, "d": 5}, P([15, 35, 21]), 0)
