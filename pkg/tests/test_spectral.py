from fractions import Fraction as F

import numpy as np
from hypothesis import given, settings

from rankmono.exact import RatPoly, char_poly, count_roots
from rankmono.families import printed_eigen_base
from rankmono.spectral import (
    compare_dominant_eigenvector,
    dominant_root_interval,
    katz_certified_alpha,
    refine,
    sign_at_dominant,
)

from conftest import connected_graphs


def test_isolates_golden_ratio():
    iv = dominant_root_interval([[1, 1], [1, 0]], width=F(1, 10**6))
    phi = (1 + 5 ** 0.5) / 2
    assert iv.lo < phi <= iv.hi and iv.width <= F(1, 10**6)
    assert count_roots(iv.poly, iv.lo, iv.hi) == 1


@settings(max_examples=30, deadline=None)
@given(connected_graphs(min_n=2, max_n=8))
def test_interval_contains_numpy_spectral_radius(g):
    A = g.to_multigraph().matrix()
    iv = refine(dominant_root_interval(A), F(1, 10**9))
    rho = max(np.linalg.eigvalsh(np.array(A, dtype=float)))
    assert float(iv.lo) - 1e-9 <= rho <= float(iv.hi) + 1e-9


@settings(max_examples=30, deadline=None)
@given(connected_graphs(min_n=3, max_n=8))
def test_eigenvector_comparison_matches_numpy(g):
    A = np.array(g.to_multigraph().matrix(), dtype=float)
    w, V = np.linalg.eigh(A)
    e = np.abs(V[:, -1])
    for y in range(1, g.n):
        got = compare_dominant_eigenvector(g.to_multigraph().matrix(), 0, y)
        if abs(e[0] - e[y]) > 1e-7:
            assert got == (1 if e[0] > e[y] else -1)


def test_exact_tie_between_automorphic_nodes():
    path = [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
    assert compare_dominant_eigenvector(path, 0, 2) == 0
    assert compare_dominant_eigenvector(path, 1, 0) == 1


def test_sign_at_dominant_of_constant():
    iv = dominant_root_interval([[0, 1], [1, 0]])
    assert sign_at_dominant(RatPoly([-3]), iv) == -1


def test_eigen_base_has_one_root_between_the_bounds():
    k = 24
    p = char_poly(printed_eigen_base(k))
    assert count_roots(p, k + F(1, k * k), k + F(3, 4 * k)) == 1


def test_katz_certificate():
    assert katz_certified_alpha([F(1), F(2, 3)])
    assert not katz_certified_alpha([F(1), F(-1)])
