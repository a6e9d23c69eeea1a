from fractions import Fraction as F

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rankmono.centrality import (
    TAU,
    betweenness,
    closeness,
    compute,
    degree_seeley,
    eigenvector,
    harmonic,
    katz,
    pagerank,
    parse_measure,
)
from rankmono.exact import DomainError
from rankmono.graph import UndirectedGraph, add_edge

from conftest import connected_graphs, graphs_with_pair


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.sorted_edges())
    return G


@given(connected_graphs())
def test_closeness_against_networkx(g):
    ref = nx.closeness_centrality(to_nx(g))
    s = closeness(g)
    for v in range(g.n):
        assert float(s[v]) * (g.n - 1) == pytest.approx(ref[v], rel=1e-12)


@given(connected_graphs())
def test_harmonic_against_networkx(g):
    ref = nx.harmonic_centrality(to_nx(g))
    assert all(float(harmonic(g)[v]) == pytest.approx(ref[v], rel=1e-12) for v in range(g.n))


@given(connected_graphs())
def test_betweenness_against_networkx(g):
    ref = nx.betweenness_centrality(to_nx(g), normalized=False)
    s = betweenness(g)
    assert all(isinstance(c, F) for c in s)
    assert all(float(s[v]) == pytest.approx(ref[v], abs=1e-9) for v in range(g.n))


def test_closeness_of_isolated_vertex_is_zero():
    s = closeness(UndirectedGraph.from_edges([(0, 1)], 3))
    assert s[2] == 0 and s[0] == 1


def test_seeley_on_star():
    s = degree_seeley(UndirectedGraph.from_edges([(0, 1), (0, 2), (0, 3)]))
    assert list(s) == [F(1, 2), F(1, 6), F(1, 6), F(1, 6)]


def test_katz_on_k2():
    assert list(katz(UndirectedGraph.from_edges([(0, 1)]), F(1, 2))) == [2, 2]


def test_katz_beyond_the_radius_is_rejected():
    with pytest.raises(DomainError):
        katz(UndirectedGraph.from_edges([(0, 1), (1, 2), (0, 2)]), F(1, 2))


@settings(max_examples=40)
@given(connected_graphs(), st.fractions(min_value=0, max_value=F(9, 10), max_denominator=20))
def test_katz_against_networkx(g, frac):
    alpha = frac / max(g.degrees())
    s = katz(g, alpha)
    ref = nx.katz_centrality_numpy(to_nx(g), alpha=float(alpha), beta=1.0, normalized=False)
    assert all(float(s[v]) == pytest.approx(ref[v], rel=1e-9) for v in range(g.n))


@given(connected_graphs())
def test_katz_at_tiny_alpha_follows_degree(g):
    deg = g.degrees()
    s = katz(g, F(1, 100 * g.n * g.n))
    for u in range(g.n):
        for v in range(g.n):
            if deg[u] > deg[v]:
                assert s[u] > s[v]


@settings(max_examples=40)
@given(connected_graphs(), st.sampled_from([F(1, 3), F(17, 20), F(99, 100)]))
def test_pagerank_sums_to_one_and_matches_networkx(g, alpha):
    s = pagerank(g, alpha)
    assert sum(s) == 1
    ref = nx.pagerank(to_nx(g), alpha=float(alpha), tol=1e-14, max_iter=10**5)
    assert all(float(s[v]) == pytest.approx(ref[v], abs=1e-9) for v in range(g.n))


@settings(max_examples=25)
@given(connected_graphs(min_n=3, max_n=9))
def test_pagerank_approaches_seeley(g):
    seeley = degree_seeley(g)
    gaps = [max(abs(a - b) for a, b in zip(pagerank(g, alpha), seeley)) for alpha in (F(9, 10), F(99, 100), F(999, 1000))]
    assert gaps[0] >= gaps[1] >= gaps[2]


def test_pagerank_with_dangling_node_is_normalized():
    s = pagerank(UndirectedGraph.from_edges([(0, 1)], 3), F(1, 2))
    assert sum(s) == 1 and s[0] == s[1]


@settings(max_examples=25, deadline=None)
@given(connected_graphs(min_n=2, max_n=10))
def test_eigenvector_against_dense_eigh(g):
    A = np.array(g.to_multigraph().matrix(), dtype=float)
    ref = np.abs(np.linalg.eigh(A)[1][:, -1])
    s = eigenvector(g, "l2")
    assert all(s[v] == pytest.approx(ref[v], abs=1e-8) for v in range(g.n))
    assert sum(eigenvector(g, "l1")) == pytest.approx(1.0)


def test_projection_normalization_scales_l1_vector():
    g = UndirectedGraph.from_edges([(0, 1), (1, 2), (2, 3), (1, 3)])
    e1, ep = eigenvector(g, "l1"), eigenvector(g, "proj")
    ratio = ep[0] / e1[0]
    assert all(ep[v] == pytest.approx(ratio * e1[v]) for v in range(g.n))


@given(connected_graphs(), st.randoms(use_true_random=False))
def test_scores_are_isomorphism_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    for measure, params in [("closeness", {}), ("betweenness", {}), ("pagerank", {"alpha": F(17, 20)}), ("seeley", {})]:
        a, b = compute(g, measure, params), compute(h, measure, params)
        assert all(a[v] == b[perm[v]] for v in range(g.n))


@given(graphs_with_pair())
def test_closeness_and_harmonic_are_score_monotone(case):
    g, (x, y) = case
    h = add_edge(g, x, y)
    for f in (closeness, harmonic):
        before, after = f(g), f(h)
        assert after[x] > before[x] and after[y] > before[y]


def test_measure_aliases():
    assert parse_measure("degree") == ("seeley", None)
    assert parse_measure("eigenvector") == ("eigenvector", "l1")
    with pytest.raises(ValueError):
        parse_measure("nonsense")


def test_float_tolerance():
    assert TAU == 1e-9
    assert eigenvector(UndirectedGraph.from_edges([(0, 1)]), "l1").compare(0, 1) == 0
