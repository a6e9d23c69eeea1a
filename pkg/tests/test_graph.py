import random

import pytest
from hypothesis import given, strategies as st

from rankmono.graph import (
    GraphError,
    Multigraph,
    ParseError,
    UndirectedGraph,
    add_edge,
    bfs_distances,
    parse_base_tsv,
    parse_edge_list,
    random_connected_graph,
    random_costar_graph,
    row_normalize,
    serialize_base_tsv,
    serialize_edge_list,
)

from conftest import connected_graphs, graphs_with_pair


def test_parse_skips_comments_and_blank_lines():
    g = parse_edge_list("# a path\n0 1\n\n1 2  # trailing\n")
    assert g.n == 3 and g.sorted_edges() == [(0, 1), (1, 2)]


def test_header_keeps_isolated_nodes():
    g = parse_edge_list("# n 5\n0 1\n")
    assert g.n == 5 and g.degree(4) == 0


@pytest.mark.parametrize("text,line", [("0 1\n1 1\n", 2), ("0 1\nx 2\n", 2), ("0 1 2\n", 1), ("0 -1\n", 1)])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse_edge_list(text)
    assert exc.value.line == line


def test_duplicate_edges_collapse():
    assert parse_edge_list("0 1\n1 0\n0 1\n").m == 1


@given(connected_graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(serialize_edge_list(g)) == g


def test_add_edge_rejects_existing_and_loops():
    g = UndirectedGraph.from_edges([(0, 1)], 3)
    with pytest.raises(GraphError):
        add_edge(g, 1, 0)
    with pytest.raises(GraphError):
        add_edge(g, 2, 2)
    assert add_edge(g, 1, 2).m == 2 and g.m == 1


@given(graphs_with_pair())
def test_add_edge_shortens_distances_by_the_triangle_bound(case):
    g, (x, y) = case
    h = add_edge(g, x, y)
    dx, dy = bfs_distances(g, x).dist, bfs_distances(g, y).dist
    for s in range(g.n):
        before, after = bfs_distances(g, s).dist, bfs_distances(h, s).dist
        for t in range(g.n):
            # a shortest path uses the new edge at most once
            assert after[t] == min(before[t], before[x] + 1 + dy[t], before[y] + 1 + dx[t])


def test_bfs_marks_unreachable_as_none():
    g = UndirectedGraph.from_edges([(0, 1)], 3)
    assert bfs_distances(g, 0).dist == (0, 1, None)


@given(connected_graphs())
def test_row_normalize_rows_sum_to_one(g):
    P = row_normalize(g.to_multigraph())
    assert all(w == 1 for w in P.out_weight())


def test_row_normalize_leaves_null_rows():
    G = Multigraph.from_matrix([[0, 2], [0, 0]])
    assert row_normalize(G).matrix() == [[0, 1], [0, 0]]


def test_base_tsv_round_trip_with_weights():
    from fractions import Fraction
    G = Multigraph.from_matrix([[0, 3, Fraction(1, 7)], [1, 0, 0], [0, Fraction(2, 3), 0]])
    assert parse_base_tsv(serialize_base_tsv(G), 3).matrix() == G.matrix()


@given(st.integers(2, 60), st.integers(0, 30), st.integers(0, 10**6))
def test_random_connected_graph_is_connected(n, extra, seed):
    extra = min(extra, n * (n - 1) // 2 - (n - 1))
    g = random_connected_graph(n, extra, random.Random(seed))
    assert g.is_connected() and g.m == n - 1 + extra


@given(st.integers(0, 10**6))
def test_random_costar_graph_is_connected_and_deterministic(seed):
    g = random_costar_graph(60, 30, random.Random(seed))
    assert g.is_connected()
    assert g == random_costar_graph(60, 30, random.Random(seed))
