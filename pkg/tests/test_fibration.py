from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from rankmono.exact import DomainError
from rankmono.fibration import (
    Coloring,
    NonEquitableError,
    check_fibration,
    lift_vector,
    parse_coloring,
    quotient,
    serialize_coloring,
    verify_lifting_commutation,
    verify_resolvent_commutation,
)
from rankmono.graph import Arc, Multigraph, ParseError, UndirectedGraph, row_normalize


@st.composite
def fibrations(draw):
    """A random base and a total graph built so that every base arc lifts at every node of its target fiber."""
    nb = draw(st.integers(1, 4))
    B = [[draw(st.integers(0, 2)) for _ in range(nb)] for _ in range(nb)]
    sizes = [draw(st.integers(1, 3)) for _ in range(nb)]
    cmap = [b for b in range(nb) for _ in range(sizes[b])]
    fibers = [[v for v, b in enumerate(cmap) if b == X] for X in range(nb)]
    arcs = []
    for y, Y in enumerate(cmap):
        for X in range(nb):
            for _ in range(B[X][Y]):
                arcs.append(Arc(draw(st.sampled_from(fibers[X])), y))
    return Multigraph(len(cmap), tuple(arcs)), Multigraph.from_matrix(B), Coloring(tuple(cmap), nb)


vectors = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=9), min_size=4, max_size=4)


@given(fibrations())
def test_quotient_recovers_the_base(case):
    G, B, c = case
    assert quotient(G, c).matrix() == B.matrix()
    assert check_fibration(G, B, c).valid


@given(fibrations(), vectors)
def test_lifting_commutes_with_the_adjacency(case, u):
    G, B, c = case
    assert verify_lifting_commutation(G, B, c, u[:B.n])


@settings(max_examples=40)
@given(fibrations(), vectors)
def test_lifting_commutes_with_the_resolvent(case, v):
    G, B, c = case
    alpha = F(1, 1 + 2 * 2 * B.n)  # below 1/rho: in-degrees are at most 2 * base size
    assert verify_resolvent_commutation(G, B, c, v[:B.n], alpha)


@given(fibrations())
def test_row_normalization_preserves_the_fibration_when_fibers_share_out_weight(case):
    G, B, c = case
    out = G.out_weight()
    if any(len({out[v] for v in fiber}) > 1 for fiber in c.fibers()) or any(w == 0 for w in out):
        return
    P = row_normalize(G)
    assert check_fibration(P, quotient(P, c), c).valid


def test_non_equitable_partition_names_a_witness():
    path = UndirectedGraph.from_edges([(0, 1), (1, 2), (2, 3)]).to_multigraph()
    with pytest.raises(NonEquitableError) as exc:
        quotient(path, Coloring((0, 0, 0, 0)))
    assert exc.value.witness is not None


def test_invalid_fibration_reports_violations():
    G = UndirectedGraph.from_edges([(0, 1)]).to_multigraph()
    bad = Multigraph.from_matrix([[2]])
    cert = check_fibration(G, bad, Coloring((0, 0)))
    assert not cert.valid and cert.violations[0][2:] == (1, 2)
    with pytest.raises(DomainError):
        verify_lifting_commutation(G, bad, Coloring((0, 0)), [1])


def test_coloring_round_trip_and_validation():
    c = Coloring.from_labels(["a", "b", "a", "c"])
    assert c.map == (0, 1, 0, 2) and c.representatives() == [0, 1, 3]
    assert parse_coloring(serialize_coloring(c)) == c
    with pytest.raises(ParseError):
        parse_coloring("0 0\n2 1\n")
    with pytest.raises(DomainError):
        Coloring((0, 2), 3)
    assert lift_vector([F(1), F(2), F(3)], c) == [1, 2, 1, 3]
