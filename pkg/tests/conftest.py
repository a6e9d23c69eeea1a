import sys
from fractions import Fraction

from hypothesis import strategies as st

from rankmono.exact import RatPoly
from rankmono.graph import UndirectedGraph


@st.composite
def connected_graphs(draw, min_n=2, max_n=12, max_extra=10):
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    for _ in range(draw(st.integers(0, max_extra))):
        x, y = draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))
        if x != y:
            edges.add((min(x, y), max(x, y)))
    return UndirectedGraph(n, frozenset(edges))


@st.composite
def graphs_with_pair(draw, **kw):
    """A connected graph together with a non-adjacent pair, when one exists."""
    g = draw(connected_graphs(min_n=3, **kw).filter(lambda g: g.m < g.n * (g.n - 1) // 2))
    pairs = [(x, y) for x in range(g.n) for y in range(x + 1, g.n) if not g.has_edge(x, y)]
    return g, draw(st.sampled_from(pairs))


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def polys_with_roots(draw, max_degree=6):
    """Squarefree polynomials given by distinct rational roots spaced at least 1/4 apart."""
    k = draw(st.integers(1, max_degree))
    roots = sorted(draw(st.sets(st.integers(-40, 40), min_size=k, max_size=k)))
    roots = [Fraction(r, 4) for r in roots]
    p = RatPoly([draw(st.sampled_from([1, -2, 3]))])
    for r in roots:
        p = p * RatPoly([-r, 1])
    return p, roots


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
