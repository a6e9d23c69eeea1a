"""Undirected simple graphs, weighted directed multigraphs, and the plumbing around them."""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Raised when a graph or an edge operation violates its preconditions."""


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Arc:
    source: int
    target: int
    multiplicity: int = 1
    weight: Optional[Fraction] = None

    @property
    def value(self) -> Fraction:
        w = Fraction(1) if self.weight is None else self.weight
        return w * self.multiplicity


@dataclass(frozen=True)
class Multigraph:
    """Directed multigraph on nodes 0..n-1.

    Parallel arcs are stored either as separate Arc records or aggregated into
    a multiplicity; the adjacency matrix sums ``multiplicity * weight`` over
    all arcs between two nodes.
    """

    n: int
    arcs: tuple[Arc, ...] = ()

    def __post_init__(self):
        for a in self.arcs:
            if not (0 <= a.source < self.n and 0 <= a.target < self.n):
                raise GraphError(f"arc {a.source}->{a.target} out of range for n={self.n}")
            if a.multiplicity < 1:
                raise GraphError("arc multiplicity must be positive")

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence]) -> "Multigraph":
        """Build from a square matrix; integer entries become multiplicities, others weights."""
        n = len(matrix)
        arcs = []
        for i, row in enumerate(matrix):
            if len(row) != n:
                raise GraphError("matrix is not square")
            for j, entry in enumerate(row):
                v = Fraction(entry)
                if v == 0:
                    continue
                if v.denominator == 1 and v > 0:
                    arcs.append(Arc(i, j, int(v)))
                else:
                    arcs.append(Arc(i, j, 1, v))
        return cls(n, tuple(arcs))

    def matrix(self) -> list[list[Fraction]]:
        m = [[Fraction(0)] * self.n for _ in range(self.n)]
        for a in self.arcs:
            m[a.source][a.target] += a.value
        return m

    def out_weight(self) -> list[Fraction]:
        out = [Fraction(0)] * self.n
        for a in self.arcs:
            out[a.source] += a.value
        return out


@dataclass(frozen=True)
class UndirectedGraph:
    """Loopless simple undirected graph on nodes 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()
    _adj: tuple[tuple[int, ...], ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        canon = set()
        for e in self.edges:
            x, y = e
            if x == y:
                raise GraphError(f"self-loop at {x}")
            if not (0 <= x < self.n and 0 <= y < self.n):
                raise GraphError(f"edge {x}-{y} out of range for n={self.n}")
            canon.add((min(x, y), max(x, y)))
        object.__setattr__(self, "edges", frozenset(canon))
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for x, y in canon:
            adj[x].append(y)
            adj[y].append(x)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: int | None = None) -> "UndirectedGraph":
        edges = list(edges)
        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)
        return cls(n, frozenset(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, x: int) -> tuple[int, ...]:
        return self._adj[x]

    def degree(self, x: int) -> int:
        return len(self._adj[x])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, x: int, y: int) -> bool:
        return (min(x, y), max(x, y)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_multigraph(self) -> Multigraph:
        arcs = []
        for x, y in self.sorted_edges():
            arcs.append(Arc(x, y))
            arcs.append(Arc(y, x))
        return Multigraph(self.n, tuple(arcs))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return all(d is not None for d in bfs_distances(self, 0).dist)

    def relabel(self, perm: Sequence[int]) -> "UndirectedGraph":
        """Return the graph with node v renamed to perm[v]."""
        return UndirectedGraph(self.n, frozenset((perm[x], perm[y]) for x, y in self.edges))


def add_edge(g: UndirectedGraph, x: int, y: int) -> UndirectedGraph:
    if x == y:
        raise GraphError("cannot add a self-loop")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise GraphError(f"node out of range: {x}, {y}")
    if g.has_edge(x, y):
        raise GraphError(f"{x} and {y} are already adjacent")
    return UndirectedGraph(g.n, g.edges | {(min(x, y), max(x, y))})


@dataclass(frozen=True)
class DistanceVector:
    source: int
    dist: tuple[Optional[int], ...]  # None marks unreachable

    def reachable(self) -> list[tuple[int, int]]:
        return [(v, d) for v, d in enumerate(self.dist) if d is not None]


def bfs_distances(g: UndirectedGraph, s: int) -> DistanceVector:
    if not 0 <= s < g.n:
        raise GraphError(f"source {s} out of range")
    dist: list[Optional[int]] = [None] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.neighbors(u):
            if dist[w] is None:
                dist[w] = du
                queue.append(w)
    return DistanceVector(s, tuple(dist))


def row_normalize(g: Multigraph) -> Multigraph:
    """Divide every arc value by the out-weight of its source; null rows stay null."""
    out = g.out_weight()
    arcs = tuple(Arc(a.source, a.target, 1, a.value / out[a.source]) for a in g.arcs)
    return Multigraph(g.n, arcs)


# ---------------------------------------------------------------- text formats

def parse_edge_list(text: str) -> UndirectedGraph:
    """One ``x y`` pair per line; ``#`` starts a comment and a ``# n N`` header fixes the node count."""
    edges = set()
    n = declared = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line, _, comment = raw.partition("#")
        head = comment.split()
        if not line.strip() and len(head) == 2 and head[0] == "n":
            try:
                declared = int(head[1])
            except ValueError:
                raise ParseError(f"bad node count {head[1]!r}", lineno) from None
            continue
        parts = line.split()
        if not parts:
            continue
        if len(parts) != 2:
            raise ParseError(f"expected two node ids, got {line.strip()!r}", lineno)
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer node id in {line.strip()!r}", lineno) from None
        if x < 0 or y < 0:
            raise ParseError("node ids must be nonnegative", lineno)
        if x == y:
            raise ParseError(f"self-loop at {x}", lineno)
        edges.add((min(x, y), max(x, y)))
        n = max(n, x + 1, y + 1)
    if declared and declared < n:
        raise ParseError(f"header declares {declared} nodes but ids reach {n - 1}")
    return UndirectedGraph(max(n, declared), frozenset(edges))


def serialize_edge_list(g: UndirectedGraph) -> str:
    lines = [f"# n {g.n}"] + [f"{x} {y}" for x, y in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational literal: {text!r}") from None


def parse_base_tsv(text: str, n: int | None = None) -> Multigraph:
    """Lines ``src dst multiplicity [num den]``."""
    arcs = []
    top = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) not in (3, 5):
            raise ParseError("expected 'src dst multiplicity [num den]'", lineno)
        try:
            s, t, mult = (int(p) for p in parts[:3])
            weight = Fraction(int(parts[3]), int(parts[4])) if len(parts) == 5 else None
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"malformed field in {line!r}", lineno) from None
        if s < 0 or t < 0 or mult < 1:
            raise ParseError("ids must be nonnegative and multiplicity positive", lineno)
        arcs.append(Arc(s, t, mult, weight))
        top = max(top, s + 1, t + 1)
    return Multigraph(top if n is None else n, tuple(arcs))


def serialize_base_tsv(g: Multigraph) -> str:
    lines = []
    for a in g.arcs:
        if a.weight is None:
            lines.append(f"{a.source}\t{a.target}\t{a.multiplicity}")
        else:
            lines.append(f"{a.source}\t{a.target}\t{a.multiplicity}\t{a.weight.numerator}\t{a.weight.denominator}")
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------- generators

def random_connected_graph(n: int, extra_edges: int = 0, rng: random.Random | None = None) -> UndirectedGraph:
    """Random recursive tree (each new node picks a uniform earlier parent) plus random chords."""
    rng = rng or random.Random()
    if n < 1:
        raise GraphError("need at least one node")
    limit = n * (n - 1) // 2
    if n - 1 + extra_edges > limit:
        raise GraphError("too many extra edges for a simple graph")
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    while len(edges) < n - 1 + extra_edges:
        x, y = rng.sample(range(n), 2)
        edges.add((min(x, y), max(x, y)))
    return UndirectedGraph(n, frozenset(edges))


def random_costar_graph(n: int, films: int, rng: random.Random | None = None,
                        cast_sizes: Sequence[int] = (2, 3, 3, 4, 5, 6, 8, 12)) -> UndirectedGraph:
    """Union of cliques, one per film, with casts drawn by preferential attachment.

    Disconnected pieces are then chained together by single random edges.
    """
    rng = rng or random.Random()
    if n < 2 or max(cast_sizes) > n:
        raise GraphError("cast sizes must fit in the node set")
    weight = [1] * n
    edges: set[tuple[int, int]] = set()
    for _ in range(films):
        size = rng.choice(cast_sizes)
        cast: set[int] = set()
        while len(cast) < size:
            cast.add(rng.choices(range(n), weight)[0])
        members = sorted(cast)
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                edges.add((a, b))
        for a in members:
            weight[a] += 1
    g = UndirectedGraph(n, frozenset(edges))
    comps = _components(g)
    for c1, c2 in zip(comps, comps[1:]):
        a, b = rng.choice(c1), rng.choice(c2)
        edges.add((min(a, b), max(a, b)))
    return UndirectedGraph(n, frozenset(edges))


def _components(g: "UndirectedGraph") -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in g.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        out.append(sorted(comp))
    return out


def random_graph(n: int, p: float, rng: random.Random | None = None) -> UndirectedGraph:
    rng = rng or random.Random()
    edges = [(x, y) for x in range(n) for y in range(x + 1, n) if rng.random() < p]
    return UndirectedGraph(n, frozenset(edges))
