"""Constructors for the parametric counterexample graphs, with their labelings, bases and closed forms.

Node ids are chosen so that every labelled core vertex keeps its label as
its id; extra members of multi-node classes get ids after the core.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .centrality import compute, compare_values
from .exact import DomainError
from .fibration import Coloring, quotient
from .graph import Multigraph, UndirectedGraph, add_edge, row_normalize

F = Fraction

# (k, s) pairs: star size s around vertex 1 that yields a bottom violation
BOTTOM_STAR_SIZES: tuple[tuple[int, int], ...] = (
    (8, 40), (9, 53), (10, 67), (11, 83), (12, 101), (14, 142), (15, 165), (16, 190),
    (17, 217), (18, 246), (19, 276), (24, 456), (26, 541), (27, 586), (28, 633), (29, 682),
    (30, 733), (31, 786), (32, 840), (34, 955), (35, 1015), (36, 1077), (37, 1141), (38, 1207),
    (40, 1344), (43, 1564), (44, 1641), (45, 1720), (48, 1968), (50, 2143), (51, 2233), (56, 2713),
    (57, 2815), (59, 3024), (61, 3241), (62, 3352), (63, 3465), (64, 3580), (65, 3697), (66, 3816),
    (68, 4059), (69, 4184), (70, 4310), (72, 4569), (73, 4701), (74, 4835), (75, 4971), (76, 5109),
)


@dataclass(frozen=True)
class OracleEntry:
    measure: str
    label: str
    phase: str  # "pre" or "post"
    value: object
    tol: float = 0.0


@dataclass(frozen=True)
class FamilyInstance:
    name: str
    params: dict
    graph: UndirectedGraph
    edge: tuple[int, int]
    labels: tuple[str, ...]
    coloring: Coloring
    base: Optional[Multigraph] = None
    base_post: Optional[Multigraph] = None
    oracle: tuple[OracleEntry, ...] = ()
    normalized_base: bool = False  # base is the quotient of the row-normalized graph
    printed: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        x, y = self.edge
        if self.graph.has_edge(x, y):
            raise DomainError("designated edge endpoints are already adjacent")
        if len(self.labels) != self.graph.n:
            raise DomainError("one label per vertex required")

    @property
    def post_graph(self) -> UndirectedGraph:
        return add_edge(self.graph, *self.edge)

    def members(self, label: str) -> list[int]:
        return [v for v, lab in enumerate(self.labels) if lab == label]

    def representative(self, label: str) -> int:
        return self.members(label)[0]

    def quotient_pre(self) -> Multigraph:
        g = self.graph.to_multigraph()
        return quotient(row_normalize(g) if self.normalized_base else g, self.coloring)

    def quotient_post(self) -> Multigraph:
        g = self.post_graph.to_multigraph()
        return quotient(row_normalize(g) if self.normalized_base else g, self.coloring)


class _Builder:
    def __init__(self, core: Sequence[str]):
        self.labels: list[str] = list(core)
        self.edges: list[tuple[int, int]] = []

    def new(self, label: str) -> int:
        self.labels.append(label)
        return len(self.labels) - 1

    def block(self, label: str, count: int, first: int | None = None) -> list[int]:
        """``count`` members of a class; ``first`` is an already-allocated core id to reuse."""
        ids = [first] if first is not None else []
        while len(ids) < count:
            ids.append(self.new(label))
        return ids

    def edge(self, x: int, y: int):
        self.edges.append((x, y))

    def star(self, center: int, leaves: Sequence[int]):
        for v in leaves:
            self.edge(center, v)

    def clique(self, nodes: Sequence[int]):
        for i, a in enumerate(nodes):
            for b in nodes[i + 1:]:
                self.edge(a, b)

    def graph(self) -> UndirectedGraph:
        return UndirectedGraph.from_edges(self.edges, len(self.labels))


def _check_positive(**kw):
    for name, v in kw.items():
        if not isinstance(v, int) or v < 1:
            raise DomainError(f"{name} must be a positive integer, got {v!r}")


# ---------------------------------------------------------------- closeness / harmonic

def geometric_peripherality(j: int, k: int, r: int) -> dict[tuple[str, str], int]:
    return {
        ("0", "pre"): 15 + j + 4 * k + 11 * r, ("0", "post"): 9 + j + 4 * k + 5 * r,
        ("1", "pre"): 15 + 6 * j + 3 * k + 3 * r, ("1", "post"): 9 + 2 * j + 3 * k + 3 * r,
        ("4", "pre"): 15 + 6 * j + 3 * k + 5 * r, ("4", "post"): 13 + 4 * j + 3 * k + 5 * r,
    }


def geometric_harmonic(j: int, k: int, r: int) -> dict[tuple[str, str], Fraction]:
    return {
        ("0", "pre"): F(137, 60) + j + F(k, 4) + F(11, 30) * r,
        ("0", "post"): F(10, 3) + j + F(k, 4) + F(5, 6) * r,
        ("1", "pre"): F(137, 60) + F(j, 6) + F(k, 3) + F(3, 2) * r,
        ("1", "post"): F(10, 3) + F(j, 2) + F(k, 3) + F(3, 2) * r,
        ("4", "pre"): F(137, 60) + F(j, 6) + F(k, 3) + F(5, 6) * r,
        ("4", "post"): F(29, 12) + F(j, 4) + F(k, 3) + F(5, 6) * r,
    }


def geometric_family(j: int, k: int, r: int) -> FamilyInstance:
    """Path 0 - x - y - 3 - 2 - 1 with stars: j leaves at 0, k at 3, r at 1, and r at 2.

    The r leaves of vertex 2 form the class labelled 4.
    """
    _check_positive(j=j, k=k, r=r)
    b = _Builder(["0", "1", "2", "3", "4", "x", "y"])
    x, y = 5, 6
    for u, v in [(0, x), (x, y), (y, 3), (3, 2), (2, 1)]:
        b.edge(u, v)
    b.star(2, b.block("4", r, first=4))
    b.star(0, b.block("L0", j))
    b.star(3, b.block("L3", k))
    b.star(1, b.block("L1", r))
    oracle = [OracleEntry("closeness", lab, ph, F(1, p)) for (lab, ph), p in geometric_peripherality(j, k, r).items()]
    oracle += [OracleEntry("harmonic", lab, ph, v) for (lab, ph), v in geometric_harmonic(j, k, r).items()]
    return FamilyInstance("geometric", {"j": j, "k": k, "r": r}, b.graph(), (0, 1), tuple(b.labels),
                          Coloring.from_labels(b.labels), oracle=tuple(oracle))


# ---------------------------------------------------------------- betweenness

def betweenness_forms(h: int, j: int, k: int) -> dict[tuple[str, str], Fraction]:
    """Closed forms for vertices 0, 1, 2; post(2) carries a j/2 term the printed form lacks."""
    return {
        ("0", "pre"): F(k * (2 * h + 2 * j + k + 11), 2),
        ("0", "post"): F(k * (2 * h + 2 * j + k + 11), 2),
        ("1", "pre"): F(h * h + (2 * j + 2 * k + 11) * h + 3 * k + 7, 2),
        ("1", "post"): F(h * h + (2 * j + 2 * k + 11) * h + (k + 1) * (j + 4) + 4, 2),
        ("2", "pre"): F((2 * h + 2) * j + 3 * h + k + 5, 2),
        ("2", "post"): F((2 * h + k + 3) * j + 3 * h + 2 * k + 6, 2),
    }


def betweenness_printed_post2(h: int, j: int, k: int) -> Fraction:
    """post(2) exactly as printed; it disagrees with the graph by j/2."""
    return F((2 * h + k + 2) * j + 3 * h + 2 * k + 6, 2)


def betweenness_family(h: int, j: int, k: int) -> FamilyInstance:
    """A 6-cycle 1 - 2 - 6 - 7 - 8 - 5 - 1 with vertex 0 pendant at 5.

    Vertex 0 carries k leaves (class 3), vertex 1 carries h leaves, and j twins
    (class 4) are each adjacent to both 6 and 7.
    """
    _check_positive(h=h, j=j, k=k)
    b = _Builder(["0", "1", "2", "3", "4", "5", "6", "7", "8"])
    for u, v in [(1, 2), (2, 6), (6, 7), (7, 8), (8, 5), (5, 1), (0, 5)]:
        b.edge(u, v)
    b.star(0, b.block("3", k, first=3))
    for t in b.block("4", j, first=4):
        b.edge(t, 6)
        b.edge(t, 7)
    b.star(1, b.block("9", h))
    oracle = tuple(OracleEntry("betweenness", lab, ph, v) for (lab, ph), v in betweenness_forms(h, j, k).items())
    return FamilyInstance("betweenness", {"h": h, "j": j, "k": k}, b.graph(), (0, 1), tuple(b.labels),
                          Coloring.from_labels(b.labels), oracle=oracle,
                          printed={"post2": betweenness_printed_post2(h, j, k)})


# ---------------------------------------------------------------- eigenvector

def printed_eigen_base(k: int, post: bool = False, star: int | None = None) -> list[list[Fraction]]:
    s = (k - 1) * (k - 2) if star is None else star
    m = [
        [0, 0, 0, 1, 1, 0, 0],
        [0, 0, 1, 0, 0, 1, 0],
        [0, 1, 0, 1, 0, 0, 1],
        [1, 0, 1, 0, 0, 0, 0],
        [k, 0, 0, 0, k - 1, 0, 0],
        [0, s, 0, 0, 0, 0, 0],
        [0, 0, k, 0, 0, 0, k - 1],
    ]
    if post:
        m[0][1] = m[1][0] = 1
    return [[F(e) for e in row] for row in m]


def eigen_family(k: int, star: int | None = None) -> FamilyInstance:
    """Core 0 - 3 - 2 - 1; a k-clique joined to 0 (class 4), a k-clique joined to 2 (class 6),
    and a star of ``star`` leaves at 1 (class 5, default (k-1)(k-2))."""
    if not isinstance(k, int) or k < 3:
        raise DomainError("eigen_family needs k >= 3")
    s = (k - 1) * (k - 2) if star is None else star
    _check_positive(star=s)
    b = _Builder([str(i) for i in range(7)])
    for u, v in [(0, 3), (2, 3), (1, 2)]:
        b.edge(u, v)
    fours = b.block("4", k, first=4)
    b.clique(fours)
    b.star(0, fours)
    b.star(1, b.block("5", s, first=5))
    sixes = b.block("6", k, first=6)
    b.clique(sixes)
    b.star(2, sixes)
    pre = Multigraph.from_matrix(printed_eigen_base(k, False, s))
    post = Multigraph.from_matrix(printed_eigen_base(k, True, s))
    return FamilyInstance("eigen", {"k": k, "star": s}, b.graph(), (0, 1), tuple(b.labels),
                          Coloring.from_labels(b.labels), base=pre, base_post=post)


def eigen_small() -> FamilyInstance:
    """A spider centred at 0 with legs 0-3, 0-4 and 0-2-1; adding 0-1 closes a triangle."""
    g = UndirectedGraph.from_edges([(0, 2), (0, 3), (0, 4), (2, 1)], 5)
    oracle = []
    for norm, pre, post in [("l1", 0.30656, 0.29914), ("l2", 0.65328, 0.63586), ("proj", 1.39213, 1.35159)]:
        oracle.append(OracleEntry(f"eigenvector:{norm}", "0", "pre", pre, 1e-4))
        oracle.append(OracleEntry(f"eigenvector:{norm}", "0", "post", post, 1e-4))
    labels = ("0", "1", "2", "3", "3")
    return FamilyInstance("eigen-small", {}, g, (0, 1), labels, Coloring.from_labels(labels), oracle=tuple(oracle))


def eigen_rank_small() -> FamilyInstance:
    """An 11-vertex tree: hub 3 with leaves 0, 4, 5 and neighbour 1; path 1-2-6; hub 6 with leaves 7..10."""
    g = UndirectedGraph.from_edges(
        [(0, 3), (4, 3), (5, 3), (1, 3), (1, 2), (2, 6), (6, 7), (6, 8), (6, 9), (6, 10)], 11)
    labels = ("0", "1", "2", "3", "l3", "l3", "6", "l6", "l6", "l6", "l6")
    return FamilyInstance("eigen-rank-small", {}, g, (0, 1), labels, Coloring.from_labels(labels))


# ---------------------------------------------------------------- PageRank

def printed_pagerank_base(k: int, post: bool = False) -> list[list[Fraction]]:
    z = F(0)
    rows = [
        [z, z, z, z, z, z, z, F(1, k), F(1, k)],
        [z, z, F(1), z, z, z, z, z, z],
        [z, F(1, 2), z, F(1, 2), z, z, z, z, z],
        [z, z, F(1, k + 2), z, F(1, k + 2), F(1, k + 2), z, z, z],
        [z, z, z, F(k, k), F(k - 1, k), z, z, z, z],
        [z, z, z, F(1, 2), z, z, F(1, 2), z, z],
        [z, z, z, z, z, F(1, 2), z, F(1, 2), z],
        [F(1, k + 1), z, z, z, z, z, F(1, k + 1), z, F(1, k + 1)],
        [F(k - 1, k), z, z, z, z, z, z, F(k - 1, k), F(k - 2, k)],
    ]
    if post:
        rows[0] = [z, F(1, k + 1), z, z, z, z, z, F(1, k + 1), F(1, k + 1)]
        rows[1] = [F(1, 2), z, F(1, 2), z, z, z, z, z, z]
    return rows


def pagerank_family(k: int) -> FamilyInstance:
    """Chain 1 - 2 - 3; 3 joined to a k-clique (class 4) and to 5; chain 5 - 6 - 7 - 0;
    a (k-1)-clique (class 8) joined to both 0 and 7."""
    if not isinstance(k, int) or k < 3:
        raise DomainError("pagerank_family needs k >= 3")
    b = _Builder([str(i) for i in range(9)])
    for u, v in [(1, 2), (2, 3), (3, 5), (5, 6), (6, 7), (7, 0)]:
        b.edge(u, v)
    fours = b.block("4", k, first=4)
    b.clique(fours)
    b.star(3, fours)
    eights = b.block("8", k - 1, first=8)
    b.clique(eights)
    b.star(0, eights)
    b.star(7, eights)
    return FamilyInstance("pagerank", {"k": k}, b.graph(), (0, 1), tuple(b.labels),
                          Coloring.from_labels(b.labels),
                          base=Multigraph.from_matrix(printed_pagerank_base(k)),
                          base_post=Multigraph.from_matrix(printed_pagerank_base(k, True)),
                          normalized_base=True)


def pagerank_top_family(k: int) -> FamilyInstance:
    """Stars of k leaves at 0 (class 3) and at 4 (class 5); 0 and 4 both joined to 2;
    a (k+2)-clique on 1, 2 and k vertices of class 6."""
    if not isinstance(k, int) or k < 2:
        raise DomainError("pagerank_top_family needs k >= 2")
    b = _Builder([str(i) for i in range(7)])
    b.edge(0, 2)
    b.edge(4, 2)
    b.star(0, b.block("3", k, first=3))
    b.star(4, b.block("5", k, first=5))
    b.clique([1, 2] + b.block("6", k, first=6))
    return FamilyInstance("pagerank-top", {"k": k}, b.graph(), (0, 1), tuple(b.labels),
                          Coloring.from_labels(b.labels), normalized_base=True)


def pagerank_interval(k: int) -> tuple[Fraction, Fraction]:
    """(a_k, b_k] inside which the governing PageRank quantities keep their sign."""
    return F(2, 3) - F(2 * k, 3 * k + 100), F(2, 3) + F(k, 3 * k + 100)


# ---------------------------------------------------------------- registry

FAMILIES = {
    "geometric": (geometric_family, ("j", "k", "r")),
    "betweenness": (betweenness_family, ("h", "j", "k")),
    "eigen-small": (eigen_small, ()),
    "eigen-rank-small": (eigen_rank_small, ()),
    "eigen": (eigen_family, ("k", "star")),
    "pagerank": (pagerank_family, ("k",)),
    "pagerank-top": (pagerank_top_family, ("k",)),
}


def build_family(name: str, params: dict) -> FamilyInstance:
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")
    ctor, names = FAMILIES[name]
    unknown = set(params) - set(names)
    if unknown:
        raise ValueError(f"family {name} does not take {', '.join(sorted(unknown))}")
    return ctor(**{n: int(params[n]) for n in names if n in params})


# ---------------------------------------------------------------- oracle checks

@dataclass
class OracleReport:
    family: str
    measure: str
    checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked > 0 and not self.mismatches


def _matrix_equal(a: Multigraph, b: Multigraph) -> bool:
    return a.n == b.n and a.matrix() == b.matrix()


def oracle_check(f: FamilyInstance, measure: str = "base") -> OracleReport:
    """Compare against closed forms / caption values (``measure``) or printed bases ("base")."""
    rep = OracleReport(f.name, measure)
    if measure == "base":
        for phase, printed, computed in [("pre", f.base, f.quotient_pre), ("post", f.base_post, f.quotient_post)]:
            if printed is None:
                continue
            rep.checked += 1
            q = computed()
            if not _matrix_equal(q, printed):
                rep.mismatches.append((phase, "base matrix", q.matrix(), printed.matrix()))
        return rep
    entries = [e for e in f.oracle if e.measure == measure]
    if not entries:
        return rep
    scores = {"pre": compute(f.graph, measure), "post": compute(f.post_graph, measure)}
    for e in entries:
        for v in f.members(e.label):
            rep.checked += 1
            got = scores[e.phase][v]
            ok = got == e.value if e.tol == 0 else abs(got - e.value) <= e.tol
            if not ok:
                rep.mismatches.append((e.phase, e.label, v, got, e.value))
    return rep


def orbit_check(f: FamilyInstance, measure: str, params: dict | None = None) -> list[tuple[str, str]]:
    """Labels whose members do not all share the same score (pre or post); empty means consistent."""
    bad = []
    for phase, g in (("pre", f.graph), ("post", f.post_graph)):
        s = compute(g, measure, params)
        for lab in dict.fromkeys(f.labels):
            mem = f.members(lab)
            if any(compare_values(s[m], s[mem[0]], s.exact) != 0 for m in mem[1:]):
                bad.append((phase, lab))
    return bad
