"""Colorings, quotients, fibration checks, and exact lifting identities."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Sequence

from .exact import DomainError, resolvent_matrix, solve_linear, vec_mat
from .graph import Arc, Multigraph, ParseError


class NonEquitableError(DomainError):
    def __init__(self, message: str, witness: tuple[int, int] | None = None):
        self.witness = witness
        super().__init__(message)


@dataclass(frozen=True)
class Coloring:
    map: tuple[int, ...]
    base_n: int = -1

    def __post_init__(self):
        m = tuple(int(c) for c in self.map)
        object.__setattr__(self, "map", m)
        base_n = self.base_n if self.base_n >= 0 else (max(m) + 1 if m else 0)
        object.__setattr__(self, "base_n", base_n)
        if any(not 0 <= c < base_n for c in m):
            raise DomainError("coloring maps outside the base")
        if len(set(m)) != base_n:
            raise DomainError("coloring is not surjective onto the base")

    @property
    def total_n(self) -> int:
        return len(self.map)

    @classmethod
    def identity(cls, n: int) -> "Coloring":
        return cls(tuple(range(n)), n)

    @classmethod
    def from_labels(cls, labels: Sequence[Hashable]) -> "Coloring":
        """Base ids are assigned to labels in order of first appearance."""
        ids: dict = {}
        for lab in labels:
            ids.setdefault(lab, len(ids))
        return cls(tuple(ids[lab] for lab in labels), len(ids))

    def fibers(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.base_n)]
        for node, c in enumerate(self.map):
            out[c].append(node)
        return out

    def representatives(self) -> list[int]:
        return [f[0] for f in self.fibers()]


def parse_coloring(text: str) -> Coloring:
    pairs = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected 'node base_node'", lineno)
        try:
            node, base = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer id in {line!r}", lineno) from None
        if node in pairs:
            raise ParseError(f"node {node} colored twice", lineno)
        pairs[node] = base
    n = len(pairs)
    if set(pairs) != set(range(n)):
        raise ParseError("coloring must list every node 0..n-1 exactly once")
    return Coloring(tuple(pairs[i] for i in range(n)))


def serialize_coloring(c: Coloring) -> str:
    return "".join(f"{i}\t{b}\n" for i, b in enumerate(c.map))


def _fiber_in_weights(G: Multigraph, c: Coloring) -> list[dict[int, Fraction]]:
    """For each node y, total arc value from each fiber into y."""
    inw: list[dict[int, Fraction]] = [dict() for _ in range(G.n)]
    for a in G.arcs:
        d = inw[a.target]
        src = c.map[a.source]
        d[src] = d.get(src, Fraction(0)) + a.value
    return inw


def quotient(G: Multigraph, c: Coloring) -> Multigraph:
    """Base graph whose entry X->Y is the in-weight from fiber X into any node of fiber Y."""
    if c.total_n != G.n:
        raise DomainError("coloring size does not match the graph")
    inw = _fiber_in_weights(G, c)
    weighted = any(a.weight is not None for a in G.arcs)
    arcs = []
    for Y, fiber in enumerate(c.fibers()):
        ref = inw[fiber[0]]
        for y in fiber[1:]:
            if inw[y] != ref:
                raise NonEquitableError(
                    f"nodes {fiber[0]} and {y} share color {Y} but receive different fiber in-weights",
                    (fiber[0], y))
        for X in sorted(ref):
            w = ref[X]
            if w == 0:
                continue
            if weighted or w.denominator != 1:
                arcs.append(Arc(X, Y, 1, w))
            else:
                arcs.append(Arc(X, Y, int(w)))
    return Multigraph(c.base_n, tuple(sorted(arcs, key=lambda a: (a.source, a.target))))


@dataclass(frozen=True)
class FibrationCertificate:
    coloring: Coloring
    base: Multigraph
    violations: tuple[tuple[int, tuple[int, int], Fraction, Fraction], ...] = field(default=())
    # each violation: (node, base arc (X, Y), value lifted at node, value on the base arc)

    @property
    def valid(self) -> bool:
        return not self.violations


def check_fibration(G: Multigraph, B: Multigraph, c: Coloring) -> FibrationCertificate:
    """Every base arc X->Y must lift, with matching aggregated value, at every node of fiber Y."""
    if c.total_n != G.n or c.base_n != B.n:
        raise DomainError("coloring does not match the graphs")
    bm = B.matrix()
    inw = _fiber_in_weights(G, c)
    violations = []
    for y in range(G.n):
        Y = c.map[y]
        for X in range(B.n):
            lifted = inw[y].get(X, Fraction(0))
            if lifted != bm[X][Y]:
                violations.append((y, (X, Y), lifted, bm[X][Y]))
    return FibrationCertificate(c, B, tuple(violations))


def lift_vector(u: Sequence, c: Coloring) -> list:
    if len(u) != c.base_n:
        raise DomainError(f"vector has length {len(u)}, base has {c.base_n} nodes")
    return [u[b] for b in c.map]


def _require_valid(G, B, c):
    cert = check_fibration(G, B, c)
    if not cert.valid:
        node, arc, got, want = cert.violations[0]
        raise DomainError(f"not a fibration: base arc {arc} has value {want} but {got} lifts at node {node}")


def verify_lifting_commutation(G: Multigraph, B: Multigraph, c: Coloring, u: Sequence) -> bool:
    """u^phi G == (u B)^phi, exactly."""
    _require_valid(G, B, c)
    uf = [Fraction(x) for x in u]
    left = arc_product(lift_vector(uf, c), G)
    right = lift_vector(vec_mat(uf, B.matrix()), c)
    return left == right


def arc_product(u: Sequence[Fraction], G: Multigraph) -> list[Fraction]:
    """Row vector times adjacency matrix, accumulated arc by arc (no dense matrix)."""
    out = [Fraction(0)] * G.n
    for a in G.arcs:
        out[a.target] += u[a.source] * a.value
    return out


def verify_resolvent_commutation(G: Multigraph, B: Multigraph, c: Coloring, v: Sequence, alpha,
                                 backend: str = "auto") -> bool:
    """v^phi (I - aG)^-1 == (v (I - aB)^-1)^phi via two independent exact solves."""
    _require_valid(G, B, c)
    alpha = Fraction(alpha)
    vf = [Fraction(x) for x in v]
    left = solve_linear(resolvent_matrix(G.matrix(), alpha), lift_vector(vf, c), backend)
    right = lift_vector(solve_linear(resolvent_matrix(B.matrix(), alpha), vf, backend), c)
    return left == right
