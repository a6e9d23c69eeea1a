"""The centrality measures: exact for everything except eigenvector centrality."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import eigsh

from .exact import DomainError, resolvent_matrix, solve_linear
from .graph import UndirectedGraph, bfs_distances, row_normalize
from .spectral import katz_certified_alpha

TAU = 1e-9
POWER_TOL = 1e-13
RESIDUAL_TOL = 1e-10

MEASURES = (
    "closeness", "harmonic", "betweenness", "seeley",
    "eigenvector:l1", "eigenvector:l2", "eigenvector:proj",
    "katz", "pagerank",
)
NORMALIZATIONS = ("l1", "l2", "proj")


@dataclass(frozen=True)
class ScoreVector:
    measure: str
    values: tuple
    exact: bool
    params: dict = field(default_factory=dict, compare=False)
    eigenvalue: Optional[float] = field(default=None, compare=False)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    @property
    def tolerance(self) -> float:
        return 0.0 if self.exact else TAU

    def compare(self, i: int, j: int) -> int:
        """-1, 0, 1 as score(i) is below, tied with, or above score(j)."""
        return compare_values(self.values[i], self.values[j], self.exact)

    def rank_above(self, x: int) -> set[int]:
        return {z for z in range(len(self.values)) if z != x and self.compare(z, x) > 0}


def compare_values(a, b, exact: bool) -> int:
    if exact:
        return (a > b) - (a < b)
    if a > b + TAU:
        return 1
    if a < b - TAU:
        return -1
    return 0


# ---------------------------------------------------------------- distance-based

def closeness(g: UndirectedGraph) -> ScoreVector:
    """Reciprocal of the sum of distances to reachable vertices; isolated vertices score 0."""
    vals = []
    for s in range(g.n):
        total = sum(d for d in bfs_distances(g, s).dist if d)
        vals.append(Fraction(1, total) if total else Fraction(0))
    return ScoreVector("closeness", tuple(vals), True)


def peripherality(g: UndirectedGraph) -> list[int]:
    return [sum(d for d in bfs_distances(g, s).dist if d) for s in range(g.n)]


def harmonic(g: UndirectedGraph) -> ScoreVector:
    vals = []
    for s in range(g.n):
        counts: dict[int, int] = {}
        for d in bfs_distances(g, s).dist:
            if d:
                counts[d] = counts.get(d, 0) + 1
        vals.append(sum((Fraction(c, d) for d, c in counts.items()), Fraction(0)))
    return ScoreVector("harmonic", tuple(vals), True)


def betweenness(g: UndirectedGraph) -> ScoreVector:
    """Brandes dependency accumulation with exact path counts, halved for unordered pairs."""
    n = g.n
    score = [Fraction(0)] * n
    for s in range(n):
        order = []
        preds: list[list[int]] = [[] for _ in range(n)]
        sigma = [0] * n
        sigma[s] = 1
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in g.neighbors(v):
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = [Fraction(0)] * n
        for w in reversed(order):
            coeff = (1 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                score[w] += delta[w]
    return ScoreVector("betweenness", tuple(v / 2 for v in score), True)


def degree_seeley(g: UndirectedGraph) -> ScoreVector:
    if g.m == 0:
        raise DomainError("Seeley's index needs at least one edge")
    two_m = 2 * g.m
    return ScoreVector("seeley", tuple(Fraction(d, two_m) for d in g.degrees()), True)


# ---------------------------------------------------------------- spectral

def _sparse_adjacency(g: UndirectedGraph) -> sp.csr_matrix:
    edges = g.sorted_edges()
    if not edges:
        return sp.csr_matrix((g.n, g.n))
    rows = [x for x, y in edges] + [y for x, y in edges]
    cols = [y for x, y in edges] + [x for x, y in edges]
    return sp.csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(g.n, g.n))


def _normalize(e: np.ndarray, normalization: str) -> np.ndarray:
    if normalization == "l1":
        return e / e.sum()
    if normalization == "l2":
        return e / np.linalg.norm(e)
    if normalization == "proj":
        return (e.sum() / e.dot(e)) * e
    raise ValueError(f"unknown normalization {normalization!r}")


def dominant_eigenpair(g: UndirectedGraph, max_iter: int = 20000) -> tuple[float, np.ndarray, str]:
    """Perron eigenpair of the adjacency matrix, eigenvector l1-normalized.

    Power iteration runs on A + I, which has the same eigenvectors and no
    period-2 oscillation on bipartite graphs. When the spectral gap is too
    small for it to converge within ``max_iter`` steps, a Lanczos solve takes
    over; either way the residual is checked.
    """
    if g.n == 0:
        raise DomainError("empty graph")
    if not g.is_connected():
        raise DomainError("eigenvector centrality needs a connected graph")
    if g.n == 1:
        return 0.0, np.ones(1), "trivial"
    A = _sparse_adjacency(g)
    shifted = A + sp.identity(g.n, format="csr")
    e = np.ones(g.n) / g.n
    method = "power"
    converged = False
    for _ in range(max_iter):
        nxt = shifted @ e
        nxt /= nxt.sum()
        if np.abs(nxt - e).sum() < POWER_TOL:
            e = nxt
            converged = True
            break
        e = nxt
    lam = float(e @ (A @ e) / e.dot(e))
    if not converged or _residual(A, e, lam) > RESIDUAL_TOL:
        method = "lanczos"
        if g.n <= 600:
            w, V = np.linalg.eigh(A.toarray())
            lam, v = float(w[-1]), V[:, -1]
        else:
            w, V = eigsh(A, k=1, which="LA", tol=0, v0=e)
            lam, v = float(w[0]), V[:, 0]
        v = np.abs(v)
        e = v / v.sum()
    if _residual(A, e, lam) > RESIDUAL_TOL:
        raise DomainError("eigenvector iteration did not reach the residual tolerance")
    return lam, e, method


def _residual(A, e: np.ndarray, lam: float) -> float:
    u = e / np.linalg.norm(e)
    return float(np.abs(A @ u - lam * u).max())


def eigenvector(g: UndirectedGraph, normalization: str = "l1") -> ScoreVector:
    if normalization not in NORMALIZATIONS:
        raise ValueError(f"unknown normalization {normalization!r}")
    lam, e, method = dominant_eigenpair(g)
    vals = _normalize(e, normalization)
    return ScoreVector(f"eigenvector:{normalization}", tuple(float(v) for v in vals), False,
                       {"normalization": normalization, "method": method}, eigenvalue=lam)


def katz(g: UndirectedGraph, alpha, coloring=None, backend: str = "auto") -> ScoreVector:
    """Exact x with x(I - aA) = 1, certified to satisfy a < 1/rho(A).

    With a coloring inducing a fibration, the system is solved on the base and
    lifted, which is exact as well.
    """
    alpha = Fraction(alpha)
    if alpha < 0:
        raise DomainError("Katz damping factor must be nonnegative")
    if coloring is not None:
        from .fibration import lift_vector, quotient

        base = quotient(g.to_multigraph(), coloring).matrix()
        xb = _solve_resolvent(base, alpha, [Fraction(1)] * len(base), backend)
        x = lift_vector(xb, coloring)
    else:
        A = g.to_multigraph().matrix()
        x = _solve_resolvent(A, alpha, [Fraction(1)] * g.n, backend)
    if not katz_certified_alpha(x):
        raise DomainError(f"alpha = {alpha} is not below 1/rho: the resolvent series diverges")
    return ScoreVector("katz", tuple(x), True, {"alpha": alpha})


def _solve_resolvent(B, alpha, v, backend):
    return _solve(resolvent_matrix(B, alpha), v, backend, alpha)


def _solve(M, v, backend, alpha):
    try:
        return solve_linear(M, v, backend)
    except DomainError:
        raise DomainError(f"I - {alpha}*A is singular: alpha is at or beyond 1/rho") from None


def _walk_resolvent(g: UndirectedGraph, alpha: Fraction) -> list[list[Fraction]]:
    """I - a P for the uniform random walk P, built straight from degrees; isolated rows stay null."""
    zero = Fraction(0)
    out = []
    for u in range(g.n):
        row = [zero] * g.n
        d = g.degree(u)
        if d:
            w = -alpha / d
            for v in g.neighbors(u):
                row[v] = w
        row[u] = Fraction(1)
        out.append(row)
    return out


def pagerank(g: UndirectedGraph, alpha, v: Sequence | None = None, coloring=None,
             backend: str = "auto") -> ScoreVector:
    """Exact (1 - a) v (I - a Gbar)^-1, l1-normalized when dangling nodes make the mass leak."""
    alpha = Fraction(alpha)
    if not 0 <= alpha < 1:
        raise DomainError("PageRank damping factor must lie in [0, 1)")
    n = g.n
    pref = [Fraction(1, n)] * n if v is None else [Fraction(c) for c in v]
    if len(pref) != n or any(c < 0 for c in pref) or sum(pref) != 1:
        raise DomainError("preference vector must be nonnegative with unit l1 norm")
    if coloring is not None:
        from .fibration import lift_vector, quotient

        base = quotient(row_normalize(g.to_multigraph()), coloring).matrix()
        u = [None] * coloring.base_n
        for node, b in enumerate(coloring.map):
            if u[b] is None:
                u[b] = pref[node]
            elif u[b] != pref[node]:
                raise DomainError("preference vector is not constant on fibers")
        xb = _solve_resolvent(base, alpha, [(1 - alpha) * c for c in u], backend)
        x = lift_vector(xb, coloring)
    else:
        x = _solve(_walk_resolvent(g, alpha), [(1 - alpha) * c for c in pref], backend, alpha)
    total = sum(x)
    if total != 1:
        x = [c / total for c in x]
    return ScoreVector("pagerank", tuple(x), True, {"alpha": alpha})


# ---------------------------------------------------------------- dispatch

def parse_measure(measure: str, normalization: str | None = None) -> tuple[str, str | None]:
    if measure == "degree":
        measure = "seeley"
    if measure == "eigenvector":
        measure = f"eigenvector:{normalization or 'l1'}"
    if measure not in MEASURES:
        raise ValueError(f"unknown measure {measure!r}; expected one of {', '.join(MEASURES)}")
    if measure.startswith("eigenvector:"):
        return "eigenvector", measure.split(":", 1)[1]
    return measure, None


def compute(g: UndirectedGraph, measure: str, params: dict[str, Any] | None = None,
            coloring=None) -> ScoreVector:
    """Dispatch on a normative measure id. ``params`` may carry ``alpha``, ``normalization``, ``v``."""
    params = dict(params or {})
    name, norm = parse_measure(measure, params.get("normalization"))
    if name == "closeness":
        return closeness(g)
    if name == "harmonic":
        return harmonic(g)
    if name == "betweenness":
        return betweenness(g)
    if name == "seeley":
        return degree_seeley(g)
    if name == "eigenvector":
        return eigenvector(g, norm)
    if "alpha" not in params:
        raise ValueError(f"{name} needs an alpha parameter")
    if name == "katz":
        return katz(g, params["alpha"], coloring=coloring)
    return pagerank(g, params["alpha"], v=params.get("v"), coloring=coloring)


def format_value(v) -> str:
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        return repr(v) if math.isfinite(v) else str(v)
    return str(v)
