"""Score/rank monotonicity audits for the addition of a single edge, and bulk scanning."""
from __future__ import annotations

import json
import math
import random
import warnings
from dataclasses import dataclass, field
from typing import Callable, Iterable, Union

from .centrality import ScoreVector, compare_values, compute, format_value
from .exact import DomainError
from .graph import GraphError, UndirectedGraph, add_edge

MeasureSpec = Union[str, Callable[[UndirectedGraph], ScoreVector]]


class BothEndpointsHurt(UserWarning):
    """An edge addition hurt both of its endpoints; no such case is known."""


@dataclass
class MonotonicityReport:
    edge: tuple[int, int]
    measure: str
    params: dict
    pre_x: object
    pre_y: object
    score_delta_x: object
    score_delta_y: object
    score_ok_x: bool
    score_ok_y: bool
    weak_rank_ok_x: bool
    weak_rank_ok_y: bool
    weak_witnesses_x: list[int]
    weak_witnesses_y: list[int]
    strict_rank_ok_x: bool
    strict_rank_ok_y: bool
    strict_witnesses_x: list[int]
    strict_witnesses_y: list[int]
    demotion_x: int
    demotion_y: int
    third_party_demotion_x: int
    third_party_demotion_y: int
    classification: str = "none"
    tie: bool = False

    @property
    def hurt_x(self) -> bool:
        return not (self.score_ok_x and self.weak_rank_ok_x)

    @property
    def hurt_y(self) -> bool:
        return not (self.score_ok_y and self.weak_rank_ok_y)

    @property
    def violated(self) -> bool:
        return self.hurt_x or self.hurt_y

    @property
    def rank_violated(self) -> bool:
        return not (self.weak_rank_ok_x and self.weak_rank_ok_y)

    @property
    def score_violated(self) -> bool:
        return not (self.score_ok_x and self.score_ok_y)

    def tsv_row(self) -> str:
        ok = lambda b: "ok" if b else "fail"  # noqa: E731
        cols = [
            f"{self.edge[0]},{self.edge[1]}", self.measure,
            format_value(self.score_delta_x), format_value(self.score_delta_y),
            ok(self.weak_rank_ok_x), ok(self.weak_rank_ok_y),
            ok(self.strict_rank_ok_x), ok(self.strict_rank_ok_y),
            str(self.demotion_x), str(self.demotion_y),
            self.classification + ("*" if self.tie else ""),
        ]
        return "\t".join(cols)

    def to_json(self) -> dict:
        return {
            "edge": list(self.edge), "measure": self.measure,
            "params": {k: format_value(v) for k, v in self.params.items()},
            "pre_x": format_value(self.pre_x), "pre_y": format_value(self.pre_y),
            "delta_x": format_value(self.score_delta_x), "delta_y": format_value(self.score_delta_y),
            "score_ok_x": self.score_ok_x, "score_ok_y": self.score_ok_y,
            "weak_x": self.weak_rank_ok_x, "weak_y": self.weak_rank_ok_y,
            "strict_x": self.strict_rank_ok_x, "strict_y": self.strict_rank_ok_y,
            "weak_witnesses_x": self.weak_witnesses_x, "weak_witnesses_y": self.weak_witnesses_y,
            "strict_witnesses_x": self.strict_witnesses_x, "strict_witnesses_y": self.strict_witnesses_y,
            "demotion_x": self.demotion_x, "demotion_y": self.demotion_y,
            "third_party_demotion_x": self.third_party_demotion_x,
            "third_party_demotion_y": self.third_party_demotion_y,
            "class": self.classification, "tie": self.tie,
        }


TSV_HEADER = "\t".join(["edge", "measure", "delta_x", "delta_y", "weak_x", "weak_y",
                        "strict_x", "strict_y", "demotion_x", "demotion_y", "class"])


def _scores(g: UndirectedGraph, measure: MeasureSpec, params: dict | None, coloring) -> ScoreVector:
    if callable(measure):
        return measure(g)
    return compute(g, measure, params, coloring=coloring)


def _check_pair(g: UndirectedGraph, x: int, y: int):
    if x == y:
        raise GraphError("endpoints must differ")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise GraphError(f"node out of range: {x}, {y}")
    if g.has_edge(x, y):
        raise GraphError(f"{x} and {y} are already adjacent")


def _rank_witnesses(pre: ScoreVector, post: ScoreVector, e: int, skip: tuple[int, int]) -> tuple[list[int], list[int]]:
    """Witnesses against the weak and the strict implications for endpoint e."""
    exact = pre.exact and post.exact
    weak, strict = [], []
    pe, qe = pre[e], post[e]
    for z in range(len(pre)):
        if z in skip:
            continue
        before = compare_values(pre[z], pe, exact)
        if before > 0:
            continue
        after = compare_values(post[z], qe, exact)
        # c(z) < c(x) => c'(z) < c'(x), and c(z) <= c(x) => c'(z) <= c'(x)
        if (before < 0 and after >= 0) or after > 0:
            weak.append(z)
        # c(z) <= c(x) => c'(z) < c'(x)
        if after >= 0:
            strict.append(z)
    return weak, strict


def _above(s: ScoreVector, e: int, exclude: Iterable[int] = ()) -> int:
    ex = set(exclude) | {e}
    exact = s.exact
    return sum(1 for z in range(len(s)) if z not in ex and compare_values(s[z], s[e], exact) > 0)


def audit_scores(pre: ScoreVector, post: ScoreVector, x: int, y: int,
                 measure: str | None = None, params: dict | None = None) -> MonotonicityReport:
    """Build the report from already computed pre- and post-edge scores."""
    exact = pre.exact and post.exact
    wx, sx = _rank_witnesses(pre, post, x, (x, y))
    wy, sy = _rank_witnesses(pre, post, y, (x, y))
    rep = MonotonicityReport(
        edge=(x, y), measure=measure or pre.measure, params=dict(params or pre.params),
        pre_x=pre[x], pre_y=pre[y],
        score_delta_x=post[x] - pre[x], score_delta_y=post[y] - pre[y],
        score_ok_x=compare_values(post[x], pre[x], exact) > 0,
        score_ok_y=compare_values(post[y], pre[y], exact) > 0,
        weak_rank_ok_x=not wx, weak_rank_ok_y=not wy,
        weak_witnesses_x=wx, weak_witnesses_y=wy,
        strict_rank_ok_x=not sx, strict_rank_ok_y=not sy,
        strict_witnesses_x=sx, strict_witnesses_y=sy,
        demotion_x=_above(post, x) - _above(pre, x),
        demotion_y=_above(post, y) - _above(pre, y),
        third_party_demotion_x=_above(post, x, (y,)) - _above(pre, x, (y,)),
        third_party_demotion_y=_above(post, y, (x,)) - _above(pre, y, (x,)),
    )
    if rep.violated:
        rep.classification, rep.tie = classify(rep, exact=exact)
    return rep


def audit(g: UndirectedGraph, x: int, y: int, measure: MeasureSpec, params: dict | None = None,
          coloring=None, pre: ScoreVector | None = None) -> MonotonicityReport:
    """Full audit of adding x - y. ``coloring`` (when it is equitable before and after) lets spectral
    measures be solved on the quotient."""
    _check_pair(g, x, y)
    pre = pre if pre is not None else _scores(g, measure, params, coloring)
    post = _scores(add_edge(g, x, y), measure, params, coloring)
    name = measure if isinstance(measure, str) else pre.measure
    return audit_scores(pre, post, x, y, name, params or pre.params)


def score_check(g, x, y, measure, params=None, coloring=None):
    rep = audit(g, x, y, measure, params, coloring)
    return rep.score_delta_x, rep.score_delta_y


@dataclass(frozen=True)
class RankCheck:
    ok_x: bool
    ok_y: bool
    witnesses_x: list
    witnesses_y: list

    @property
    def ok(self) -> bool:
        return self.ok_x and self.ok_y


def rank_check(g, x, y, measure, params=None, strict: bool = False, coloring=None) -> RankCheck:
    rep = audit(g, x, y, measure, params, coloring)
    if strict:
        return RankCheck(rep.strict_rank_ok_x, rep.strict_rank_ok_y, rep.strict_witnesses_x, rep.strict_witnesses_y)
    return RankCheck(rep.weak_rank_ok_x, rep.weak_rank_ok_y, rep.weak_witnesses_x, rep.weak_witnesses_y)


def demotion_count(g, x, y, measure, params=None, endpoint: int | None = None,
                   third_party: bool = False, coloring=None) -> int:
    """Change in the number of vertices scoring strictly above ``endpoint``.

    With ``third_party`` the other endpoint is left out of the count, matching
    quantification over z distinct from both x and y.
    """
    e = x if endpoint is None else endpoint
    if e not in (x, y):
        raise ValueError("endpoint must be x or y")
    rep = audit(g, x, y, measure, params, coloring)
    if e == x:
        return rep.third_party_demotion_x if third_party else rep.demotion_x
    return rep.third_party_demotion_y if third_party else rep.demotion_y


def classify(report: MonotonicityReport, exact: bool = True) -> tuple[str, bool]:
    """("top" | "bottom" | "both", tie flag). Ties in pre-edge importance count as bottom, flagged."""
    hx, hy = report.hurt_x, report.hurt_y
    if not (hx or hy):
        raise DomainError("no violation to classify")
    if hx and hy:
        return "both", False
    hurt, other = (report.pre_x, report.pre_y) if hx else (report.pre_y, report.pre_x)
    c = compare_values(hurt, other, exact)
    if c > 0:
        return "top", False
    return "bottom", c == 0


# ---------------------------------------------------------------- scanning

@dataclass(frozen=True)
class Exhaustive:
    pass


@dataclass(frozen=True)
class RandomPairs:
    samples: int
    seed: int = 0


@dataclass(frozen=True)
class Stratified:
    top_fraction: float
    bottom_fraction: float
    samples: int
    seed: int = 0


PairSource = Union[Exhaustive, RandomPairs, Stratified]


@dataclass
class ScanResult:
    measure: str
    audited: int = 0
    reports: list[MonotonicityReport] = field(default_factory=list)
    both: list[MonotonicityReport] = field(default_factory=list)

    def __iter__(self):
        return iter(self.reports)

    def __len__(self):
        return len(self.reports)

    @property
    def violation_fraction(self) -> float:
        return len(self.reports) / self.audited if self.audited else 0.0

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for r in self.reports:
            out[r.classification] = out.get(r.classification, 0) + 1
        return out


def _non_adjacent_pairs(g: UndirectedGraph):
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if not g.has_edge(x, y):
                yield x, y


def _sample_pairs(g: UndirectedGraph, source: PairSource, pre: ScoreVector) -> list[tuple[int, int]]:
    if isinstance(source, Exhaustive):
        return list(_non_adjacent_pairs(g))
    rng = random.Random(source.seed)
    if isinstance(source, RandomPairs):
        left = right = list(range(g.n))
    elif isinstance(source, Stratified):
        order = sorted(range(g.n), key=lambda v: (pre[v], v), reverse=True)
        top = max(1, math.ceil(source.top_fraction * g.n))
        bottom = max(1, math.ceil(source.bottom_fraction * g.n))
        left, right = order[:top], order[g.n - bottom:]
    else:
        raise TypeError(f"unknown pair source {source!r}")
    candidates = {(min(a, b), max(a, b)) for a in left for b in right if a != b and not g.has_edge(a, b)}
    candidates = sorted(candidates)
    if len(candidates) <= source.samples:
        return candidates
    return sorted(rng.sample(candidates, source.samples))


def scan(g: UndirectedGraph, measure: MeasureSpec, params: dict | None = None,
         pair_source: PairSource = Exhaustive(), coloring=None) -> ScanResult:
    """Audit many single-edge additions; keep every report showing a score or weak-rank violation."""
    if not g.is_connected():
        warnings.warn("scanning a disconnected graph; some measures are degenerate there", RuntimeWarning)
    pre = _scores(g, measure, params, coloring)
    name = measure if isinstance(measure, str) else pre.measure
    result = ScanResult(name)
    for x, y in _sample_pairs(g, pair_source, pre):
        rep = audit(g, x, y, measure, params, coloring, pre=pre)
        result.audited += 1
        if rep.violated:
            result.reports.append(rep)
            if rep.classification == "both":
                result.both.append(rep)
                warnings.warn(f"edge {x}-{y} hurts both endpoints under {name}", BothEndpointsHurt)
    return result


def reports_to_tsv(reports: Iterable[MonotonicityReport]) -> str:
    return "\n".join([TSV_HEADER] + [r.tsv_row() for r in reports]) + "\n"


def reports_to_json(reports: Iterable[MonotonicityReport], **extra) -> str:
    return json.dumps({**extra, "reports": [r.to_json() for r in reports]}, indent=2)
