"""Command-line front end: ``rankmono <subcommand> ...``.

Exit codes: 0 success, 1 violation found (audit/scan with --fail-on-violation,
failed reproduction, invalid fibration), 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .centrality import compute, format_value
from .exact import DomainError, RatPoly, char_poly, count_distinct_roots, count_roots
from .families import FAMILIES, build_family
from .fibration import check_fibration, parse_coloring, quotient, serialize_coloring
from .graph import (
    GraphError,
    ParseError,
    parse_base_tsv,
    parse_edge_list,
    parse_rational,
    row_normalize,
    serialize_base_tsv,
    serialize_edge_list,
)
from .monotonicity import (
    TSV_HEADER,
    Exhaustive,
    RandomPairs,
    Stratified,
    audit,
    reports_to_json,
    reports_to_tsv,
    scan,
)


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _params(args) -> dict:
    out: dict = {}
    for item in filter(None, (args.params or "").split(",")):
        if "=" not in item:
            raise UsageError(f"--params entries look like name=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    if getattr(args, "alpha", None) is not None:
        out["alpha"] = parse_rational(args.alpha)
    elif "alpha" in out:
        out["alpha"] = parse_rational(out["alpha"])
    if getattr(args, "normalization", None):
        out["normalization"] = args.normalization
    return out


def _edge(text: str) -> tuple[int, int]:
    try:
        x, y = (int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"--edge expects x,y, got {text!r}") from None
    return x, y


def _measure_args(p: argparse.ArgumentParser):
    p.add_argument("--graph", required=True, help="edge-list file, or - for stdin")
    p.add_argument("--measure", required=True)
    p.add_argument("--alpha", help="damping factor as p/q")
    p.add_argument("--normalization", choices=("l1", "l2", "proj"))
    p.add_argument("--params", help="extra name=value pairs, comma separated")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")


def cmd_centrality(args) -> int:
    g = parse_edge_list(_read(args.graph))
    s = compute(g, args.measure, _params(args))
    if args.format == "json":
        print(json.dumps({"measure": s.measure, "exact": s.exact,
                          "scores": [format_value(v) for v in s.values]}, indent=2))
    else:
        for i, v in enumerate(s.values):
            print(f"{i}\t{format_value(v)}")
    return 0


def cmd_audit(args) -> int:
    g = parse_edge_list(_read(args.graph))
    x, y = _edge(args.edge)
    try:
        rep = audit(g, x, y, args.measure, _params(args))
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(json.dumps(rep.to_json(), indent=2))
    else:
        print(TSV_HEADER)
        print(rep.tsv_row())
    return 1 if args.fail_on_violation and rep.violated else 0


def cmd_scan(args) -> int:
    g = parse_edge_list(_read(args.graph))
    if args.strata:
        top, bottom = (float(t) for t in args.strata.split(","))
        source = Stratified(top, bottom, args.samples or 100, args.seed)
    elif args.samples:
        source = RandomPairs(args.samples, args.seed)
    else:
        source = Exhaustive()
    res = scan(g, args.measure, _params(args), source)
    if args.format == "json":
        print(reports_to_json(res.reports, measure=res.measure, audited=res.audited,
                              violation_fraction=res.violation_fraction, counts=res.counts()))
    else:
        sys.stdout.write(reports_to_tsv(res.reports))
        print(f"# audited {res.audited}, violations {len(res)} ({100 * res.violation_fraction:.2f}%)")
    return 1 if args.fail_on_violation and len(res) else 0


def cmd_family(args) -> int:
    params = {}
    for item in filter(None, (args.params or "").split(",")):
        k, _, v = item.partition("=")
        params[k.strip()] = v.strip()
    f = build_family(args.name, params)
    if args.coloring:
        with open(args.coloring, "w", encoding="utf-8") as fh:
            fh.write(serialize_coloring(f.coloring))
    if args.base:
        with open(args.base, "w", encoding="utf-8") as fh:
            fh.write(serialize_base_tsv(f.quotient_pre()))
    if args.format == "json":
        print(json.dumps({"family": f.name, "params": f.params, "edge": list(f.edge),
                          "n": f.graph.n, "edges": [list(e) for e in f.graph.sorted_edges()],
                          "labels": list(f.labels)}, indent=2))
    else:
        sys.stdout.write(f"# {f.name} {f.params} designated edge {f.edge[0]},{f.edge[1]}\n")
        sys.stdout.write(serialize_edge_list(f.graph))
    return 0


def cmd_sturm(args) -> int:
    if (args.poly is None) == (args.charpoly is None):
        raise UsageError("give exactly one of --poly and --charpoly")
    p = RatPoly.parse(args.poly) if args.poly else char_poly(parse_base_tsv(_read(args.charpoly)).matrix())
    lo, hi = parse_rational(args.lo), parse_rational(args.hi)
    n = count_distinct_roots(p, lo, hi) if args.distinct else count_roots(p, lo, hi)
    if args.format == "json":
        print(json.dumps({"poly": p.to_literal(), "lo": str(lo), "hi": str(hi), "roots": n}))
    else:
        print(f"{p.to_literal()}\t({lo}, {hi}]\t{n}")
    return 0


def cmd_fibration(args) -> int:
    G = parse_edge_list(_read(args.graph)).to_multigraph()
    if args.normalize:
        G = row_normalize(G)
    c = parse_coloring(_read(args.coloring))
    if not args.base:
        sys.stdout.write(serialize_base_tsv(quotient(G, c)))
        return 0
    cert = check_fibration(G, parse_base_tsv(_read(args.base), c.base_n), c)
    if args.format == "json":
        print(json.dumps({"valid": cert.valid, "violations": [
            {"node": v, "arc": list(arc), "lifted": str(got), "base": str(want)}
            for v, arc, got, want in cert.violations]}, indent=2))
    else:
        print("valid" if cert.valid else "invalid")
        for v, arc, got, want in cert.violations:
            print(f"node {v}\tarc {arc[0]}->{arc[1]}\tlifted {got}\tbase {want}")
    return 0 if cert.valid else 1


def cmd_reproduce(args) -> int:
    from .claims import CLAIMS, resolve_claim, run_claim

    ids = list(CLAIMS) if args.claim == ["all"] else args.claim
    try:
        ids = [resolve_claim(c) for c in ids]
    except KeyError as exc:
        raise UsageError(f"unknown claim id {exc.args[0]!r}; known: {', '.join(CLAIMS)}") from None
    ok = True
    for cid in ids:
        res = run_claim(cid)
        print(res.report(), flush=True)
        ok &= res.passed
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rankmono", description="Score and rank monotonicity of centrality measures.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("centrality", help="score every vertex")
    _measure_args(p)
    p.set_defaults(func=cmd_centrality)

    p = sub.add_parser("audit", help="audit the addition of one edge")
    _measure_args(p)
    p.add_argument("--edge", required=True, help="x,y")
    p.add_argument("--fail-on-violation", action="store_true")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("scan", help="audit many candidate edges")
    _measure_args(p)
    p.add_argument("--samples", type=int, help="random pairs to audit (default: every non-adjacent pair)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strata", help="top,bottom fractions for stratified sampling, e.g. 0.02,0.25")
    p.add_argument("--fail-on-violation", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("family", help="emit a counterexample family as an edge list")
    p.add_argument("name", choices=sorted(FAMILIES))
    p.add_argument("--params", help="e.g. j=10,k=36,r=2")
    p.add_argument("--coloring", help="also write the label coloring here")
    p.add_argument("--base", help="also write the quotient base here")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("sturm", help="count real roots in (lo, hi]")
    p.add_argument("--poly", help="ascending coefficients, e.g. -2,0,1")
    p.add_argument("--charpoly", help="base TSV whose characteristic polynomial is used")
    p.add_argument("--lo", required=True)
    p.add_argument("--hi", required=True)
    p.add_argument("--distinct", action="store_true", help="accept non-squarefree input")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_sturm)

    p = sub.add_parser("fibration", help="quotient a graph or verify a fibration")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--base", help="base TSV to verify against; omitted prints the quotient")
    p.add_argument("--normalize", action="store_true", help="row-normalize the graph first")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_fibration)

    p = sub.add_parser("reproduce", help="run claim reproductions")
    p.add_argument("claim", nargs="+", help="claim ids, or all")
    p.set_defaults(func=cmd_reproduce)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, GraphError, DomainError, ValueError, OSError) as exc:
        print(f"rankmono: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
