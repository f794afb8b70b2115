"""Command line entry point: ``cdgraph {solve,generate,analyze,verify}``.

Exit codes: 0 success, 1 certificate failed verification, 2 usage or
parameter error, 3 size limit exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .cdperfect import DEFAULT_SUBGRAPH_LIMIT, check_cd_perfect
from .graph import Graph, GraphFormatError, aux_graph, find_triangle, parse_edge_list, structural_queries, to_edge_list
from .interval import RepresentationMismatch, separated_cluster_interval
from .intervalrep import intersection_graph, is_proper, parse_interval_rep
from .oracles import (
    CdColoring,
    IsolatedVertexError,
    SeparatedCluster,
    SizeLimitExceeded,
    TotalDominatingSet,
    cd_chromatic_exact,
    separated_cluster_exact,
    total_domination_exact,
    verify_cd_coloring,
    verify_separated_cluster,
    verify_total_dominating,
)
from .poly import (
    NotHFreeError,
    PreconditionError,
    UnsupportedClassError,
    cd_chromatic_via_aux,
    clique_cover_chordal,
)
from .recognition import (
    C6_ONLY,
    H_FAMILY,
    H_PRIME,
    find_independent_triple,
    find_induced_member,
    is_chordal,
    is_chordal_bipartite,
    is_co_bipartite,
    is_diamond_free,
    validate_interval_rep,
)
from .reductions import (
    ConstructionError,
    build_c6free_bipartite,
    gap_family,
    reduce_regular_even,
    reduce_regular_odd,
    reduce_totaldom_to_cdcolor_cubic,
)

SCHEMA = "cdgraph/1"

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class Inapplicable(Exception):
    """The requested method does not apply to this instance."""


# ------------------------------------------------------------------ helpers

def _read_graph(path: str) -> Graph:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}") from None
    return parse_edge_list(data)


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _member_json(m) -> dict | None:
    return None if m is None else {"member": m.name, "vertices": list(m.vertices)}


def _certificate_json(cert) -> dict:
    return cert.to_json()


def _verify(g: Graph, cert):
    if isinstance(cert, CdColoring):
        return verify_cd_coloring(g, cert)
    if isinstance(cert, TotalDominatingSet):
        return verify_total_dominating(g, cert.vertices)
    return verify_separated_cluster(g, cert.vertices)


# -------------------------------------------------------------------- solve

def _solve_cd(g: Graph, method: str, limit):
    if method == "interval":
        raise Inapplicable("no interval method for cd-coloring")
    if method in ("aux", "auto"):
        member = find_induced_member(g, H_FAMILY)
        if member is None:
            try:
                res = cd_chromatic_via_aux(g, limit=limit, check_family=False)
                return f"aux-{res.strategy}", res.k, res.coloring
            except UnsupportedClassError as exc:
                if method == "aux":
                    raise Inapplicable(str(exc)) from None
        elif method == "aux":
            raise Inapplicable(f"graph has an induced {member.name} on {list(member.vertices)}")
    k, col = cd_chromatic_exact(g, limit=limit)
    return "exact", k, col


def _solve_tds(g: Graph, method: str, limit):
    if method == "interval":
        raise Inapplicable("no interval method for total domination")
    if method in ("aux", "auto"):
        tri = find_triangle(g)
        member = find_induced_member(g, H_FAMILY) if tri is None else None
        if tri is None and member is None:
            try:
                res = cd_chromatic_via_aux(g, limit=limit, check_family=False)
                tds = TotalDominatingSet(tuple(sorted(set(res.coloring.dominator_of))))
                return f"aux-{res.strategy}", len(tds), tds
            except UnsupportedClassError as exc:
                if method == "aux":
                    raise Inapplicable(str(exc)) from None
        elif method == "aux":
            why = f"triangle {tri}" if tri else f"induced {member.name} on {list(member.vertices)}"
            raise Inapplicable(f"aux route needs a triangle-free graph without forbidden members: {why}")
    k, tds = total_domination_exact(g, limit=limit)
    return "exact", k, tds


def _solve_sep(g: Graph, method: str, limit, intervals):
    if method == "interval" or (method == "auto" and intervals is not None):
        if intervals is None:
            raise Inapplicable("interval method needs --intervals")
        res = separated_cluster_interval(g, intervals)
        return "interval", res.size, res.cluster
    if method in ("aux", "auto"):
        peo = is_chordal(aux_graph(g))
        if peo is not None:
            cover = clique_cover_chordal(aux_graph(g), peo)
            cl = SeparatedCluster(cover.witness_independent_set or ())
            return "aux-peo", len(cl), cl
        if method == "aux":
            raise Inapplicable("auxiliary graph is not chordal")
    k, cl = separated_cluster_exact(g, limit=limit)
    return "exact", k, cl


def solve_one(graph_path: str, problem: str, method: str, limit, intervals_path, timings: bool):
    """Run one job; returns (exit code, JSON object)."""
    t0 = time.perf_counter()
    try:
        g = _read_graph(graph_path)
        intervals = None
        if intervals_path is not None:
            intervals = parse_interval_rep(Path(intervals_path).read_bytes())
        t1 = time.perf_counter()
        if problem == "cd-color":
            used, value, cert = _solve_cd(g, method, limit)
        elif problem == "total-dom":
            used, value, cert = _solve_tds(g, method, limit)
        else:
            used, value, cert = _solve_sep(g, method, limit, intervals)
        t2 = time.perf_counter()
        verdict = _verify(g, cert)
        t3 = time.perf_counter()
    except SizeLimitExceeded as exc:
        return EXIT_LIMIT, {"schema": SCHEMA, "graph": graph_path, "error": "limit", "message": str(exc)}
    except (GraphFormatError, OSError, Inapplicable, PreconditionError, IsolatedVertexError,
            RepresentationMismatch, ValueError) as exc:
        return EXIT_USAGE, {"schema": SCHEMA, "graph": graph_path, "error": "usage", "message": str(exc)}
    out = {
        "schema": SCHEMA,
        "graph": graph_path,
        "problem": problem,
        "method": used,
        "value": value,
        "n": g.n,
        "m": g.m,
        "certificate": _certificate_json(cert),
        "verified": bool(verdict),
    }
    if timings:
        out["timings_ms"] = {"parse": round((t1 - t0) * 1e3, 3), "solve": round((t2 - t1) * 1e3, 3),
                             "verify": round((t3 - t2) * 1e3, 3)}
    if not verdict:
        out["violation"] = verdict.reason
        return EXIT_VERIFY, out
    return EXIT_OK, out


def _solve_job(args_tuple):
    return solve_one(*args_tuple)


def cmd_solve(args) -> int:
    if args.intervals is not None and len(args.graph) > 1:
        print("--intervals takes a single --graph", file=sys.stderr)
        return EXIT_USAGE
    jobs = [(p, args.problem, args.method, args.limit, args.intervals, not args.no_timings) for p in args.graph]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_solve_job, jobs))
    else:
        results = [_solve_job(j) for j in jobs]
    for code, obj in results:
        if code:
            print(f"{obj.get('graph')}: {obj.get('message', obj.get('violation', 'failed'))}", file=sys.stderr)
    _emit(results[0][1] if len(results) == 1 else [obj for _, obj in results])
    return max(code for code, _ in results)


# ----------------------------------------------------------------- generate

def _classes_json(classes) -> list[dict]:
    return [{"members": list(m), "dominator": d} for m, d in classes]


def cmd_generate(args) -> int:
    try:
        if args.construction == "gap-family":
            out = gap_family(args.n, args.d)
            h = out.graph
            side = {
                "construction": "gap-family",
                "params": {"n": args.n, "d": args.d},
                "certificates": [out.coloring_cert.to_json(), out.tds_cert.to_json()],
                "stated": {"classes": out.stated_classes, "tds": out.stated_tds},
                "provenance": list(out.provenance),
            }
        else:
            g = _read_graph(args.input)
            if args.construction == "cubic-reduction":
                red = reduce_totaldom_to_cdcolor_cubic(g)
                params = {}
            elif args.construction == "regular-odd":
                red = reduce_regular_odd(g, args.d)
                params = {"d": args.d}
            elif args.construction == "regular-even":
                red = reduce_regular_even(g, args.d)
                params = {"d": args.d}
            else:
                red = None
                build = build_c6free_bipartite(g)
                h = build.graph
                side = {
                    "construction": "c6free-bipartite",
                    "params": {},
                    "side_a": sorted(build.bipartition.side_a),
                    "side_b": sorted(build.bipartition.side_b),
                    "universal": build.universal,
                    "cliques": [list(c) for c in build.cliques],
                }
            if red is not None:
                h = red.graph
                side = {
                    "construction": args.construction,
                    "params": params,
                    "source_n": red.source_n,
                    "offset": red.offset,
                    "gadget_classes": _classes_json(red.gadget_classes),
                    "provenance": list(red.provenance),
                }
    except (GraphFormatError, PreconditionError, ValueError, ConstructionError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    rep = structural_queries(h)
    side.update({
        "schema": SCHEMA,
        "n": h.n,
        "m": h.m,
        "structure": {
            "connected": rep.is_connected,
            "regular_degree": rep.regular_degree,
            "triangle_free": rep.is_triangle_free,
            "bipartite": rep.bipartition is not None,
        },
    })
    prefix = Path(args.out)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    edge_path = prefix.with_suffix(".txt")
    edge_path.write_text(to_edge_list(h))
    side["edge_list"] = str(edge_path)
    prefix.with_suffix(".json").write_text(json.dumps(side, indent=2, sort_keys=True) + "\n")
    summary = {k: v for k, v in side.items() if k not in ("provenance", "gadget_classes", "certificates")}
    if "certificates" in side:
        summary["certificate_sizes"] = {c["type"]: c.get("k", c.get("size")) for c in side["certificates"]}
    _emit(summary)
    return EXIT_OK


# ------------------------------------------------------------------ analyze

def analyze_graph(g: Graph, intervals=None, cd_perfect: bool = False,
                  subgraph_limit: int = DEFAULT_SUBGRAPH_LIMIT) -> dict:
    rep = structural_queries(g)
    cb = is_chordal_bipartite(g)
    gs = aux_graph(g)
    member = find_induced_member(g, H_FAMILY)
    report = {
        "schema": SCHEMA,
        "n": g.n,
        "m": g.m,
        "connected": rep.is_connected,
        "regular_degree": rep.regular_degree,
        "triangle_free": rep.is_triangle_free,
        "has_isolated_vertex": rep.has_isolated_vertex,
        "bipartite": rep.bipartition is not None,
        "chordal": is_chordal(g) is not None,
        "chordal_bipartite": bool(cb),
        "co_bipartite": is_co_bipartite(g) is not None,
        "diamond_free": is_diamond_free(g),
        "three_k1_free": find_independent_triple(g) is None,
        "h_free": member is None,
        "h_witness": _member_json(member),
        "hprime_free": find_induced_member(g, H_PRIME) is None,
        "c6_free": find_induced_member(g, C6_ONLY) is None,
        "aux": {"m": gs.m, "triangle_free": find_triangle(gs) is None, "chordal": is_chordal(gs) is not None},
    }
    if cb.long_cycle:
        report["long_induced_cycle"] = list(cb.long_cycle)
    if intervals is not None:
        bad = validate_interval_rep(g, intervals)
        report["intervals"] = {"valid": bad is None, "proper": is_proper(intervals),
                               "mismatch": None if bad is None else [bad.u, bad.v]}
    if cd_perfect:
        cp = check_cd_perfect(g, subgraph_limit)
        report["cd_perfect"] = {
            "is_cd_perfect": cp.is_cd_perfect,
            "counterexample": None if cp.counterexample is None else {
                "vertices": list(cp.counterexample.vertices),
                "chi_cd": cp.counterexample.chi_cd,
                "omega_s": cp.counterexample.omega_s,
            },
            "h_free": cp.condition_flags.h_free,
            "all_aux_k_eq_alpha": cp.condition_flags.all_aux_k_eq_alpha,
            "c6_free": cp.condition_flags.c6_free,
            "subgraphs_checked": cp.subgraphs_checked,
            "skips_subgraphs_with_isolated_vertices": True,
        }
    return report


def cmd_analyze(args) -> int:
    try:
        if args.graph is None and args.intervals is None:
            raise GraphFormatError("need --graph or --intervals")
        intervals = parse_interval_rep(Path(args.intervals).read_bytes()) if args.intervals else None
        g = _read_graph(args.graph) if args.graph else intersection_graph(intervals)
        report = analyze_graph(g, intervals, args.cd_perfect, args.limit or DEFAULT_SUBGRAPH_LIMIT)
    except SizeLimitExceeded as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_LIMIT
    except (GraphFormatError, OSError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    _emit(report)
    return EXIT_OK


# ------------------------------------------------------------------- verify

def certificate_from_json(obj: dict):
    kind = obj.get("type")
    if kind == "cd-coloring":
        return CdColoring(tuple(obj["class_of"]), tuple(obj["dominator_of"]))
    if kind == "total-dominating-set":
        return TotalDominatingSet(tuple(obj["vertices"]))
    if kind == "separated-cluster":
        return SeparatedCluster(tuple(obj["vertices"]))
    raise ValueError(f"unknown certificate type {kind!r}")


def _collect_certs(obj) -> list[dict]:
    if isinstance(obj, list):
        return [c for item in obj for c in _collect_certs(item)]
    if "certificates" in obj:
        return list(obj["certificates"])
    if "certificate" in obj:
        return [obj["certificate"]]
    return [obj]


def cmd_verify(args) -> int:
    try:
        g = _read_graph(args.graph)
        raw = json.loads(Path(args.cert).read_text())
        certs = [certificate_from_json(c) for c in _collect_certs(raw)]
    except (GraphFormatError, OSError, ValueError, KeyError, TypeError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    results = []
    ok = True
    for cert in certs:
        verdict = _verify(g, cert)
        ok &= bool(verdict)
        size = cert.k if isinstance(cert, CdColoring) else len(cert)
        results.append({"type": cert.to_json()["type"], "size": size, "ok": bool(verdict),
                        "reason": verdict.reason or None})
    _emit({"schema": SCHEMA, "ok": ok, "results": results})
    return EXIT_OK if ok else EXIT_VERIFY


# -------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cdgraph", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="compute a parameter with a verified certificate")
    s.add_argument("--problem", required=True, choices=["cd-color", "total-dom", "sep-cluster"])
    s.add_argument("--graph", required=True, nargs="+", help="edge-list file(s)")
    s.add_argument("--intervals", help="interval representation for --graph")
    s.add_argument("--method", default="auto", choices=["auto", "exact", "aux", "interval"])
    s.add_argument("--limit", type=int, help="oracle size limit (default: CDGRAPH_LIMIT or built-in)")
    s.add_argument("--jobs", type=int, default=1, help="worker processes when several graphs are given")
    s.add_argument("--no-timings", action="store_true", help="omit timings for byte-stable output")
    s.set_defaults(func=cmd_solve)

    gen = sub.add_parser("generate", help="build a reduction or gap-family instance")
    gsub = gen.add_subparsers(dest="construction", required=True)
    for name, needs_d, needs_input in (("cubic-reduction", False, True), ("regular-odd", True, True),
                                       ("regular-even", True, True), ("c6free-bipartite", False, True),
                                       ("gap-family", True, False)):
        q = gsub.add_parser(name)
        if needs_input:
            q.add_argument("--input", required=True, help="source edge-list file")
        if needs_d:
            q.add_argument("--d", type=int, required=True)
        if name == "gap-family":
            q.add_argument("--n", type=int, required=True)
        q.add_argument("--out", required=True, help="output prefix; writes PREFIX.txt and PREFIX.json")
        q.set_defaults(func=cmd_generate)

    a = sub.add_parser("analyze", help="report class memberships")
    a.add_argument("--graph")
    a.add_argument("--intervals")
    a.add_argument("--cd-perfect", action="store_true", help="also enumerate induced subgraphs")
    a.add_argument("--limit", type=int, help="subgraph enumeration limit for --cd-perfect")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="check certificate JSON against a graph")
    v.add_argument("--graph", required=True)
    v.add_argument("--cert", required=True)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
