"""Command-line surface: per-graph analyses and the exhaustive sweep harness.

Every command emits JSON with sorted keys, so output is byte-deterministic
for a fixed input and flag set.  Verdicts are data: a NOT_GORENSTEIN
classification still exits 0.  Exit codes: 0 success, 1 a cross-check or
sweep found a genuine violation, 2 bad input or usage, 3 an enumeration
bound was exceeded.

Graphs are given as a file path, ``-`` for stdin, or an inline description
where semicolons stand for newlines: ``"3 3; 1 2; 2 3; 1 3"``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .counting import h_vector, hilbert_profile, is_unimodal, is_symmetric
from .errors import BoundExceededError, InvalidInputError
from .gorenstein import (
    GORENSTEIN,
    UNDECIDED,
    classify_gorenstein,
    gorenstein_oracle,
    interior_point_criterion,
    special_simplex_search,
)
from .graphs import clique_sum_decompose, parse_graph_text
from .polytope import (
    barahona_facets,
    codegree,
    codegree_formula,
    compressed_facets,
    cut_vertices,
    hull_facet_oracle,
)
from .sweeps import SUITES, OracleCache, run_suite

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_BOUND = 3


def _load_graph(spec):
    if spec == "-":
        return parse_graph_text(sys.stdin.read())
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            return parse_graph_text(fh.read())
    if ";" in spec or "\n" in spec or " " in spec:
        return parse_graph_text(spec)
    raise InvalidInputError(
        f"graph argument {spec!r} is neither a file, '-', nor an inline description"
    )


def _emit(payload):
    print(json.dumps(payload, indent=2, sort_keys=True))


def _graph_header(g):
    return {"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges]}


def _cmd_classify(args):
    g = _load_graph(args.graph)
    cert = classify_gorenstein(g)
    _emit({"graph": _graph_header(g), **cert.to_json()})
    return EXIT_OK


def _cmd_facets(args):
    g = _load_graph(args.graph)
    if args.oracle:
        system = hull_facet_oracle([v.coords for v in cut_vertices(g)], g.m)
        source = "hull_oracle"
    elif args.compressed:
        system = compressed_facets(g)
        source = "compressed"
    else:
        system = barahona_facets(g)
        source = "cycle"
    _emit(
        {
            "graph": _graph_header(g),
            "source": source,
            "count": len(system.inequalities),
            "facets": system.to_json(),
        }
    )
    return EXIT_OK


def _cmd_vertices(args):
    g = _load_graph(args.graph)
    verts = cut_vertices(g)
    _emit(
        {
            "graph": _graph_header(g),
            "count": len(verts),
            "vertices": [v.to_json() for v in verts],
        }
    )
    return EXIT_OK


def _cmd_hvector(args):
    g = _load_graph(args.graph)
    counts = hilbert_profile(g, r_max=args.max_degree)
    h = h_vector(counts, m=g.m)
    _emit(
        {
            "graph": _graph_header(g),
            "kind": counts.kind,
            "counts": list(counts.values),
            "h": list(h.entries),
            "symmetric": is_symmetric(h),
            "unimodal": is_unimodal(h),
        }
    )
    return EXIT_OK


def _cmd_codegree(args):
    g = _load_graph(args.graph)
    value, witness = codegree(g)
    formula = codegree_formula(g)
    _emit(
        {
            "graph": _graph_header(g),
            "codegree": value,
            "witness": list(witness),
            "formula": formula,
            "formula_agrees": value == formula,
        }
    )
    return EXIT_OK


def _cmd_special_simplex(args):
    g = _load_graph(args.graph)
    if args.search:
        simplex = special_simplex_search(g, d_max=args.d_max)
        payload = {"graph": _graph_header(g), "method": "search"}
    else:
        cert = classify_gorenstein(g)
        simplex = cert.simplex
        payload = {
            "graph": _graph_header(g),
            "method": "construction",
            "verdict": cert.verdict,
        }
    payload["found"] = simplex is not None
    payload["simplex"] = None if simplex is None else simplex.to_json()
    _emit(payload)
    return EXIT_OK


def _cmd_decompose(args):
    g = _load_graph(args.graph)
    tree = clique_sum_decompose(g)
    if tree is None:
        _emit({"graph": _graph_header(g), "decomposable": False})
        return EXIT_OK
    _emit(
        {
            "graph": _graph_header(g),
            "decomposable": True,
            "blocks": [
                {"kind": blk.kind, "vertices": sorted(blk.vertices)}
                for blk in tree.blocks
            ],
            "gluings": [
                {
                    "parent": glue.parent,
                    "child": glue.child,
                    "shared": sorted(glue.shared),
                }
                for glue in tree.gluings
            ],
        }
    )
    return EXIT_OK


def _cmd_verify(args):
    g = _load_graph(args.graph)
    cert = classify_gorenstein(g)
    oracle = gorenstein_oracle(g)
    if oracle.verdict == UNDECIDED:
        raise BoundExceededError(f"counting oracle cannot decide this graph: {oracle.reason}")
    criterion = interior_point_criterion(g, args.r_max)
    mismatches = []
    if cert.verdict != oracle.verdict:
        mismatches.append("classifier_oracle_disagree")
    if cert.verdict == GORENSTEIN and not criterion.ok:
        mismatches.append("interior_criterion_falsified_positive")
    _emit(
        {
            "graph": _graph_header(g),
            "classification": cert.to_json(),
            "oracle": oracle.to_json(),
            "interior_criterion": criterion.to_json(),
            "agree": not mismatches,
            "mismatches": mismatches,
        }
    )
    return EXIT_VIOLATION if mismatches else EXIT_OK


def _cmd_sweep(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    cache = OracleCache()
    reports = []
    failed = False
    for name in names:
        report = run_suite(name, max_n=args.max_n, max_m=args.max_m, cache=cache)
        reports.append(report.to_json())
        if not report.ok:
            failed = True
            break
    _emit({"suites": reports, "ok": not failed})
    return EXIT_VIOLATION if failed else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cutgor",
        description=(
            "Classify which graphs have Gorenstein cut polytopes, construct "
            "certifying special simplices, and cross-validate against "
            "brute-force polyhedral oracles."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_arg(p):
        p.add_argument("graph", help="graph file, '-' for stdin, or inline 'n m; u v; ...'")

    p = sub.add_parser("classify", help="Gorenstein classification with certificate")
    graph_arg(p)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("facets", help="facet system of the cut polytope")
    graph_arg(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument(
        "--compressed",
        action="store_true",
        help="use the short description (triangles and 4-cycles)",
    )
    group.add_argument(
        "--oracle",
        action="store_true",
        help="brute-force convex hull of the vertices (m <= 7)",
    )
    p.set_defaults(fn=_cmd_facets)

    p = sub.add_parser("vertices", help="all cut vectors (polytope vertices)")
    graph_arg(p)
    p.set_defaults(fn=_cmd_vertices)

    p = sub.add_parser("hvector", help="Hilbert counts and the h-vector")
    graph_arg(p)
    p.add_argument(
        "--max-degree",
        type=int,
        default=None,
        metavar="R",
        help="count up to degree R (default m+2)",
    )
    p.set_defaults(fn=_cmd_hvector)

    p = sub.add_parser("codegree", help="codegree with witness, against the closed form")
    graph_arg(p)
    p.set_defaults(fn=_cmd_codegree)

    p = sub.add_parser("special-simplex", help="certifying simplex, constructed or searched")
    graph_arg(p)
    p.add_argument(
        "--search",
        action="store_true",
        help="exhaustive search over vertex subsets instead of the construction",
    )
    p.add_argument("--d-max", type=int, default=4, help="largest simplex dimension searched")
    p.set_defaults(fn=_cmd_special_simplex)

    p = sub.add_parser("decompose", help="clique-sum decomposition into K3/K4 blocks")
    graph_arg(p)
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("verify", help="cross-check classifier, oracle, and interior criterion")
    graph_arg(p)
    p.add_argument(
        "--r-max",
        type=int,
        default=2,
        metavar="R",
        help="depth of the interior-point criterion (default 2)",
    )
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("sweep", help="exhaustive invariant suites over small labeled graphs")
    p.add_argument(
        "--suite",
        choices=["all", *SUITES],
        default="all",
        help="which suite to run (default all, counting suites at n<=5, combinatorial at n<=7)",
    )
    p.add_argument("--max-n", type=int, default=None, help="override the vertex bound")
    p.add_argument("--max-m", type=int, default=None, help="override the edge bound where applicable")
    p.set_defaults(fn=_cmd_sweep)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.fn(args)
    except BoundExceededError as exc:
        print(json.dumps({"error": str(exc), "exit": EXIT_BOUND}, sort_keys=True), file=sys.stderr)
        return EXIT_BOUND
    except InvalidInputError as exc:
        print(json.dumps({"error": str(exc), "exit": EXIT_INPUT}, sort_keys=True), file=sys.stderr)
        return EXIT_INPUT
    return code


if __name__ == "__main__":
    sys.exit(main())
