"""Command-line interface: ``levgraph <subcommand> --k1 K1 --k2 K2 --a A``.

Exit codes: 0 success, 1 failed check or resource limit, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import export
from .distance import edit_distance, hamming_distance
from .errors import ResourceLimitError
from .graph import DEFAULT_MAX_VERTICES, build_graph, geodesic_closed_form
from .resolving import build_resolving_set, embed_all, exact_metric_dimension
from .strings import GraphSpec, enumerate_strings, format_string, parse_string
from .symmetry import (
    construct_theorem_group,
    enumerate_automorphisms,
    exact_determining_number,
    in_theorem_regime,
    match_groups,
)
from .verify import FAIL, SUITES, run_suites


class UsageError(Exception):
    pass


def _spec(args) -> GraphSpec:
    try:
        return GraphSpec(args.k1, args.k2, args.a)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _literal(text: str, spec: GraphSpec):
    try:
        w = parse_string(text, spec.a)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if not spec.k1 <= len(w) <= spec.k2:
        raise UsageError(f"{text}: length {len(w)} outside [{spec.k1}, {spec.k2}]")
    return w


def _emit(args, text: str) -> None:
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_gen(args) -> int:
    g = build_graph(_spec(args), args.max_vertices)
    fmt = args.format or "dot"
    if fmt == "dot":
        _emit(args, export.graph_to_dot(g))
    elif fmt == "json":
        _emit(args, export.graph_to_json(g))
    else:
        raise UsageError(f"gen supports --format dot or json, not {fmt}")
    return 0


def cmd_dist(args) -> int:
    spec = _spec(args)
    u, v = _literal(args.u, spec), _literal(args.v, spec)
    g = build_graph(spec, args.max_vertices)
    report = {"edit": edit_distance(u, v)}
    if len(u) == len(v):
        report["hamming"] = hamming_distance(u, v)
    report["geodesic"] = geodesic_closed_form(g, u, v)
    if args.format == "json":
        _emit(args, json.dumps(report) + "\n")
    else:
        _emit(args, "".join(f"{k}={val}\n" for k, val in report.items()))
    return 0


def cmd_resolve(args) -> int:
    spec = _spec(args)
    R = build_resolving_set(spec)
    if args.format == "json":
        _emit(args, json.dumps({
            "format_version": export.FORMAT_VERSION,
            "spec": spec.as_dict(),
            "resolving_set": R.literals(),
            "provenance": [list(t) for t in R.provenance],
        }) + "\n")
    else:
        _emit(args, export.resolving_set_to_text(R))
    return 0


def cmd_embed(args) -> int:
    spec = _spec(args)
    if args.all:
        if spec.vertex_count > args.max_vertices:
            raise ResourceLimitError("vertex count", spec.vertex_count, args.max_vertices)
        strings = list(enumerate_strings(spec))
    elif args.strings:
        strings = [_literal(t, spec) for t in args.strings]
    else:
        raise UsageError("embed needs string literals or --all")
    R = build_resolving_set(spec)
    vectors = embed_all(spec, R, strings)
    if args.format == "csv":
        _emit(args, export.embeddings_to_csv(spec, R, strings, vectors))
    else:
        _emit(args, export.embeddings_to_json(spec, R, strings, vectors))
    return 0


def cmd_verify(args) -> int:
    spec = _spec(args)
    suites = SUITES if args.suite == "all" else (args.suite,)
    checks = run_suites(spec, suites, max_vertices=args.max_vertices)
    _emit(args, "".join(c.line() + "\n" for c in checks))
    return 1 if any(c.status == FAIL for c in checks) else 0


def cmd_auto(args) -> int:
    spec = _spec(args)
    g = build_graph(spec, args.max_vertices)
    autos = enumerate_automorphisms(g)
    structural = []
    if in_theorem_regime(spec) and match_groups(g):
        structural = construct_theorem_group(spec.a)
    if args.format == "json":
        _emit(args, export.automorphisms_to_json(spec, autos, structural))
    else:
        lines = [f"automorphisms={len(autos)}"]
        lines += [f"{'rho*' if phi.reversed else ''}xi={list(phi.xi)}" for phi in structural]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _witness(ws, a: int) -> str:
    return " ".join(format_string(w, a) for w in ws)


def cmd_dim(args) -> int:
    spec = _spec(args)
    res = exact_metric_dimension(build_graph(spec, args.max_vertices), args.max_size)
    _emit(args, f"beta={res.beta}\nwitness={_witness(res.witness, spec.a)}\n")
    return 0


def cmd_det(args) -> int:
    spec = _spec(args)
    res = exact_determining_number(build_graph(spec, args.max_vertices))
    _emit(args, f"det={res.det}\nwitness={_witness(res.witness, spec.a)}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--a", type=int, required=True, help="alphabet size (>= 2)")
    common.add_argument("--k1", type=int, required=True, help="minimum string length")
    common.add_argument("--k2", type=int, required=True, help="maximum string length")
    common.add_argument("--format", choices=["dot", "json", "csv", "text"])
    common.add_argument("--out", help="output path (default: standard output)")
    common.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    common.add_argument("--threads", type=int, default=os.cpu_count(),
                        help="accepted for compatibility; computations run on one thread")

    parser = argparse.ArgumentParser(prog="levgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="export the graph as DOT or JSON")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("dist", parents=[common], help="edit, Hamming and graph distance")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("resolve", parents=[common], help="print the constructed resolving set")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("embed", parents=[common], help="distance vectors to the resolving set")
    p.add_argument("strings", nargs="*")
    p.add_argument("--all", action="store_true", help="embed every vertex")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("verify", parents=[common], help="run oracle cross-checks")
    p.add_argument("suite", nargs="?", default="all", choices=list(SUITES) + ["all"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("auto", parents=[common], help="enumerate automorphisms")
    p.set_defaults(func=cmd_auto)

    p = sub.add_parser("dim", parents=[common], help="exact metric dimension (tiny graphs)")
    p.add_argument("--max-size", type=int, default=None)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("det", parents=[common], help="exact determining number (tiny graphs)")
    p.set_defaults(func=cmd_det)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        parser.error(str(e))  # exits with status 2
    except ResourceLimitError as e:
        print(f"levgraph: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
