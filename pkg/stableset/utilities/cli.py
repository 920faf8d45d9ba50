#!/usr/bin/env python
"""
Batch front end for graph polynomials, tree constructions, stability checks,
root bounds and corpus suites.

Exit codes: 0 when the checked statement holds (or a probe corroborates it),
1 when it is refuted or a suite finds a violation, 2 on any error.
"""

import argparse
import os
import sys
import warnings

import pandas as pd

from stableset.base.config import load_config
from stableset.base.errors import GraphFormatError
from stableset.base.graph import (
    find_claw,
    find_simplicial_clique,
    is_connected,
    is_simplicial_graph,
)
from stableset.base.graph_io import (
    dumps_json,
    load_graph,
    parse_hyperedge_list,
)
from stableset.base.named import SCHLAFLI_PARAMETERS, srg_parameters
from stableset.base.terminal_user import quiet_progress_update, terminal_progress_update
from stableset.bounds.checks import bound_report, check_schlafli_counterexample
from stableset.poly.graph_polys import (
    edge_matching_poly,
    hypergraph_independence_poly,
    independence_poly,
    vertex_matching_poly,
)
from stableset.poly.labeling import Labeling, relative_poly
from stableset.stability.decide import (
    decide_real_stable_independence,
    find_induced_p3,
)
from stableset.stability.probes import (
    claw_witness_restriction,
    hypergraph_witness_restriction,
    same_phase_probe,
    strongly_rayleigh_probe,
)
from stableset.trees.construct import (
    induced_path_tree,
    induced_path_tree_at_clique,
    path_tree,
    simplicial_clique_tree,
)

from .corpus import MAX_N
from .suites import SUITES, run_suites

EXIT_HOLDS = 0
EXIT_REFUTED = 1
EXIT_ERROR = 2

POLY_KINDS = {
    "independence": independence_poly,
    "vertex-matching": vertex_matching_poly,
    "edge-matching": edge_matching_poly,
}

CHECK_KINDS = ("claw-free", "simplicial", "same-phase", "real-stable", "hypergraph-same-phase")


def make_parser():

    # -----------------------[Setup ArgumentParser object]-----------------------

    parser = argparse.ArgumentParser(
        prog="stableset",
        description="Exact independence polynomial, tree and root bound computations on small graphs",
    )
    parser.add_argument("--config", default=None, metavar="FILE",
                        help="Config file to read defaults from instead of the per-user one")
    parser.add_argument("--cap-nodes", type=int, default=None, dest="node_cap", metavar="N",
                        help="Node cap for tree constructions. Overrides STABLESET_CAP_NODES and the config")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    # ---------------------------------[poly]---------------------------------

    p = sub.add_parser("poly", help="Print a graph polynomial")
    p.add_argument("--graph", required=True,
                   help="Edge list, graph6 file or @name of a built-in graph")
    p.add_argument("--which", choices=tuple(POLY_KINDS), default="independence",
                   help="Polynomial to compute")
    p.add_argument("--relative-to", default=None, dest="relative_to", metavar="FILE",
                   help="Labeling file: the target vertex of every vertex, whitespace separated")
    p.add_argument("--diagonal", action="store_true",
                   help="Print the restriction with every variable equal to z")
    p.add_argument("--format", choices=("text", "json"), default="text")

    # ---------------------------------[tree]---------------------------------

    p = sub.add_parser("tree", help="Build a path tree, induced path tree or clique tree")
    p.add_argument("--graph", required=True)
    p.add_argument("--kind", choices=("path", "induced", "clique"), default="path")
    p.add_argument("--root", default=None, help="Root vertex, as id or name")
    p.add_argument("--clique", default=None,
                   help="Root clique as a comma separated list of ids or names")
    p.add_argument("--dot", action="store_true", help="Write DOT instead of JSON")

    # ---------------------------------[check]---------------------------------

    p = sub.add_parser("check", help="Decide or probe a structural or stability property")
    p.add_argument("--graph", default=None)
    p.add_argument("--hypergraph", default=None, metavar="FILE",
                   help="Hyperedge list, one edge of space separated ids per line")
    p.add_argument("--what", choices=CHECK_KINDS, required=True)
    p.add_argument("--samples", type=int, default=None, help="Rays or points per probe")
    p.add_argument("--seed", type=int, default=None)

    # --------------------------------[bounds]--------------------------------

    p = sub.add_parser("bounds", help="Report λ₁ and every applicable bound")
    p.add_argument("--graph", required=True)

    # --------------------------------[verify]--------------------------------

    p = sub.add_parser("verify", help="Run a theorem suite over all small graphs")
    p.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    p.add_argument("--max-n", type=int, default=6, dest="max_n", metavar="K",
                   help=f"Largest graph order, at most {MAX_N}")
    p.add_argument("--min-n", type=int, default=1, dest="min_n", metavar="K")
    p.add_argument("--graph6", default=None, dest="graph6_file", metavar="FILE",
                   help="Sweep the graphs of this graph6 file instead of enumerating them")
    p.add_argument("--jobs", type=int, default=None, help="Worker processes, 0 for every core")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--matching-max-n", type=int, default=None, dest="matching_max_n", metavar="K",
                   help="Largest order for the matching divisibility check of the divisibility suite")
    p.add_argument("--out", default=None, metavar="FILE",
                   help="JSON report. A CSV summary is written next to it")
    p.add_argument("-q", "--quiet", action="store_true", help="Only print warnings and the summary")

    return parser


def _resolve_vertex(G, token):
    token = token.strip()
    if G.names is not None and token in G.names:
        return G.names.index(token)
    try:
        v = int(token)
    except ValueError:
        raise ValueError(f"unknown vertex '{token}'") from None
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} not in graph with {G.n} vertices")
    return v


def read_labeling(path, target_names=None):
    """Labeling from a file of whitespace separated target vertex ids."""
    with open(path, "r", encoding="utf-8") as f:
        tokens = f.read().split()
    try:
        return Labeling([int(t) for t in tokens], target_names=target_names)
    except ValueError:
        raise GraphFormatError(f"labeling file '{path}' must hold integer vertex ids") from None


def _emit(obj):
    sys.stdout.write(dumps_json(obj))


# --------------------------------[Commands]--------------------------------


def cmd_poly(args, config):
    G = load_graph(args.graph)
    p = POLY_KINDS[args.which](G)
    if args.relative_to:
        p = relative_poly(p, read_labeling(args.relative_to))
    out = p.diagonal() if args.diagonal else p
    if args.format == "json":
        _emit({"graph": args.graph, "which": args.which, "diagonal": args.diagonal, "poly": str(out)})
    else:
        print(out)
    return EXIT_HOLDS


def cmd_tree(args, config):
    G = load_graph(args.graph)
    cap = config["node_cap"]
    if args.kind == "clique" or (args.kind == "induced" and args.clique):
        if not args.clique:
            raise ValueError(f"--kind {args.kind} needs --clique")
        K = [_resolve_vertex(G, t) for t in args.clique.split(",") if t.strip()]
        if args.kind == "clique":
            T = simplicial_clique_tree(G, K, cap=cap)
        else:
            T = induced_path_tree_at_clique(G, K, cap=cap)
    else:
        if args.root is None:
            raise ValueError(f"--kind {args.kind} needs --root")
        v = _resolve_vertex(G, args.root)
        build = path_tree if args.kind == "path" else induced_path_tree
        T = build(G, v, cap=cap)

    if args.dot:
        sys.stdout.write(T.to_dot())
    else:
        _emit(dict(T.to_json(), kind=args.kind, size=T.size))
    return EXIT_HOLDS


def _check_graph(args, config):
    G = load_graph(args.graph)
    samples = args.samples if args.samples is not None else config["samples"]
    points = args.samples if args.samples is not None else config["points"]
    seed = args.seed if args.seed is not None else config["seed"]

    if args.what == "claw-free":
        claw = find_claw(G)
        out = {"holds": claw is None, "witness": None if claw is None else {"claw": list(claw)}}
    elif args.what == "simplicial":
        holds = is_simplicial_graph(G)
        out = {"holds": holds}
        claw = find_claw(G)
        if holds:
            out["simplicial_clique"] = list(find_simplicial_clique(G))
        elif claw is not None:
            out["witness"] = {"claw": list(claw)}
        else:
            out["witness"] = {"reason": "no simplicial clique"}
    elif args.what == "same-phase":
        found = claw_witness_restriction(G)
        if found is not None:
            claw, restriction = found
            out = {
                "holds": False,
                "decided": False,
                "witness": _restriction_witness(G.vertices, claw, restriction, claw=list(claw)),
            }
        else:
            probe = same_phase_probe(independence_poly(G), samples=samples, seed=seed)
            out = {"holds": True, "decided": True, "probe": probe.to_json()}
            if probe.refuted:
                warnings.warn("same-phase probe disagrees with the claw-free decision", category=RuntimeWarning)
    else:
        p = independence_poly(G)
        points_list = None
        decided = None
        if is_connected(G):
            decided = decide_real_stable_independence(G)
            p3 = find_induced_p3(G)
            if p3 is not None:
                u, v, w = p3
                point = {x: 0 for x in G.vertices}
                point.update({u: -1, v: 1, w: -1})
                points_list = [point]
        probe = strongly_rayleigh_probe(p, points=points_list, samples=points, seed=seed)
        holds = probe.corroborated if decided is None else decided
        out = {"holds": holds, "decided": decided, "probe": probe.to_json()}
        if decided is not None and decided != probe.corroborated:
            warnings.warn("strong Rayleigh probe disagrees with the complete-graph decision", category=RuntimeWarning)

    out = dict(out, check=args.what, graph=args.graph)
    return out


def _restriction_witness(vertices, support, restriction, **extra):
    support = set(support)
    t = {str(v): "1" if v in support else "0" for v in vertices}
    return dict(extra, t=t, restriction=str(restriction))


def _check_hypergraph(args, config):
    if not args.hypergraph:
        raise ValueError("--what hypergraph-same-phase needs --hypergraph")
    with open(args.hypergraph, "r", encoding="utf-8") as f:
        H = parse_hyperedge_list(f.read())
    samples = args.samples if args.samples is not None else config["samples"]
    seed = args.seed if args.seed is not None else config["seed"]
    out = {"check": args.what, "hypergraph": args.hypergraph}

    found = hypergraph_witness_restriction(H)
    if found is not None:
        R, support, restriction = found
        kind = "edge" if tuple(support) in R.edges else "claw"
        witness = _restriction_witness(
            range(R.n), support, restriction, reduced_edges=[list(e) for e in R.edges]
        )
        witness[kind] = list(support)
        out.update(holds=False, decided=False, witness=witness)
        return out

    probe = same_phase_probe(hypergraph_independence_poly(H), samples=samples, seed=seed)
    out.update(holds=True, decided=True, probe=probe.to_json())
    if probe.refuted:
        warnings.warn("same-phase probe disagrees with the hypergraph reduction", category=RuntimeWarning)
    return out


def cmd_check(args, config):
    if args.what == "hypergraph-same-phase":
        out = _check_hypergraph(args, config)
    else:
        if not args.graph:
            raise ValueError(f"--what {args.what} needs --graph")
        out = _check_graph(args, config)
    _emit(out)
    return EXIT_HOLDS if out["holds"] else EXIT_REFUTED


def cmd_bounds(args, config):
    G = load_graph(args.graph)
    report = bound_report(G, graph_id=args.graph)
    out = report.to_json()
    if srg_parameters(G) == SCHLAFLI_PARAMETERS:
        out["counterexample"] = check_schlafli_counterexample().to_json()
    _emit(out)
    return EXIT_REFUTED if report.violations else EXIT_HOLDS


def cmd_verify(args, config):
    if args.max_n > MAX_N:
        raise ValueError(f"--max-n {args.max_n} is above the supported {MAX_N}")

    outdir = os.path.dirname(os.path.abspath(args.out)) if args.out else os.getcwd()
    settings = {
        "max_n": args.max_n,
        "min_n": args.min_n,
        "graph6_file": args.graph6_file,
        "seed": args.seed if args.seed is not None else config["seed"],
        "samples": args.samples if args.samples is not None else config["samples"],
        "points": config["points"],
        "jobs": args.jobs if args.jobs is not None else config["jobs"],
        "node_cap": config["node_cap"],
        "outdir": outdir,
        "progress_update": quiet_progress_update if args.quiet else terminal_progress_update,
    }
    if args.matching_max_n is not None:
        settings["matching_max_n"] = args.matching_max_n
    reports = run_suites([args.suite], **settings)

    out = {"suites": [r.to_json() for r in reports], "ok": all(r.ok for r in reports)}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(dumps_json(out))
        frames = [r.to_frame() for r in reports]
        csv_path = os.path.splitext(args.out)[0] + ".csv"
        pd.concat(frames, ignore_index=True).to_csv(csv_path, index=False)
    else:
        _emit(out)

    for r in reports:
        print(r.summary(), file=sys.stderr)
        for g in r.offending_graphs():
            print(f"violation in {g['graph6']}:\n{g['edge_list']}", file=sys.stderr, end="")

    return EXIT_HOLDS if out["ok"] else EXIT_REFUTED


COMMANDS = {
    "poly": cmd_poly,
    "tree": cmd_tree,
    "check": cmd_check,
    "bounds": cmd_bounds,
    "verify": cmd_verify,
}


def main(argv=None):

    #-----------------------------[Parse arguments]-----------------------------

    parser = make_parser()
    args = parser.parse_args(argv)

    try:
        config = load_config(args.config)
        if args.node_cap is not None:
            config["node_cap"] = args.node_cap
        return COMMANDS[args.command](args, config)
    except (ValueError, RuntimeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


#main function
if __name__ == "__main__":
    sys.exit(main())
