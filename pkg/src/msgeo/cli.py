"""Command-line front end: one subcommand per operation, one JSON document per run.

Exit codes: 0 on success (JSON on stdout), 1 on a domain error
({"error": code, "detail": ...} on stderr), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import combinatorics as comb
from . import errors, io
from .gromov_hausdorff import gh_exact, gh_to_simplex, interpolate
from .hausdorff import SubsetPair, count_s_position_sets, cs_set, hausdorff
from .metric_core import diameter
from .trees import (
    mst,
    mst_spectrum,
    mst_spectrum_by_gh,
    mst_spectrum_by_partitions,
    smt_by_networks,
    smt_by_supersets,
)


def _indices(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _cmd_validate(a):
    space = io.load_space(a.file)
    return {"valid": True, "n": space.n, "labels": list(space.labels), "diameter": diameter(space)}


def _cmd_hausdorff(a):
    pair = SubsetPair(io.load_space(a.space), a.a, a.b)
    return {"value": hausdorff(pair)}


def _cmd_count_sposition(a):
    pair = SubsetPair(io.load_space(a.space), a.a, a.b)
    cand = a.candidates if a.candidates is not None else cs_set(pair, a.s)
    return {"count": count_s_position_sets(pair, cand, a.s), "candidates": list(cand)}


def _pairs(corr):
    return [list(p) for p in corr.sorted_pairs()]


def _cmd_gh(a):
    res = gh_exact(io.load_space(a.x), io.load_space(a.y))
    out = {"distance": res.distance}
    if a.witness:
        out["witness"] = _pairs(res.witness)
    return out


def _cmd_gh_simplex(a):
    return {"distance": gh_to_simplex(io.load_space(a.x), a.m, a.lam)}


def _cmd_interpolate(a):
    X, Y = io.load_space(a.x), io.load_space(a.y)
    corr = io.load_correspondence(a.corr, X.n, Y.n) if a.corr else gh_exact(X, Y).witness
    return interpolate(X, Y, corr, a.t).to_json()


def _cmd_mst(a):
    tree = mst(io.load_space(a.space))
    return {"length": tree.length, "edges": [list(e) for e in tree.edges]}


def _cmd_mst_spectrum(a):
    space = io.load_space(a.space)
    if a.method == "edges":
        return {"spectrum": list(mst_spectrum(space))}
    if a.method == "partitions":
        return {"spectrum": list(mst_spectrum_by_partitions(space))}
    spectrum, length = mst_spectrum_by_gh(space, a.lam)
    return {"spectrum": list(spectrum), "length": length}


def _cmd_steiner(a):
    space = io.load_space(a.space)
    if a.method == "supersets":
        length, V = smt_by_supersets(space, a.m)
        return {"length": length, "vertices": list(V)}
    length, (topo, place) = smt_by_networks(space, a.m)
    return {"length": length,
            "topology": [list(e) for e in topo.edges] if topo is not None else [],
            "placement": list(place)}


def _cmd_borsuk(a):
    space = io.load_space(a.space)
    return {"partitionable": comb.borsuk_by_gh(space, a.m, a.lam),
            "brute_force": comb.borsuk_partitionable(space, a.m)}


def _cmd_clique_cover(a):
    return {"theta": comb.clique_cover_number(io.load_graph(a.graph), a.a, a.b)}


def _cmd_chromatic(a):
    return {"gamma": comb.chromatic_number(io.load_graph(a.graph), a.a, a.b)}


def _cmd_edge_covers(a):
    return {"count": comb.count_edge_covers(io.load_bipartite(a.bipartite))}


def _cmd_realize_config(a):
    return comb.realize_configuration(io.load_bipartite(a.bipartite)).to_json()


def _cmd_selftest(a):
    from .selftest import selftest
    return selftest(a.scale, a.seed, a.jobs)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="msgeo", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=fn)
        return p

    p = add("validate", _cmd_validate, "check a space file")
    p.add_argument("file")

    for name, fn, help in (("hausdorff", _cmd_hausdorff, "Hausdorff distance of two subsets"),
                           ("count-sposition", _cmd_count_sposition, "count sets in s-position")):
        p = add(name, fn, help)
        p.add_argument("--space", required=True)
        p.add_argument("--a", type=_indices, required=True)
        p.add_argument("--b", type=_indices, required=True)
        if name == "count-sposition":
            p.add_argument("--s", type=float, required=True)
            p.add_argument("--candidates", type=_indices)

    p = add("gh", _cmd_gh, "exact Gromov-Hausdorff distance")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--witness", action="store_true")

    p = add("gh-simplex", _cmd_gh_simplex, "GH distance to a simplex")
    p.add_argument("--x", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)

    p = add("interpolate", _cmd_interpolate, "point R_t on a GH geodesic")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--corr")

    p = add("mst", _cmd_mst, "minimum spanning tree")
    p.add_argument("--space", required=True)

    p = add("mst-spectrum", _cmd_mst_spectrum, "mst-spectrum by one of three routes")
    p.add_argument("--space", required=True)
    p.add_argument("--method", choices=("edges", "partitions", "gh"), default="edges")
    p.add_argument("--lambda", dest="lam", type=float)

    p = add("steiner", _cmd_steiner, "Steiner minimal tree length")
    p.add_argument("--space", required=True)
    p.add_argument("--m", type=_indices, required=True)
    p.add_argument("--method", choices=("supersets", "networks"), default="supersets")

    p = add("borsuk", _cmd_borsuk, "generalised Borsuk decision")
    p.add_argument("--space", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float)

    for name, fn, help in (("clique-cover", _cmd_clique_cover, "clique cover number"),
                           ("chromatic", _cmd_chromatic, "chromatic number")):
        p = add(name, fn, help)
        p.add_argument("--graph", required=True)
        p.add_argument("--a", type=float, default=1.0)
        p.add_argument("--b", type=float, default=2.0)

    p = add("edge-covers", _cmd_edge_covers, "count edge covers of a bipartite graph")
    p.add_argument("--bipartite", required=True)

    p = add("realize-config", _cmd_realize_config, "Euclidean configuration for a bipartite graph")
    p.add_argument("--bipartite", required=True)

    p = add("selftest", _cmd_selftest, "oracle-equivalence suites")
    p.add_argument("--scale", choices=("quick", "full"), default="quick")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse: 0 for --help, 2 for usage errors
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except errors.MetricGeometryError as exc:
        detail = {"message": str(exc), **exc.detail}
        print(io.dumps({"error": exc.code, "detail": detail}), file=stderr)
        return 1
    print(io.dumps(result), file=stdout)
    if args.command == "selftest" and not result["passed"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
