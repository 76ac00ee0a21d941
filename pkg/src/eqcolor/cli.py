"""Command-line interface.

Subcommands generate graphs, build and verify layer partitions, run the
equitable list colouring, verify colourings, and compute degeneracy.
Documents travel as JSON on files or stdin/stdout ("-"); errors leave as
{"code", "message", "context"} objects with exit code 2 (bad input or
exhausted budget) or 3 (parse failure). Exit 1 means a verifier said no
or a search proved absence.
"""

from __future__ import annotations

import argparse
import sys
from random import Random

from . import fileio
from .coloring import (
    ListAssignment,
    equitable_coloring,
    verify_equitable_list_coloring,
)
from .errors import InputError, InvariantError, ParseError
from .generators import NamedGraph, gen_basic, gen_example2, gen_gq, gen_planted_partition
from .graph import degeneracy
from .grids import GridSpec, make_grid, partition3d
from .partition import SearchStatus, search_kd_partition, verify_kd_partition


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from exc


def _dims(value: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(part) for part in value.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"dims must be comma-separated integers, got {value!r}")
    if not dims:
        raise argparse.ArgumentTypeError("dims must not be empty")
    return dims


def _emit_graph(args: argparse.Namespace, doc: fileio.GraphDocument) -> None:
    _write(args.out, fileio.dump(fileio.graph_to_obj(doc)))
    if getattr(args, "partition_out", None):
        if doc.partition is None:
            raise InputError("this generator bundles no partition")
        _write(args.partition_out, fileio.dump(fileio.partition_to_obj(doc.partition)))
    if getattr(args, "lists_out", None):
        if doc.lists is None:
            raise InputError("this generator bundles no lists")
        _write(args.lists_out, fileio.dump(fileio.lists_to_obj(doc.lists)))


def _cmd_gen(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind == "grid":
        if args.dims is None:
            raise InputError("gen grid requires --dims")
        graph, spec = make_grid(args.dims)
        names = {spec.label_of(v): v for v in range(graph.n)}
        doc = fileio.GraphDocument(graph, names=names)
    elif kind == "gq":
        ng = gen_gq(args.q)
        doc = fileio.GraphDocument(ng.graph, names=ng.names, partition=ng.partition)
    elif kind == "example2":
        ng = gen_example2()
        doc = fileio.GraphDocument(
            ng.graph, names=ng.names, partition=ng.partition, lists=ng.lists
        )
    elif kind == "planted":
        if args.n is None or args.k is None or args.d is None:
            raise InputError("gen planted requires -n, -k, and -d")
        ng = gen_planted_partition(args.n, args.k, args.d, seed=args.seed)
        doc = fileio.GraphDocument(ng.graph, names=ng.names, partition=ng.partition)
    else:
        if args.n is None:
            raise InputError(f"gen {kind} requires -n")
        ng = gen_basic(kind, n=args.n, p=args.p, seed=args.seed)
        doc = fileio.GraphDocument(ng.graph, names=ng.names)
    _emit_graph(args, doc)
    return 0


def _cmd_partition_verify(args: argparse.Namespace) -> int:
    doc = fileio.parse_graph_document(_read(args.graph))
    if args.partition:
        partition = fileio.parse_partition(_read(args.partition))
    elif doc.partition is not None:
        partition = doc.partition
    else:
        raise InputError("no partition given and none embedded in the graph document")
    verdict = verify_kd_partition(doc.graph, partition)
    if verdict.valid:
        _write(args.out, fileio.dump({"valid": True}))
        return 0
    v = verdict.violation
    assert v is not None
    payload = {
        "valid": False,
        "violation": {
            "kind": v.kind,
            "message": v.message,
            "layer": v.layer,
            "position": v.position,
            "vertex": v.vertex,
        },
    }
    _write(args.out, fileio.dump(payload))
    return 1


def _cmd_partition_grid3d(args: argparse.Namespace) -> int:
    partition = partition3d(args.dims)
    _write(args.out, fileio.dump(fileio.partition_to_obj(partition)))
    return 0


def _cmd_partition_search(args: argparse.Namespace) -> int:
    doc = fileio.parse_graph_document(_read(args.graph))
    result = search_kd_partition(doc.graph, args.k, args.d, budget=args.budget)
    if result.status is SearchStatus.FOUND:
        assert result.partition is not None
        _write(args.out, fileio.dump(fileio.partition_to_obj(result.partition)))
        return 0
    if result.status is SearchStatus.PROVED_ABSENT:
        _write(args.out, fileio.dump({"result": "absent", "expanded": result.expanded}))
        return 1
    _write(args.out, fileio.dump({"result": "budget-exhausted", "expanded": result.expanded}))
    return 2


def _cmd_color(args: argparse.Namespace) -> int:
    doc = fileio.parse_graph_document(_read(args.graph))
    if args.partition:
        partition = fileio.parse_partition(_read(args.partition))
    elif doc.partition is not None:
        partition = doc.partition
    else:
        raise InputError("no partition given and none embedded in the graph document")
    rng = Random(args.seed)
    if args.uniform_lists is not None:
        t = args.uniform_lists
        palette = args.palette if args.palette is not None else 2 * t
        lists = ListAssignment.uniform_random(doc.graph.n, t, palette, rng)
    elif args.lists:
        lists = fileio.parse_lists(_read(args.lists))
    elif doc.lists is not None:
        lists = doc.lists
    else:
        raise InputError("no lists given: pass --lists or --uniform-lists")
    if args.lists_out:
        _write(args.lists_out, fileio.dump(fileio.lists_to_obj(lists)))
    seed = rng.randrange(2**32) if args.tie_break == "seeded" else None
    coloring = equitable_coloring(
        doc.graph,
        partition,
        lists,
        tie_break=args.tie_break,
        seed=seed,
        debug=args.debug_asserts,
    )
    _write(args.out, fileio.dump(fileio.coloring_to_obj(coloring)))
    return 0


def _cmd_verify_coloring(args: argparse.Namespace) -> int:
    doc = fileio.parse_graph_document(_read(args.graph))
    if args.lists:
        lists = fileio.parse_lists(_read(args.lists))
    elif doc.lists is not None:
        lists = doc.lists
    else:
        raise InputError("no lists given and none embedded in the graph document")
    coloring = fileio.parse_coloring(_read(args.coloring))
    t = args.t if args.t is not None else lists.t
    if t != lists.t:
        raise InputError(f"-t {t} contradicts the lists' uniform size {lists.t}")
    verdict = verify_equitable_list_coloring(doc.graph, lists, t, coloring, args.d)
    if verdict.valid:
        _write(args.out, fileio.dump({"valid": True}))
        return 0
    v = verdict.violation
    assert v is not None
    payload = {
        "valid": False,
        "violation": {
            "clause": v.clause,
            "message": v.message,
            "vertex": v.vertex,
            "color": v.color,
        },
    }
    _write(args.out, fileio.dump(payload))
    return 1


def _cmd_degeneracy(args: argparse.Namespace) -> int:
    doc = fileio.parse_graph_document(_read(args.graph))
    _write(args.out, fileio.dump(degeneracy(doc.graph)))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqcolor",
        description="Equitable list colouring with degenerate colour classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a graph document")
    gen.add_argument(
        "kind",
        choices=["grid", "gq", "example2", "path", "cycle", "complete", "random", "planted"],
    )
    gen.add_argument("--dims", type=_dims, help="grid dimensions, e.g. 5,3,2")
    gen.add_argument("-q", type=int, default=1, help="clique-chain parameter")
    gen.add_argument("-n", type=int, help="vertex count")
    gen.add_argument("-k", type=int, help="layer size for planted")
    gen.add_argument("-d", type=int, help="degree parameter for planted")
    gen.add_argument("-p", type=float, help="edge probability for random")
    gen.add_argument("--seed", type=int, help="random seed")
    gen.add_argument("--out", default=None, help="output path (default stdout)")
    gen.add_argument("--partition-out", default=None, help="also write the bundled partition")
    gen.add_argument("--lists-out", default=None, help="also write the bundled lists")
    gen.set_defaults(func=_cmd_gen)

    part = sub.add_parser("partition", help="build, search, or verify layer partitions")
    psub = part.add_subparsers(dest="subcommand", required=True)

    pverify = psub.add_parser("verify", help="verify a partition against a graph")
    pverify.add_argument("--graph", required=True)
    pverify.add_argument("--partition", default=None)
    pverify.add_argument("--out", default=None)
    pverify.set_defaults(func=_cmd_partition_verify)

    pgrid = psub.add_parser("grid3d", help="direct (3,2)-partition of a 3-dimensional grid")
    pgrid.add_argument("--dims", type=_dims, required=True)
    pgrid.add_argument("--out", default=None)
    pgrid.set_defaults(func=_cmd_partition_grid3d)

    psearch = psub.add_parser("search", help="exhaustive backtracking search for a partition")
    psearch.add_argument("--graph", required=True)
    psearch.add_argument("-k", type=int, required=True)
    psearch.add_argument("-d", type=int, required=True)
    psearch.add_argument("--budget", type=int, default=None, help="max expanded subsets")
    psearch.add_argument("--out", default=None)
    psearch.set_defaults(func=_cmd_partition_search)

    color = sub.add_parser("color", help="equitable list colouring along a partition")
    color.add_argument("--graph", required=True)
    color.add_argument("--partition", default=None)
    color.add_argument("--lists", default=None)
    color.add_argument("--uniform-lists", type=int, default=None, metavar="T",
                       help="generate random T-uniform lists instead of reading them")
    color.add_argument("--palette", type=int, default=None,
                       help="palette size for --uniform-lists (default 2T)")
    color.add_argument("--tie-break", choices=["smallest", "seeded"], default="smallest")
    color.add_argument("--seed", type=int, default=None)
    color.add_argument("--debug-asserts", action="store_true",
                       help="check internal list-size floors and class degeneracy")
    color.add_argument("--lists-out", default=None, help="write the lists that were used")
    color.add_argument("--out", default=None)
    color.set_defaults(func=_cmd_color)

    vc = sub.add_parser("verify-coloring", help="verify an equitable list colouring")
    vc.add_argument("--graph", required=True)
    vc.add_argument("--lists", default=None)
    vc.add_argument("--coloring", required=True)
    vc.add_argument("-d", type=int, required=True)
    vc.add_argument("-t", type=int, default=None)
    vc.add_argument("--out", default=None)
    vc.set_defaults(func=_cmd_verify_coloring)

    deg = sub.add_parser("degeneracy", help="degeneracy of a graph")
    deg.add_argument("--graph", required=True)
    deg.add_argument("--out", default=None)
    deg.set_defaults(func=_cmd_degeneracy)

    return parser


def _error_payload(code: str, exc: Exception) -> str:
    context = getattr(exc, "context", {}) or {}
    return fileio.dump({"code": code, "message": str(exc), "context": context})


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stdout.write(_error_payload("parse-error", exc))
        return 3
    except InputError as exc:
        sys.stdout.write(_error_payload("input-error", exc))
        return 2
    except InvariantError as exc:
        sys.stdout.write(_error_payload("invariant-error", exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
