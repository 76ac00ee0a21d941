"""Parsing and serialization for the graph, partition, lists, and
colouring documents the command line exchanges.

The canonical graph form is a JSON object {"n": ..., "edges": [[u, v],
...]} with 0-based vertices, optionally carrying "names", "partition",
and "lists" blocks so a generated document travels as one unit. A
DIMACS-style line format ("p edge N M" header, "e u v" lines, 1-based)
is accepted as input and converts losslessly to the canonical form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .coloring import Coloring, ListAssignment
from .errors import EqcolorError, InputError, ParseError
from .graph import Graph
from .partition import KdPartition


@dataclass
class GraphDocument:
    graph: Graph
    names: dict[str, int] | None = None
    partition: KdPartition | None = None
    lists: ListAssignment | None = None


def _as_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{what} must be an integer, got {value!r}")
    return value


def _load_json(text: str, what: str) -> dict[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {what}: {exc}", context={"kind": what}) from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{what} must be a JSON object, got {type(doc).__name__}")
    return doc


def _graph_from_obj(doc: dict[str, Any]) -> Graph:
    if "n" not in doc or "edges" not in doc:
        raise ParseError("graph document needs 'n' and 'edges'")
    n = _as_int(doc["n"], "vertex count 'n'")
    edges_obj = doc["edges"]
    if not isinstance(edges_obj, list):
        raise ParseError("'edges' must be a list of pairs")
    edges = []
    for item in edges_obj:
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError(f"edge {item!r} is not a pair")
        edges.append((_as_int(item[0], "edge endpoint"), _as_int(item[1], "edge endpoint")))
    try:
        return Graph(n, edges)
    except EqcolorError as exc:
        raise ParseError(f"graph document rejected: {exc}") from exc


def _parse_dimacs(text: str) -> Graph:
    n = None
    declared_m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: repeated problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"line {lineno}: expected 'p edge N M'")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"line {lineno}: non-numeric problem line") from None
        elif parts[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'e u v'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-numeric edge") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(
                    f"line {lineno}: endpoint outside 1..{n}",
                    context={"line": lineno},
                )
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise ParseError("no problem line found")
    try:
        g = Graph(n, edges)
    except EqcolorError as exc:
        raise ParseError(f"edge list rejected: {exc}") from exc
    if declared_m is not None and declared_m != g.edge_count():
        # The header count is advisory; duplicate lines collapse.
        pass
    return g


def parse_graph_document(text: str) -> GraphDocument:
    """Parse canonical JSON or DIMACS-style text into a GraphDocument."""
    if not text.strip():
        raise ParseError("empty graph document")
    if not text.lstrip().startswith("{"):
        return GraphDocument(_parse_dimacs(text))
    doc = _load_json(text, "graph document")
    graph = _graph_from_obj(doc)
    names = None
    if "names" in doc:
        names_obj = doc["names"]
        if not isinstance(names_obj, dict):
            raise ParseError("'names' must be an object")
        names = {}
        for label, vid in names_obj.items():
            v = _as_int(vid, f"name {label!r}")
            if not 0 <= v < graph.n:
                raise ParseError(f"name {label!r} points at missing vertex {v}")
            names[str(label)] = v
    partition = None
    if "partition" in doc:
        partition = _partition_from_obj(doc["partition"], graph.n)
    lists = None
    if "lists" in doc:
        lists = _lists_from_obj(doc["lists"])
    return GraphDocument(graph, names=names, partition=partition, lists=lists)


def _partition_from_obj(obj: Any, n: int | None = None) -> KdPartition:
    if not isinstance(obj, dict):
        raise ParseError("partition must be a JSON object")
    for key in ("k", "d", "layers"):
        if key not in obj:
            raise ParseError(f"partition document needs '{key}'")
    k = _as_int(obj["k"], "'k'")
    d = _as_int(obj["d"], "'d'")
    layers_obj = obj["layers"]
    if not isinstance(layers_obj, list):
        raise ParseError("'layers' must be a list")
    layers = []
    for idx, layer in enumerate(layers_obj, start=1):
        if not isinstance(layer, list):
            raise ParseError(f"layer {idx} is not a list", context={"layer": idx})
        members = []
        for item in layer:
            v = _as_int(item, f"vertex in layer {idx}")
            if n is not None and not 0 <= v < n:
                raise ParseError(
                    f"layer {idx} references missing vertex {v}",
                    context={"layer": idx, "vertex": v},
                )
            members.append(v)
        layers.append(members)
    try:
        return KdPartition(k=k, d=d, layers=layers)
    except EqcolorError as exc:
        raise ParseError(f"partition document rejected: {exc}") from exc


def parse_partition(text: str) -> KdPartition:
    doc = _load_json(text, "partition document")
    if "partition" in doc and "layers" not in doc:
        return _partition_from_obj(doc["partition"])
    return _partition_from_obj(doc)


def _lists_from_obj(obj: Any) -> ListAssignment:
    if not isinstance(obj, dict):
        raise ParseError("lists document must be a JSON object")
    if "t" not in obj or "lists" not in obj:
        raise ParseError("lists document needs 't' and 'lists'")
    t = _as_int(obj["t"], "'t'")
    lists_obj = obj["lists"]
    if not isinstance(lists_obj, dict):
        raise ParseError("'lists' must be an object keyed by vertex")
    lists: dict[int, list[int]] = {}
    for key, value in lists_obj.items():
        try:
            v = int(key)
        except (TypeError, ValueError):
            raise ParseError(f"list key {key!r} is not a vertex id") from None
        if not isinstance(value, list):
            raise ParseError(f"list of vertex {v} is not a list", context={"vertex": v})
        lists[v] = [_as_int(c, f"colour of vertex {v}") for c in value]
    try:
        return ListAssignment(t, lists)
    except EqcolorError as exc:
        raise ParseError(f"lists document rejected: {exc}") from exc


def parse_lists(text: str) -> ListAssignment:
    """Parse a lists document, standalone or embedded in a graph document."""
    doc = _load_json(text, "lists document")
    inner = doc.get("lists")
    if "t" not in doc and isinstance(inner, dict) and "t" in inner and "lists" in inner:
        return _lists_from_obj(inner)
    return _lists_from_obj(doc)


def parse_coloring(text: str) -> Coloring:
    doc = _load_json(text, "colouring document")
    if "colors" not in doc:
        raise ParseError("colouring document needs 'colors'")
    colors_obj = doc["colors"]
    if not isinstance(colors_obj, dict):
        raise ParseError("'colors' must be an object keyed by vertex")
    colors: dict[int, int] = {}
    for key, value in colors_obj.items():
        try:
            v = int(key)
        except (TypeError, ValueError):
            raise ParseError(f"colour key {key!r} is not a vertex id") from None
        colors[v] = _as_int(value, f"colour of vertex {v}")
    return Coloring(colors)


def graph_to_obj(doc: GraphDocument) -> dict[str, Any]:
    edges = sorted(tuple(sorted(e)) for e in doc.graph.edges())
    obj: dict[str, Any] = {"n": doc.graph.n, "edges": [list(e) for e in edges]}
    if doc.names is not None:
        obj["names"] = dict(sorted(doc.names.items(), key=lambda kv: kv[1]))
    if doc.partition is not None:
        obj["partition"] = partition_to_obj(doc.partition)
    if doc.lists is not None:
        obj["lists"] = lists_to_obj(doc.lists)
    return obj


def partition_to_obj(p: KdPartition) -> dict[str, Any]:
    return {"k": p.k, "d": p.d, "layers": [list(layer) for layer in p.layers]}


def lists_to_obj(lists: ListAssignment) -> dict[str, Any]:
    return {"t": lists.t, "lists": {str(v): list(colours) for v, colours in lists.items()}}


def coloring_to_obj(c: Coloring) -> dict[str, Any]:
    return {"colors": {str(v): c.colors[v] for v in sorted(c.colors)}}


def dump(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"
