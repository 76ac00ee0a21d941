from __future__ import annotations

import json

import pytest

from eqcolor import (
    Coloring,
    Graph,
    KdPartition,
    ListAssignment,
    ParseError,
    gen_example2,
)
from eqcolor.fileio import (
    GraphDocument,
    coloring_to_obj,
    dump,
    graph_to_obj,
    lists_to_obj,
    parse_coloring,
    parse_graph_document,
    parse_lists,
    parse_partition,
    partition_to_obj,
)


class TestJsonGraphDocuments:
    def test_minimal_roundtrip(self):
        g = Graph(4, [(0, 1), (2, 3), (1, 2)])
        text = dump(graph_to_obj(GraphDocument(g)))
        doc = parse_graph_document(text)
        assert doc.graph == g
        assert doc.names is None
        assert doc.partition is None

    def test_full_document_roundtrip(self):
        bundle = gen_example2()
        original = GraphDocument(
            bundle.graph,
            names=bundle.names,
            partition=bundle.partition,
            lists=bundle.lists,
        )
        doc = parse_graph_document(dump(graph_to_obj(original)))
        assert doc.graph == bundle.graph
        assert doc.names == bundle.names
        assert doc.partition == bundle.partition
        assert doc.lists == bundle.lists

    def test_missing_keys(self):
        with pytest.raises(ParseError):
            parse_graph_document('{"n": 3}')
        with pytest.raises(ParseError):
            parse_graph_document('{"edges": []}')

    def test_malformed_edges(self):
        with pytest.raises(ParseError):
            parse_graph_document('{"n": 2, "edges": [[0]]}')
        with pytest.raises(ParseError):
            parse_graph_document('{"n": 2, "edges": [[0, 1, 2]]}')
        with pytest.raises(ParseError):
            parse_graph_document('{"n": 2, "edges": 7}')

    def test_graph_level_errors_become_parse_errors(self):
        with pytest.raises(ParseError):
            parse_graph_document('{"n": 2, "edges": [[0, 5]]}')
        with pytest.raises(ParseError):
            parse_graph_document('{"n": 2, "edges": [[1, 1]]}')

    def test_booleans_are_not_integers(self):
        with pytest.raises(ParseError):
            parse_graph_document('{"n": true, "edges": []}')
        with pytest.raises(ParseError):
            parse_graph_document('{"n": 2, "edges": [[0, false]]}')

    def test_names_validation(self):
        with pytest.raises(ParseError):
            parse_graph_document('{"n": 1, "edges": [], "names": [1]}')
        with pytest.raises(ParseError):
            parse_graph_document('{"n": 1, "edges": [], "names": {"a": 5}}')

    def test_invalid_json_reports_kind(self):
        with pytest.raises(ParseError) as exc:
            parse_graph_document("{not json")
        assert exc.value.context.get("kind") == "graph document"

    def test_top_level_must_be_object(self):
        with pytest.raises(ParseError):
            parse_graph_document("[1, 2]")

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse_graph_document("   \n ")


class TestDimacs:
    def test_basic_parse(self):
        text = "c a triangle plus one isolated vertex\np edge 4 3\ne 1 2\ne 2 3\ne 1 3\n"
        doc = parse_graph_document(text)
        assert doc.graph.n == 4
        assert doc.graph.edge_count() == 3
        assert doc.graph.adjacent(0, 1)
        assert doc.names is None

    def test_duplicate_edges_collapse_despite_header(self):
        text = "p edge 2 3\ne 1 2\ne 2 1\ne 1 2\n"
        assert parse_graph_document(text).graph.edge_count() == 1

    def test_edge_before_problem_line(self):
        with pytest.raises(ParseError):
            parse_graph_document("e 1 2\np edge 2 1\n")

    def test_repeated_problem_line(self):
        with pytest.raises(ParseError):
            parse_graph_document("p edge 2 0\np edge 2 0\n")

    def test_out_of_range_endpoint_reports_line(self):
        with pytest.raises(ParseError) as exc:
            parse_graph_document("p edge 2 1\nc filler\ne 1 5\n")
        assert exc.value.context.get("line") == 3

    def test_malformed_lines(self):
        with pytest.raises(ParseError):
            parse_graph_document("p edge two 1\ne 1 2\n")
        with pytest.raises(ParseError):
            parse_graph_document("p edge 2 1\ne 1\n")
        with pytest.raises(ParseError):
            parse_graph_document("p edge 2 1\nq 1 2\n")
        with pytest.raises(ParseError):
            parse_graph_document("c only comments\n")

    def test_self_loop_rejected(self):
        with pytest.raises(ParseError):
            parse_graph_document("p edge 2 1\ne 1 1\n")


class TestPartitionDocuments:
    def test_standalone_roundtrip(self):
        p = KdPartition(2, 1, [[4], [0, 1], [2, 3]])
        assert parse_partition(dump(partition_to_obj(p))) == p

    def test_embedded_in_graph_document(self):
        bundle = gen_example2()
        text = dump(graph_to_obj(GraphDocument(bundle.graph, partition=bundle.partition)))
        assert parse_partition(text) == bundle.partition
        assert parse_graph_document(text).partition == bundle.partition

    def test_embedded_vertices_checked_against_graph(self):
        obj = {"n": 2, "edges": [], "partition": {"k": 1, "d": 1, "layers": [[0], [9]]}}
        with pytest.raises(ParseError) as exc:
            parse_graph_document(dump(obj))
        assert exc.value.context.get("layer") == 2

    def test_missing_keys(self):
        with pytest.raises(ParseError):
            parse_partition('{"k": 1, "d": 1}')
        with pytest.raises(ParseError):
            parse_partition('{"k": 1, "layers": []}')

    def test_layer_shape_errors(self):
        with pytest.raises(ParseError):
            parse_partition('{"k": 1, "d": 1, "layers": [7]}')
        with pytest.raises(ParseError):
            parse_partition('{"k": 1, "d": 1, "layers": [[1.5]]}')

    def test_constructor_errors_become_parse_errors(self):
        with pytest.raises(ParseError):
            parse_partition('{"k": 0, "d": 1, "layers": []}')


class TestListsDocuments:
    def test_standalone_roundtrip(self):
        la = ListAssignment(2, {0: [2, 1], 1: [3, 4]})
        assert parse_lists(dump(lists_to_obj(la))) == la

    def test_embedded_in_graph_document(self):
        bundle = gen_example2()
        text = dump(graph_to_obj(GraphDocument(bundle.graph, lists=bundle.lists)))
        assert parse_lists(text) == bundle.lists
        assert parse_graph_document(text).lists == bundle.lists

    def test_missing_keys(self):
        with pytest.raises(ParseError):
            parse_lists('{"t": 2}')
        with pytest.raises(ParseError):
            parse_lists('{"lists": {}}')

    def test_bad_vertex_keys_and_colours(self):
        with pytest.raises(ParseError):
            parse_lists('{"t": 1, "lists": {"zero": [1]}}')
        with pytest.raises(ParseError):
            parse_lists('{"t": 1, "lists": {"0": [true]}}')
        with pytest.raises(ParseError):
            parse_lists('{"t": 1, "lists": {"0": 5}}')

    def test_uniformity_enforced(self):
        with pytest.raises(ParseError):
            parse_lists('{"t": 2, "lists": {"0": [1]}}')


class TestColoringDocuments:
    def test_roundtrip(self):
        c = Coloring({0: 3, 5: 1, 2: 2})
        parsed = parse_coloring(dump(coloring_to_obj(c)))
        assert parsed.colors == c.colors

    def test_missing_key(self):
        with pytest.raises(ParseError):
            parse_coloring('{"colours": {}}')

    def test_bad_entries(self):
        with pytest.raises(ParseError):
            parse_coloring('{"colors": {"x": 1}}')
        with pytest.raises(ParseError):
            parse_coloring('{"colors": {"0": "red"}}')


def test_dump_is_parseable_json_with_trailing_newline():
    text = dump({"n": 1, "edges": []})
    assert text.endswith("\n")
    assert json.loads(text) == {"n": 1, "edges": []}


def test_serialized_edges_are_sorted():
    g = Graph(4, [(3, 2), (1, 0), (2, 0)])
    obj = graph_to_obj(GraphDocument(g))
    assert obj["edges"] == [[0, 1], [0, 2], [2, 3]]
