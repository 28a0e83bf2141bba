import io

import networkx as nx
import pytest
from hypothesis import given, settings

from catalog.catalog_file import dump_jsonl, iter_graph6_lines, read_catalog, write_catalog
from catalog.generator import EnumerationSpec, all_graphs
from catalog.graph6 import emit_graph6, parse_graph6, strip_graph6_header
from cores.graph_core import Graph
from graph_helpers import graphs, to_networkx
from utils.errors import Graph6ParseError, InputError, UnsupportedSizeError


def test_known_encodings(graph_cases):
    for case in graph_cases["graph6"]:
        g = parse_graph6(case["graph6"])
        assert g.n == case["n"], case["id"]
        assert g.edges() == sorted(tuple(e) for e in case["edges"]), case["id"]
        assert emit_graph6(Graph.from_edges(case["n"], case["edges"])) == case["graph6"]


def test_invalid_encodings_report_offset(graph_cases):
    for case in graph_cases["invalid_graph6"]:
        with pytest.raises(Graph6ParseError) as info:
            parse_graph6(case["text"])
        assert info.value.offset == case["offset"], case["text"]


def test_header_is_optional():
    assert strip_graph6_header(">>graph6<<Bw\n") == "Bw"
    assert parse_graph6(">>graph6<<Bw") == parse_graph6("Bw")


def test_emit_rejects_large_graphs():
    with pytest.raises(UnsupportedSizeError):
        emit_graph6(Graph.empty(63))


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=12))
def test_bytes_match_networkx(g):
    expected = nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
    assert emit_graph6(g) == expected
    assert parse_graph6(expected) == g


def test_catalog_lines_skip_comments_and_blanks():
    lines = ["# comment\n", "\n", "Bw\n", "  \n", "A_\r\n"]
    assert [g.m for g in iter_graph6_lines(lines)] == [3, 1]


def test_catalog_error_carries_line_number():
    with pytest.raises(Graph6ParseError) as info:
        list(iter_graph6_lines(["Bw", "# ok", "Bx"]))
    assert info.value.line == 3
    assert info.value.offset == 1


def test_catalog_round_trip(tmp_path):
    path = tmp_path / "small.g6"
    graphs_in = [parse_graph6("Bw"), parse_graph6("Ch"), parse_graph6("@")]
    assert write_catalog(path, graphs_in, comment="three graphs") == 3
    assert list(read_catalog(path)) == graphs_in


def test_missing_catalog_is_input_error(tmp_path):
    with pytest.raises(InputError):
        list(read_catalog(tmp_path / "absent.g6"))


def test_dump_jsonl_writes_one_record_per_line():
    stream = io.StringIO()
    assert dump_jsonl([{"a": 1}, {"b": 2}], stream) == 2
    assert stream.getvalue() == '{"a": 1}\n{"b": 2}\n'


def test_offsets_count_from_start_of_raw_text():
    with pytest.raises(Graph6ParseError) as info:
        parse_graph6(">>graph6<<Bx")
    assert info.value.offset == len(">>graph6<<") + 1
    with pytest.raises(Graph6ParseError) as info:
        parse_graph6("  >>graph6<< B x")
    assert info.value.offset == 14


def _flipped_paddings(graph6: str):
    n = ord(graph6[0]) - 63
    pad = (6 - n * (n - 1) // 2 % 6) % 6
    last = ord(graph6[-1])
    for bit in range(pad):
        yield graph6[:-1] + chr(last ^ (1 << bit))


def _assert_padding_rejected(n):
    for g in all_graphs(EnumerationSpec(n=n)):
        graph6 = emit_graph6(g)
        for bad in _flipped_paddings(graph6):
            with pytest.raises(Graph6ParseError) as info:
                parse_graph6(bad)
            assert info.value.offset == len(graph6) - 1, bad


@pytest.mark.parametrize("n", [2, 3, 5])
def test_nonzero_padding_is_rejected(n):
    _assert_padding_rejected(n)


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7])
def test_nonzero_padding_is_rejected_on_larger_graphs(n):
    _assert_padding_rejected(n)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(0, 8))
def test_round_trip_on_all_graphs(n):
    for g in all_graphs(EnumerationSpec(n=n)):
        graph6 = emit_graph6(g)
        assert parse_graph6(graph6) == g
        assert emit_graph6(parse_graph6(graph6)) == graph6
