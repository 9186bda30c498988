"""graph6 interchange, cross-checked against networkx as an independent codec."""

from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs
from coalition_kit.graphs import (
    Graph,
    Graph6Error,
    complete,
    empty_graph,
    emit_graph6,
    parse_graph6,
    path,
    read_graph6_file,
)


def nx_emit(g: Graph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def nx_parse(s: str) -> Graph:
    h = nx.from_graph6_bytes(s.encode())
    return Graph.from_edges(h.number_of_nodes(), list(h.edges()))


def test_hand_encoded_examples():
    assert parse_graph6("C~") == complete(4)
    assert parse_graph6("C?") == empty_graph(4)
    assert parse_graph6("@") == complete(1)
    assert parse_graph6("A?") == empty_graph(2)
    # cross-check the same four against the independent codec
    assert nx_emit(complete(4)) == "C~"
    assert nx_emit(empty_graph(4)) == "C?"
    assert nx_emit(complete(1)) == "@"
    assert nx_emit(empty_graph(2)) == "A?"


def test_emit_examples():
    assert emit_graph6(complete(1)) == "@"
    assert emit_graph6(empty_graph(2)) == "A?"
    assert emit_graph6(path(4)) == nx_emit(path(4))


def test_header_is_stripped():
    assert parse_graph6(">>graph6<<C~") == complete(4)


@settings(max_examples=300)
@given(graphs(max_n=32))
def test_round_trip(g):
    assert parse_graph6(emit_graph6(g)) == g


@settings(max_examples=150)
@given(graphs(max_n=20))
def test_matches_independent_codec(g):
    s = emit_graph6(g)
    assert s == nx_emit(g)
    assert nx_parse(s) == g


@settings(max_examples=150)
@given(graphs(max_n=32))
def test_emit_parse_emit_identity(g):
    s = emit_graph6(g)
    assert emit_graph6(parse_graph6(s)) == s


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "empty"),
        ("~~?", "order above 32"),
        ("a", "order 34 above"),
        ("C", "too short"),
        ("C~~", "trailing garbage"),
        ("B!", "out of range"),
        (">", "order byte out of range"),
    ],
)
def test_malformed_records_report_distinctly(text, fragment):
    with pytest.raises(Graph6Error) as err:
        parse_graph6(text)
    assert fragment in str(err.value)


def test_nonzero_padding_rejected():
    # K1bar-pair record with stray bits in the padding area
    good = emit_graph6(empty_graph(2))  # "A?"
    bad = good[0] + chr(ord(good[1]) + 1)  # flips a padding bit
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_read_graph6_file(tmp_path):
    p = tmp_path / "graphs.g6"
    p.write_text("C~\n\nC?\n")
    gs = list(read_graph6_file(str(p)))
    assert gs == [complete(4), empty_graph(4)]
    p.write_text("C~\nC\n")
    with pytest.raises(Graph6Error) as err:
        list(read_graph6_file(str(p)))
    assert ":2:" in str(err.value)
