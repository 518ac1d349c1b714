import random

import networkx as nx
import pytest
from hypothesis import given

from alphawidth.graph import Graph, GraphFormatError, complete_graph, path_graph
from alphawidth.io import emit_dimacs, emit_dot, emit_graph6, parse_dimacs, parse_graph6, read_graph, read_graph6_stream

from conftest import graphs, to_nx


# hand-decoded: 'D' is n=5; '?' and '{' give bits 000000 111100, i.e. the
# column-major upper triangle has exactly the pairs (0,4),(1,4),(2,4),(3,4)
def test_hand_decoded_star():
    G = parse_graph6("D?{")
    assert G.n == 5
    assert G.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]


def test_small_codes():
    assert parse_graph6("@").n == 1
    assert parse_graph6("?").n == 0
    assert parse_graph6("A_").edges() == [(0, 1)]
    assert parse_graph6("A?").edges() == []
    assert emit_graph6(complete_graph(4)) == "C~"
    assert parse_graph6(">>graph6<<A_").edges() == [(0, 1)]


@given(graphs(max_n=12))
def test_round_trip(G):
    assert parse_graph6(emit_graph6(G)) == G


@given(graphs(max_n=12))
def test_matches_networkx_writer(G):
    ours = emit_graph6(G)
    theirs = nx.to_graph6_bytes(to_nx(G), header=False).decode().strip()
    assert ours == theirs


def test_long_size_prefix():
    G = path_graph(70)
    code = emit_graph6(G)
    assert code.startswith("~")
    assert parse_graph6(code) == G
    H = nx.from_graph6_bytes(code.encode())
    assert sorted(H.edges()) == G.edges()


def test_random_codes_against_networkx_reader():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randrange(1, 20)
        H = nx.gnp_random_graph(n, rng.random(), seed=rng.randrange(10**6))
        code = nx.to_graph6_bytes(H, header=False).strip()
        G = parse_graph6(code)
        assert G.n == n
        assert G.edges() == sorted(tuple(sorted(e)) for e in H.edges())


@pytest.mark.parametrize(
    "code, offset",
    [
        ("D?", 2),  # too short for n=5
        ("D?{?", 3),  # trailing byte
        ("A a", 1),  # space is outside the printable range
        ("~?", 2),  # truncated 18-bit prefix
        ("", 0),
    ],
)
def test_malformed_codes_report_offsets(code, offset):
    with pytest.raises(GraphFormatError) as info:
        parse_graph6(code)
    assert info.value.offset == offset
    assert f"byte offset {offset}" in str(info.value)


def test_stream_skips_or_raises():
    lines = ["A_", "", "bad line", "B?"]
    out = list(read_graph6_stream(lines))
    assert [i for i, _, _ in out] == [0, 2, 3]
    assert isinstance(out[1][2], GraphFormatError)
    with pytest.raises(GraphFormatError, match="line 3"):
        list(read_graph6_stream(lines, strict=True))


def test_dimacs_round_trip_and_errors():
    G = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert parse_dimacs(emit_dimacs(G)) == G
    assert parse_dimacs("c hello\np edge 3 1\ne 1 3\n").edges() == [(0, 2)]
    with pytest.raises(GraphFormatError, match="line 2"):
        parse_dimacs("p edge 2 1\ne 1 3\n")
    with pytest.raises(GraphFormatError, match="self-loop"):
        parse_dimacs("p edge 2 1\ne 2 2\n")
    with pytest.raises(GraphFormatError, match="before problem"):
        parse_dimacs("e 1 2\n")
    with pytest.raises(GraphFormatError, match="missing problem"):
        parse_dimacs("c nothing\n")


def test_read_graph_detects_format():
    assert read_graph("p edge 2 1\ne 1 2\n").edges() == [(0, 1)]
    assert read_graph("A_\n").edges() == [(0, 1)]
    with pytest.raises(GraphFormatError, match="exactly one"):
        read_graph("A_\nA_\n")


def test_dot_lists_every_edge():
    dot = emit_dot(path_graph(3))
    assert "0 -- 1;" in dot and "1 -- 2;" in dot and dot.startswith("graph G {")
