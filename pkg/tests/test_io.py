"""Edge-list and sparse6 parsing and emission."""

import networkx as nx
import pytest
from hypothesis import given, settings

from brickforge.errors import LoopEdge, ParseError
from brickforge.families import k4, petersen
from brickforge.graphcore import MultiGraph
from brickforge.harness.io import (
    emit_edge_list,
    emit_sparse6,
    parse_edge_list,
    parse_graph,
    parse_sparse6,
)

from conftest import cycle, edge_multiset, theta
from test_graphcore import multigraphs

K4_TEXT = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"


class TestEdgeList:
    def test_parse_k4(self):
        g = parse_edge_list(K4_TEXT)
        assert g.n == 4
        assert edge_multiset(g) == edge_multiset(k4())

    def test_emit_bit_exact(self):
        assert emit_edge_list(k4()) == K4_TEXT
        assert emit_edge_list(k4()) == emit_edge_list(k4())

    def test_round_trip_normalizes(self):
        g = MultiGraph(4, [(3, 1), (1, 0), (2, 0)])
        assert emit_edge_list(parse_edge_list(emit_edge_list(g))) == emit_edge_list(g)

    def test_parallel_lines_allowed(self):
        g = parse_edge_list("2 3\n0 1\n0 1\n0 1\n")
        assert edge_multiset(g) == edge_multiset(theta())

    def test_loop_rejected(self):
        with pytest.raises(LoopEdge):
            parse_edge_list("2 1\n0 0\n")

    @pytest.mark.parametrize(
        "text,line",
        [
            ("", 1),
            ("4\n", 1),
            ("4 2\n0 1\n", 2),
            ("4 1\n0 1\n2 3\n", 3),
            ("4 1\n0 x\n", 2),
            ("4 1\n0 9\n", 2),
            ("0 0\n", 1),
        ],
    )
    def test_parse_errors_carry_position(self, text, line):
        with pytest.raises(ParseError) as err:
            parse_edge_list(text)
        assert err.value.line == line


class TestSparse6:
    def test_c6_round_trip(self):
        g = cycle(6)
        assert edge_multiset(parse_sparse6(emit_sparse6(g))) == edge_multiset(g)

    def test_header_accepted_on_input(self):
        g = petersen()
        s = ">>sparse6<<" + emit_sparse6(g)
        assert edge_multiset(parse_sparse6(s)) == edge_multiset(g)

    def test_header_absent_on_output(self):
        assert emit_sparse6(k4()).startswith(":")

    def test_multigraph_preserved(self):
        g = MultiGraph(4, [(0, 1), (0, 1), (2, 3), (2, 3), (1, 2), (0, 3)])
        assert edge_multiset(parse_sparse6(emit_sparse6(g))) == edge_multiset(g)

    def test_bad_character(self):
        with pytest.raises(ParseError):
            parse_sparse6(":A\x19")

    def test_missing_colon(self):
        with pytest.raises(ParseError):
            parse_sparse6("An")

    @settings(max_examples=100, deadline=None)
    @given(multigraphs(max_n=17, max_m=24))
    def test_round_trip_matches_networkx(self, g):
        s = emit_sparse6(g)
        back = parse_sparse6(s)
        assert back.n == g.n
        assert edge_multiset(back) == edge_multiset(g)
        ng = nx.MultiGraph()
        ng.add_nodes_from(range(g.n))
        ng.add_edges_from(g.live_pairs())
        assert nx.to_sparse6_bytes(ng, header=False).decode().strip() == s
        decoded = nx.from_sparse6_bytes(s.encode())
        assert sorted(tuple(sorted(e)) for e in decoded.edges()) == edge_multiset(g)


class TestParseGraph:
    def test_autodetect_edge_list(self):
        assert edge_multiset(parse_graph(K4_TEXT)) == edge_multiset(k4())

    def test_autodetect_sparse6(self):
        g = petersen()
        assert edge_multiset(parse_graph(emit_sparse6(g))) == edge_multiset(g)

    def test_autodetect_sparse6_with_header(self):
        g = cycle(6)
        assert edge_multiset(parse_graph(">>sparse6<<" + emit_sparse6(g))) == edge_multiset(g)

    def test_path_input(self, tmp_path):
        target = tmp_path / "graph.txt"
        target.write_text(K4_TEXT)
        assert edge_multiset(parse_graph(target)) == edge_multiset(k4())

    def test_unknown_format(self):
        with pytest.raises(ParseError):
            parse_graph("hello world")

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_graph("   \n")
