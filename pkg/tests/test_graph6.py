"""graph6 codec: frozen decodes, strict error handling, round trips."""

import pytest

from conftest import all_labeled_graphs

from cographmean import emit_graph6, from_edge_list, parse_graph6
from cographmean.enumeration import _code_to_adj, _graph_classes
from cographmean.errors import (
    MalformedHeader,
    OrderOutOfRange,
    TrailingGarbage,
    TruncatedBits,
)
from cographmean.graph import Graph


# values frozen by decoding the bit layout by hand:
# '@' is order 1; 'Bw' sets all three bits of order 3 (the triangle);
# 'Bg' is 101000, the path 0-1-2; 'C~' sets all six bits of order 4.
def test_frozen_decodes():
    assert parse_graph6("@") == from_edge_list(1, [])
    assert parse_graph6("Bw") == from_edge_list(3, [(0, 1), (0, 2), (1, 2)])
    assert parse_graph6("Bg") == from_edge_list(3, [(0, 1), (1, 2)])
    assert parse_graph6("C~") == from_edge_list(
        4, [(u, v) for u in range(4) for v in range(u + 1, 4)]
    )


def test_frozen_five_vertex_decode():
    # 0100101001 00 packs to bytes Q, c
    g = parse_graph6("DQc")
    assert sorted(g.edges()) == [(0, 2), (0, 4), (1, 3), (3, 4)]


def test_frozen_encodes():
    assert emit_graph6(from_edge_list(1, [])) == "@"
    assert emit_graph6(from_edge_list(3, [(0, 1), (1, 2)])) == "Bg"
    assert emit_graph6(from_edge_list(3, [(0, 1), (0, 2), (1, 2)])) == "Bw"


def test_extended_header_orders_63_and_64():
    for n in (63, 64):
        g = from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
        text = emit_graph6(g)
        assert text.startswith("~")
        assert parse_graph6(text) == g


def test_header_errors():
    with pytest.raises(MalformedHeader):
        parse_graph6("")
    with pytest.raises(MalformedHeader):
        parse_graph6("\x1f")  # below the printable range
    with pytest.raises(MalformedHeader):
        parse_graph6("~?")  # extended header cut short
    with pytest.raises(OrderOutOfRange):
        parse_graph6("~~??????")  # the >= 258048 header form
    with pytest.raises(OrderOutOfRange):
        parse_graph6("?")  # order 0


def test_body_errors():
    with pytest.raises(TruncatedBits):
        parse_graph6("B")  # order 3 needs one data byte
    with pytest.raises(TruncatedBits):
        parse_graph6("D" + "Q")  # order 5 needs two
    with pytest.raises(TrailingGarbage):
        parse_graph6("BwW")  # extra byte
    with pytest.raises(TrailingGarbage):
        parse_graph6("Bx")  # 111001: nonzero padding bit
    with pytest.raises(TruncatedBits):
        parse_graph6("B\x05")  # body byte outside the printable range


def test_round_trip_all_labeled_graphs_order_up_to_4():
    for n in range(1, 5):
        for g in all_labeled_graphs(n):
            assert parse_graph6(emit_graph6(g)) == g


@pytest.mark.parametrize("n", range(1, 7))
def test_round_trip_all_classes(n):
    for code in _graph_classes(n):
        g = Graph(n, _code_to_adj(n, code))
        assert parse_graph6(emit_graph6(g)) == g
