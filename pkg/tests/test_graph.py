import pytest

from mixorient.errors import BadVertex, DuplicatePair, EmptyGraph, LoopRejected, ParseError
from mixorient.graph import EdgeRecord, format_graph, new_graph, parse_graph, pair_key, read_graph, write_graph

from conftest import cycle, directed_cycle


def test_new_graph_sizes():
    assert new_graph(0).n == 0
    g = new_graph(4)
    assert g.n == 4 and g.m == 0


def test_add_edge_and_errors():
    g = new_graph(2).add_edge(EdgeRecord.undirected(0, 1))
    assert g.m == 1
    with pytest.raises(DuplicatePair):
        g.add_edge(EdgeRecord.arc(1, 0))
    with pytest.raises(LoopRejected):
        new_graph(3).add_edge(EdgeRecord.undirected(2, 2))
    with pytest.raises(BadVertex):
        new_graph(3).add_edge(EdgeRecord.undirected(0, 3))


def test_neighbor_sets_and_degrees(K):
    assert K.neighbor_sets(0) == ({1}, {3}, {2})
    assert K.neighbor_sets(2) == (set(), set(), {0, 1, 3})
    assert K.degrees(0) == (3, 1, 1, 1)
    assert K.degrees(2) == (3, 0, 0, 3)
    assert cycle(4).degrees(0) == (2, 0, 0, 2)
    assert new_graph(3).neighbor_sets(1) == (set(), set(), set())


def test_max_undirected(K):
    assert cycle(5).max_undirected() == (2, frozenset(range(5)))
    assert K.max_undirected() == (3, frozenset({2}))
    assert directed_cycle(4).max_undirected() == (0, frozenset(range(4)))
    with pytest.raises(EmptyGraph):
        new_graph(0).max_undirected()


def test_edge_record_helpers():
    e = EdgeRecord.arc(3, 1)
    assert e.key == pair_key(1, 3) == (1, 3)
    assert (e.tail, e.head) == (3, 1)
    assert e.allows(3, 1) and not e.allows(1, 3)
    assert EdgeRecord.undirected(1, 3).allows(3, 1)


def test_round_trip_preserves_order(K, tmp_path):
    text = format_graph(K, ["demo"])
    again = parse_graph(text)
    assert again.n == K.n and again.edges == K.edges
    path = tmp_path / "k.txt"
    write_graph(K, path)
    assert read_graph(path).edges == K.edges


@pytest.mark.parametrize(
    "text",
    ["x 3\n", "", "n 3\nu 0 0\n", "n 3\nu 0 1\nd 1 0\n", "n 3\nq 0 1\n", "n 2\nu 0 5\n", "n two\n"],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_graph(text)


def test_reversed_and_replace(K):
    r = K.reversed()
    assert r.neighbor_sets(0) == ({3}, {1}, {2})
    assert K.with_arc(2, 0).degrees(0) == (3, 1, 2, 0)
    assert K.neighbor_sets(0) == ({1}, {3}, {2})
