from mixorient.graph import from_lists
from mixorient.reach import INF, bridges, diameter, is_bridgeless, is_connected, mixed_cut_edges, mixed_distance

from conftest import cycle, directed_cycle


def test_mixed_distance(K):
    assert mixed_distance(directed_cycle(3), 0, 2) == 2
    assert mixed_distance(K, 0, 1) == 1
    # p-v-u through the undirected edge uv
    assert mixed_distance(K, 1, 0) == 2
    assert mixed_distance(from_lists(2, [], [(0, 1)]), 1, 0) == INF


def test_is_connected(K):
    assert is_connected(from_lists(3, [(0, 1), (1, 2)]))
    assert not is_connected(from_lists(2, [], [(0, 1)]))
    assert is_connected(K)


def test_bridges():
    assert {e.key for e in bridges(from_lists(3, [(0, 1), (1, 2)]))} == {(0, 1), (1, 2)}
    assert bridges(cycle(4)) == []
    tri = from_lists(3, [(2, 0)], [(0, 1), (1, 2)])
    assert bridges(tri) == []
    assert [e.key for e in mixed_cut_edges(tri)] == [(0, 2)]


def test_bridges_never_directed():
    g = from_lists(4, [(0, 1), (2, 3)], [(1, 2), (3, 0)])
    assert all(not e.directed for e in bridges(g))


def test_diameter(K):
    assert diameter(directed_cycle(6)) == 5
    assert diameter(cycle(4)) == 2
    oriented = from_lists(4, [], [(0, 1), (1, 2), (0, 2), (2, 3), (3, 0)])
    assert diameter(oriented) == 3
    assert mixed_distance(oriented, 1, 0) == 3
    assert diameter(from_lists(3, [(0, 1)])) == INF


def test_is_bridgeless(K, C4):
    assert is_bridgeless(K) and is_bridgeless(C4)
    assert not is_bridgeless(from_lists(3, [(0, 1), (1, 2)]))
