from mixorient.hu import assemble_hx, build_hu, in_tree_paths, lemma_stats, lemma_violations, out_tree_paths
from mixorient.stage1 import partition_neighbors


def test_tree_paths_k(K):
    p = partition_neighbors(K, 0)
    assert out_tree_paths(p.g1, 0, [3])[3].vertices == (0, 2, 3)
    assert in_tree_paths(p.g1, 0, [1])[1].vertices == (1, 2, 0)
    assert out_tree_paths(p.g1, 0, []) == {}


def test_tree_paths_c4(C4):
    p = partition_neighbors(C4, 0)
    assert out_tree_paths(p.g1, 0, [1])[1].vertices == (0, 3, 2, 1)
    assert in_tree_paths(p.g1, 0, [3])[3].vertices == (3, 2, 1, 0)


def test_assemble_hx(K):
    p = partition_neighbors(K, 0)
    arcs, verts = assemble_hx(out_tree_paths(p.g1, 0, [3]), 0, p.g1)
    assert arcs == {(3, 0), (0, 2), (2, 3)}
    assert verts == {0, 2, 3}
    assert assemble_hx({}, 0, p.g1) == (frozenset(), frozenset({0}))


def test_build_hu_k(K):
    b = build_hu(partition_neighbors(K, 0))
    assert b.qyu[1].vertices == (1, 2, 3, 0)
    assert b.qyu[1].neighbor_hits == 3
    assert set(b.hu_arcs) == {(0, 1), (1, 2), (0, 2), (2, 3), (3, 0)}
    assert b.quz[2].vertices == (0, 2)
    assert b.qzu[2].vertices == (2, 3, 0)
    assert lemma_violations(b) == []
    assert lemma_stats(b)["Q_yu"] == 3


def test_build_hu_covers_neighbors(C4):
    b = build_hu(partition_neighbors(C4, 0))
    assert {1, 3} <= b.hu_vertices
    assert b.quz == {} and b.qzu == {}
