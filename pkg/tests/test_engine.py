import pytest

from mixorient.engine import (
    CaseId,
    Orientation,
    bipartite_certificate,
    build_du,
    classify,
    detect_t0,
    detect_z0,
    extend_to_strong,
    orient_best,
    orient_with_bound,
    degree_bound,
)
from mixorient.errors import NotBipartite, NotBridgeless, NoStrongExtension
from mixorient.generators import gen_ohat, gen_rdelta
from mixorient.graph import from_lists, pair_key
from mixorient.hu import build_hu
from mixorient.reach import diameter, is_connected
from mixorient.stage1 import partition_neighbors

from conftest import cycle, directed_cycle


def test_classify(K, C4):
    assert classify(K, 0) is CaseId.MIXED_BOTH_SIDES
    assert classify(C4, 0) is CaseId.ALL_UNDIRECTED
    assert classify(directed_cycle(5), 0) is CaseId.MIXED_BOTH_SIDES


def test_degree_bound(C6, K):
    assert degree_bound(C6, 0) == 7
    assert degree_bound(K, 0) == 6
    assert degree_bound(directed_cycle(5), 0) == 8


def test_detect_absent_on_k(K):
    b = build_hu(partition_neighbors(K, 0))
    assert detect_z0(b) is None
    assert detect_t0(b) is None


def test_build_du(K, C4):
    du = build_du(K, 0)
    assert du.case is CaseId.MIXED_BOTH_SIDES
    assert du.arcs == {(0, 1), (1, 2), (0, 2), (2, 3), (3, 0)}
    assert du.z0 is None and du.t0 is None
    du = build_du(C4, 0)
    assert du.case is CaseId.ALL_UNDIRECTED
    assert du.arcs == {(1, 0), (0, 3), (3, 2), (2, 1)}


def test_extend_to_strong(C4, K):
    o = extend_to_strong(C4, {})
    assert o.lines(C4) == ["o 1 0", "o 2 1", "o 3 2", "o 0 3"]
    full = {(0, 1): (1, 0), (1, 2): (2, 1), (2, 3): (3, 2), (0, 3): (0, 3)}
    assert extend_to_strong(C4, full) == Orientation(full)
    du = build_du(K, 0)
    o = extend_to_strong(K, {pair_key(*arc): arc for arc in du.arcs})
    assert set(o.assignment.values()) == {(0, 2), (1, 2), (2, 3)}
    assert is_connected(o.apply(K))


def test_extend_failure():
    with pytest.raises(NoStrongExtension):
        extend_to_strong(cycle(4), {(0, 1): (0, 1), (1, 2): (2, 1)})


def test_orient_with_bound_examples(C6, K):
    o, cert = orient_with_bound(C6, 0)
    assert (cert.certified_bound, cert.measured_diam) == (7, 5)
    assert cert.line() == "cert u=0 case=AllUndirected bound=7 diam=5 z0=- t0=-"
    assert diameter(o.apply(C6)) == 5
    _, cert = orient_with_bound(K, 0)
    assert (cert.certified_bound, cert.measured_diam) == (6, 3)
    _, cert = orient_with_bound(directed_cycle(5), 0)
    assert (cert.certified_bound, cert.measured_diam) == (8, 4)


def test_orient_with_bound_rejects_bridges():
    with pytest.raises(NotBridgeless):
        orient_with_bound(from_lists(3, [(0, 1), (1, 2)]), 1)


def test_orient_best():
    inst = gen_ohat(5)
    _, cert = orient_best(inst.graph)
    assert cert.certified_bound == 5
    assert cert.u in {v for v, name in inst.names.items() if name in ("u2", "u5")}
    _, cert = orient_best(directed_cycle(4))
    assert cert.measured_diam == 3


def test_bipartite_certificate(C6):
    _, cert = bipartite_certificate(C6, [0, 2, 4], [1, 3, 5], 1)
    assert (cert.certified_bound, cert.measured_diam) == (9, 5)
    inst = gen_rdelta(12, 4)
    _, cert = bipartite_certificate(inst.graph, *inst.parts, inst.u)
    assert cert.certified_bound == 11
    assert cert.holds
    with pytest.raises(NotBipartite):
        bipartite_certificate(cycle(5), [0, 2], [1, 3, 4], 1)
