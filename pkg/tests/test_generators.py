import pytest

from mixorient.errors import BadParam, UnsupportedFigureOnly
from mixorient.generators import (
    gen_f_family,
    gen_g_family,
    gen_m_family,
    gen_ohat,
    gen_r_mixed,
    gen_random_bipartite,
    gen_random_bridgeless,
    gen_rdelta,
    gen_s0n4,
    generate,
    pendant_pieces,
    r_forced_arcs,
)
from mixorient.graph import format_graph
from mixorient.oracle import oriented_diameter_exact
from mixorient.reach import is_bridgeless


def ids(inst):
    return {name: v for v, name in inst.names.items()}


def test_ohat():
    inst = gen_ohat(5)
    g = inst.graph
    assert (g.n, g.m) == (5, 6)
    name = ids(inst)
    assert g.max_undirected() == (3, frozenset({name["u2"], name["u5"]}))
    assert is_bridgeless(gen_ohat(6).graph)
    with pytest.raises(BadParam):
        gen_ohat(4)


def test_s0n4():
    inst = gen_s0n4(6)
    assert inst.graph.degrees(inst.u)[3] == 4
    with pytest.raises(BadParam):
        gen_s0n4(5)


def test_rdelta():
    inst = gen_rdelta(12, 4)
    assert inst.names[inst.u] == "b5"
    assert inst.graph.degrees(inst.u)[0] == 4
    A, B = inst.parts
    assert len(A) == len(B) == 6
    gen_rdelta(10, 4)
    with pytest.raises(BadParam):
        gen_rdelta(11, 4)


def test_g_family():
    inst = gen_g_family(9, 6)
    assert inst.graph.degrees(inst.u) == (6, 0, 0, 6)
    assert inst.lower_bound == 7
    assert pendant_pieces(2) == [2]
    assert gen_g_family(11, 7).graph.degrees(0)[3] == 7


def test_pendant_pieces():
    assert pendant_pieces(0) == []
    assert pendant_pieces(3) == [3]
    assert pendant_pieces(5) == [3, 2]
    with pytest.raises(BadParam):
        pendant_pieces(1)


def test_f_family():
    inst = gen_f_family(8, 5)
    assert inst.graph.degrees(inst.u)[3] == 5
    with pytest.raises(UnsupportedFigureOnly):
        gen_f_family(10, 7)
    inst = gen_f_family(7, 2)
    name = ids(inst)
    assert inst.graph.edge_between(name["u2"], name["u7"]).tail == name["u2"]


def test_m_family():
    inst = gen_m_family(6, 0)
    assert inst.graph.is_directed and inst.graph.m == 6
    with pytest.raises(UnsupportedFigureOnly):
        gen_m_family(10, 5)
    inst = gen_m_family(10, 4)
    _, dp, dm, ds = inst.graph.degrees(inst.u)
    assert ds == 4 and dp == 1 and dm == 1


def test_r_mixed_and_forced_arcs():
    inst = gen_r_mixed(18, 5)
    A, B = inst.parts
    assert len(A) == len(B) == 9
    assert inst.graph.degrees(inst.u)[3] == 5
    for a, b in r_forced_arcs(inst):
        assert not oriented_diameter_exact(inst.graph.with_arc(b, a), 30).has_strong
        assert oriented_diameter_exact(inst.graph.with_arc(a, b), 30).has_strong


def test_random_bridgeless():
    c5 = gen_random_bridgeless(5, 0, 0.0, 7).graph
    assert c5.is_undirected and c5.m == 5 and c5.max_undirected()[0] == 2
    a = gen_random_bridgeless(8, 4, 0.5, 42)
    b = gen_random_bridgeless(8, 4, 0.5, 42)
    assert format_graph(a.graph) == format_graph(b.graph)
    assert is_bridgeless(a.graph)
    with pytest.raises(BadParam):
        gen_random_bridgeless(2, 0, 0.0, 1)


def test_random_bipartite():
    inst = gen_random_bipartite(4, 4, 2, 0.3, 5)
    A, B = inst.parts
    assert inst.u in B
    for e in inst.graph.edges:
        assert (e.a in A) != (e.b in A)


def test_generate_dispatch_and_header():
    inst = generate("ohat", 5)
    text = inst.to_text()
    assert text.startswith("# family=ohat")
    with pytest.raises(BadParam):
        generate("nope", 5)
