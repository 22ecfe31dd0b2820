"""Randomised invariants over seeded random mixed graphs."""

import networkx as nx
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from mixorient.engine import orient_with_bound
from mixorient.generators import gen_random_bridgeless
from mixorient.graph import EdgeRecord, format_graph, new_graph, parse_graph
from mixorient.oracle import oriented_diameter_exact
from mixorient.reach import bridges, diameter, is_connected, mixed_distance
from mixorient.stage1 import neighbor_cycle_table, partition_neighbors

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def mixed_graphs(draw, max_n=7):
    n = draw(st.integers(2, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=min(len(pairs), 11)))
    g = new_graph(n)
    for a, b in chosen:
        kind = draw(st.sampled_from(["u", "fwd", "back"]))
        e = EdgeRecord.undirected(a, b) if kind == "u" else EdgeRecord.arc(a, b) if kind == "fwd" else EdgeRecord.arc(b, a)
        g = g.add_edge(e)
    return g


@st.composite
def bridgeless_graphs(draw):
    n = draw(st.integers(3, 8))
    extra = draw(st.integers(0, min(n, n * (n - 1) // 2 - n)))
    frac = draw(st.sampled_from([0.0, 0.3, 0.6]))
    cycle_frac = draw(st.sampled_from([0.0, 0.3]))
    seed = draw(st.integers(0, 2**32 - 1))
    return gen_random_bridgeless(n, extra, frac, seed, cycle_directed_fraction=cycle_frac).graph


@SETTINGS
@given(mixed_graphs())
def test_neighbor_sets_partition(g):
    for x in range(g.n):
        out, inn, und = g.neighbor_sets(x)
        assert not (out & inn or out & und or inn & und)
        assert len(out) + len(inn) + len(und) == len(g.neighbors(x))


@SETTINGS
@given(mixed_graphs())
def test_text_round_trip(g):
    again = parse_graph(format_graph(g))
    assert again.n == g.n and again.edges == g.edges


@SETTINGS
@given(mixed_graphs())
def test_orienting_never_shortens(g):
    und = g.undirected_edges()
    if not und:
        return
    e = und[0]
    h = g.with_arc(e.a, e.b)
    for x in range(g.n):
        for y in range(g.n):
            assert mixed_distance(g, x, y) <= mixed_distance(h, x, y)


@SETTINGS
@given(mixed_graphs())
def test_bridges_match_underlying_graph(g):
    if not is_connected(g):
        return
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(e.key for e in g.edges)
    undirected = {e.key for e in g.undirected_edges()}
    expected = {tuple(sorted(b)) for b in nx.bridges(nxg)} & undirected
    assert {e.key for e in bridges(g)} == expected


@SETTINGS
@given(mixed_graphs(max_n=6))
def test_strong_orientability_equivalence(g):
    has_strong = oriented_diameter_exact(g).has_strong
    assert has_strong == (is_connected(g) and not bridges(g))


@SETTINGS
@given(bridgeless_graphs(), st.data())
def test_stage1_keeps_sum(g, data):
    u = data.draw(st.integers(0, g.n - 1))
    part = partition_neighbors(g, u)
    assert neighbor_cycle_table(part.g1, u).s == part.table.s


@SETTINGS
@given(bridgeless_graphs(), st.data())
def test_certificate_holds_and_beats_oracle(g, data):
    u = data.draw(st.integers(0, g.n - 1))
    o, cert = orient_with_bound(g, u)
    oriented = o.apply(g)
    assert oriented.is_directed
    assert diameter(oriented) == cert.measured_diam <= cert.certified_bound
    if len(g.undirected_edges()) <= 12:
        assert oriented_diameter_exact(g).value <= cert.measured_diam
