"""Stage 1: orient what can be oriented at the pivot without lengthening cycles.

For each neighbor v of the pivot u, ``ell[v]`` is the length of a shortest
orientable cycle through the edge uv; ``s`` is their sum.  Undirected edges
at u are swept in ascending neighbor order: orient v->u if ``s`` survives,
else u->v if ``s`` survives, else leave the edge undirected (v is then a
*conflicted* vertex).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NoCycle, NoEdge
from .graph import EdgeRecord, MixedGraph, pair_key
from .reach import INF, bfs


@dataclass(frozen=True)
class CycleTable:
    u: int
    ell: dict[int, int]
    s: int


@dataclass(frozen=True)
class Stage1Result:
    g: MixedGraph
    g1: MixedGraph
    u: int
    x1: frozenset[int]
    x2: frozenset[int]
    y1: frozenset[int]
    y2: frozenset[int]
    z: frozenset[int]
    table: CycleTable
    # neighbor -> "X2" / "Y2" / "Z", in sweep order
    decisions: dict[int, str] = field(default_factory=dict)

    @property
    def X(self) -> frozenset[int]:
        return self.x1 | self.x2

    @property
    def Y(self) -> frozenset[int]:
        return self.y1 | self.y2

    @property
    def neighbors(self) -> frozenset[int]:
        return self.X | self.Y | self.z


def _cycle_length(g: MixedGraph, u: int, v: int) -> float:
    e = g.edge_between(u, v)
    if e is None:
        raise NoEdge(f"no edge between {u} and {v}")
    best = INF
    if e.allows(u, v):
        best = min(best, 1 + bfs(g, v, skip=e.key)[0][u])
    if e.allows(v, u):
        best = min(best, 1 + bfs(g, u, skip=e.key)[0][v])
    return best


def shortest_cycle_through(g: MixedGraph, u: int, v: int) -> int:
    """Length of a shortest orientable cycle containing the edge between u and v."""
    length = _cycle_length(g, u, v)
    if length == INF:
        raise NoCycle(f"edge {u}-{v} lies on no orientable cycle")
    return int(length)


def neighbor_cycle_table(g: MixedGraph, u: int) -> CycleTable:
    ell = {v: shortest_cycle_through(g, u, v) for v in sorted(g.neighbors(u))}
    return CycleTable(u, ell, sum(ell.values()))


def _cycle_sum(g: MixedGraph, u: int, neighbors: list[int]) -> float:
    return sum(_cycle_length(g, u, v) for v in neighbors)


def partition_neighbors(g: MixedGraph, u: int) -> Stage1Result:
    table = neighbor_cycle_table(g, u)
    out, inn, und = g.neighbor_sets(u)
    neighbors = sorted(g.neighbors(u))
    current = g
    x2, y2, z = set(), set(), set()
    decisions = {}
    for v in sorted(und):
        key = pair_key(u, v)
        toward = current.replace_edges({key: EdgeRecord.arc(v, u)})
        if _cycle_sum(toward, u, neighbors) == table.s:
            current = toward
            x2.add(v)
            decisions[v] = "X2"
            continue
        away = current.replace_edges({key: EdgeRecord.arc(u, v)})
        if _cycle_sum(away, u, neighbors) == table.s:
            current = away
            y2.add(v)
            decisions[v] = "Y2"
            continue
        z.add(v)
        decisions[v] = "Z"
    return Stage1Result(
        g=g,
        g1=current,
        u=u,
        x1=frozenset(inn),
        x2=frozenset(x2),
        y1=frozenset(out),
        y2=frozenset(y2),
        z=frozenset(z),
        table=table,
        decisions=decisions,
    )
