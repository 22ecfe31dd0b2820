"""Exact oriented diameter by exhaustive search over edge directions.

The search walks the undirected edges in input order, trying a->b (a < b)
before b->a.  A branch is abandoned as soon as the partially oriented graph,
with its remaining undirected edges still usable both ways, has diameter at
least the best value found so far: orienting an edge never shortens a path,
so no completion of that branch can do better.  A disconnected partial graph
has infinite diameter and is always pruned.

Distances are computed with bitsets, independently of :mod:`mixorient.reach`:
``R_k[v]`` is the set of vertices reachable from v in at most k steps and
``R_{k+1}[v] = R_k[v] | OR_{w in succ(v)} R_k[w]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import Orientation
from .errors import TooManyEdges
from .graph import MixedGraph

INF = float("inf")
DEFAULT_LIMIT = 24


@dataclass(frozen=True)
class OracleResult:
    value: int | None  # None: no strong orientation exists
    witness: Orientation | None
    strong_count: int | None = None  # only filled in when counting was requested

    @property
    def has_strong(self) -> bool:
        return self.value is not None


def _successor_sets(g: MixedGraph) -> list[set[int]]:
    succ = [set() for _ in range(g.n)]
    for e in g.edges:
        succ[e.a].add(e.b)
        if not e.directed:
            succ[e.b].add(e.a)
    return succ


def capped_diameter(succ: list[set[int]], n: int, cap: float = INF) -> float:
    """Exact diameter if it is at most ``cap``; otherwise a value above ``cap``.

    Returns ``inf`` when some vertex never reaches all others.
    """
    if n <= 1:
        return 0
    full = (1 << n) - 1
    reach = [1 << v for v in range(n)]
    k = 0
    while True:
        if all(r == full for r in reach):
            return k
        if k >= cap:
            return k + 1
        nxt = []
        for v in range(n):
            r = reach[v]
            for w in succ[v]:
                r |= reach[w]
            nxt.append(r)
        if nxt == reach:
            return INF
        reach = nxt
        k += 1


def _undirected(g: MixedGraph, limit: int) -> list[tuple[int, int]]:
    pairs = [e.key for e in g.undirected_edges()]
    if len(pairs) > limit:
        raise TooManyEdges(f"{len(pairs)} undirected edges exceed the limit of {limit}")
    return pairs


class _Search:
    """Depth-first enumeration with in-place edits to the successor sets."""

    def __init__(self, g: MixedGraph, limit: int):
        self.n = g.n
        self.pairs = _undirected(g, limit)
        self.succ = _successor_sets(g)
        self.chosen: list[tuple[int, int]] = []

    def run(self, visit, prune_at):
        """Call ``visit(diam)`` at each strong leaf.

        ``prune_at()`` gives the current threshold: branches whose partial
        diameter reaches it are skipped.  ``visit`` returning True stops.
        """
        return self._walk(0, visit, prune_at)

    def _walk(self, i, visit, prune_at):
        cap = prune_at()
        diam = capped_diameter(self.succ, self.n, cap - 1)
        if diam >= cap:
            return False
        if i == len(self.pairs):
            return visit(diam)
        a, b = self.pairs[i]
        for tail, head in ((a, b), (b, a)):
            self.succ[head].discard(tail)
            self.chosen.append((tail, head))
            stop = self._walk(i + 1, visit, prune_at)
            self.chosen.pop()
            self.succ[head].add(tail)
            if stop:
                return True
        return False

    def orientation(self) -> Orientation:
        return Orientation({(min(t, h), max(t, h)): (t, h) for t, h in self.chosen})


def oriented_diameter_exact(g: MixedGraph, max_undirected_edges: int = DEFAULT_LIMIT, *, count_strong: bool = False) -> OracleResult:
    """Minimum diameter over all strong orientations of g, with a witness.

    With ``count_strong`` the diameter prune is switched off so that every
    strong orientation is visited and counted; this is much slower.
    """
    search = _Search(g, max_undirected_edges)
    best = {"value": INF, "witness": None, "count": 0}
    horizon = g.n + 1  # a strong digraph has diameter at most n-1

    def visit(diam):
        best["count"] += 1
        if diam < best["value"]:
            best["value"] = diam
            best["witness"] = search.orientation()
        return False

    if count_strong:
        search.run(visit, lambda: horizon)
    else:
        search.run(visit, lambda: min(best["value"], horizon))
    value = None if best["value"] == INF else int(best["value"])
    return OracleResult(value, best["witness"], best["count"] if count_strong else None)


def find_orientation_within(g: MixedGraph, target: int, limit: int = DEFAULT_LIMIT) -> Orientation | None:
    """First strong orientation (in enumeration order) of diameter at most ``target``."""
    search = _Search(g, limit)
    found = {}

    def visit(diam):
        found["o"] = search.orientation()
        return True

    search.run(visit, lambda: target + 1)
    return found.get("o")


def verify_lower_bound(g: MixedGraph, bound: int, limit: int = DEFAULT_LIMIT) -> bool:
    """True iff every strong orientation of g has diameter at least ``bound``."""
    if bound <= 0:
        return True
    return find_orientation_within(g, bound - 1, limit) is None


def count_strong_orientations(g: MixedGraph, limit: int = DEFAULT_LIMIT) -> int:
    return oriented_diameter_exact(g, limit, count_strong=True).strong_count
