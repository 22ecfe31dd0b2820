"""Orientable-path distances, connectivity, bridges and diameter.

Undirected edges are traversable both ways, arcs only forward.  BFS always
expands neighbors in ascending vertex order, so every shortest-path tree is
reproducible and two tree paths that meet share their whole common prefix.
"""

from __future__ import annotations

from collections import deque

from .errors import NotConnected
from .graph import EdgeRecord, MixedGraph, Pair

INF = float("inf")


def bfs(g: MixedGraph, source: int, *, reverse: bool = False, skip: Pair | None = None) -> tuple[list[float], list[int]]:
    """Distances and BFS parents from ``source``.

    With ``reverse=True`` the search runs against arc direction, so
    ``dist[v]`` is the distance from v *to* the source.  ``skip`` removes one
    edge (by endpoint pair) for the duration of the search.
    """
    g._check_vertex(source)
    step = g.predecessors if reverse else g.successors
    dist: list[float] = [INF] * g.n
    parent = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in step(x):
            if dist[y] != INF:
                continue
            if skip is not None and ((x, y) == skip or (y, x) == skip):
                continue
            dist[y] = dist[x] + 1
            parent[y] = x
            queue.append(y)
    return dist, parent


def tree_path(parent: list[int], root: int, v: int) -> list[int]:
    """Vertices from root to v along BFS parents (root first)."""
    path = [v]
    while path[-1] != root:
        p = parent[path[-1]]
        if p < 0:
            raise ValueError(f"{v} not in the tree rooted at {root}")
        path.append(p)
    path.reverse()
    return path


def mixed_distance(g: MixedGraph, x: int, y: int) -> float:
    """Length of a shortest orientable x->y path, ``inf`` if none."""
    g._check_vertex(y)
    return bfs(g, x)[0][y]


def shortest_path(g: MixedGraph, x: int, y: int, *, skip: Pair | None = None) -> list[int] | None:
    dist, parent = bfs(g, x, skip=skip)
    if dist[y] == INF:
        return None
    return tree_path(parent, x, y)


def is_connected(g: MixedGraph) -> bool:
    """Every ordered pair joined by an orientable path."""
    if g.n <= 1:
        return True
    fwd, _ = bfs(g, 0)
    if INF in fwd:
        return False
    back, _ = bfs(g, 0, reverse=True)
    return INF not in back


def _underlying_connected(g: MixedGraph, skip: Pair) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in g.underlying_neighbors(x):
            if y in seen or (x, y) == skip or (y, x) == skip:
                continue
            seen.add(y)
            stack.append(y)
    return len(seen) == g.n


def bridges(g: MixedGraph) -> list[EdgeRecord]:
    """Undirected edges whose deletion disconnects the underlying graph.

    In a connected mixed graph these are exactly the undirected edges that no
    strong orientation can accommodate; with none of them the graph is
    strongly orientable.  Arcs are never reported.
    """
    if not is_connected(g):
        raise NotConnected("bridges are only defined for connected mixed graphs")
    return [e for e in g.undirected_edges() if not _underlying_connected(g, e.key)]


def mixed_cut_edges(g: MixedGraph) -> list[EdgeRecord]:
    """Undirected edges whose deletion breaks orientable connectivity.

    Stricter than :func:`bridges`: the triangle 0->1->2 plus undirected 2-0
    reports its undirected edge here although orienting it 2->0 is strong.
    """
    if not is_connected(g):
        raise NotConnected("cut edges are only defined for connected mixed graphs")
    return [e for e in g.undirected_edges() if not is_connected(g.without(e.key))]


def is_bridgeless(g: MixedGraph) -> bool:
    """Connected and free of bridges, i.e. strongly orientable."""
    return is_connected(g) and not bridges(g)


def distance_matrix(g: MixedGraph) -> list[list[float]]:
    return [bfs(g, x)[0] for x in range(g.n)]


def eccentricity(g: MixedGraph, x: int) -> float:
    return max(bfs(g, x)[0])


def diameter(g: MixedGraph) -> float:
    """Max over ordered pairs of the orientable distance; ``inf`` if some pair is unreachable."""
    if g.n == 0:
        return 0
    best = 0
    for x in range(g.n):
        e = max(bfs(g, x)[0])
        if e == INF:
            return INF
        best = max(best, e)
    return best
