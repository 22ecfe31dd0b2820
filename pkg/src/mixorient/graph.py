"""Mixed graphs: undirected edges and arcs on a simple underlying graph.

Vertices are dense integers ``0..n-1``.  An edge is identified by its
unordered endpoint pair, which is unique because the underlying graph is
simple.  Graphs are built once (``MixedGraph(n, edges)`` or a run of
``add_edge`` calls) and treated as immutable afterwards; every derived graph
(an orientation, an edge deletion, the reverse) is a fresh object.

Text format, one record per line, ``#`` starts a comment::

    n 4
    d 0 1     # arc 0 -> 1
    u 1 2     # undirected edge
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .errors import BadVertex, DuplicatePair, EmptyGraph, LoopRejected, ParseError

Pair = tuple[int, int]


def pair_key(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class EdgeRecord:
    """One edge.  For an arc, ``a`` is the tail and ``b`` the head."""

    a: int
    b: int
    directed: bool = False

    @classmethod
    def undirected(cls, a: int, b: int) -> EdgeRecord:
        return cls(a, b, False)

    @classmethod
    def arc(cls, tail: int, head: int) -> EdgeRecord:
        return cls(tail, head, True)

    @property
    def key(self) -> Pair:
        return pair_key(self.a, self.b)

    @property
    def tail(self) -> int:
        return self.a

    @property
    def head(self) -> int:
        return self.b

    def allows(self, x: int, y: int) -> bool:
        """True if the edge can be traversed from x to y."""
        if self.directed:
            return x == self.a and y == self.b
        return {x, y} == {self.a, self.b}

    def other(self, x: int) -> int:
        return self.b if x == self.a else self.a

    def __str__(self) -> str:
        return f"{'d' if self.directed else 'u'} {self.a} {self.b}"


class MixedGraph:
    def __init__(self, n: int, edges: Iterable[EdgeRecord] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self._edges: list[EdgeRecord] = []
        self._index: dict[Pair, int] = {}
        self._out: list[set[int]] = [set() for _ in range(n)]
        self._in: list[set[int]] = [set() for _ in range(n)]
        self._und: list[set[int]] = [set() for _ in range(n)]
        self._succ: list[tuple[int, ...]] | None = None
        self._pred: list[tuple[int, ...]] | None = None
        for e in edges:
            self.add_edge(e)

    # -- construction -------------------------------------------------

    def _check_vertex(self, x: int) -> None:
        if not (isinstance(x, int) and 0 <= x < self.n):
            raise BadVertex(f"vertex {x!r} not in 0..{self.n - 1}")

    def add_edge(self, e: EdgeRecord) -> MixedGraph:
        self._check_vertex(e.a)
        self._check_vertex(e.b)
        if e.a == e.b:
            raise LoopRejected(f"loop at {e.a}")
        if e.key in self._index:
            raise DuplicatePair(f"pair {e.key} already carries {self._edges[self._index[e.key]]}")
        self._index[e.key] = len(self._edges)
        self._edges.append(e)
        if e.directed:
            self._out[e.a].add(e.b)
            self._in[e.b].add(e.a)
        else:
            self._und[e.a].add(e.b)
            self._und[e.b].add(e.a)
        self._succ = self._pred = None
        return self

    # -- queries ------------------------------------------------------

    @property
    def edges(self) -> tuple[EdgeRecord, ...]:
        return tuple(self._edges)

    @property
    def m(self) -> int:
        return len(self._edges)

    def edge_between(self, x: int, y: int) -> EdgeRecord | None:
        i = self._index.get(pair_key(x, y))
        return None if i is None else self._edges[i]

    def edge_index(self, key: Pair) -> int:
        return self._index[key]

    def has_pair(self, x: int, y: int) -> bool:
        return pair_key(x, y) in self._index

    def undirected_edges(self) -> list[EdgeRecord]:
        return [e for e in self._edges if not e.directed]

    def arcs(self) -> list[EdgeRecord]:
        return [e for e in self._edges if e.directed]

    @property
    def is_undirected(self) -> bool:
        return all(not e.directed for e in self._edges)

    @property
    def is_directed(self) -> bool:
        return all(e.directed for e in self._edges)

    def neighbor_sets(self, x: int) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
        """(out-neighbors, in-neighbors, undirected neighbors) of x."""
        self._check_vertex(x)
        return frozenset(self._out[x]), frozenset(self._in[x]), frozenset(self._und[x])

    def neighbors(self, x: int) -> frozenset[int]:
        self._check_vertex(x)
        return frozenset(self._out[x] | self._in[x] | self._und[x])

    def degrees(self, x: int) -> tuple[int, int, int, int]:
        """(d, d+, d-, d*) of x."""
        out, inn, und = self.neighbor_sets(x)
        return len(out) + len(inn) + len(und), len(out), len(inn), len(und)

    def max_undirected(self) -> tuple[int, frozenset[int]]:
        if self.n == 0:
            raise EmptyGraph("max undirected degree of an empty graph")
        best = max(len(s) for s in self._und)
        return best, frozenset(v for v in range(self.n) if len(self._und[v]) == best)

    def successors(self, x: int) -> tuple[int, ...]:
        """Vertices reachable from x in one orientable step, ascending."""
        if self._succ is None:
            self._succ = [tuple(sorted(self._out[v] | self._und[v])) for v in range(self.n)]
        return self._succ[x]

    def predecessors(self, x: int) -> tuple[int, ...]:
        if self._pred is None:
            self._pred = [tuple(sorted(self._in[v] | self._und[v])) for v in range(self.n)]
        return self._pred[x]

    def underlying_neighbors(self, x: int) -> set[int]:
        return self._out[x] | self._in[x] | self._und[x]

    # -- derived graphs -----------------------------------------------

    def replace_edges(self, replacement: Mapping[Pair, EdgeRecord | None]) -> MixedGraph:
        """Copy with some edges swapped (or dropped, for ``None``), order kept."""
        out = []
        for e in self._edges:
            if e.key in replacement:
                r = replacement[e.key]
                if r is None:
                    continue
                if r.key != e.key:
                    raise ValueError(f"replacement for {e.key} has endpoints {r.key}")
                out.append(r)
            else:
                out.append(e)
        return MixedGraph(self.n, out)

    def without(self, key: Pair) -> MixedGraph:
        return self.replace_edges({key: None})

    def with_arc(self, tail: int, head: int) -> MixedGraph:
        return self.replace_edges({pair_key(tail, head): EdgeRecord.arc(tail, head)})

    def reversed(self) -> MixedGraph:
        """Every arc flipped; undirected edges untouched."""
        return MixedGraph(self.n, (EdgeRecord(e.b, e.a, True) if e.directed else e for e in self._edges))

    def copy(self) -> MixedGraph:
        return MixedGraph(self.n, self._edges)

    def same_as(self, other: MixedGraph) -> bool:
        return self.n == other.n and self._edges == other._edges

    def __repr__(self) -> str:
        arcs = sum(e.directed for e in self._edges)
        return f"MixedGraph(n={self.n}, undirected={self.m - arcs}, arcs={arcs})"


def new_graph(n: int) -> MixedGraph:
    return MixedGraph(n)


def add_edge(g: MixedGraph, e: EdgeRecord) -> MixedGraph:
    return g.add_edge(e)


def from_lists(n: int, undirected: Iterable[Pair] = (), arcs: Iterable[Pair] = ()) -> MixedGraph:
    g = MixedGraph(n)
    for a, b in undirected:
        g.add_edge(EdgeRecord.undirected(a, b))
    for a, b in arcs:
        g.add_edge(EdgeRecord.arc(a, b))
    return g


# -- text format ------------------------------------------------------


def format_graph(g: MixedGraph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" if c else "#" for c in comments]
    lines.append(f"n {g.n}")
    lines.extend(str(e) for e in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> MixedGraph:
    g: MixedGraph | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            if g is None:
                if tokens[0] != "n" or len(tokens) != 2:
                    raise ParseError(f"line {lineno}: expected 'n <N>' header, got {raw!r}")
                g = MixedGraph(int(tokens[1]))
                continue
            if tokens[0] not in ("u", "d") or len(tokens) != 3:
                raise ParseError(f"line {lineno}: bad edge record {raw!r}")
            a, b = int(tokens[1]), int(tokens[2])
            g.add_edge(EdgeRecord(a, b, tokens[0] == "d"))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
        except (BadVertex, LoopRejected, DuplicatePair) as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    if g is None:
        raise ParseError("missing 'n <N>' header")
    return g


def read_graph(path: str | Path) -> MixedGraph:
    return parse_graph(Path(path).read_text())


def write_graph(g: MixedGraph, path: str | Path, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_graph(g, comments))
