"""Stage 2: a strongly oriented subgraph around the pivot covering its neighborhood.

From the Stage-1 graph ``g1`` we take a BFS out-tree from u (paths to every
in-side neighbor x) and a BFS in-tree to u (paths from every out-side
neighbor y).  The cycles ``P_ux + (x->u)`` form H_X; ``graft_out_cycles`` adds
cycles for the out-side neighbors to get H_u together with a directed path
``Q_yu`` for each y; ``conflict_paths`` reads off directed paths ``Q_uz``/``Q_zu``
for every conflicted neighbor z.  All tie-breaks are by ascending vertex id.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import (
    IncompatibleOrientation,
    NoEligibleX,
    Unreachable,
    ZNotCovered,
)
from .graph import MixedGraph
from .reach import INF, bfs, tree_path
from .stage1 import Stage1Result

Arc = tuple[int, int]

PATH_KINDS = ("P_ux", "P_yu", "Q_yu", "Q_uz", "Q_zu")


@dataclass(frozen=True)
class PathRecord:
    kind: str
    owner: int
    vertices: tuple[int, ...]
    neighbor_hits: int

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def index(self, v: int) -> int:
        return self.vertices.index(v)

    def arcs(self) -> list[Arc]:
        return list(zip(self.vertices, self.vertices[1:]))


@dataclass
class YMarker:
    branch: str  # in_hx | disjoint | join_in_z | join_not_z | split
    u_y: int | None = None
    v_y: int | None = None
    x: int | None = None
    x_prime: int | None = None


@dataclass
class HuBundle:
    partition: Stage1Result
    pux: dict[int, PathRecord]
    pyu: dict[int, PathRecord]
    hx_arcs: frozenset[Arc]
    hx_vertices: frozenset[int]
    hu_arcs: set[Arc] = field(default_factory=set)
    qyu: dict[int, PathRecord] = field(default_factory=dict)
    quz: dict[int, PathRecord] = field(default_factory=dict)
    qzu: dict[int, PathRecord] = field(default_factory=dict)
    c1: dict[int, tuple[int, ...]] = field(default_factory=dict)
    c2: dict[int, tuple[int, ...]] = field(default_factory=dict)
    markers: dict[int, YMarker] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def u(self) -> int:
        return self.partition.u

    @property
    def hu_vertices(self) -> frozenset[int]:
        vs = {self.u}
        for a, b in self.hu_arcs:
            vs.add(a)
            vs.add(b)
        return frozenset(vs)

    def paths(self) -> Iterable[PathRecord]:
        for table in (self.pux, self.pyu, self.qyu, self.quz, self.qzu):
            for key in sorted(table):
                yield table[key]


def _record(kind: str, owner: int, vertices: Iterable[int], nbrs: frozenset[int]) -> PathRecord:
    vs = tuple(vertices)
    if len(set(vs)) != len(vs):
        raise IncompatibleOrientation(f"{kind}[{owner}] repeats a vertex: {vs}")
    return PathRecord(kind, owner, vs, sum(v in nbrs for v in vs))


def out_tree_paths(g1: MixedGraph, u: int, X: Iterable[int], nbrs: frozenset[int] | None = None) -> dict[int, PathRecord]:
    """Shortest u->x paths for every x in X, all read off one BFS tree."""
    nbrs = g1.neighbors(u) if nbrs is None else nbrs
    dist, parent = bfs(g1, u)
    out = {}
    for x in sorted(X):
        if dist[x] == INF:
            raise Unreachable(f"{x} unreachable from {u} in G1")
        out[x] = _record("P_ux", x, tree_path(parent, u, x), nbrs)
    return out


def in_tree_paths(g1: MixedGraph, u: int, Y: Iterable[int], nbrs: frozenset[int] | None = None) -> dict[int, PathRecord]:
    """Shortest y->u paths for every y in Y, all read off one reverse BFS tree."""
    nbrs = g1.neighbors(u) if nbrs is None else nbrs
    dist, parent = bfs(g1, u, reverse=True)
    out = {}
    for y in sorted(Y):
        if dist[y] == INF:
            raise Unreachable(f"{u} unreachable from {y} in G1")
        out[y] = _record("P_yu", y, reversed(tree_path(parent, u, y)), nbrs)
    return out


def _add_arcs(arcs: set[Arc], new: Iterable[Arc], g1: MixedGraph) -> None:
    for a, b in new:
        e = g1.edge_between(a, b)
        if e is None or not e.allows(a, b):
            raise IncompatibleOrientation(f"arc {a}->{b} is not traversable in G1")
        if (b, a) in arcs:
            raise IncompatibleOrientation(f"arc {a}->{b} clashes with {b}->{a}")
        arcs.add((a, b))


def _cycle_arcs(path: tuple[int, ...]) -> list[Arc]:
    """Arcs of the closed walk path[0] -> ... -> path[-1] -> path[0]."""
    return list(zip(path, path[1:])) + [(path[-1], path[0])]


def assemble_hx(pux: dict[int, PathRecord], u: int, g1: MixedGraph) -> tuple[frozenset[Arc], frozenset[int]]:
    """Union of the directed cycles u -> ... -> x -> u."""
    arcs: set[Arc] = set()
    vertices = {u}
    for x in sorted(pux):
        _add_arcs(arcs, _cycle_arcs(pux[x].vertices), g1)
        vertices.update(pux[x].vertices)
    return frozenset(arcs), frozenset(vertices)


def graft_out_cycles(partition: Stage1Result, pux: dict[int, PathRecord], pyu: dict[int, PathRecord]) -> HuBundle:
    u, g1 = partition.u, partition.g1
    X, Y, Z = partition.X, partition.Y, partition.z
    nbrs = partition.neighbors
    hx_arcs, hx_vertices = assemble_hx(pux, u, g1)
    bundle = HuBundle(partition, pux, pyu, hx_arcs, hx_vertices, hu_arcs=set(hx_arcs))

    for y in sorted(Y):
        p = pyu[y].vertices
        if y in hx_vertices:
            eligible = [x for x in sorted(X) if y in pux[x] and set(pux[x].vertices) & X == {x}]
            if not eligible:
                raise NoEligibleX(f"no x with y={y} on P_ux and C_x meeting X only in x\n" + dump_bundle(bundle))
            x = eligible[0]
            q = pux[x].vertices[pux[x].index(y):] + (u,)
            bundle.qyu[y] = _record("Q_yu", y, q, nbrs)
            bundle.markers[y] = YMarker("in_hx", x=x)
            continue

        hits = [v for v in p[:-1] if v in hx_vertices]
        if not hits:
            q = p
            bundle.markers[y] = YMarker("disjoint")
        else:
            uy, vy = hits[0], hits[-1]
            x = min((x for x in X if uy in pux[x]), key=lambda x: (len(pux[x]) - pux[x].index(uy), x))
            x_prime = min(x for x in X if vy in pux[x])
            joined = p[: p.index(uy)] + pux[x].vertices[pux[x].index(uy):] + (u,)
            if uy == vy:
                branch = "join_in_z" if uy in Z else "join_not_z"
                q = joined if uy in Z else p
            else:
                branch = "split"
                q = joined
                tail = p[p.index(vy):]
                if len(tail) > 2:
                    c2 = pux[x_prime].vertices[: pux[x_prime].index(vy) + 1] + tail[1:]
                    _add_arcs(bundle.hu_arcs, zip(c2, c2[1:]), g1)
                    bundle.c2[y] = c2
                else:
                    bundle.notes.append(f"C2[{y}] empty: v_y={vy} is adjacent to u on P_yu")
            bundle.markers[y] = YMarker(branch, u_y=uy, v_y=vy, x=x, x_prime=x_prime)
        _add_arcs(bundle.hu_arcs, _cycle_arcs(q), g1)
        bundle.c1[y] = q
        bundle.qyu[y] = _record("Q_yu", y, q, nbrs)
    return bundle


def conflict_paths(bundle: HuBundle) -> HuBundle:
    partition = bundle.partition
    u, X, Y = partition.u, partition.X, partition.Y
    nbrs = partition.neighbors
    pux, pyu = bundle.pux, bundle.pyu
    for z in sorted(partition.z):
        on_cx = [x for x in sorted(X) if z in pux[x]]
        if on_cx:
            x = on_cx[0]
            seg = pux[x].vertices[pux[x].index(z):]
            x_prime = next(v for v in seg[1:] if v in X)
            quz = (u, z)
            qzu = seg[: seg.index(x_prime) + 1] + (u,)
        else:
            on_c1 = [y for y in sorted(bundle.c1) if z in bundle.c1[y]]
            if on_c1:
                p = pyu[on_c1[0]].vertices
                if z not in p:
                    raise ZNotCovered(f"z={z} on C1 but off P_yu for y={on_c1[0]}")
                y_prime = [v for v in p if v in Y][-1]
                quz = (u,) + p[p.index(y_prime): p.index(z) + 1]
            else:
                on_c2 = [y for y in sorted(bundle.c2) if z in bundle.c2[y]]
                if not on_c2:
                    raise ZNotCovered(f"conflicted vertex {z} not in H_u\n" + dump_bundle(bundle))
                y = on_c2[0]
                c2 = bundle.c2[y]
                vy = bundle.markers[y].v_y
                p = pyu[y].vertices
                ys = [v for v in p[p.index(vy):] if v in Y]
                if ys:
                    quz = (u,) + c2[c2.index(ys[-1]): c2.index(z) + 1]
                else:
                    quz = c2[: c2.index(z) + 1]
            qzu = (z, u)
        bundle.quz[z] = _record("Q_uz", z, quz, nbrs)
        bundle.qzu[z] = _record("Q_zu", z, qzu, nbrs)
    _check_paths(bundle)
    return bundle


def _check_paths(bundle: HuBundle) -> None:
    missing = bundle.partition.neighbors - bundle.hu_vertices
    if missing:
        raise ZNotCovered(f"neighbors {sorted(missing)} not covered by H_u")
    for rec in list(bundle.qyu.values()) + list(bundle.quz.values()) + list(bundle.qzu.values()):
        for a, b in rec.arcs():
            if (a, b) not in bundle.hu_arcs:
                raise IncompatibleOrientation(f"{rec.kind}[{rec.owner}] uses {a}->{b}, absent from H_u")


def build_hu(partition: Stage1Result) -> HuBundle:
    """Run the whole of Stage 2 on a Stage-1 result."""
    nbrs = partition.neighbors
    pux = out_tree_paths(partition.g1, partition.u, partition.X, nbrs)
    pyu = in_tree_paths(partition.g1, partition.u, partition.Y, nbrs)
    return conflict_paths(graft_out_cycles(partition, pux, pyu))


def dump_bundle(bundle: HuBundle) -> str:
    """One line per path: kind, owner, vertex sequence, neighbor hits."""
    p = bundle.partition
    lines = [
        f"# u={p.u} X1={sorted(p.x1)} X2={sorted(p.x2)} Y1={sorted(p.y1)} Y2={sorted(p.y2)} Z={sorted(p.z)}",
        f"# H_u arcs: {sorted(bundle.hu_arcs)}",
    ]
    for rec in bundle.paths():
        lines.append(f"{rec.kind} {rec.owner} {' '.join(map(str, rec.vertices))} hits={rec.neighbor_hits}")
    return "\n".join(lines)


def lemma_violations(bundle: HuBundle) -> list[str]:
    """Every broken path-count or second/penultimate-vertex property, as text."""
    p = bundle.partition
    _, dplus, dminus, _ = p.g.degrees(p.u)
    X, Y, Z = p.X, p.Y, p.z
    bad = []

    def check(ok: bool, msg: str) -> None:
        if not ok:
            bad.append(msg)

    for x, rec in bundle.pux.items():
        vs = set(rec.vertices)
        check(len(vs & (Y | Z)) == 1, f"P_ux[{x}] has {len(vs & (Y | Z))} vertices from Y+Z")
        check(not (vs & (p.x2 - {x})), f"P_ux[{x}] meets X2 outside x")
        check(rec.neighbor_hits <= dminus + 2, f"P_ux[{x}] hits {rec.neighbor_hits} > d-+2={dminus + 2}")
        check(rec.vertices[1] in Y | Z, f"P_ux[{x}] second vertex {rec.vertices[1]} not in Y+Z")
    for y, rec in bundle.pyu.items():
        vs = set(rec.vertices)
        check(len(vs & (X | Z)) == 1, f"P_yu[{y}] has {len(vs & (X | Z))} vertices from X+Z")
        check(not (vs & (p.y2 - {y})), f"P_yu[{y}] meets Y2 outside y")
        check(rec.vertices[-2] in X | Z, f"P_yu[{y}] penultimate vertex {rec.vertices[-2]} not in X+Z")
    for y, rec in bundle.qyu.items():
        check(rec.neighbor_hits <= dplus + 3, f"Q_yu[{y}] hits {rec.neighbor_hits} > d++3={dplus + 3}")
        if not Z:
            check(rec.neighbor_hits <= dminus + 2, f"Q_yu[{y}] hits {rec.neighbor_hits} > d-+2={dminus + 2} with Z empty")
    for z, rec in bundle.qzu.items():
        check(rec.neighbor_hits <= 2, f"Q_zu[{z}] hits {rec.neighbor_hits} > 2")
    for z, rec in bundle.quz.items():
        check(rec.neighbor_hits <= dminus + 2, f"Q_uz[{z}] hits {rec.neighbor_hits} > d-+2={dminus + 2}")
    return bad


def lemma_stats(bundle: HuBundle) -> dict[str, int]:
    """Max neighbor hits per path kind (0 when a kind is absent)."""
    stats = dict.fromkeys(PATH_KINDS, 0)
    for rec in bundle.paths():
        stats[rec.kind] = max(stats[rec.kind], rec.neighbor_hits)
    return stats
