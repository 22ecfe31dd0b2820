"""Case analysis at the pivot, extension to a strong orientation, certification.

``build_du`` runs Stage 1 and Stage 2 at a pivot u and applies the single
arc-reversal repair when the attaining paths call for it.  The resulting
oriented subgraph D_u is then extended to a strong orientation of the whole
graph, and the measured diameter is checked against the bound for the case.

Besides the degree bound every certificate carries a *structural* bound
derived from D_u itself: any two vertices of D_u are joined inside D_u by a
path meeting at most ``max_hits`` neighbors of u, and every vertex outside
N(u) is visited at most once, so no shortest path in the oriented graph is
longer than ``n - d(u) + max_hits - 1``.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from .errors import BoundViolated, ConstructionError, MultipleT0, MultipleZ0, NoStrongExtension, NotBipartite, NotBridgeless
from .graph import EdgeRecord, MixedGraph, Pair, pair_key
from .hu import Arc, HuBundle, build_hu, lemma_stats
from .reach import diameter, distance_matrix, is_bridgeless, is_connected, shortest_path
from .stage1 import partition_neighbors

log = logging.getLogger(__name__)


class CaseId(str, Enum):
    ALL_UNDIRECTED = "AllUndirected"
    SUM_ZERO = "SumZero"
    SUM_ONE = "SumOne"
    SUM_ONE_SMALL_DEG = "SumOneSmallDeg"
    SUM_TWO_PLUS_ONE_SIDED = "SumTwoPlusOneSided"
    MIXED_BOTH_SIDES = "MixedBothSides"

    def __str__(self) -> str:
        return self.value


def classify(g: MixedGraph, u: int) -> CaseId:
    _, dplus, dminus, dstar = g.degrees(u)
    if g.is_undirected:
        return CaseId.ALL_UNDIRECTED
    total = dplus + dminus
    if total == 0:
        return CaseId.SUM_ZERO
    if total == 1:
        return CaseId.SUM_ONE if dstar >= 6 else CaseId.SUM_ONE_SMALL_DEG
    if dplus == 0 or dminus == 0:
        return CaseId.SUM_TWO_PLUS_ONE_SIDED
    return CaseId.MIXED_BOTH_SIDES


def degree_bound(g: MixedGraph, u: int) -> int:
    n = g.n
    _, dplus, dminus, dstar = g.degrees(u)
    total = dplus + dminus
    if g.is_undirected or total >= 2 or (dstar == 5 and total == 1):
        return n - dstar + 3
    return n - dstar + 4


def bipartite_bound(g: MixedGraph, A: Iterable[int], u: int) -> int:
    size_a = len(set(A))
    d, dplus, dminus, dstar = g.degrees(u)
    if g.is_undirected:
        return 2 * (size_a - d) + 7
    if dplus + dminus >= 2:
        return 2 * (size_a - dstar) + 8
    return 2 * (size_a - dstar) + 10


class Orientation:
    """Direction per undirected edge, keyed by the unordered endpoint pair."""

    def __init__(self, assignment: Mapping[Pair, Arc] | None = None):
        self.assignment: dict[Pair, Arc] = {}
        for key, arc in (assignment or {}).items():
            if pair_key(*arc) != key:
                raise ValueError(f"arc {arc} does not match pair {key}")
            self.assignment[key] = arc

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, key: Pair) -> Arc:
        return self.assignment[key]

    def __contains__(self, key: Pair) -> bool:
        return key in self.assignment

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Orientation) and self.assignment == other.assignment

    def __repr__(self) -> str:
        return f"Orientation({len(self.assignment)} edges)"

    def is_total(self, g: MixedGraph) -> bool:
        return all(e.key in self.assignment for e in g.undirected_edges())

    def apply(self, g: MixedGraph) -> MixedGraph:
        """g with every assigned undirected edge replaced by its arc."""
        mapping = {}
        for e in g.undirected_edges():
            if e.key in self.assignment:
                mapping[e.key] = EdgeRecord.arc(*self.assignment[e.key])
        return g.replace_edges(mapping)

    def lines(self, g: MixedGraph) -> list[str]:
        return [f"o {a} {b}" for a, b in (self.assignment[e.key] for e in g.undirected_edges() if e.key in self.assignment)]


def format_orientation(o: Orientation, g: MixedGraph) -> str:
    return "".join(line + "\n" for line in o.lines(g))


@dataclass
class BoundCertificate:
    u: int
    case: CaseId
    certified_bound: int
    structural_bound: int
    measured_diam: int
    max_neighbor_hits: int
    z0: int | None = None
    t0: int | None = None
    method: str = "construction"
    reversed_arc: Arc | None = None
    mirrored: bool = False
    lemma_stats: dict[str, int] = field(default_factory=dict)
    flags: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.measured_diam <= self.certified_bound

    def line(self) -> str:
        def opt(v):
            return "-" if v is None else str(v)

        return (
            f"cert u={self.u} case={self.case} bound={self.certified_bound} diam={self.measured_diam}"
            f" z0={opt(self.z0)} t0={opt(self.t0)}"
        )


@dataclass
class DuResult:
    u: int
    case: CaseId
    arcs: frozenset[Arc]
    bundle: HuBundle
    z0: int | None = None
    t0: int | None = None
    mirrored: bool = False
    reversed_arc: Arc | None = None
    flags: list[str] = field(default_factory=list)

    @property
    def vertices(self) -> frozenset[int]:
        vs = {self.u}
        for a, b in self.arcs:
            vs.update((a, b))
        return frozenset(vs)


# -- z0 / t0 -------------------------------------------------------------


def _common(candidate_sets: list[set[int]]) -> set[int]:
    common = set(candidate_sets[0])
    for s in candidate_sets[1:]:
        common &= s
    return common


def detect_z0(bundle: HuBundle) -> int | None:
    """The conflicted vertex shared by every Q_yu with d+(u)+3 neighbor hits."""
    p = bundle.partition
    _, dplus, _, _ = p.g.degrees(p.u)
    cap = dplus + 3
    attaining = [rec for rec in bundle.qyu.values() if rec.neighbor_hits >= cap]
    if not attaining:
        return None
    sets = [set(rec.vertices) & p.z & bundle.hx_vertices for rec in attaining]
    common = _common(sets)
    if len(common) != 1:
        raise MultipleZ0(f"attaining Q_yu paths share conflicted vertices {sorted(common)}")
    return common.pop()


def detect_t0(bundle: HuBundle) -> int | None:
    """The Y+Z vertex shared by every P_ux (x in X2) and Q_uz with d-(u)+2 hits."""
    p = bundle.partition
    _, _, dminus, _ = p.g.degrees(p.u)
    cap = dminus + 2
    attaining = [bundle.pux[x] for x in sorted(p.x2) if bundle.pux[x].neighbor_hits >= cap]
    attaining += [rec for rec in bundle.quz.values() if rec.neighbor_hits >= cap]
    if not attaining:
        return None
    side = p.Y | p.z
    sets = [set(rec.vertices[1:-1]) & side for rec in attaining]
    common = _common(sets)
    if len(common) != 1:
        raise MultipleT0(f"attaining out-paths share Y+Z vertices {sorted(common)}")
    return common.pop()


# -- D_u -----------------------------------------------------------------


def _strong_on(arcs: Iterable[Arc], vertices: frozenset[int]) -> bool:
    succ: dict[int, list[int]] = {v: [] for v in vertices}
    pred: dict[int, list[int]] = {v: [] for v in vertices}
    for a, b in arcs:
        succ[a].append(b)
        pred[b].append(a)
    start = next(iter(vertices))
    for adj in (succ, pred):
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(vertices):
            return False
    return True


def build_du(g: MixedGraph, u: int) -> DuResult:
    """Oriented subgraph D_u around the pivot, with the case's reversal applied.

    A pivot with only in-arcs among its directed edges is handled on the
    reversed graph (where it has only out-arcs) and the result flipped back.
    """
    case = classify(g, u)
    _, dplus, dminus, _ = g.degrees(u)
    mirrored = dplus == 0 and dminus >= 1
    h = g.reversed() if mirrored else g
    bundle = build_hu(partition_neighbors(h, u))
    arcs = set(bundle.hu_arcs)
    z0 = t0 = None
    reversed_arc = None
    flags: list[str] = []

    want_reverse = False
    if case in (CaseId.SUM_ONE_SMALL_DEG, CaseId.SUM_TWO_PLUS_ONE_SIDED):
        z0 = detect_z0(bundle)
        want_reverse = z0 is not None
    elif case == CaseId.MIXED_BOTH_SIDES:
        z0 = detect_z0(bundle)
        t0 = detect_t0(bundle)
        want_reverse = z0 is not None and t0 is not None and z0 != t0

    if want_reverse:
        if (u, z0) in arcs:
            arcs.discard((u, z0))
            arcs.add((z0, u))
            reversed_arc = (z0, u)
            vertices = frozenset({u} | {v for arc in arcs for v in arc})
            if not _strong_on(arcs, vertices):
                raise ConstructionError(f"reversing {u}->{z0} broke strong connectivity of H_u")
        else:
            flags.append(f"z0-arc-absent:{u}->{z0}")
            log.info("pivot %d: arc %d->%d not in H_u, reversal skipped", u, u, z0)

    if mirrored:
        arcs = {(b, a) for a, b in arcs}
        if reversed_arc is not None:
            reversed_arc = (reversed_arc[1], reversed_arc[0])
        flags.append("mirrored")
    return DuResult(u, case, frozenset(arcs), bundle, z0, t0, mirrored, reversed_arc, flags)


def max_neighbor_hits(arcs: Iterable[Arc], vertices: Iterable[int], nbrs: frozenset[int]) -> int:
    """Max over ordered pairs of the fewest N(u) vertices on a path inside the digraph.

    0-1 BFS with vertex weights; raises if the digraph is not strong.
    """
    vertices = sorted(set(vertices))
    succ: dict[int, list[int]] = {v: [] for v in vertices}
    for a, b in arcs:
        succ[a].append(b)
    worst = 0
    for s in vertices:
        cost = {s: int(s in nbrs)}
        dq = deque([s])
        while dq:
            x = dq.popleft()
            for y in succ[x]:
                c = cost[x] + int(y in nbrs)
                if y not in cost or c < cost[y]:
                    cost[y] = c
                    if y in nbrs:
                        dq.append(y)
                    else:
                        dq.appendleft(y)
        if len(cost) != len(vertices):
            raise ConstructionError(f"D_u is not strong: {s} reaches only {len(cost)} of {len(vertices)}")
        worst = max([worst] + [c for t, c in cost.items() if t != s])
    return worst


# -- extension -----------------------------------------------------------


def _fixed_graph(g: MixedGraph, fixed: Mapping[Pair, Arc]) -> MixedGraph:
    mapping = {}
    for key, (a, b) in fixed.items():
        e = g.edge_between(a, b)
        if e is None:
            raise ValueError(f"no edge {a}-{b}")
        if e.directed:
            if (e.a, e.b) != (a, b):
                raise ValueError(f"fixed arc {a}->{b} contradicts {e}")
            continue
        mapping[key] = EdgeRecord.arc(a, b)
    return g.replace_edges(mapping)


def _backtrack(current: MixedGraph, todo: list[EdgeRecord]) -> MixedGraph | None:
    if not is_connected(current):
        return None
    if not todo:
        return current
    e, rest = todo[0], todo[1:]
    for tail, head in ((e.a, e.b), (e.b, e.a)):
        found = _backtrack(current.with_arc(tail, head), rest)
        if found is not None:
            return found
    return None


def extend_to_strong(g: MixedGraph, fixed: Mapping[Pair, Arc] | Orientation = ()) -> Orientation:
    """Total strong orientation agreeing with ``fixed`` on every fixed edge.

    Each free edge {a,b}, in input order, becomes b->a when a->b can still be
    travelled without it, else a->b.  Needs g with ``fixed`` applied to be
    connected and bridgeless.
    """
    if isinstance(fixed, Orientation):
        fixed = fixed.assignment
    fixed = dict(fixed)
    current = _fixed_graph(g, fixed)
    if not is_bridgeless(current):
        raise NoStrongExtension("graph with the fixed arcs applied is not connected and bridgeless")
    for e in current.undirected_edges():
        a, b = e.a, e.b
        if shortest_path(current, a, b, skip=e.key) is not None:
            step = current.with_arc(b, a)
        else:
            step = current.with_arc(a, b)
        if not is_connected(step):
            log.warning("greedy extension lost connectivity at %s; falling back to search", e)
            found = _backtrack(current, current.undirected_edges())
            if found is None:
                raise NoStrongExtension("no strong completion exists")
            current = found
            break
        current = step
    result = {}
    for e in g.undirected_edges():
        oriented = current.edge_between(e.a, e.b)
        result[e.key] = (oriented.a, oriented.b)
    return Orientation(result)


# -- repair --------------------------------------------------------------


def _score(g: MixedGraph) -> tuple[float, float]:
    rows = distance_matrix(g)
    flat = [d for row in rows for d in row]
    return max(flat), sum(flat)


def local_search(g: MixedGraph, start: Orientation, target: int, max_rounds: int = 200) -> Orientation:
    """Single-edge flips that keep strong connectivity, best improvement first."""
    current = dict(start.assignment)
    best = _score(Orientation(current).apply(g))
    for _ in range(max_rounds):
        if best[0] <= target:
            break
        improved = None
        for e in g.undirected_edges():
            a, b = current[e.key]
            trial = dict(current)
            trial[e.key] = (b, a)
            oriented = Orientation(trial).apply(g)
            if not is_connected(oriented):
                continue
            score = _score(oriented)
            if score < best and (improved is None or score < improved[0]):
                improved = (score, trial)
        if improved is None:
            break
        best, current = improved
    return Orientation(current)


def _repair(g: MixedGraph, orientation: Orientation, target: int, exact_limit: int) -> tuple[Orientation, str] | None:
    found = local_search(g, orientation, target)
    if diameter(found.apply(g)) <= target:
        return found, "local-search"
    if len(g.undirected_edges()) <= exact_limit:
        from .oracle import find_orientation_within

        witness = find_orientation_within(g, target, limit=exact_limit)
        if witness is not None:
            return witness, "exact-search"
    return None


# -- certification -------------------------------------------------------


def _certify(
    g: MixedGraph,
    u: int,
    certified: int,
    structural_of,
    repair: bool,
    exact_limit: int,
) -> tuple[Orientation, BoundCertificate]:
    du = build_du(g, u)
    fixed = {pair_key(a, b): (a, b) for a, b in du.arcs}
    orientation = extend_to_strong(g, fixed)
    oriented = orientation.apply(g)
    measured = diameter(oriented)
    nbrs = g.neighbors(u)
    hits = max_neighbor_hits(du.arcs, du.vertices, nbrs) if len(du.vertices) > 1 else 0
    structural = structural_of(hits)
    if measured > structural:
        raise BoundViolated(f"pivot {u}: measured {measured} exceeds structural bound {structural}")
    cert = BoundCertificate(
        u=u,
        case=du.case,
        certified_bound=certified,
        structural_bound=structural,
        measured_diam=int(measured),
        max_neighbor_hits=hits,
        z0=du.z0,
        t0=du.t0,
        reversed_arc=du.reversed_arc,
        mirrored=du.mirrored,
        lemma_stats=lemma_stats(du.bundle),
        flags=list(du.flags),
    )
    if structural > certified:
        cert.flags.append(f"structural+{structural - certified}")
    if measured <= certified:
        return orientation, cert
    if structural > certified and repair:
        fixed_up = _repair(g, orientation, certified, exact_limit)
        if fixed_up is not None:
            orientation, method = fixed_up
            cert.measured_diam = int(diameter(orientation.apply(g)))
            cert.method = method
            log.info("pivot %d: construction gave %d > %d, repaired by %s", u, measured, certified, method)
            return orientation, cert
    raise BoundViolated(f"pivot {u}: measured diameter {measured} exceeds certified bound {certified} ({cert.case})")


def orient_with_bound(g: MixedGraph, u: int, *, repair: bool = True, exact_limit: int = 20) -> tuple[Orientation, BoundCertificate]:
    """Strong orientation built at pivot u, with its diameter certificate."""
    if not is_bridgeless(g):
        raise NotBridgeless("input must be connected and bridgeless")
    g._check_vertex(u)
    if g.n == 1:
        return Orientation(), BoundCertificate(u, classify(g, u), degree_bound(g, u), 0, 0, 0)
    d = g.degrees(u)[0]
    return _certify(g, u, degree_bound(g, u), lambda hits: g.n - d + hits - 1, repair, exact_limit)


def orient_best(g: MixedGraph, **kwargs) -> tuple[Orientation, BoundCertificate]:
    """Best certificate over the vertices of maximum undirected degree."""
    if not is_bridgeless(g):
        raise NotBridgeless("input must be connected and bridgeless")
    _, candidates = g.max_undirected()
    results = [orient_with_bound(g, u, **kwargs) for u in sorted(candidates)]
    return min(results, key=lambda r: (r[1].certified_bound, r[1].measured_diam, r[1].u))


def check_bipartition(g: MixedGraph, A: Iterable[int], B: Iterable[int]) -> None:
    A, B = set(A), set(B)
    if A & B or A | B != set(range(g.n)):
        raise NotBipartite("parts must partition the vertex set")
    for e in g.edges:
        if (e.a in A) == (e.b in A):
            raise NotBipartite(f"edge {e} lies inside one part")


def bipartite_certificate(
    g: MixedGraph, A: Iterable[int], B: Iterable[int], u: int, *, repair: bool = True, exact_limit: int = 20
) -> tuple[Orientation, BoundCertificate]:
    """Orientation at pivot u of B, certified against the bipartite bound."""
    A, B = set(A), set(B)
    check_bipartition(g, A, B)
    if u not in B:
        raise NotBipartite(f"pivot {u} must lie in part B")
    if not is_bridgeless(g):
        raise NotBridgeless("input must be connected and bridgeless")
    d = g.degrees(u)[0]
    # every path alternates sides, so it visits at most |A|-d(u)+hits vertices of A
    return _certify(g, u, bipartite_bound(g, A, u), lambda hits: 2 * (len(A) - d + hits), repair, exact_limit)


def all_pairs_ok(g: MixedGraph, o: Orientation) -> bool:
    """Total, strong and compatible with every original arc."""
    if not o.is_total(g):
        return False
    for e in g.arcs():
        if e.key in o and o[e.key] != (e.a, e.b):
            return False
    return is_connected(o.apply(g))


__all__ = [
    "BoundCertificate",
    "CaseId",
    "DuResult",
    "Orientation",
    "all_pairs_ok",
    "bipartite_bound",
    "bipartite_certificate",
    "build_du",
    "check_bipartition",
    "classify",
    "detect_t0",
    "detect_z0",
    "extend_to_strong",
    "format_orientation",
    "local_search",
    "max_neighbor_hits",
    "orient_best",
    "orient_with_bound",
    "degree_bound",
]
