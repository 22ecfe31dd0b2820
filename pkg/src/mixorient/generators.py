"""Extremal families and random bridgeless mixed graphs.

Every constructor returns a :class:`FamilyInstance` and checks its own
postconditions (connected, bridgeless, the declared degrees at the pivot,
the bipartition where there is one) before returning.  The pivot is always
vertex 0.  Vertex labels used in the constructions are kept in ``names`` and
written into the header comments of the text format.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .engine import check_bipartition
from .errors import BadParam, ConstructionMismatch, NotBipartite, RetriesExhausted, UnsupportedFigureOnly
from .graph import EdgeRecord, MixedGraph, format_graph, pair_key
from .reach import is_bridgeless

FAMILIES = ("ohat", "s0n4", "rdelta", "g", "f", "m", "r", "random", "random-bipartite")


@dataclass
class FamilyInstance:
    family: str
    params: dict
    graph: MixedGraph
    u: int = 0
    parts: tuple[frozenset[int], frozenset[int]] | None = None
    lower_bound: int | None = None
    names: dict[int, str] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def delta_star(self) -> int:
        return self.graph.max_undirected()[0]

    def comments(self) -> list[str]:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"family={self.family} {params}".rstrip(), f"u={self.u}"]
        if self.parts is not None:
            lines.append("A=" + ",".join(map(str, sorted(self.parts[0]))))
            lines.append("B=" + ",".join(map(str, sorted(self.parts[1]))))
        if self.lower_bound is not None:
            lines.append(f"lower_bound={self.lower_bound}")
        if self.names:
            lines.append("names " + " ".join(f"{v}:{self.names[v]}" for v in sorted(self.names)))
        lines.extend(self.notes)
        return lines

    def to_text(self) -> str:
        return format_graph(self.graph, self.comments())


class _Builder:
    """Vertices by label, pivot first; repeated pairs with the same meaning merge."""

    def __init__(self, pivot: str):
        self.ids: dict[str, int] = {}
        self.edges: list[EdgeRecord] = []
        self.seen: dict[tuple[int, int], EdgeRecord] = {}
        self.v(pivot)

    def v(self, label: str) -> int:
        if label not in self.ids:
            self.ids[label] = len(self.ids)
        return self.ids[label]

    def _add(self, e: EdgeRecord) -> None:
        old = self.seen.get(e.key)
        if old is not None:
            if old.directed != e.directed or (e.directed and (old.a, old.b) != (e.a, e.b)):
                raise ConstructionMismatch(f"pair {e.key} given as both {old} and {e}")
            return
        self.seen[e.key] = e
        self.edges.append(e)

    def u(self, a: str, b: str) -> None:
        self._add(EdgeRecord.undirected(self.v(a), self.v(b)))

    def d(self, a: str, b: str) -> None:
        self._add(EdgeRecord.arc(self.v(a), self.v(b)))

    def orient(self, a: str, b: str) -> None:
        """Turn an existing undirected edge into the arc a->b."""
        key = pair_key(self.ids[a], self.ids[b])
        old = self.seen[key]
        new = EdgeRecord.arc(self.ids[a], self.ids[b])
        self.edges[self.edges.index(old)] = new
        self.seen[key] = new

    def cycle(self, labels: list[str]) -> None:
        for a, b in zip(labels, labels[1:] + labels[:1]):
            self.u(a, b)

    def graph(self) -> MixedGraph:
        return MixedGraph(len(self.ids), self.edges)

    def names(self) -> dict[int, str]:
        return {i: label for label, i in self.ids.items()}


def pendant_pieces(budget: int) -> list[int]:
    """Split ``budget`` vertices into paths of order 2 and 3."""
    if budget < 0 or budget == 1:
        raise BadParam(f"cannot split {budget} vertices into copies of P2 and P3")
    if budget % 3 == 0:
        return [3] * (budget // 3)
    if budget % 3 == 2:
        return [3] * (budget // 3) + [2]
    return [3] * (budget // 3 - 1) + [2, 2]


def _attach_pendants(b: _Builder, pivot: str, budget: int) -> None:
    for i, size in enumerate(pendant_pieces(budget)):
        labels = [f"p{i}_{j}" for j in range(1, size + 1)]
        for lab in labels:
            b.u(pivot, lab)
        for a, c in zip(labels, labels[1:]):
            b.u(a, c)


def _check(inst: FamilyInstance, dstar: int | None = None, total: int | None = None, n: int | None = None) -> FamilyInstance:
    g = inst.graph
    if n is not None and g.n != n:
        raise ConstructionMismatch(f"{inst.family}{inst.params}: built {g.n} vertices, expected {n}")
    if not is_bridgeless(g):
        raise ConstructionMismatch(f"{inst.family}{inst.params}: output is not connected and bridgeless")
    _, dplus, dminus, ds = g.degrees(inst.u)
    if dstar is not None:
        if ds != dstar:
            raise ConstructionMismatch(f"{inst.family}{inst.params}: d*(u)={ds}, expected {dstar}")
        if g.max_undirected()[0] != dstar:
            raise ConstructionMismatch(f"{inst.family}{inst.params}: max undirected degree {g.max_undirected()[0]} != {dstar}")
    if total is not None and dplus + dminus != total:
        raise ConstructionMismatch(f"{inst.family}{inst.params}: d+ + d- = {dplus + dminus}, expected {total}")
    if inst.parts is not None:
        try:
            check_bipartition(g, *inst.parts)
        except NotBipartite as exc:
            raise ConstructionMismatch(f"{inst.family}{inst.params}: {exc}") from exc
    return inst


def _finish(family: str, params: dict, b: _Builder, **kw) -> FamilyInstance:
    return FamilyInstance(family, params, b.graph(), 0, names=b.names(), **kw)


# -- undirected seeds ------------------------------------------------------


def _ohat_builder(n: int, pivot: int = 2) -> _Builder:
    if n < 5:
        raise BadParam("Ohat needs n >= 5")
    b = _Builder(f"u{pivot}")
    b.cycle([f"u{i}" for i in range(1, n + 1)])
    b.u(f"u{n}", "u2")
    return b


def gen_ohat(n: int) -> FamilyInstance:
    """Undirected n-cycle u1..un plus the chord un-u2; pivot u2."""
    return _check(_finish("ohat", {"n": n}, _ohat_builder(n)), dstar=3, total=0, n=n)


def _s0n4_builder(n: int) -> _Builder:
    if n < 6:
        raise BadParam("S0n(4) needs n >= 6")
    b = _Builder("u")
    b.cycle(["u"] + [f"w{i}" for i in range(1, n - 2)])
    b.u("p1", "p2")
    b.u("u", "p1")
    b.u("u", "p2")
    return b


def gen_s0n4(n: int) -> FamilyInstance:
    """Cycle u w1..w_{n-3} u plus a triangle u p1 p2."""
    return _check(_finish("s0n4", {"n": n}, _s0n4_builder(n)), dstar=4, total=0, n=n)


def _rdelta_builder(n: int, delta: int) -> tuple[_Builder, int]:
    if delta < 4 or n % 2 or n < 2 * delta + 2:
        raise BadParam("R^Delta_n needs Delta >= 4, n even, n >= 2*Delta + 2")
    half = n // 2
    psi = half - delta + 3
    b = _Builder(f"b{psi}")
    for i in range(1, half + 1):
        b.u(f"b{i}", f"a{i}")
        if i < half:
            b.u(f"a{i}", f"b{i + 1}")
    b.u("b1", f"a{psi - 2}")
    b.u(f"a{psi - 2}", f"b{psi}")
    for i in range(psi, half + 1):
        b.u(f"b{psi}", f"a{i}")
    return b, psi


def _parts_by_prefix(b: _Builder) -> tuple[frozenset[int], frozenset[int]]:
    A = frozenset(i for lab, i in b.ids.items() if lab.startswith("a"))
    return A, frozenset(b.ids.values()) - A


def gen_rdelta(n: int, delta: int) -> FamilyInstance:
    """Undirected equal-partition bigraph with d(b_psi) = Delta; pivot b_psi in part B."""
    b, psi = _rdelta_builder(n, delta)
    inst = _finish("rdelta", {"n": n, "delta": delta}, b, parts=_parts_by_prefix(b))
    inst.notes.append(f"psi={psi}")
    return _check(inst, dstar=delta, total=0, n=n)


# -- sum-zero family -------------------------------------------------------


def gen_g_family(n: int, dstar: int) -> FamilyInstance:
    """Pivot with only undirected edges and no good orientation below n - d* + 4."""
    if not 2 <= dstar < n:
        raise BadParam("G family needs 2 <= d* < n")
    params = {"n": n, "delta_star": dstar}
    if dstar == 2:
        if n < 3:
            raise BadParam("G_{n,2} needs n >= 3")
        b = _Builder("u1")
        b.cycle([f"u{i}" for i in range(1, n + 1)])
    elif dstar == 3:
        b = _ohat_builder(n)
    elif dstar == 4:
        b = _s0n4_builder(n)
    elif dstar == 5:
        if n < 6:
            raise BadParam("G_{n,5} needs n >= 6")
        b = _Builder("u")
        b.cycle(["u"] + [f"u{i}" for i in range(1, n - 3)])
        for x in ("x1", "x2", "x3"):
            b.u("u", x)
        b.d("x1", "x2")
        b.d("x2", "x3")
    elif dstar == 6:
        b = _g6_builder(n)
    else:
        L = n - dstar + 1
        if L < 2:
            raise BadParam(f"G_{{n,{dstar}}} needs n >= {dstar + 1}")
        b = _Builder("u")
        b.cycle(["u"] + [f"u{i}" for i in range(1, L + 1)])
        for x in ("x1", "x2", "x3"):
            b.u("u", x)
        b.d("x1", "x2")
        b.d("x2", "x3")
        _attach_pendants(b, "u", dstar - 5)
    inst = _finish("g", params, b, lower_bound=min(n - 1, n - dstar + 4))
    return _check(inst, dstar=dstar, total=0, n=n)


def _g6_builder(n: int) -> _Builder:
    if n < 7:
        raise BadParam("G_{n,6} needs n >= 7")
    b = _Builder("u")
    vs = ["u"] + [f"v{j}" for j in range(2, n - 2)]
    b.u("u", "u2")
    b.d("u2", "u3")
    b.d("u3", "u4")
    b.u("u4", "u")
    b.u("u", "v2")
    for j in range(2, n - 3):
        b.d(f"v{j}", f"v{j + 1}")
    b.u(vs[-1], "u")
    b.u("u", "u3")
    b.u("u", "v3")
    return b


# -- sum-one family --------------------------------------------------------


def gen_f_family(n: int, dstar: int) -> FamilyInstance:
    """Pivot with exactly one arc; oriented diameter at least min(n-1, n-d*+4) (n-2 for d*=5)."""
    if not 1 <= dstar < n:
        raise BadParam("F family needs 1 <= d* < n")
    if dstar == 7:
        raise UnsupportedFigureOnly("F with d*=7 is only available as a figure")
    params = {"n": n, "delta_star": dstar}
    lower = min(n - 1, n - dstar + 4)
    if dstar == 1:
        if n < 3:
            raise BadParam("F_{n,1} needs n >= 3")
        b = _Builder("u1")
        for i in range(1, n):
            b.d(f"u{i}", f"u{i + 1}")
        b.u(f"u{n}", "u1")
    elif dstar == 2:
        b = _ohat_builder(n)
        b.orient("u2", f"u{n}")
    elif dstar == 3:
        b = _s0n4_builder(n)
        b.orient("u", "w1")
    elif dstar == 4:
        if n < 6:
            raise BadParam("F_{n,4} needs n >= 6")
        b = _Builder("u")
        b.cycle(["u"] + [f"u{i}" for i in range(1, n - 3)])
        b.orient("u", "u1")
        for x in ("x1", "x2", "x3"):
            b.u("u", x)
        b.d("x1", "x2")
        b.d("x2", "x3")
    elif dstar == 5:
        b = _g6_builder(n)
        b.orient("u", "u3")
        lower = min(n - 1, n - 2)
    else:
        L = n - dstar
        if L < 2:
            raise BadParam(f"F_{{n,{dstar}}} needs n >= {dstar + 2}")
        b = _Builder("u")
        b.cycle(["u"] + [f"u{i}" for i in range(1, L + 1)])
        b.orient("u", "u1")
        for x in ("x1", "x2", "x3", "x4", "x5"):
            b.u("u", x)
        b.d("x1", "x2")
        b.d("x2", "x3")
        b.d(f"u{L}", "x4")
        b.d("x5", "u1")
        _attach_pendants(b, "u", dstar - 6)
    inst = _finish("f", params, b, lower_bound=lower)
    return _check(inst, dstar=dstar, total=1, n=n)


# -- sum-two-plus family ---------------------------------------------------


def gen_m_family(n: int, dstar: int, k: int = 1, l: int = 1, delta: int = 5) -> FamilyInstance:
    """Pivot with at least two arcs; oriented diameter at least min(n-1, n-d*+3).

    ``k``/``l`` are the pivot's out/in arc counts for d* >= 4; ``delta`` picks
    the undirected seed graph for d* = 3.
    """
    if not 0 <= dstar < n:
        raise BadParam("M family needs 0 <= d* < n")
    if dstar == 5:
        raise UnsupportedFigureOnly("M with d*=5 is only available as a figure")
    params: dict = {"n": n, "delta_star": dstar}
    if dstar == 0:
        if n < 2:
            raise BadParam("M_{n,0} needs n >= 2")
        b = _Builder("x1")
        for i in range(1, n + 1):
            b.d(f"x{i}", f"x{i % n + 1}")
    elif dstar == 1:
        if n < 4:
            raise BadParam("M_{n,1} needs n >= 4")
        b = _Builder("x1")
        for i in range(1, n + 1):
            b.d(f"x{i}", f"x{i % n + 1}")
        b.u("x1", "x3")
    elif dstar == 2:
        if n < 5:
            raise BadParam("M_{n,2} needs n >= 5")
        b = _Builder("u")
        for i in range(2, n):
            b.d(f"x{i}", f"x{i + 1}")
        b.u("u", "x2")
        b.u(f"x{n}", "u")
        b.d("u", "x3")
        b.d("u", "x4")
    elif dstar == 3:
        params["delta"] = delta
        if delta < 5:
            raise BadParam("M_{n,3} needs a seed with Delta >= 5")
        b, psi = _rdelta_builder(n, delta)
        for i in range(1, psi):
            b.orient(f"a{i}", f"b{i}")
        for j in range(psi + 1, n // 2 + 1):
            b.orient(f"b{psi}", f"a{j}")
    else:
        params.update(k=k, l=l)
        if k < 1 or l < 0 or k + l < 2:
            raise BadParam("M_{n,d*} needs k >= 1, l >= 0 and k + l >= 2")
        m = n - dstar + 1 - l - k
        if m < 2:
            raise BadParam(f"M_{{n,{dstar}}} with k={k}, l={l} needs n >= {dstar + 1 + k + l}")
        b = _Builder("u")
        b.cycle(["u"] + [f"u{i}" for i in range(1, m + 1)])
        b.orient("u", "u1")
        xs = [f"x{i}" for i in range(1, l + 3)]
        for a, c in zip(xs, xs[1:]):
            b.d(a, c)
        b.u("u", xs[0])
        for x in xs[1:-1]:
            b.d(x, "u")
        b.u("u", xs[-1])
        ys = [f"y{j}" for j in range(1, k + 1)]
        for a, c in zip(ys, ys[1:]):
            b.d(a, c)
        b.u("u", ys[0])
        for y in ys[1:]:
            b.d("u", y)
        b.d(ys[-1], "u1")
        _attach_pendants(b, "u", dstar - 4)
    inst = _finish("m", params, b, lower_bound=min(n - 1, n - dstar + 3))
    if dstar == 3:
        inst.notes.append(f"psi={psi}")
    return _check(inst, dstar=dstar, n=n)


# -- mixed bipartite family ------------------------------------------------


def _hk(b: _Builder, k: int) -> None:
    xs = [f"x{i}" for i in range(1, 2 * k + 5)]
    xs[1] = "u2"
    b.cycle(["u1"] + xs[1:])
    b.cycle(["u2", "a1", "a2", "a3"])
    for d in range(1, k + 1):
        b.d("u1", xs[2 * d + 1])
    b.orient("u2", "x3")
    for i in range(3, 2 * k + 4):
        b.orient(f"x{i}", f"x{i + 1}")


def _hl(b: _Builder, l: int) -> None:
    ys = [f"y{i}" for i in range(1, 2 * l + 5)]
    ys[-1] = "b4"
    b.cycle(["u1"] + ys[1:])
    b.cycle(["b4", "b1", "b2", "b3"])
    for d in range(1, l + 1):
        b.d(ys[2 * d + 1], "u1")
    b.orient(ys[-2], "b4")
    for i in range(2, 2 * l + 3):
        b.orient(f"y{i}", f"y{i + 1}")


def _hr(b: _Builder, r: int) -> None:
    zs = ["u1"] + [f"z{i}" for i in range(2, 2 * r - 7)]
    b.cycle(zs)
    for d in range(1, r - 5):
        b.u("u1", zs[2 * d + 1])


def _parity_parts(b: _Builder) -> tuple[frozenset[int], frozenset[int]]:
    """Even label index -> A.  u2 = x2 = a0, b4 = y_{2l+4} = b0 are even, u1 odd."""
    A = set()
    for label, i in b.ids.items():
        digits = "".join(ch for ch in label if ch.isdigit())
        if int(digits) % 2 == 0:
            A.add(i)
    return frozenset(A), frozenset(b.ids.values()) - A


def gen_r_mixed(n: int, dstar: int, k: int | None = None, l: int | None = None) -> FamilyInstance:
    """Equal-partition mixed bigraph with oriented diameter at least n - 2d* + 8; pivot u1."""
    if not 5 <= dstar < n:
        raise BadParam("R family needs 5 <= d* < n")
    if n % 2:
        raise ConstructionMismatch("R family has an even number of vertices by construction")
    budget = (n - 14) // 2 if dstar == 5 else n // 2 - 2 - dstar
    if k is None and l is None:
        k = budget - budget // 2
        l = budget // 2
    elif k is None:
        k = budget - l
    elif l is None:
        l = budget - k
    if k < 0 or l < 0 or k + l != budget:
        raise BadParam(f"R_{{{n},{dstar}}} needs k + l = {budget} with k, l >= 0")
    if k + l > n // 2 - 2 or (dstar >= 6 and dstar > n // 2 - 3):
        raise BadParam("parameters outside l + k <= n/2 - 2, r <= n/2 - 3")
    b = _Builder("u1")
    _hk(b, k)
    _hl(b, l)
    if dstar == 5:
        b.u("a4", "u1")
        b.d("a4", "x3")
    else:
        _hr(b, dstar)
    inst = _finish("r", {"n": n, "delta_star": dstar, "k": k, "l": l}, b, parts=_parity_parts(b), lower_bound=n - 2 * dstar + 8)
    _check(inst, dstar=dstar, n=n)
    A, B = inst.parts
    if len(A) != len(B):
        raise ConstructionMismatch(f"parts have sizes {len(A)} and {len(B)}")
    _, dplus, dminus, _ = inst.graph.degrees(0)
    if (dplus, dminus) != (k, l):
        raise ConstructionMismatch(f"u1 has d+={dplus}, d-={dminus}, expected {k}, {l}")
    return inst


def r_forced_arcs(inst: FamilyInstance) -> list[tuple[int, int]]:
    """Arcs u1->x2, x_{2k+4}->u1, u1->y2, y_{2l+4}->u1 of every strong orientation."""
    ids = {label: i for i, label in inst.names.items()}
    k, l = inst.params["k"], inst.params["l"]
    return [
        (ids["u1"], ids["u2"]),
        (ids[f"x{2 * k + 4}"], ids["u1"]),
        (ids["u1"], ids["y2"]),
        (ids["b4"], ids["u1"]),
    ]


# -- random ----------------------------------------------------------------


def gen_random_bridgeless(
    n: int,
    extra_edges: int = 0,
    directed_fraction: float = 0.0,
    seed: int | None = None,
    *,
    cycle_directed_fraction: float = 0.0,
    max_retries: int = 200,
) -> FamilyInstance:
    """Hamiltonian cycle on a random permutation plus random chords.

    Chords become arcs with probability ``directed_fraction``; cycle edges
    with ``cycle_directed_fraction``.  Resampled until bridgeless.
    """
    if n < 3:
        raise BadParam("random graphs need n >= 3")
    if not (0 <= directed_fraction <= 1 and 0 <= cycle_directed_fraction <= 1):
        raise BadParam("fractions must lie in [0, 1]")
    max_extra = n * (n - 1) // 2 - n
    if extra_edges < 0 or extra_edges > max_extra:
        raise BadParam(f"extra_edges must lie in 0..{max_extra}")
    rng = random.Random(seed)
    for _ in range(max_retries):
        perm = list(range(n))
        rng.shuffle(perm)
        edges = []
        used = set()
        for i in range(n):
            a, c = perm[i], perm[(i + 1) % n]
            used.add(pair_key(a, c))
            edges.append(_maybe_arc(rng, a, c, cycle_directed_fraction))
        free = [(a, c) for a in range(n) for c in range(a + 1, n) if (a, c) not in used]
        for a, c in rng.sample(free, extra_edges):
            edges.append(_maybe_arc(rng, a, c, directed_fraction))
        g = MixedGraph(n, edges)
        if is_bridgeless(g):
            params = {"n": n, "extra": extra_edges, "directed_fraction": directed_fraction, "seed": seed}
            if cycle_directed_fraction:
                params["cycle_directed_fraction"] = cycle_directed_fraction
            return FamilyInstance("random", params, g, 0)
    raise RetriesExhausted(f"no bridgeless sample in {max_retries} tries")


def _maybe_arc(rng: random.Random, a: int, c: int, p: float) -> EdgeRecord:
    if p and rng.random() < p:
        return EdgeRecord.arc(a, c) if rng.random() < 0.5 else EdgeRecord.arc(c, a)
    return EdgeRecord.undirected(a, c)


def gen_random_bipartite(
    size_a: int,
    size_b: int,
    extra_edges: int = 0,
    directed_fraction: float = 0.0,
    seed: int | None = None,
    *,
    max_retries: int = 200,
) -> FamilyInstance:
    """Random bridgeless bigraph: an alternating cycle, ears of length 2 for the
    surplus side, then random A-B chords.  Vertices 0..|A|-1 form part A."""
    if min(size_a, size_b) < 2:
        raise BadParam("both parts need at least 2 vertices")
    rng = random.Random(seed)
    A = list(range(size_a))
    B = list(range(size_a, size_a + size_b))
    n = size_a + size_b
    for _ in range(max_retries):
        pa, pb = A[:], B[:]
        rng.shuffle(pa)
        rng.shuffle(pb)
        c = min(size_a, size_b)
        ring = [v for pair in zip(pa[:c], pb[:c]) for v in pair]
        pairs = [(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]
        for v in pa[c:]:
            pairs += [(v, w) for w in rng.sample(pb[:c], 2)]
        for v in pb[c:]:
            pairs += [(v, w) for w in rng.sample(pa[:c], 2)]
        used = {pair_key(*p) for p in pairs}
        free = [(a, b) for a in A for b in B if pair_key(a, b) not in used]
        if extra_edges > len(free):
            raise BadParam(f"at most {len(free)} extra edges fit")
        edges = [EdgeRecord.undirected(a, b) for a, b in pairs]
        for a, b in rng.sample(free, extra_edges):
            edges.append(_maybe_arc(rng, a, b, directed_fraction))
        g = MixedGraph(n, edges)
        if is_bridgeless(g):
            params = {"a": size_a, "b": size_b, "extra": extra_edges, "directed_fraction": directed_fraction, "seed": seed}
            inst = FamilyInstance("random-bipartite", params, g, 0, parts=(frozenset(A), frozenset(B)))
            inst.u = max(B, key=lambda v: (g.degrees(v)[3], -v))
            return _check(inst)
    raise RetriesExhausted(f"no bridgeless sample in {max_retries} tries")


def generate(family: str, *args, **kwargs) -> FamilyInstance:
    """Dispatch by family name."""
    table = {
        "ohat": gen_ohat,
        "s0n4": gen_s0n4,
        "rdelta": gen_rdelta,
        "g": gen_g_family,
        "f": gen_f_family,
        "m": gen_m_family,
        "r": gen_r_mixed,
        "random": gen_random_bridgeless,
        "random-bipartite": gen_random_bipartite,
    }
    if family not in table:
        raise BadParam(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    return table[family](*args, **kwargs)
