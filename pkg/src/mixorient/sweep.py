"""Verification sweeps over the test corpus, one CSV row per case.

Suites:

* ``bounds``     orient every corpus graph and compare with its upper bound
* ``sharpness``  exact oracle against the lower bound of each extremal family
* ``lemmas``     path-count properties of Stage 2 at every pivot of every graph
* ``bipartite``  bipartite upper bound on bipartite families and random bigraphs
"""

from __future__ import annotations

import csv
import io
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from typing import Callable, Iterable, TextIO

from .engine import bipartite_certificate, orient_best, orient_with_bound
from .errors import BadParam, MixorientError
from .generators import (
    FamilyInstance,
    gen_f_family,
    gen_g_family,
    gen_m_family,
    gen_ohat,
    gen_r_mixed,
    gen_random_bipartite,
    gen_random_bridgeless,
    gen_rdelta,
    gen_s0n4,
)
from .hu import PATH_KINDS, build_hu, lemma_stats, lemma_violations
from .oracle import oriented_diameter_exact, verify_lower_bound
from .stage1 import neighbor_cycle_table, partition_neighbors

SUITES = ("bounds", "sharpness", "lemmas", "bipartite")


@dataclass(frozen=True)
class SweepRow:
    family: str
    n: int
    delta_star: int
    case: str
    certified_bound: int | None
    measured_diam: int | None
    oracle_diam: int | None
    lemma_stats: str
    seed: int | None
    runtime_ms: int
    ok: bool = True
    note: str = ""

    @property
    def sort_key(self):
        return (self.family, self.n, self.delta_star, -1 if self.seed is None else self.seed, self.note)


CSV_FIELDS = [f.name for f in fields(SweepRow)][:10]


def format_stats(stats: dict[str, int]) -> str:
    return ";".join(f"{k}={stats.get(k, 0)}" for k in PATH_KINDS)


# -- corpus ----------------------------------------------------------------


def family_corpus(max_n: int = 12) -> list[FamilyInstance]:
    """Every supported non-random family instance with at most ``max_n`` vertices."""
    out = []

    def add(fn: Callable, *args) -> None:
        try:
            out.append(fn(*args))
        except BadParam:
            pass

    for n in range(3, max_n + 1):
        add(gen_ohat, n)
        add(gen_s0n4, n)
        for ds in range(0, n):
            add(gen_g_family, n, ds)
            add(gen_f_family, n, ds)
            add(gen_m_family, n, ds)
        for delta in range(4, n):
            add(gen_rdelta, n, delta)
    return out


def random_corpus(count: int = 200, seed: int = 0, max_n: int = 10) -> list[FamilyInstance]:
    """Seeded random bridgeless mixed graphs, from all-undirected to mostly directed."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(4, max_n)
        extra = rng.randint(0, min(n, n * (n - 1) // 2 - n))
        frac = rng.choice([0.0, 0.25, 0.5, 0.75])
        cycle_frac = rng.choice([0.0, 0.0, 0.2, 0.4])
        out.append(gen_random_bridgeless(n, extra, frac, rng.randrange(2**32), cycle_directed_fraction=cycle_frac))
    return out


def random_undirected_corpus(count: int = 50, seed: int = 0, max_n: int = 10) -> list[FamilyInstance]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(4, max_n)
        extra = rng.randint(0, min(n, n * (n - 1) // 2 - n))
        out.append(gen_random_bridgeless(n, extra, 0.0, rng.randrange(2**32)))
    return out


def random_bipartite_corpus(count: int = 50, seed: int = 0, max_n: int = 12) -> list[FamilyInstance]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a = rng.randint(2, max_n // 2)
        b = rng.randint(2, max_n - a)
        room = a * b - (2 * max(a, b))
        extra = rng.randint(0, max(0, min(4, room)))
        frac = rng.choice([0.0, 0.3, 0.6])
        try:
            out.append(gen_random_bipartite(a, b, extra, frac, rng.randrange(2**32)))
        except BadParam:
            continue
    return out


def bipartite_family_corpus(max_n: int = 14) -> list[FamilyInstance]:
    out = [gen_rdelta(n, d) for d in (4, 5) for n in range(2 * d + 2, max_n + 1, 2)]
    out += [gen_r_mixed(18, 5), gen_r_mixed(20, 6), gen_r_mixed(22, 7)]
    return out


def _seed_of(inst: FamilyInstance) -> int | None:
    return inst.params.get("seed")


# -- per-case workers (module level so a process pool can pickle them) -----


def _oracle_value(inst: FamilyInstance, max_undirected: int) -> int | None:
    if len(inst.graph.undirected_edges()) > max_undirected:
        return None
    return oriented_diameter_exact(inst.graph, max_undirected).value


def bounds_case(inst: FamilyInstance, max_undirected: int = 12) -> SweepRow:
    t = time.perf_counter()
    g = inst.graph
    try:
        if inst.family.startswith("random"):
            _, cert = orient_best(g)
        else:
            _, cert = orient_with_bound(g, inst.u)
    except MixorientError as exc:
        return SweepRow(inst.family, g.n, inst.delta_star, "error", None, None, None, "", _seed_of(inst), _ms(t), False, repr(exc))
    oracle = _oracle_value(inst, max_undirected)
    ok = cert.measured_diam <= cert.certified_bound and (oracle is None or oracle <= cert.measured_diam)
    return SweepRow(
        inst.family, g.n, inst.delta_star, str(cert.case), cert.certified_bound, cert.measured_diam, oracle,
        format_stats(cert.lemma_stats), _seed_of(inst), _ms(t), ok, f"u={cert.u} method={cert.method}",
    )


def sharpness_case(inst: FamilyInstance, max_undirected: int = 20) -> SweepRow:
    t = time.perf_counter()
    g = inst.graph
    lower = inst.lower_bound
    value = oriented_diameter_exact(g, max_undirected).value
    ok = value is not None and verify_lower_bound(g, lower, max_undirected)
    note = f"lower={lower}"
    if inst.family == "m":
        upper = g.n - inst.delta_star + 3
        ok = ok and value <= upper
        note += f" upper={upper}"
    _, cert = orient_with_bound(g, inst.u)
    return SweepRow(
        inst.family, g.n, inst.delta_star, str(cert.case), cert.certified_bound, cert.measured_diam, value,
        format_stats(cert.lemma_stats), _seed_of(inst), _ms(t), ok, note,
    )


def lemma_case(inst: FamilyInstance) -> SweepRow:
    """Every pivot of one graph: Stage-1 sum invariant plus all path-count properties."""
    t = time.perf_counter()
    g = inst.graph
    worst: dict[str, int] = dict.fromkeys(PATH_KINDS, 0)
    problems: list[str] = []
    for u in range(g.n):
        try:
            part = partition_neighbors(g, u)
            if neighbor_cycle_table(part.g1, u).s != part.table.s:
                problems.append(f"u={u}: s changed after Stage 1")
            bundle = build_hu(part)
        except MixorientError as exc:
            problems.append(f"u={u}: {exc!r}")
            continue
        for k, v in lemma_stats(bundle).items():
            worst[k] = max(worst[k], v)
        problems.extend(f"u={u}: {msg}" for msg in lemma_violations(bundle))
    return SweepRow(
        inst.family, g.n, inst.delta_star, "-", None, None, None, format_stats(worst), _seed_of(inst), _ms(t),
        not problems, " | ".join(problems),
    )


def bipartite_case(inst: FamilyInstance, max_undirected: int = 16) -> SweepRow:
    t = time.perf_counter()
    g = inst.graph
    A, B = inst.parts
    try:
        _, cert = bipartite_certificate(g, A, B, inst.u)
    except MixorientError as exc:
        return SweepRow(inst.family, g.n, inst.delta_star, "error", None, None, None, "", _seed_of(inst), _ms(t), False, repr(exc))
    oracle = _oracle_value(inst, max_undirected)
    ok = cert.measured_diam <= cert.certified_bound and (oracle is None or oracle <= cert.measured_diam)
    return SweepRow(
        inst.family, g.n, inst.delta_star, str(cert.case), cert.certified_bound, cert.measured_diam, oracle,
        format_stats(cert.lemma_stats), _seed_of(inst), _ms(t), ok, f"u={cert.u} method={cert.method}",
    )


def _ms(t0: float) -> int:
    return int(round((time.perf_counter() - t0) * 1000))


def _call(job):
    fn, inst, kwargs = job
    return fn(inst, **kwargs)


def _run(fn, instances: Iterable[FamilyInstance], jobs: int = 1, **kwargs) -> list[SweepRow]:
    work = [(fn, inst, kwargs) for inst in instances]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_call, work, chunksize=4))
    else:
        rows = [_call(w) for w in work]
    return sorted(rows, key=lambda r: r.sort_key)


# -- suites ----------------------------------------------------------------


def run_suite(
    name: str,
    *,
    seed: int = 0,
    max_n: int | None = None,
    max_undirected: int | None = None,
    count: int | None = None,
    jobs: int = 1,
) -> list[SweepRow]:
    if name == "bounds":
        max_n = 12 if max_n is None else max_n
        corpus = family_corpus(max_n) + random_corpus(200 if count is None else count, seed, min(max_n, 10))
        return _run(bounds_case, corpus, jobs, max_undirected=12 if max_undirected is None else max_undirected)
    if name == "sharpness":
        max_n = 14 if max_n is None else max_n
        cap = 20 if max_undirected is None else max_undirected
        corpus = [
            inst
            for inst in family_corpus(max_n)
            if inst.family in ("g", "f", "m") and len(inst.graph.undirected_edges()) <= cap
        ]
        return _run(sharpness_case, corpus, jobs, max_undirected=cap)
    if name == "lemmas":
        max_n = 12 if max_n is None else max_n
        corpus = family_corpus(max_n) + random_corpus(200 if count is None else count, seed, min(max_n, 10))
        return _run(lemma_case, corpus, jobs)
    if name == "bipartite":
        max_n = 12 if max_n is None else max_n
        corpus = bipartite_family_corpus(14) + random_bipartite_corpus(50 if count is None else count, seed, max_n)
        return _run(bipartite_case, corpus, jobs, max_undirected=16 if max_undirected is None else max_undirected)
    raise BadParam(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")


def write_csv(rows: Iterable[SweepRow], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for row in rows:
        w.writerow(["" if v is None else v for v in astuple(row)[:10]])


def rows_to_csv(rows: Iterable[SweepRow]) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()


def summarize(name: str, rows: list[SweepRow]) -> str:
    bad = [r for r in rows if not r.ok]
    lines = [f"suite={name} rows={len(rows)} violations={len(bad)} {'PASS' if not bad else 'FAIL'}"]
    for r in bad[:20]:
        lines.append(f"  violation: {r.family} n={r.n} d*={r.delta_star} seed={r.seed} {r.note}")
    return "\n".join(lines)
