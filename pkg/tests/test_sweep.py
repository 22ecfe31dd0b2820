import io

from mixorient.generators import gen_m_family
from mixorient.sweep import CSV_FIELDS, bounds_case, lemma_case, random_corpus, rows_to_csv, run_suite, summarize, write_csv


def test_csv_columns():
    assert CSV_FIELDS == [
        "family", "n", "delta_star", "case", "certified_bound", "measured_diam",
        "oracle_diam", "lemma_stats", "seed", "runtime_ms",
    ]


def test_random_corpus_is_seeded():
    a = [i.to_text() for i in random_corpus(5, seed=3)]
    b = [i.to_text() for i in random_corpus(5, seed=3)]
    assert a == b


def test_bounds_case_row():
    row = bounds_case(gen_m_family(8, 4))
    assert row.ok and row.measured_diam <= row.certified_bound
    assert row.oracle_diam is not None and row.oracle_diam <= row.measured_diam


def test_lemma_case_flags_false_clause():
    row = lemma_case(gen_m_family(6, 2))
    assert not row.ok and "with Z empty" in row.note


def test_deterministic_under_parallelism():
    strip = lambda rows: [r.__class__(**{**r.__dict__, "runtime_ms": 0}) for r in rows]
    serial = strip(run_suite("bounds", seed=1, max_n=7, count=12, jobs=1))
    parallel = strip(run_suite("bounds", seed=1, max_n=7, count=12, jobs=2))
    assert rows_to_csv(serial) == rows_to_csv(parallel)


def test_summary_and_writer():
    rows = run_suite("bipartite", max_n=8, count=4)
    buf = io.StringIO()
    write_csv(rows, buf)
    assert len(buf.getvalue().splitlines()) == len(rows) + 1
    assert summarize("bipartite", rows).startswith(f"suite=bipartite rows={len(rows)} violations=0")
