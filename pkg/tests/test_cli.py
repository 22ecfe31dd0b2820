import subprocess
import sys

import pytest

from mixorient.cli import main
from mixorient.graph import format_graph, from_lists, parse_graph

from conftest import complete, cycle


def write(tmp_path, g, name="g.txt"):
    path = tmp_path / name
    path.write_text(format_graph(g))
    return str(path)


def test_orient_c6(tmp_path, capsys):
    assert main(["orient", write(tmp_path, cycle(6)), "-u", "0"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert sum(line.startswith("o ") for line in out) == 6
    assert out[-1] == "cert u=0 case=AllUndirected bound=7 diam=5 z0=- t0=-"


def test_orient_default_pivot(tmp_path, capsys):
    assert main(["orient", write(tmp_path, cycle(6))]) == 0
    assert "bound=7 diam=5" in capsys.readouterr().out


def test_orient_errors(tmp_path, capsys):
    assert main(["orient", write(tmp_path, from_lists(3, [(0, 1), (1, 2)]))]) == 3
    bad = tmp_path / "bad.txt"
    bad.write_text("x 3\n")
    assert main(["orient", str(bad)]) == 2
    assert main(["orient", str(tmp_path / "missing.txt")]) == 2


def test_oracle(tmp_path, capsys):
    assert main(["oracle", write(tmp_path, cycle(4))]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "value 3" and len(out) == 5
    assert main(["oracle", write(tmp_path, complete(4))]) == 0
    assert capsys.readouterr().out.startswith("value 3\n")
    assert main(["oracle", write(tmp_path, complete(9))]) == 5
    assert main(["oracle", write(tmp_path, from_lists(3, [(0, 1), (1, 2)]))]) == 3


def test_gen(capsys):
    assert main(["gen", "ohat", "5"]) == 0
    assert parse_graph(capsys.readouterr().out).n == 5
    assert main(["gen", "f", "10", "7"]) == 6
    capsys.readouterr()
    assert main(["gen", "random", "8", "4", "0.5", "--seed", "42"]) == 0
    first = capsys.readouterr().out
    main(["gen", "random", "8", "4", "0.5", "--seed", "42"])
    assert capsys.readouterr().out == first
    assert main(["gen", "ohat", "4"]) == 2
    assert main(["gen", "ohat"]) == 2


def test_verify_lemmas_reports_violation(tmp_path, capsys):
    csv_path = tmp_path / "rows.csv"
    code = main(["verify", "lemmas", "--max-n", "6", "--count", "5", "--csv", str(csv_path)])
    header = csv_path.read_text().splitlines()[0]
    assert header == "family,n,delta_star,case,certified_bound,measured_diam,oracle_diam,lemma_stats,seed,runtime_ms"
    assert code in (0, 7)
    assert "suite=lemmas" in capsys.readouterr().out


def test_verify_bounds_small(capsys):
    assert main(["verify", "bounds", "--max-n", "6", "--count", "10"]) == 0
    out = capsys.readouterr()
    assert out.out.startswith("family,n,delta_star")
    assert "violations=0 PASS" in out.err


def test_verify_requires_suite():
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "mixorient", "orient", write(tmp_path, cycle(5))], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1].startswith("cert ")
