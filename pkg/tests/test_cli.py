import io
import subprocess
import sys
from pathlib import Path

import pytest

from twoproper.cli import main
from twoproper.graph import parse_edge_list, parse_graph6

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv, golden, code",
    [
        (["invariants", DATA / "f5.txt"], "invariants_f5.txt", 0),
        (["invariants", DATA / "k5.txt"], "invariants_k5.txt", 0),
        (["invariants", DATA / "h34.txt"], "invariants_h34.txt", 0),
        (["partition", DATA / "f5.txt"], "partition_f5.txt", 0),
        (["partition", "--almost", DATA / "f5.txt"], "partition_f5_almost.txt", 0),
        (["partition", DATA / "c6.txt"], "partition_c6.txt", 0),
        (["partition", DATA / "gt34.txt"], "partition_gt34.txt", 2),
        (["theorem-check", "--exhaustive", "5", "ind", "--jobs", "1"], "theorem_check_ind_5.txt", 0),
    ],
)
def test_golden_outputs(capsys, argv, golden, code):
    got_code, out, _ = run(capsys, *argv)
    assert got_code == code
    assert out == (GOLDEN / golden).read_text()


def test_invariants_key_values(capsys):
    _, out, _ = run(capsys, "invariants", DATA / "f5.txt")
    assert out.startswith("n=5 delta=2 sigma2=4 pi2=4 sigma_star=inf alpha_star=2")


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", DATA / "h34.txt", DATA / "h34_three_parts.part")[0] == 0
    code, out, _ = run(capsys, "verify", DATA / "c6.txt", DATA / "c6_split.part")
    assert code == 1 and out.count("problem=") == 2
    assert run(capsys, "verify", DATA / "f5.txt", DATA / "f5_almost.part", "--kind", "almost")[0] == 0
    assert run(capsys, "verify", DATA / "f5.txt", DATA / "f5_almost.part", "--kind", "2proper")[0] == 1
    code, _, err = run(capsys, "verify", DATA / "c6.txt", DATA / "broken.part")
    assert code == 4 and "line 3" in err
    assert run(capsys, "verify", DATA / "c6.txt", DATA / "missing.part")[0] == 4


def test_partition_round_trips_through_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "partition", DATA / "h34.txt")
    assert code == 0 and "exceptional: H(3,4)" in out
    code, out, _ = run(capsys, "oracle", DATA / "h34.txt")
    assert code == 0 and "min_parts=3" in out
    part = tmp_path / "h34.part"
    part.write_text(out[out.index("kind="):])
    assert run(capsys, "verify", DATA / "h34.txt", part)[0] == 0


def test_oracle_subcommand(capsys):
    code, out, _ = run(capsys, "oracle", DATA / "f5.txt")
    assert code == 0 and out.splitlines() == ["sigma_star=inf", "alpha_star=2", "min_parts=none"]
    code, out, _ = run(capsys, "oracle", "--almost", DATA / "f5.txt")
    assert "min_parts=2" in out and "kind=almost" in out


def test_oracle_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("PP_ORACLE_MAX_N", "4")
    code, _, err = run(capsys, "oracle", DATA / "f5.txt")
    assert code == 1 and "exceeds oracle budget 4" in err


def test_stdin_and_graph6_sniffing(capsys, monkeypatch):
    code, out, _ = run(capsys, "invariants", "-", stdin="Bw\n", monkeypatch=monkeypatch)
    assert code == 0 and out.startswith("n=3 ")
    code, out, _ = run(capsys, "invariants", stdin="0 1\n1 2\n", monkeypatch=monkeypatch)
    assert out.startswith("n=3 delta=1 sigma2=2")


def test_bad_graph_input(capsys, monkeypatch):
    code, _, err = run(capsys, "invariants", "-", "--format", "edgelist", stdin="0 0\n", monkeypatch=monkeypatch)
    assert code != 0 and "self-loop" in err


@pytest.mark.parametrize(
    "argv, n, m",
    [
        (["gen", "k2"], 2, 1),
        (["gen", "f5"], 5, 6),
        (["gen", "f11", "--L", "ab1,ab2"], 11, 22),
        (["gen", "f12", "--L", "ac9"], 12, 22),
        (["gen", "h", "3", "4", "--minus"], 9, 17),
        (["gen", "gt", "3", "4"], 8, 11),
        (["gen", "gt-prime", "4", "4", "4"], 13, 30),
        (["gen", "complete", "5"], 5, 10),
        (["gen", "cycle", "6"], 6, 6),
        (["gen", "path", "4"], 4, 3),
        (["gen", "bipartite", "3", "3"], 6, 9),
    ],
)
def test_gen_families(capsys, argv, n, m):
    code, out, _ = run(capsys, *argv)
    g = parse_edge_list(out)
    assert code == 0 and (g.n, g.num_edges) == (n, m)


def test_gen_graph6_and_random(capsys):
    assert run(capsys, "gen", "complete", "3", "--format", "graph6")[1] == "Bw\n"
    assert run(capsys, "gen", "--format", "graph6", "complete", "3")[1] == "Bw\n"
    a = run(capsys, "gen", "random", "10", "0.5", "1")[1]
    b = run(capsys, "gen", "random", "10", "0.5", "1")[1]
    assert a == b and parse_edge_list(a).n == 10


def test_gen_rejects_bad_spec(capsys):
    code, _, err = run(capsys, "gen", "gt", "3", "3", "--strict")
    assert code != 0 and "less than n" in err
    code, _, err = run(capsys, "gen", "h", "4", "3")
    assert code != 0


def test_theorem_check_random_and_limits(capsys):
    code, out, _ = run(capsys, "theorem-check", "--random", "200", "20", "0.3", "seed=7", "prop2")
    assert code == 0 and "violations=0" in out and "corpus=random:200:20:0.3:seed=7" in out
    code, _, err = run(capsys, "theorem-check", "--exhaustive", "7", "--jobs", "1")
    assert code != 0 and "opt-in" in err
    code, _, err = run(capsys, "theorem-check", "--exhaustive", "8", "--allow-n7")
    assert code != 0


def test_theorem_check_statement_flag(capsys):
    code, out, _ = run(capsys, "theorem-check", "--exhaustive", "4", "--statement", "lemmas", "--jobs", "1")
    assert code == 0 and "statement=lemmas" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "twoproper", "gen", "complete", "3", "--format", "graph6"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout == "Bw\n"
    assert parse_graph6(proc.stdout.strip()).num_edges == 3
