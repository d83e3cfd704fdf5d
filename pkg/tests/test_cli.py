import json
import subprocess
import sys

import pytest

from dartdig import complete, complete_bipartite, cycle, petersen, validate_walk_in_a2d, validate_walk_in_d
from dartdig.cli import main
from dartdig.constructions import build_dart_digraph
from dartdig.graph import format_edge_list
from dartdig.walks import walk_from_json


@pytest.fixture
def edge_file(tmp_path):
    def write(g, name="g.txt"):
        path = tmp_path / name
        path.write_text("# test graph\n" + format_edge_list(g))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_d_json(capsys, edge_file):
    code, out, _ = run(capsys, "build", "--input", edge_file(complete(4)), "--target", "d", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["vertices"] == 12 and len(data["darts"]) == 24


def test_build_a2d_dot(capsys, edge_file):
    code, out, _ = run(capsys, "build", "--input", edge_file(complete(4)), "--target", "a2d", "--format", "dot")
    assert code == 0
    assert sum(1 for line in out.splitlines() if "[label=" in line) == 144


def test_build_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 x\n")
    code, _, err = run(capsys, "build", "--input", str(bad))
    assert code == 2 and "line 1" in err


def test_build_cap(capsys, edge_file, monkeypatch):
    code, _, err = run(capsys, "build", "--input", edge_file(petersen()), "--target", "a2d", "--cap", "100")
    assert code == 2 and "900" in err
    monkeypatch.setenv("DARTDIG_CAP", "100")
    code, _, _ = run(capsys, "build", "--input", edge_file(petersen()), "--target", "a2d")
    assert code == 2


def test_check_examples(capsys, edge_file):
    assert run(capsys, "check", "--input", edge_file(petersen()), "--target", "a2d", "--property", "strong")[:2] == (0, "true\n")
    assert run(capsys, "check", "--input", edge_file(cycle(6)), "--target", "d", "--property", "strong")[:2] == (1, "false\n")
    assert run(capsys, "check", "--input", edge_file(complete_bipartite(3, 3)), "--target", "a2d", "--property", "bipartite")[:2] == (0, "true\n")
    assert run(capsys, "check", "--graph", "petersen", "--target", "a2d", "--materialize")[:2] == (0, "true\n")


def test_witness_d(capsys, edge_file):
    code, out, _ = run(capsys, "witness", "--input", edge_file(complete(4)), "--target", "d", "--src", "0", "--dst", "1")
    k4 = complete(4)
    walk = walk_from_json(k4, out)
    assert code == 0
    assert validate_walk_in_d(build_dart_digraph(k4), walk) and (walk.start, walk.end) == (0, 1)


def test_witness_a2d(capsys, edge_file):
    k4 = complete(4)
    code, out, _ = run(capsys, "witness", "--input", edge_file(k4), "--target", "a2d", "--src", "3,4", "--dst", "3,4")
    assert code == 0 and json.loads(out)["walk"] == [3 * 12 + 4]
    code, out, _ = run(capsys, "witness", "--graph", "complete_bipartite(3,3)", "--target", "a2d", "--src", "0,1", "--dst", "5,0")
    walk = walk_from_json(complete_bipartite(3, 3), out)
    assert code == 0 and validate_walk_in_a2d(complete_bipartite(3, 3), walk)


def test_witness_errors(capsys, edge_file):
    code, _, err = run(capsys, "witness", "--input", edge_file(cycle(6)), "--target", "d", "--src", "0", "--dst", "3")
    assert code == 2 and "valence" in err
    assert run(capsys, "witness", "--graph", "complete(4)", "--src", "0", "--dst", "99")[0] == 2
    assert run(capsys, "witness", "--graph", "complete(4)", "--target", "a2d", "--src", "0", "--dst", "1,2")[0] == 2


def test_list_darts(capsys):
    code, out, _ = run(capsys, "list-darts", "--graph", "cycle(3)")
    assert code == 0
    assert out.splitlines() == ["0 0 1", "1 1 0", "2 0 2", "3 2 0", "4 1 2", "5 2 1"]


def test_verify_exhaustive(capsys):
    code, out, _ = run(capsys, "verify", "--mode", "exhaustive", "--max-n", "5")
    report = json.loads(out)
    assert code == 0 and report["graphs_tested"] == 27 and report["failures"] == []
    code, out, _ = run(capsys, "verify", "--mode", "exhaustive", "--max-n", "4")
    assert json.loads(out)["graphs_tested"] == 1


def test_verify_random_reproducible(capsys):
    argv = ["verify", "--mode", "random", "--n", "12", "--count", "50", "--seed", "7"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first[0] == 0 and first[1] == second[1]
    assert json.loads(first[1])["graphs_tested"] == 50


def test_verify_parallel_matches_serial(capsys):
    argv = ["verify", "--mode", "random", "--n", "8-11", "--count", "20", "--seed", "3"]
    assert run(capsys, *argv)[1] == run(capsys, *argv, "--jobs", "2")[1]


def test_verify_param_errors(capsys):
    assert run(capsys, "verify", "--mode", "exhaustive", "--max-n", "9")[0] == 2
    assert run(capsys, "verify", "--mode", "random", "--n", "12")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["verify", "--mode", "random", "--n", "2", "--count", "1"])
    assert info.value.code == 2


def test_verify_timing_flag(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4", "--timing")
    assert "elapsed" in json.loads(out)


def test_console_entry_point(tmp_path):
    path = tmp_path / "k4.txt"
    path.write_text(format_edge_list(complete(4)))
    proc = subprocess.run(
        [sys.executable, "-m", "dartdig.cli", "check", "--input", str(path), "--target", "a2d"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "true\n"
