import io
import subprocess
import sys

import pytest

from dclabel.cli import EXIT_CAP, EXIT_INPUT, EXIT_NO, EXIT_YES, run_cli
from dclabel.graph import Graph, parse_graph, parse_labeling, serialize_graph
from dclabel.qian import is_degree_complete


def run(argv, stdin_text=""):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(argv, io.StringIO(stdin_text), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path, g1, g2, worked):
    paths = {}
    for name, g in [("g1", g1), ("g2", g2), ("worked", worked)]:
        p = tmp_path / f"{name}.txt"
        p.write_text(serialize_graph(g))
        paths[name] = str(p)
    return paths


def test_verify_g2(files):
    code, out, _ = run(["verify", files["g2"]])
    assert code == EXIT_NO
    assert out.strip() == "NOT-DEGREE-COMPLETE H1 1 2 3 4"
    code, out, _ = run(["verify", files["g1"]])
    assert (code, out.strip()) == (EXIT_YES, "DEGREE-COMPLETE")


def test_oracle_g2(files):
    for extra in ([], ["--brute"]):
        code, out, _ = run(["oracle", files["g2"], *extra])
        assert code == EXIT_NO
        assert out.strip() == "NOT-DEGREE-COMPLETE 0,2,0,1"
    assert run(["oracle", files["g1"]])[0] == EXIT_YES


def test_oracle_caps(files):
    code, _, err = run(["oracle", files["g1"], "--max-vectors", "3"])
    assert code == EXIT_CAP and "error" in err
    code, _, _ = run(["oracle", files["g1"], "--brute", "--max-orientations", "4"])
    assert code == EXIT_CAP


def test_check_worked_example(files):
    code, out, _ = run(["check", files["worked"]])
    assert code == EXIT_YES
    assert out.splitlines() == ["YES", "route: iii", "X1: 2 3 8 9 11", "X2: 1 10", "path: 4 5 6 7"]
    code, out, _ = run(["check", files["worked"], "--route", "iv"])
    assert out.splitlines()[2:] == ["X1: 2 3 8 9 11", "F: 4-5 6-7", "path: 4 1 5 6 10 7"]


def test_check_no_instance():
    c4 = "4 4\n1 2\n2 3\n3 4\n1 4\n"
    for route in ("ii", "iii", "iv"):
        code, out, _ = run(["check", "--route", route], c4)
        assert code == EXIT_NO
        lines = out.splitlines()
        assert lines[0].startswith("NO C ")
        assert lines[1].startswith("edges: ")


def test_label_pipeline(files, tmp_path, worked, worked_labels):
    code, out, _ = run(["label", files["worked"], "--dot", str(tmp_path / "g.dot")])
    assert code == EXIT_YES
    f = parse_labeling(out, worked.n)
    assert f.as_dict() == worked_labels.as_dict()
    assert (tmp_path / "g.dot").read_text().startswith("graph")
    lab = tmp_path / "lab.txt"
    lab.write_text(out)
    code, out, _ = run(["verify", files["worked"], "--labeling", str(lab)])
    assert (code, out.strip()) == (EXIT_YES, "DEGREE-COMPLETE")
    assert run(["oracle", files["worked"], "--labeling", str(lab)])[0] == EXIT_YES
    code, out, _ = run(["export-dot", files["worked"], "--labeling", str(lab)])
    assert code == EXIT_YES and "rankdir=LR" in out


def test_label_no_instance():
    code, out, _ = run(["label", "--method", "f"], "7 6\n1 2\n1 3\n1 4\n2 5\n3 6\n4 7\n")
    assert code == EXIT_NO and out.startswith("NO T1 ")


def test_realize(files):
    code, out, _ = run(["realize", files["g1"], "--vector", "0,2,1,0"])
    assert code == EXIT_YES
    assert sorted(out.splitlines()) == ["2 1", "2 3", "3 4"]
    assert run(["realize", files["g1"], "--vector", "2,1,0,0"])[0] == EXIT_NO
    assert run(["realize", files["g1"], "--vector", "1,1"])[0] == EXIT_INPUT


def test_gen_is_deterministic():
    a = run(["gen", "random_gnm", "--n", "12", "--m", "20", "--seed", "3"])[1]
    b = run(["gen", "random_gnm", "--n", "12", "--m", "20", "--seed", "3"])[1]
    assert a == b and parse_graph(a).m == 20


def test_gen_then_label_then_verify(tmp_path):
    code, text, _ = run(["gen", "random_dcl", "--n", "80", "--seed", "5"])
    g = parse_graph(text)
    code, lab, _ = run(["label"], text)
    assert code == EXIT_YES
    assert is_degree_complete(parse_labeling(lab, g.n).apply(g))


def test_input_errors(tmp_path):
    code, _, err = run(["verify"], "3 1\n1 1\n")
    assert code == EXIT_INPUT and "line 2" in err
    code, _, err = run(["verify", str(tmp_path / "missing.txt")])
    assert code == EXIT_INPUT
    assert run(["gen", "cycle", "--n", "2"])[0] == EXIT_INPUT
    assert run(["nonsense"])[0] == EXIT_INPUT
    bad = tmp_path / "lab.txt"
    bad.write_text("1 1\n2 1\n")
    assert run(["verify", "--labeling", str(bad)], "2 1\n1 2\n")[0] == EXIT_INPUT


def test_deterministic_output(files):
    first = run(["check", files["worked"], "--route", "ii"])
    assert all(run(["check", files["worked"], "--route", "ii"]) == first for _ in range(3))


def test_module_entry_point(g2):
    proc = subprocess.run(
        [sys.executable, "-m", "dclabel", "verify"],
        input=serialize_graph(g2), capture_output=True, text=True,
    )
    assert proc.returncode == EXIT_NO
    assert proc.stdout.strip() == "NOT-DEGREE-COMPLETE H1 1 2 3 4"
