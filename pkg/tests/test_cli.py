from __future__ import annotations

import subprocess
import sys

import pytest

from gpqsym import cli
from gpqsym import graphs as gr
from gpqsym import matroids as mt
from gpqsym.qpoly import QPolynomial
from gpqsym.qsym import M, antipode, eval_q


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_fq_table_layout(capsys):
    code, out, _ = run(capsys, "fq", "--builtin", "gamma1")
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "q^5 | M(6)"
    assert lines[-1] == "q^0 | 24*M(1,2,1,1,1) + 96*M(2,1,1,1,1) + 720*M(1,1,1,1,1,1)"


@pytest.mark.parametrize("argv,expected", [
    (["--uniform", "4", "2"], lambda: mt.fq_matroid(mt.uniform(4, 2))),
    (["--builtin", "m2"], lambda: mt.fq_matroid(mt.builtin("m2"))),
    (["--uniform", "4", "1", "--orientation", "paper"], lambda: mt.fq_uniform_closed_form(4, 1)),
    (["--builtin", "gamma2-minus-14-26"], lambda: gr.fq_graph(gr.gamma2_minus_14_26())),
])
def test_fq_json_round_trip(capsys, argv, expected):
    code, out, _ = run(capsys, "fq", *argv, "--json")
    assert code == 0
    assert cli.load_result(out) == expected()


def test_fq_q0(capsys):
    code, out, _ = run(capsys, "fq", "--builtin", "gamma2", "--q0", "--json")
    assert code == 0
    assert cli.load_result(out) == eval_q(gr.fq_graph(gr.gamma2()), 0)


def test_fq_files(capsys, tmp_path):
    g = tmp_path / "empty2.txt"
    g.write_text("2\n")
    code, out, _ = run(capsys, "fq", "--graph", str(g), "--json")
    assert code == 0 and cli.load_result(out) == M(1) * M(1)
    b = tmp_path / "b.txt"
    b.write_text("2\n1\n2\n1 2\n")
    code, out, _ = run(capsys, "fq", "--building-set", str(b), "--json")
    assert cli.load_result(out) == M(2, coeff=QPolynomial((0, 1))) + M(1, 1, coeff=2)
    m = tmp_path / "m.txt"
    m.write_text("3 1\n1\n2\n3\n")
    code, out, _ = run(capsys, "fq", "--matroid", str(m), "--json")
    assert cli.load_result(out) == mt.fq_matroid(mt.uniform(3, 1))


def test_fpoly(capsys):
    code, out, _ = run(capsys, "fpoly", "--builtin", "gamma1")
    assert code == 0
    assert out.splitlines() == ["600+1500q+1308q^2+462q^3+56q^4+q^5", "f-vector: 600 1500 1308 462 56 1"]
    code, out, _ = run(capsys, "fpoly", "--uniform", "5", "2", "--json")
    assert cli.load_result(out)["fvector"] == mt.fvector_uniform(5, 2)
    code, out, _ = run(capsys, "fpoly", "--builtin", "point")
    assert out.splitlines()[0] == "1"


def test_antipode(capsys):
    code, out, _ = run(capsys, "antipode", "--uniform", "3", "1", "--check", "--json")
    assert code == 0
    assert cli.load_result(out) == antipode(mt.fq_matroid(mt.uniform(3, 1)))
    code, out, _ = run(capsys, "antipode", "--uniform", "3", "1")
    assert "M(3): -3q^0+3q^1-1q^2" in out


def test_dual_degrees(capsys, tmp_path):
    code, out, _ = run(capsys, "dual-degrees", "--builtin", "gamma1", "--json")
    assert code == 0
    assert cli.load_result(out) == gr.dual_skeleton_degrees(gr.gamma1())
    code, _, err = run(capsys, "dual-degrees", "--uniform", "3", "1")
    assert code == 2 and "graph" in err


def test_collisions(capsys):
    code, out, _ = run(capsys, "collisions", "--n", "5", "--json")
    assert code == 0
    reports = cli.load_result(out)
    assert [r.universe for r in reports] == ["connected", "all"]
    code, out, _ = run(capsys, "collisions", "--n", "8")
    assert code == 3


def test_oracle(capsys, monkeypatch):
    code, out, _ = run(capsys, "oracle", "--uniform", "4", "2", "--json")
    assert code == 0 and cli.load_result(out)["match"]
    monkeypatch.setattr(cli, "compute_fq", lambda subject, orientation="canonical": M(4))
    code, out, _ = run(capsys, "oracle", "--uniform", "4", "2", "--json")
    assert code == 4
    assert cli.load_result(out)["num_mismatches"] > 0
    monkeypatch.undo()
    code, _, _ = run(capsys, "oracle", "--uniform", "8", "3", "--m", "8")
    assert code == 3


def test_antipode_mismatch_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli, "antipode_face_expansion", lambda p: M(3))
    code, _, err = run(capsys, "antipode", "--uniform", "3", "1", "--check")
    assert code == 4 and "mismatch" in err


@pytest.mark.parametrize("argv", [
    ["fq", "--builtin", "nope"],
    ["fq", "--uniform", "2", "5"],
    ["fq", "--graph", "/nonexistent/file"],
])
def test_input_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_parse_error_carries_line_number(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n1 2\n2 2\n")
    code, _, err = run(capsys, "fq", "--graph", str(bad))
    assert code == 2 and "line 3" in err


def test_budget_exit(capsys):
    code, _, err = run(capsys, "fq", "--uniform", "10", "3")
    assert code == 3 and "budget" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "gpqsym", "fpoly", "--uniform", "4", "2"],
                         capture_output=True, text=True, check=True)
    assert res.stdout.splitlines()[0] == "6+12q+8q^2+q^3"
