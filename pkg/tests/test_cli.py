import json
import subprocess
import sys
from math import acos, pi, sqrt

import pytest

from pseudoctx import cli, fixtures


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


def test_states_counts(capsys):
    assert run(capsys, "states", "small-graph")[:2] == (0, "24\n")
    assert run(capsys, "states", "combo-graph")[:2] == (0, "225\n")


def test_states_flags(capsys):
    code, rep = run_json(capsys, "states", "small-graph", "--dump", "--separating", "--partition")
    assert code == 0 and rep["results"]["separating"] is True
    assert len(rep["results"]["states"]) == 24 and all(len(s) == 15 for s in rep["results"]["states"])
    p = rep["results"]["partition"]
    assert sorted(p["1"]) == list(range(1, 11))
    assert set(p["1"]) | set(p["2"]) | set(p["3"]) == set(range(1, 25))


def test_states_from_file(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("1 2 3\n3 4 5\n")
    assert run(capsys, "states", str(f))[:2] == (0, "5\n")
    j = tmp_path / "g.json"
    j.write_text('{"n": 3, "edges": [[1, 2, 3]]}')
    assert run(capsys, "states", str(j), "--dump")[1] == "3\n100\n010\n001\n"


def test_bad_inputs_exit_2(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("1 2 3\n1 2 4\n")
    code, _, err = run(capsys, "states", str(f))
    assert code == 2 and "line 2" in err
    assert run(capsys, "states", str(tmp_path / "missing.txt"))[0] == 2
    assert run(capsys, "states", "small-for-heuristic")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "pseudo", "small-graph", "--pair", "1,2,3", "5,10,15")[0] == 2
    assert run(capsys, "pseudo", "small-graph", "--pair", "1,x", "5")[0] == 2
    assert run(capsys, "for", "bounds", "combo-for-alpha-pi3", "--set", "4,99")[0] == 2


def test_pseudo_small_pair(capsys):
    code, rep = run_json(capsys, "pseudo", "small-graph", "--pair", "1,6,11", "5,10,15", "--bounds", "--gadget")
    r = rep["results"]
    assert code == 0
    assert r["classical_bounds"] == {"A": [0, 2], "B": [0, 2]}
    assert r["gadget"]["fif"] and r["gadget"]["symmetric"]
    assert sorted(x["num"] for x in r["certificate"]["lambda"]) == [-1] * 4 + [1] * 4


def test_pseudo_combo_coverings(capsys):
    code, rep = run_json(capsys, "pseudo", "combo-graph", "--pair", "4,16,28", "10,22,34", "--coverings")
    cov = rep["results"]["coverings"]
    assert code == 0
    assert cov["excluding_A"] and cov["excluding_B"]
    assert all(len(c) == 11 for c in cov["excluding_A"] + cov["excluding_B"])
    lam = rep["results"]["certificate"]["lambda"]
    assert sorted(x["num"] for x in lam) == [-1] * 11 + [1] * 11


def test_pseudo_negative(capsys):
    code, out, _ = run(capsys, "pseudo", "small-graph", "--pair", "1,6,11", "5,10,14")
    assert code == 1 and "no certificate" in out


def test_pseudo_search(capsys):
    code, out, _ = run(capsys, "pseudo", "small-graph")
    assert code == 0 and "1,6,11 | 5,10,15" in out.splitlines()
    code, rep = run_json(capsys, "pseudo", "small-graph", "--k", "2")
    assert code == 0 and isinstance(rep["results"]["pairs"], list)


def test_for_construct_combo(capsys, tmp_path):
    code, rep = run_json(capsys, "for", "construct", "--variant", "combo", "--alpha", "1.0471975511965976")
    r = rep["results"]
    assert code == 0
    assert abs(r["beta"] - (pi - acos(1 / 14))) <= 1e-12
    assert abs(r["aperture"] - acos(sqrt(13 / 15))) <= 1e-12
    assert len(r["vectors"]) == 36
    out = tmp_path / "v.json"
    assert run(capsys, "for", "construct", "--variant", "combo", "--alpha", "1.0471975511965976", "--out", str(out))[0] == 0
    code, rep = run_json(capsys, "for", "verify", str(out), "--graph", "combo-graph")
    assert code == 0 and rep["results"]["faithful"]
    assert run(capsys, "for", "verify", str(out))[0] == 2


def test_for_construct_degenerate(capsys):
    code, out, _ = run(capsys, "for", "construct", "--variant", "small", "--alpha", "2.0943951023931953")
    assert code == 1 and "degenerate: duplicate triple" in out
    code, rep = run_json(capsys, "for", "construct", "--alpha", "0")
    assert code == 1 and len(rep["results"]["error"]["cube"]) == 9
    code, rep = run_json(capsys, "for", "construct", "--alpha", repr(0.8862566010399981))
    assert code == 1 and [5, 11] in rep["results"]["error"]["pairs"]
    assert run(capsys, "for", "construct", "--alpha", "4")[0] == 2


def test_for_verify_negative(capsys, tmp_path):
    f = tmp_path / "wrong.json"
    f.write_text(fixtures.vector_table("combo-for-alpha-pi3").to_json())
    code, rep = run_json(capsys, "for", "verify", str(f), "--graph", "small-graph")
    assert code == 1 and rep["results"]["extra_orthogonality"]


def test_for_verify_eps_override(capsys, monkeypatch):
    assert run(capsys, "for", "verify", "small-for-heuristic")[0] == 0
    code, rep = run_json(capsys, "for", "verify", "small-for-heuristic", "--eps", "0.2")
    assert code == 1 and rep["inputs"]["eps"] == 0.2
    monkeypatch.setenv("PSEUDOCTX_EPS", "0.2")
    assert run(capsys, "for", "verify", "small-for-heuristic")[0] == 1


def test_for_infer(capsys):
    code, out, _ = run(capsys, "for", "infer", "combo-for-alpha-pi2")
    assert code == 0 and len(out.splitlines()) == 22
    assert "2 14 26" in out.splitlines()


def test_for_bounds(capsys):
    code, rep = run_json(capsys, "for", "bounds", "combo-for-alpha-pi3", "--set", "4,16,28")
    r = rep["results"]
    assert code == 0
    assert r["eigenvalues"] == pytest.approx([0.2, 0.2, 2.6], abs=1e-9)
    assert r["quantum_interval"] == pytest.approx([0.2, 2.6], abs=1e-9)
    assert r["pairwise_overlaps"] == pytest.approx([0.8] * 3, abs=1e-9)


def test_table_alpha0(capsys):
    code, out, _ = run(capsys, "table", "alpha0")
    assert code == 0 and abs(float(out) - 0.886257) <= 1e-5


def test_table_beta_curve(capsys):
    code, out, _ = run(capsys, "table", "beta-curve", "--steps", "5")
    rows = [list(map(float, r.split(","))) for r in out.splitlines()[1:]]
    assert code == 0 and len(rows) == 6
    assert rows[-1][0] == pytest.approx(2 * __import__("math").atan(3), abs=1e-15)
    assert rows[-1][1] == pytest.approx(pi, abs=1e-12)
    code, out, _ = run(capsys, "table", "beta-curve", "--steps", "1")
    assert out.splitlines()[1].split(",")[:2] == ["0", repr(pi / 2)]
    assert run(capsys, "table", "beta-curve", "--steps", "0")[0] == 2


def test_reports_are_reproducible(capsys):
    for argv in (["--json", "for", "construct", "--variant", "combo", "--alpha", "0.7"], ["states", "combo-graph", "--partition"]):
        a = run(capsys, *argv)[1]
        b = run(capsys, *argv)[1]
        assert a == b


def test_timings_opt_in(capsys):
    code, out, err = run(capsys, "--timings", "table", "alpha0")
    assert "elapsed" in err
    code, rep = run_json(capsys, "table", "alpha0", "--timings")
    assert "timings" in rep
    assert "timings" not in run_json(capsys, "table", "alpha0")[1]


def test_integrity_failure_exits_2(capsys, monkeypatch):
    def broken():
        raise fixtures.FixtureError("tampered")

    monkeypatch.setattr(cli, "_integrity_checked", False)
    monkeypatch.setattr(fixtures, "check_fixture_integrity", broken)
    code, _, err = run(capsys, "states", "small-graph")
    assert code == 2 and "tampered" in err


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "pseudoctx.cli", "states", "small-graph"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "24\n"
