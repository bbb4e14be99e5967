from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from chromtools.cli import run
from chromtools.conjecture import cstar_family
from chromtools.graph import canonical_form, complete, to_graph6


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def call_json(capsys, *argv):
    code, out, err = call(capsys, *argv, "--json")
    return code, json.loads(out)


def test_chromatic_k4(capsys):
    code, data = call_json(capsys, "chromatic", "C~")
    assert code == 0 and data["schema"] == 1
    assert data["graphs"][0]["coefficients"] == {"4": "1/1", "3": "-6/1", "2": "11/1", "1": "-6/1", "0": "0/1"}


def test_chromatic_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("Bw\n\nC~\n"))
    code, out, _ = call(capsys, "chromatic", "-")
    assert code == 0
    assert out.splitlines()[1].endswith("x^4 - 6x^3 + 11x^2 - 6x")


def test_chromatic_from_file(capsys, tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_text(">>graph6<<Bw\nC~\n")
    code, data = call_json(capsys, "chromatic", str(path))
    assert code == 0 and [g["order"] for g in data["graphs"]] == [3, 4]


def test_family_theta(capsys):
    code, data = call_json(capsys, "family", "theta", "--spec", '{"s1": 2, "s2": 1, "s3": 3}')
    assert code == 0
    assert data["engine_matches_closed_form"] is True
    assert data["order"] == 5 and data["size"] == 6


def test_family_vt_has_no_closed_form(capsys):
    code, data = call_json(capsys, "family", "vt", "--spec", '{"t": 6}')
    assert code == 0 and data["closed_form"] is None and data["engine_matches_closed_form"] is None


def test_bounds_grid(capsys):
    code, data = call_json(capsys, "bounds", "thetabound", "--grid", '{"x": ["3/2", 2], "max": 2}')
    assert code == 0
    assert data["checked"] == 16 and data["failures"] == 0 and data["passed"]


def test_bounds_default_grid_human(capsys):
    code, out, _ = call(capsys, "bounds", "SK4bound")
    assert code == 0 and "256/256" in out


def test_certify_k33son(capsys):
    code, data = call_json(capsys, "certify", "k33son")
    assert code == 0
    approx = data["certificate"]["largest_root"]["approx"]
    assert 2.9407 < approx < 2.9409
    assert "polynomial" not in data["certificate"]


def test_certify_cactusson_human(capsys):
    code, out, _ = call(capsys, "certify", "cactusson")
    assert code == 0 and "certificate: ok" in out


def test_verify_conjecture_order_six(capsys):
    code, data = call_json(capsys, "verify", "conjecture", "--order", "6", "--workers", "2")
    assert code == 0
    assert data["violations"] == [] and data["extremal_matches"]
    assert {g.encode() for g in data["extremal"]} == {canonical_form(g) for g in cstar_family(4, 6)}
    assert "runtime" not in data


def test_verify_timing_flag(capsys):
    code, data = call_json(capsys, "verify", "conjecture", "--order", "4", "--timing")
    assert code == 0 and "runtime" in data
    assert data["extremal"] == [to_graph6(complete(4))]


def test_verify_three_chromatic_and_clique(capsys):
    assert call(capsys, "verify", "tomescu3", "--order", "5")[0] == 0
    assert call(capsys, "verify", "cliquebound", "--order", "5", "--k", "3")[0] == 0


def test_remark_and_explore(capsys):
    code, data = call_json(capsys, "remark", "sk4")
    assert code == 0 and data["passed"]
    code, data = call_json(capsys, "explore", "k33", "--max-size", "1")
    assert code == 0 and data["specs"] == 1


def test_output_is_deterministic(capsys):
    first = call(capsys, "verify", "conjecture", "--order", "5", "--json")[1]
    second = call(capsys, "verify", "conjecture", "--order", "5", "--json")[1]
    assert first == second


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["chromatic", "!!!"],
    ["chromatic", "C"],
    ["family", "theta", "--spec", "{bad"],
    ["family", "theta", "--spec", '{"s1": 0, "s2": 1, "s3": 1}'],
    ["family", "theta", "--spec", '{"sizes": [1, 2, 3]}'],
    ["family", "theta", "--spec", "[1, 2, 3]"],
    ["bounds", "nosuchlemma"],
    ["bounds", "thetabound", "--grid", '{"x": []}'],
    ["bounds", "thetabound", "--grid", '{"y": 1}'],
    ["bounds", "thetabound", "--grid", '{"x": [0]}'],
    ["verify", "conjecture", "--order", "12"],
    ["verify", "conjecture", "--order", "3"],
    ["verify", "cliquebound", "--order", "5"],
    ["verify", "conjecture"],
    ["explore", "k33", "--max-size", "0"],
])
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2
    assert err


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "chromtools.cli", "chromatic", "Bw"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip().endswith("x^3 - 3x^2 + 2x")
