import io
import json
import subprocess
import sys

import pytest

from matkls.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_compute_uniform_q():
    code, out, _ = call("compute", "--matroid", '{"type":"uniform","m":2,"d":3}', "--quantity", "Q")
    assert code == 0
    assert json.loads(out) == {"Q": ["6", "5"]}


def test_compute_single_edge():
    code, out, _ = call("compute", "--matroid", '{"type":"graph","edges":[[0,1]]}',
                        "--quantity", "P,Q,chi")
    assert code == 0
    assert json.loads(out) == {"P": ["1"], "Q": ["1"], "chi": ["-1", "1"]}


def test_verify_boolean_relations():
    code, out, _ = call("verify", "--matroid", '{"type":"boolean","n":3}', "--identity", "thm1.3")
    assert code == 0
    assert all(json.loads(out)["verdicts"]["thm1.3"].values())


def test_verify_all_identities_on_a_sum():
    spec = '{"type":"direct_sum","left":{"type":"uniform","m":1,"d":2},"right":{"type":"boolean","n":2}}'
    code, out, _ = call("verify", "--matroid", spec)
    assert code == 0
    assert json.loads(out)["verdicts"]["lemma3.1"] == {"P": True, "Q": True}


@pytest.mark.parametrize("argv", [
    ["compute", "--matroid", '{"type":"uniform","m":2}'],
    ["compute", "--matroid", '{"type":"uniform","m":2,"d":3}', "--quantity", "R"],
    ["compute"],
    ["verify", "--matroid", '{"type":"boolean","n":2}', "--identity", "eq9.9"],
    ["verify", "--matroid", '{"type":"boolean","n":2}', "--method", "closed"],
    ["closed-form", "--m", "0", "--d", "2"],
    ["frobnicate"],
    ["compute", "--matroid-file", "/nonexistent/spec.json"],
])
def test_usage_errors_exit_2(argv):
    code, _, err = call(*argv)
    assert code == 2
    assert err


def test_scan_falsified_conjecture_exits_1():
    code, out, _ = call("scan", "--family", "uniform", "--max-md", "5", "--checks", "real_roots")
    assert code == 1
    summary = json.loads(out.splitlines()[-1])["summary"]
    assert summary["first_counterexample"]["real_roots"] == {"type": "uniform", "m": 1, "d": 5}


def test_scan_passing_family_exits_0():
    code, out, _ = call("scan", "--family", "graphic", "--max-vertices", "4",
                        "--checks", "nonneg,logconcave,constant_term")
    assert code == 0
    assert len(out.splitlines()) == 2 + 6 + 1


def test_method_disagreement_exits_1(monkeypatch):
    from matkls import invariants
    from matkls.polynomial import ONE

    real = invariants._closed
    monkeypatch.setattr(invariants, "_closed", lambda M, which: real(M, which) + ONE)
    code, _, err = call("compute", "--matroid", '{"type":"uniform","m":1,"d":2}')
    assert code == 1 and "disagree" in err.lower()


def test_pretty_changes_formatting_only():
    spec = '{"type":"uniform","m":2,"d":3}'
    _, plain, _ = call("compute", "--matroid", spec, "--quantity", "P,Q,chi")
    _, pretty, _ = call("compute", "--matroid", spec, "--quantity", "P,Q,chi", "--pretty")
    assert plain != pretty
    values = json.loads(plain)
    for line in pretty.strip().splitlines():
        name, poly = line.split(" = ")
        from matkls.polynomial import Polynomial

        assert str(Polynomial.from_json(values[name])) == poly


def test_bundle_round_trip():
    from matkls.invariants import InvariantBundle

    _, out, _ = call("compute", "--matroid", '{"type":"uniform","m":2,"d":5}', "--bundle")
    b = InvariantBundle.from_json(json.loads(out))
    assert b.Q.to_json() == ["15", "35", "21"] and b.rk == 5


def test_closed_form():
    code, out, _ = call("closed-form", "--m", "2", "--d", "5")
    assert code == 0
    assert json.loads(out) == {"P": ["1", "28", "21"], "Q": ["15", "35", "21"]}


def test_matroid_file(tmp_path):
    path = tmp_path / "k3.json"
    path.write_text('{"type":"graph","edges":[[0,1],[1,2],[0,2]]}')
    code, out, _ = call("compute", "--matroid-file", str(path), "--quantity", "Q")
    assert code == 0 and json.loads(out) == {"Q": ["2"]}


def test_ground_cap_env(monkeypatch):
    monkeypatch.setenv("MATKLS_MAX_GROUND", "4")
    code, _, err = call("compute", "--matroid", '{"type":"boolean","n":5}', "--method", "recursion")
    assert code == 2 and err
    monkeypatch.setenv("MATKLS_MAX_GROUND", "5")
    code, _, _ = call("compute", "--matroid", '{"type":"boolean","n":5}', "--method", "recursion")
    assert code == 0


def test_determinism_across_processes(tmp_path):
    argv = [sys.executable, "-m", "matkls.cli", "scan", "--family", "random",
            "--count", "4", "--ground-size", "6", "--seed", "3"]
    a = subprocess.run(argv, capture_output=True, text=True)
    b = subprocess.run(argv, capture_output=True, text=True)
    assert a.returncode in (0, 1)
    assert a.stdout == b.stdout and a.stdout
