import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from cotwist import serialize as ser
from cotwist.cli import builtin_bundle, main
from cotwist.field import QQ

DATA = Path(__file__).parent / "data"


@pytest.fixture
def run(monkeypatch):
    monkeypatch.delenv("COTWIST_FIELD", raising=False)
    runner = CliRunner()

    def invoke(*args, env=None):
        return runner.invoke(main, list(args), env=env, catch_exceptions=False)
    return invoke


@pytest.fixture
def bad_eps(tmp_path):
    """Sweedler's algebra with ε(g) = 0 instead of 1."""
    doc = ser.to_doc(builtin_bundle("sweedler:H4", QQ))
    eps = next(m for m in doc["maps"] if m["name"] == "H.eps")
    eps["matrix"][0][1] = "0"
    p = tmp_path / "bad_eps.json"
    p.write_text(json.dumps(doc), encoding="utf-8")
    return p


def test_pass_exit_zero(run):
    r = run("check", "hopf", "sweedler:H4")
    assert r.exit_code == 0
    assert "verdict: PASS" in r.output


def test_corrupted_counit_exit_one(run, bad_eps):
    r = run("check", "hopf", str(bad_eps))
    assert r.exit_code == 1
    assert "[FAIL] left counit" in r.output
    assert "witness at g:" in r.output


def test_corrupted_counit_json(run, bad_eps):
    r = run("--json", "check", "hopf", str(bad_eps))
    assert r.exit_code == 1
    rep = json.loads(r.output)
    assert rep["passed"] is False
    failed = [c for c in rep["reports"][0]["checks"] if not c["passed"]]
    assert failed[0]["name"] == "left counit"
    assert failed[0]["witness"]["input"] == "g"


@pytest.mark.parametrize("args", [
    ("check", "hopf", "group:C3"),
    ("check", "hopf", "missing.json"),
    ("verify", "prop1.2", "--instance", "regular:nope"),
    ("--field", "4", "check", "hopf", "group:C2"),
    ("--field", "2", "check", "hopf", "sweedler:H4"),
])
def test_input_errors_exit_two(run, args):
    r = run(*args)
    assert r.exit_code == 2
    assert "error:" in r.output.lower()


def test_malformed_document_exit_two(run, tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{\"format\": \"cotwist-structure\"}", encoding="utf-8")
    assert run("check", "hopf", str(p)).exit_code == 2


def test_json_structure(run):
    r = run("--json", "check", "twisting", "tau:harrison:H4-twist-bad")
    assert r.exit_code == 1
    rep = json.loads(r.output)
    assert set(rep) >= {"passed", "reports"}
    checks = rep["reports"][0]["checks"]
    bad = [c for c in checks if not c["passed"]]
    assert [c["name"] for c in bad] == ["twisted coassociativity"]
    w = bad[0]["witness"]
    assert set(w) == {"input", "lhs", "rhs", "basis"}
    assert len(w["lhs"]) == len(w["rhs"]) == len(w["basis"])


def test_reports_are_byte_identical(run):
    a = run("--json", "verify", "thm3.2", "--instance", "harrison:H4-twist")
    b = run("--json", "verify", "thm3.2", "--instance", "harrison:H4-twist")
    assert a.exit_code == 0
    assert a.output == b.output


def test_field_env_and_flag(run):
    r = run("--json", "check", "hopf", "sweedler:H4", env={"COTWIST_FIELD": "2"})
    assert r.exit_code == 2
    # the flag overrides the environment
    r = run("--json", "--field", "5", "check", "hopf", "sweedler:H4", env={"COTWIST_FIELD": "2"})
    assert r.exit_code == 0


def test_field_reaches_output(run, tmp_path):
    out = tmp_path / "t.json"
    assert run("--field", "5", "twist", "tau:harrison:H4-twist", "--out", str(out)).exit_code == 0
    doc = json.loads(out.read_text(encoding="utf-8"))
    assert doc["field"] == {"kind": "prime-field", "characteristic": 5}


def test_pinned_field_rejects_other_documents(run, tmp_path):
    p = tmp_path / "h.json"
    ser.dump(builtin_bundle("group:C2", QQ), p)
    assert run("check", "hopf", str(p)).exit_code == 0
    assert run("--field", "5", "check", "hopf", str(p)).exit_code == 2
    assert run("check", "hopf", str(p), env={"COTWIST_FIELD": "5"}).exit_code == 2


def test_twist_then_eval(run, tmp_path):
    tw = tmp_path / "tw.json"
    assert run("twist", "tau:harrison:H4-twist", "--out", str(tw)).exit_code == 0
    r = run("eval", str(DATA / "deltatau.eqn"), "--env", "tau:harrison:H4-twist",
            "--env", f"T={tw}")
    assert r.exit_code == 0, r.output
    assert "verdict: PASS (2/2" in r.output


def test_eval_failure(run, tmp_path):
    eq = tmp_path / "wrong.eqn"
    eq.write_text("C.delta == (C.act x id[C]) o (id[C] x tau) o C.delta\n", encoding="utf-8")
    r = run("eval", str(eq), "--env", "tau:harrison:H4-twist")
    assert r.exit_code == 1
    assert "witness" in r.output


def test_eval_parse_error_is_input_error(run, tmp_path):
    eq = tmp_path / "bad.eqn"
    eq.write_text("C.delta == (C.delta x\n", encoding="utf-8")
    r = run("eval", str(eq), "--env", "regular:group:C2")
    assert r.exit_code == 2
    assert "line 1, column" in r.output


def test_twist_side_is_enforced(run):
    assert run("twist", "tau:harrison:C2-sign", "--left").exit_code == 2


def test_verify_default_instance(run):
    r = run("verify", "prop1.2", "--instance", "harrison:C2-sign")
    assert r.exit_code == 0
    assert "verify prop1.2" in r.output or "verdict: PASS" in r.output


def test_verify_negative_control(run):
    r = run("verify", "thm3.2", "--instance", "harrison:H4-twist-bad")
    assert r.exit_code == 1
    assert "witness" in r.output


def test_pipeline_transpose_and_invert(run, tmp_path):
    left, back = tmp_path / "l.json", tmp_path / "r.json"
    assert run("transpose", "rtl", "tau:harrison:H4-twist", "--out", str(left)).exit_code == 0
    assert run("check", "left-twisting", str(left)).exit_code == 0
    assert run("transpose", "ltr", str(left), "--out", str(back)).exit_code == 0
    a = ser.load(back)
    b = builtin_bundle("tau:harrison:H4-twist", QQ)
    name = next(n for n, e in a.maps.items() if e.role == "twisting")
    assert a.maps[name].map.mat == b.maps["tau"].map.mat


def test_invert_degenerate_fails(run):
    r = run("invert-twisting", "tau:harrison:C2-degenerate")
    assert r.exit_code == 1


def test_equiv_gauge(run):
    assert run("equiv", "check", "gauge:harrison:H4-twist").exit_code == 0
    assert run("equiv", "check", "gauge:harrison:H4-twist", "--tau", "lam",
               "--lam", "tau").exit_code == 1


def test_galois_commands(run):
    assert run("galois", "cert", "regular:sweedler:H4").exit_code == 0
    assert run("galois", "diamond", "regular:group:C4").exit_code == 0
    assert run("galois", "cert", "trivial:group:C2").exit_code == 1


def test_list(run):
    r = run("list")
    assert r.exit_code == 0
    assert "sweedler:H4" in r.output
    assert "thm3.3" in r.output
