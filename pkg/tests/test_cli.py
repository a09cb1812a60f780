import json

import pytest

from hopfpartial.cli import run_command
from conftest import FIXTURES


def run(*argv):
    return run_command([str(a) for a in argv])


def test_klein_builtin_globalization_passes():
    code, out = run("klein", "--x", "1/8", "--globalize", "builtin")
    assert code == 0
    assert "FAIL" not in out
    assert "globalization: dim_B = 2" in out


def test_sweedler_tpa_is_not_symmetric():
    code, out = run("check", "tpa", FIXTURES / "sweedler_l1_c0.tpa")
    assert code == 0
    assert "not symmetric" in out


def test_broken_coassociativity_exits_one():
    code, out = run("verify", "hopf", FIXTURES / "broken_coassoc.bialg")
    assert code == 1
    assert "[FAIL] coassociativity (2 tuples) at (g): iterated coproducts differ at g⊗1⊗g" in out


def test_non_subgroup_measuring_exits_one():
    code, out = run("check", "measuring", FIXTURES / "nonsubgroup.meas")
    assert code == 1 and "[FAIL] PM3 (7 tuples) at (a, b)" in out


def test_sign_flipped_wtilde_exits_one():
    code, out = run("globalize", FIXTURES / "klein_x18.tpa", "--wtil",
                    FIXTURES / "klein_flipped.wtil")
    assert code == 1 and "wtilde-normalized (3 tuples) at (p_b)" in out


def test_usage_errors_exit_two():
    assert run("frobnicate")[0] == 2
    assert run("klein")[0] == 2
    assert run("check", "tpa", FIXTURES / "bad_literal.tpa")[0] == 2
    assert run("check", "tpa", FIXTURES / "missing.tpa")[0] == 2
    assert run("klein", "--x", "1/3", "--globalize", "builtin")[0] == 2
    assert run("verify", "hopf", "groupalg:K5")[0] == 2
    assert run("klein", "--x", "1/8", "--field", "R")[0] == 2


def test_text_reports_are_deterministic():
    a = run("check", "tpa", FIXTURES / "klein_x18.tpa")
    b = run("check", "tpa", FIXTURES / "klein_x18.tpa")
    assert a == b


def test_json_schema():
    code, out = run("classify", "measurings", "--hopf", "dualgroupalg:K4", "--emit", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"title", "summary", "checks", "payload", "notes", "elapsed_seconds"}
    assert doc["summary"] == "pass" and doc["payload"]["count"] == 5
    for c in doc["checks"]:
        assert set(c) == {"id", "status", "counterexample", "tuples", "detail"}


def test_field_from_environment(monkeypatch):
    monkeypatch.setenv("HOPF_PARTIAL_FIELD", "Fp:2")
    code, out = run("classify", "measurings", "--hopf", "dualgroupalg:K4")
    assert code == 0 and "count = 1" in out


def test_crossed_product_table():
    code, out = run("crossed-product", FIXTURES / "klein_x18.tpa", "--emit", "table")
    assert code == 0
    assert "dim = 2" in out and "v1 * v1 = -1/2*v0 + 1/2*v1" in out


@pytest.mark.parametrize("argv", [
    ("iso", "dual", "--group", "K4", "--L", "a", "--x", "1/8"),
    ("iso", "group", "--group", "K4", "--L", "a,b", "--cocycle", "klein"),
    ("iso", "dual", "--group", "S3", "--L", "e"),
    ("classify", "measurings", "--hopf", "sweedler"),
    ("verify", "hopf", "sweedler"),
])
def test_commands_that_pass(argv):
    assert run(*argv)[0] == 0


def test_globalize_save_and_extract(tmp_path):
    out = tmp_path / "klein.glob"
    code, _ = run("globalize", FIXTURES / "klein_x18.tpa", "--wtil", FIXTURES / "klein.wtil",
                  "--save", out)
    assert code == 0 and out.exists()
    code, text = run("extract-wtil", out, "--emit", "table")
    assert code == 0
    assert "p_b: 1/2  0  -1/2  0" in text
