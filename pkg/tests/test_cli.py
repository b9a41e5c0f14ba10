import io
import json
import re
import subprocess
import sys

import pytest

from starbrace.cli import run_command

WITNESS = re.compile(r"^WITNESS axiom=\S+ tuple=\([0-9,]*\) lhs=\S+ rhs=\S+$", re.M)


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_check_ybe_proj_left_solution():
    code, out, _ = run("check-ybe", "rect22", "--kind", "proj-left")
    assert code == 0
    assert out.splitlines()[0] == "solution"


def test_check_ybe_c3_star_star_witness():
    code, out, _ = run("check-ybe", "c3", "--kind", "star-star")
    assert code == 1
    assert "WITNESS axiom=eq1 tuple=(0,1,0) lhs=1 rhs=0" in out
    assert "(e,x,e): eq1 lhs=x rhs=e" in out


def test_check_ybe_uses_document_addition():
    assert run("check-ybe", "z8_brace")[0] == 0
    code, out, _ = run("check-ybe", "c4_semibrace")
    assert code == 1 and WITNESS.search(out)
    assert run("check-ybe", "sl2")[0] == 2


def test_missing_file():
    assert run("classify", "missing-file")[0] == 2


def test_classify_output():
    code, out, _ = run("classify", "rect22")
    assert code == 0
    assert re.search(r"inverse\s+no", out) and re.search(r"cro_li\s+yes", out)
    code, out, _ = run("classify", "d8_brace")
    assert code == 0 and "right_axiom" in out


def test_validate(tmp_path):
    assert run("validate", "sl2")[0] == 0
    assert run("validate", "d8_brace")[0] == 0
    code, out, _ = run("validate", "klein_rs")
    assert code == 1 and WITNESS.search(out)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"name": "bad", "order": 2, "mul": [[0, 0], [0, 1]], "star": [1, 0]}))
    code, out, _ = run("validate", str(bad))
    assert code == 1 and WITNESS.search(out)
    broken = tmp_path / "broken.json"
    broken.write_text('{"name": ')
    code, _, err = run("validate", str(broken))
    assert code == 2 and "line 1" in err
    ranged = tmp_path / "range.json"
    ranged.write_text(json.dumps({"name": "r", "order": 2, "mul": [[0, 2], [0, 1]], "star": [0, 1]}))
    code, _, err = run("validate", str(ranged))
    assert code == 2 and "mul[0][1]" in err


def test_derive_add(tmp_path):
    target = tmp_path / "rect_conj.json"
    code, out, _ = run("derive-add", "rect22", "--kind", "conj", "--out", str(target))
    assert code == 0
    doc = json.loads(target.read_text())
    assert doc["name"] == "rect22+conj" and "add" in doc
    assert run("check-ybe", str(target))[0] == 0
    code, out, _ = run("derive-add", "sl2", "--kind", "mul")
    assert code == 0 and json.loads(out)["add"] == [[0, 0], [0, 1]]
    assert run("derive-add", "sl2", "--kind", "nope")[0] == 2


def test_check_wsb():
    assert run("check-wsb", "d8_brace")[0] == 0
    code, out, _ = run("check-wsb", "klein_rs")
    assert code == 1
    assert "WITNESS axiom=wsb_negation tuple=(1) lhs=1 rhs=0" in out
    assert run("check-wsb", "ls2")[0] == 2


def test_search():
    code, out, _ = run("search", "--orders", "1..3", "--signature", "star_semigroup", "--require", "cro-li", "--forbid", "inverse")
    assert code == 0 and "found 0 model(s)" in out
    code, out, _ = run("search", "--orders", "1..4", "--require", "cro-li", "--forbid", "inverse", "--limit", "1")
    assert code == 0 and "found 1 model(s)" in out
    code, out, _ = run("search", "--orders", "2..2", "--signature", "two-two-one", "--kind", "proj-left", "--require", "solution", "--format", "text")
    assert code == 0 and "found 2 model(s)" in out and "+ |" in out


def test_search_errors(monkeypatch):
    monkeypatch.delenv("STARBRACE_MAX_ORDER", raising=False)
    assert run("search", "--orders", "1..9")[0] == 2
    assert run("search", "--orders", "1..2", "--require", "inverse", "--forbid", "inverse")[0] == 2
    assert run("search", "--orders", "x")[0] == 2
    assert run("search")[0] == 2


def test_verify_prop():
    code, out, _ = run("verify-prop", "P4.6", "--max-order", "3")
    assert code == 0 and out.startswith("P4.6: PASS")
    assert run("verify-prop", "P0.0")[0] == 2


def test_verify_prop_failure_exit_3(monkeypatch):
    import starbrace.registry as reg

    def broken(ctx):
        raise reg._Fail("forced counterexample")

    monkeypatch.setitem(reg.REGISTRY, "P4.6", reg._Entry("forced", broken))
    code, out, _ = run("verify-prop", "P4.6")
    assert code == 3 and "FAIL" in out


def test_consistency_error_exit_3(monkeypatch):
    import starbrace.cli as cli
    from starbrace.table_core import ConsistencyError

    def explode(A):
        raise ConsistencyError("braid disagreement")

    monkeypatch.setattr(cli, "check_solution", explode)
    code, _, err = run("check-ybe", "rect22", "--kind", "mul")
    assert code == 3 and "consistency" in err


def test_catalog_commands():
    code, out, _ = run("catalog", "list")
    assert code == 0 and "rect22\t" in out
    code, out, _ = run("catalog", "show", "sl2", "--format", "text")
    assert code == 0 and "0 | 0 0" in out
    code, out, _ = run("catalog", "show", "z8_brace")
    assert code == 0 and json.loads(out)["mul"][1] == [1, 0, 7, 6, 5, 4, 3, 2]
    assert run("catalog", "show", "nonexistent")[0] == 2
    assert run("catalog", "show")[0] == 2
    assert run("catalog", "drop")[0] == 2


def test_usage_errors():
    assert run()[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("--help")[0] == 0


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "starbrace.cli", "check-ybe", "c3", "--kind", "star-star"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1
    assert WITNESS.search(proc.stdout)
