import io
import json
import subprocess
import sys

import jsonschema
import pytest
from importlib import resources

from skewgenus.cli import run

SCHEMA = json.loads((resources.files("skewgenus") / "certificate.schema.json").read_text())


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_disp_example():
    assert call("disp", "up", "2,2,4", "1+3Z") == (0, "2,3,5\n", "")
    code, out, _ = call("disp", "down", "0^2 2^2 4", "3Z")
    assert out.strip() == "-1,0,2,2,4"


def test_loose_and_link():
    assert call("loose", "2,2,4")[1].strip() == "{2,4,6,7}"
    assert call("link", "2,3,5 / 2,2,4")[1].strip() == "2-link (1+3Z)"
    code, out, _ = call("link", "0,0,2,3,5 / 0,0,2,2,4", "--json")
    assert json.loads(out)["kind"] == "not-a-link"


def test_tg_bound_json_main2():
    code, out, _ = call("tg-bound", "61", "61", "--method", "main2", "--json")
    d = json.loads(out)
    assert code == 0 and d["upper"] == 1862 and d["meta"]["source"] == "main2"
    jsonschema.validate(d, SCHEMA)


def test_tg_bound_best_json_validates():
    code, out, _ = call("tg-bound", "61", "61", "--json")
    d = json.loads(out)
    assert d["upper"] == 1508
    jsonschema.validate(d, SCHEMA)


def test_tg_bound_text_and_tree():
    code, out, _ = call("tg-bound", "6", "12", "--tree")
    assert out.splitlines()[0].startswith("17 <= tg(6 x 12) <= 36")
    assert "Split row" in out


def test_exists():
    assert call("exists", "9", "3", "8")[1].startswith("unknown")
    assert call("exists", "10", "2", "8")[1].startswith("proven-yes")
    d = json.loads(call("exists", "10", "2", "8", "--json")[1])
    jsonschema.validate(d["certificate"], SCHEMA)


def test_other_commands():
    assert call("tau", "10", "8", "5", "3")[1].startswith("0,0,1,1,1,2,2,3,3,3")
    d = json.loads(call("difficulty", "2,2 / 0,0", "--json")[1])
    assert (d["ct"], d["c_delta"]) == (3, 2)
    out = call("chain", "corollary", "increase-ab", "9")[1]
    assert "1+5Z" in out
    out = call("chain", "corollary", "increase-ac", "10", "--a", "8", "--b", "5", "--c", "3")[1]
    assert "2+7Z" in out
    assert call("chain", "verify", "0,0", "0,1", "1,2", "2,2")[0] == 0
    assert call("elliptic", "status", "2,3,5 / 2,2,4", "3")[1].strip() == "unique-point"
    assert call("elliptic", "markings", "2,2,4", "1+3Z")[1].splitlines() == ["p: -4,-2,-2", "q: 2,3,5"]
    out = call("semigroup", "gaps:{1,2,3,4,5,8,9,10,11}", "--rank", "8", "--shift")[1]
    assert "Komeda applies: tg = 9" in out and "weight 7" in out


def test_domain_errors_exit_1():
    code, _, err = call("chain", "verify", "0,0", "1,1")
    assert code == 1 and "not a link" in err
    assert call("elliptic", "status", "2,3,5 / 2,2,4", "1")[0] == 1
    assert call("difficulty", "4,4,4 / 0,0,0", "--budget", "3")[0] == 1
    assert call("semigroup", "gaps:{1,2}", "--shift")[0] == 1


def test_usage_errors_exit_2(capsys):
    assert call("disp", "up", "2,1", "1+3Z")[0] == 2
    assert "'2,1'" in capsys.readouterr().err
    assert call("disp", "sideways", "2,2", "3Z")[0] == 2
    assert call("tg-bound", "0", "3")[0] == 2
    assert call("repro", "nonsense")[0] == 2
    assert call()[0] == 2


def test_budget_env(monkeypatch):
    monkeypatch.setenv("SKEWGENUS_BUDGET", "2")
    assert call("difficulty", "3,3 / 0,0")[0] == 1


@pytest.mark.parametrize("target", ["fig-disp", "tau-links", "four-stage", "comparison",
                                    "pareschi-crossover", "stage-one-semigroups"])
def test_repro_matches_golden(target):
    code, out, err = call("repro", target)
    assert code == 0, err
    assert "matches golden" in out


def test_repro_contents():
    out = call("repro", "comparison")[1]
    assert "main2: 1862, asyPrecise: 1876, main2 stronger" in out
    out = call("repro", "four-stage", "--a", "9", "--b", "9")[1]
    assert "stage costs: 9, 1, 23, 9" in out
    out = call("repro", "pareschi-crossover")[1]
    rows = [line.split() for line in out.splitlines()[1:12]]
    assert [r[-1] for r in rows] == [">"] * 6 + ["="] * 3 + ["<"] * 2


def test_repro_mismatch_reports_first_line(monkeypatch):
    from skewgenus import repro

    monkeypatch.setattr(repro, "golden_text", lambda name: "a = b = 61\nmain2: 0\n")
    code, _, err = call("repro", "comparison")
    assert code == 1 and "line 2" in err


def test_repro_without_golden():
    code, out, _ = call("repro", "four-stage", "--a", "5", "--b", "6")
    assert code == 0 and "no golden file" in out


def test_repro_deterministic():
    assert call("repro", "tau-links")[1] == call("repro", "tau-links")[1]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "skewgenus.cli", "disp", "up", "2,2,4", "1+3Z"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "2,3,5\n"
