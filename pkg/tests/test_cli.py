import io
import json
from fractions import Fraction

import pytest

from dsjets.cli import run


def invoke(*argv):
    buf = io.StringIO()
    code = run(list(argv), stdout=buf)
    return code, buf.getvalue()


def test_decompose_json():
    code, out = invoke("decompose", "--flavor", "ds", "--jets", "3", "--dim", "3", "--order", "5")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"command", "inputs", "results", "checks"}
    assert data["results"]["summary"] == {"terms": 3, "total_dimension": 44}
    assert all(set(c) >= {"name", "expected", "computed", "pass"} for c in data["checks"])


def test_decompose_csv_is_a_table():
    code, out = invoke("--format", "csv", "decompose", "--flavor", "gg", "--jets", "3", "--order", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "degrees,dimension"
    assert len(lines) == 4


def test_format_flag_after_subcommand():
    code, out = invoke("verify", "--suite", "relations", "--format", "text")
    assert code == 0
    assert "PASS relation (R) expands to zero" in out


def test_verify_relations_anchor():
    code, out = invoke("verify", "--suite", "relations")
    data = json.loads(out)
    first = data["checks"][0]
    assert first["pass"] and first["anchor"] == "3(w12)^2=f2'w12^1-f1'w12^2"


def test_threshold():
    code, out = invoke("threshold", "--geometry", "hypersurface-p4", "--flavor", "ds", "--jets", "3")
    assert code == 0
    assert json.loads(out)["results"]["threshold"] == 43


def test_rationals_are_strings():
    code, out = invoke("leading", "--flavor", "ds", "--jets", "2", "--degree", "10")
    data = json.loads(out)
    assert code == 0
    d = 10
    want = Fraction(-5 * d * (37 * d * d - 452 * d + 919), 1837080)
    assert data["results"]["value"] == f"{want.numerator}/{want.denominator}"
    assert data["checks"][0]["pass"]


def test_euler():
    code, out = invoke("euler", "--geometry", "hypersurface-p4", "--degree", "1", "--flavor", "ds", "--jets", "3", "--order", "1")
    assert code == 0
    assert json.loads(out)["results"]["chi"] == "-1/1"


def test_oracle_command():
    code, out = invoke("oracle", "--dim", "2", "--max-order", "5")
    assert code == 0
    assert [r["oracle"] for r in json.loads(out)["results"]] == [2, 3, 5, 7, 11]


@pytest.mark.parametrize(
    "argv",
    [
        ["decompose", "--flavor", "xx", "--jets", "3", "--order", "5"],
        ["nonsense"],
        ["leading", "--flavor", "ds", "--jets", "3"],
        ["oracle", "--dim", "3", "--max-order", "40"],
        ["threshold", "--flavor", "ds", "--jets", "3", "--d-min", "9", "--d-max", "2"],
        [],
    ],
)
def test_usage_errors_exit_2(argv):
    code, out = invoke(*argv)
    assert code == 2
    assert out == ""


def test_failed_check_exits_1(monkeypatch):
    from dsjets import reference

    monkeypatch.setitem(reference.THRESHOLDS, ("ds", 3, "hypersurface-p4"), (44, "d>=44"))
    code, _ = invoke("threshold", "--flavor", "ds", "--jets", "3")
    assert code == 1


def test_full_report_is_stable_and_anchored():
    code1, out1 = invoke("report", "--paper")
    code2, out2 = invoke("report", "--paper")
    assert out1 == out2
    data = json.loads(out1)
    assert all(c["anchor"] for c in data["checks"])
    failed = [c["name"] for c in data["checks"] if not c["pass"]]
    # the only published value that is not reproduced is the log DS k=3 constant term
    assert failed == ["coefficient of d^0, ds k=3 log-p3"]
    assert code1 == code2 == 1
    assert data["results"]["ds2/log-p3 printed vs computed"]["computed"][0] == "-1/729"
