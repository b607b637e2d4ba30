import io
import json

import pytest

from quiverserre.algebra import algebra_from_json
from quiverserre.cli import EXIT_FAIL, EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE, run
from quiverserre.modules import injective, projective
from quiverserre.serialize import dumps, representation_from_json, representation_to_json
from quiverserre.stratification import StratifiedAlgebra
from quiverserre.tilting import tilting_data
from quiverserre.zoo import zoo_get


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    text = out.getvalue()
    return code, json.loads(text) if text.startswith("{") else text


def without_timing(report):
    return {k: v for k, v in report.items() if k != "timing"}


def test_zoo_verify_point():
    code, rep = call("zoo", "verify", "point")
    assert code == EXIT_OK
    assert [c["verdict"] for c in rep["checks"]] == ["pass"]


def test_serre_check_precondition_exit():
    code, rep = call("serre", "check", "tri3-reversed")
    assert code == EXIT_PRECONDITION
    assert {c["verdict"] for c in rep["checks"]} == {"precondition-failed"}


def test_serre_table_sl2():
    code, rep = call("dbcheck", "serre-table", "sl2-block")
    assert code == EXIT_OK
    rows = rep["data"]["table"]
    assert len(rows) == 4 * 5 and all(r["equal"] for r in rows)


@pytest.mark.parametrize("argv", [
    ["strat"],
    ["strat", "no-such-entry"],
    ["dbcheck", "serre-table", "sl2-block", "--range", "oops"],
    ["coapp", "sl2-block", "--q", "2", "--module", "Q:1"],
    ["frobnicate"],
])
def test_usage_errors(argv, capsys):
    assert run(argv, out=io.StringIO()) == EXIT_USAGE


def test_malformed_json_reports_position(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": ["1"],\n  "arrows": [,]}')
    assert run(["analyze", str(bad)], out=io.StringIO()) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "line 2" in err and "column" in err


def test_algebra_file_round_trip(tmp_path):
    code, rep = call("zoo", "emit", "sl2-block")
    assert code == EXIT_OK
    path = tmp_path / "sl2.json"
    path.write_text(dumps(rep["data"]["entry"]))
    alg = algebra_from_json(rep["data"]["entry"]["algebra"])
    assert alg.to_json() == zoo_get("sl2-block").algebra.to_json()
    code, strat = call("strat", str(path))
    assert code == EXIT_OK
    code, named = call("strat", "sl2-block")
    assert strat["data"] == named["data"]


def test_module_json_round_trip(entry):
    alg = entry.algebra
    for v in alg.vertices:
        for m in (projective(alg, v), injective(alg, v)):
            back = representation_from_json(alg, json.loads(dumps(representation_to_json(m))))
            assert back == m


def test_module_file_argument(tmp_path):
    alg = zoo_get("sl2-block").algebra
    path = tmp_path / "p1.json"
    path.write_text(dumps(representation_to_json(projective(alg, "1"))))
    a = call("coapp", "sl2-block", "--q", "2", "--module", str(path), "--power", "2")
    b = call("coapp", "sl2-block", "--q", "2", "--module", "P:1", "--power", "2")
    assert a[0] == b[0] == EXIT_OK
    assert a[1]["data"] == b[1]["data"]


def test_tilting_module_argument(tmp_path):
    s = zoo_get("sl2-block")
    t = tilting_data(StratifiedAlgebra(s.algebra, s.order)).modules["1"]
    path = tmp_path / "t1.json"
    path.write_text(dumps(representation_to_json(t)))
    a = call("coapp", "sl2-block", "--q", "2", "--module", "T:1")
    b = call("coapp", "sl2-block", "--q", "2", "--module", str(path))
    assert a[0] == b[0] == EXIT_OK
    assert a[1]["data"] == b[1]["data"]


@pytest.mark.parametrize("argv", [
    ["strat", "sl2-block"],
    ["tilt", "tri3-natural"],
    ["serre", "check", "sl2-block"],
    ["zoo", "verify", "--all"],
])
def test_report_determinism(argv):
    a, b = call(*argv), call(*argv)
    assert a[0] == b[0]
    assert without_timing(a[1]) == without_timing(b[1])


@pytest.mark.parametrize("verb, plain", [
    (["strat", "check", "sl2-block"], ["strat", "sl2-block"]),
    (["tilt", "compute", "sl2-block"], ["tilt", "sl2-block"]),
    (["ringel", "dual", "tri3-natural", "--double"], ["ringel", "tri3-natural", "--double"]),
    (["dc", "find", "dualext-a3"], ["dc", "dualext-a3", "--tilting"]),
])
def test_verb_forms(verb, plain):
    a, b = call(*verb), call(*plain)
    assert a[0] == b[0] == EXIT_OK
    assert a[1]["data"] == b[1]["data"]


def test_dc_find_dual_extension():
    code, rep = call("dc", "find", "dualext-a3")
    assert code == EXIT_OK
    assert rep["data"]["X"] == ["3"]


def test_failed_check_exit_code():
    code, rep = call("strat", "nongood", "--require", "ss")
    assert code == EXIT_FAIL


def test_human_output():
    code, text = call("--human", "strat", "sl2-block")
    assert code == EXIT_OK and text.startswith("quiverserre strat")
