import pytest

from quiverserre.algebra import algebra_from_json
from quiverserre.errors import Mismatch, UnknownEntry
from quiverserre.zoo import ZooEntry, pipeline_report, zoo_get, zoo_list, zoo_verify

from conftest import CORPUS


def test_listed_entries():
    assert zoo_list() == ["point", "dual-numbers", "a2-path", "tri3-natural", "tri3-reversed",
                          "sl2-block", "dualext-a3", "hc-toy", "nongood"]


@pytest.mark.parametrize("name, dim", [("dual-numbers", 2), ("sl2-block", 5), ("tri3-natural", 6)])
def test_dimensions(name, dim):
    assert zoo_get(name).algebra.dim == dim


def test_unknown_entry():
    with pytest.raises(UnknownEntry):
        zoo_get("sl3-block")


@pytest.mark.parametrize("name", CORPUS)
def test_verify(name):
    assert zoo_verify(name)["ok"]


@pytest.mark.parametrize("name", CORPUS)
def test_every_expected_value_has_provenance(name):
    e = zoo_get(name)
    assert all(e.provenance_of(k) for k in e.expected)


def test_verify_deterministic():
    for name in ("sl2-block", "tri3-reversed", "hc-toy"):
        assert pipeline_report(zoo_get(name)) == pipeline_report(zoo_get(name))


def test_point_is_trivial():
    rep = zoo_verify("point")["report"]
    assert rep["dim"] == 1 and rep["globalDimension"] == 0
    assert rep["quasiHereditary"] and rep["symmetric"]


def test_tri3_reversed_no_double_centraliser():
    assert zoo_verify("tri3-reversed")["report"]["doubleCentraliserWithQ"] is False


def test_mismatch_names_first_field():
    real = zoo_get("point")
    fake = ZooEntry("fake", "", real.build, (), {"dim": 2}, {"*": "test"})
    rep = pipeline_report(fake)
    assert rep["dim"] == 1
    from quiverserre import zoo

    zoo._BY_NAME["fake"] = fake
    try:
        with pytest.raises(Mismatch) as exc:
            zoo_verify("fake")
        assert exc.value.field == "dim"
        assert zoo_verify("fake", strict=False)["mismatches"] == [
            {"field": "dim", "expected": 2, "actual": 1}]
    finally:
        del zoo._BY_NAME["fake"]


def test_defining_property_asserted_at_build():
    real = zoo_get("nongood")
    broken = ZooEntry("broken", "", zoo_get("sl2-block").build, (), {}, {}, real.defining_property)
    with pytest.raises(AssertionError):
        broken.algebra


def test_emit_round_trip(entry):
    data = entry.to_json()
    assert algebra_from_json(data["algebra"]).to_json() == data["algebra"]
