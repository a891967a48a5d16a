import json
import shutil

import pytest

from gradezeta.fixtures import (
    FixtureError,
    FixtureRecord,
    default_fixture_dir,
    load_fixtures,
    verify_all,
    verify_fixture,
)


@pytest.fixture(scope="module")
def corpus():
    return {r.id: r for r in load_fixtures()}


def test_shipped_corpus_is_green(corpus):
    reports = verify_all(list(corpus.values()))
    bad = {r.id: [(m.key, m.expected, m.actual) for m in r.mismatches()] for r in reports if not r.ok}
    assert not bad


def test_expected_records_present(corpus):
    assert corpus["veronese-b2"].expected["exponents"] == ["4", "-3", "2", "-3", "6", "-11", "18", "-30", "56", "-105"]
    g4 = corpus["verlinde-g4"].expected
    assert g4["degree"] == "96" and len(g4["reduced_exponents"]) == 9
    ps = corpus["purespinor"].expected
    assert (ps["dim_plus_one"], ps["degree"], ps["exponents"]) == ("11", "12", ["16", "-10"])


def test_every_value_has_tagged_provenance(corpus):
    for r in corpus.values():
        for key in r.expected:
            tag = r.provenance_for(key).split(":")[0]
            assert tag.isalpha() and tag.isupper(), (r.id, key)


def test_corrupted_copy_reports_key(corpus):
    rec = corpus["veronese-b2"]
    bad = dict(rec.expected)
    bad["exponents"] = list(bad["exponents"])
    bad["exponents"][4] = "7"
    report = verify_fixture(FixtureRecord(rec.id, rec.descriptor, bad, rec.provenance))
    assert not report.ok
    assert [m.key for m in report.mismatches()] == ["exponents[5]"]


def test_float_tolerance_is_applied(corpus):
    rec = corpus["hurwitz-p3-n1000"]
    tight = FixtureRecord(rec.id, rec.descriptor, {"value": "-0.1874"}, rec.provenance, {"value": 1e-6})
    assert not verify_fixture(tight).ok
    assert verify_fixture(rec).ok


def test_unresolvable_descriptor():
    rec = FixtureRecord("x", "nonsense:1", {"degree": "1"}, "NOTE: none")
    with pytest.raises(FixtureError):
        verify_fixture(rec)
    rec = FixtureRecord("x", "veronese:1", {"no_such_key": "1"}, "NOTE: none")
    with pytest.raises(FixtureError):
        verify_fixture(rec)


def _write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data, indent=2), encoding="utf-8")
    return p


GOOD = {"id": "a", "descriptor": "veronese:1", "expected": {"degree": "2"}, "provenance": "NOTE: 1 + 1"}


def test_single_object_file(tmp_path):
    _write(tmp_path, "one.json", GOOD)
    [rec] = load_fixtures(tmp_path)
    assert rec.id == "a" and verify_fixture(rec).ok


def test_duplicate_ids_rejected(tmp_path):
    _write(tmp_path, "a.json", GOOD)
    _write(tmp_path, "b.json", [GOOD])
    with pytest.raises(FixtureError, match="duplicate id"):
        load_fixtures(tmp_path)


@pytest.mark.parametrize("mutation,message", [
    (lambda r: r.pop("expected"), "missing"),
    (lambda r: r.update(expected={"degree": 2}), "string"),
    (lambda r: r.update(provenance="somewhere"), "provenance"),
    (lambda r: r.update(tolerance={"value": 1e-3}), "tolerance"),
    (lambda r: r.update(extra=1), "unknown field"),
])
def test_schema_violations(tmp_path, mutation, message):
    rec = dict(GOOD)
    mutation(rec)
    _write(tmp_path, "bad.json", [GOOD | {"id": "z"}, rec])
    with pytest.raises(FixtureError, match=message) as info:
        load_fixtures(tmp_path)
    assert "bad.json:" in str(info.value)


def test_parse_error_reports_line(tmp_path):
    (tmp_path / "broken.json").write_text('[\n  {"id": "a",\n  oops\n]', encoding="utf-8")
    with pytest.raises(FixtureError, match=r"broken.json:3"):
        load_fixtures(tmp_path)


def test_environment_override(tmp_path, monkeypatch):
    shutil.copy(default_fixture_dir() / "s3-veronese.json", tmp_path)
    monkeypatch.setenv("GRADEZETA_FIXTURES", str(tmp_path))
    assert [r.id for r in load_fixtures()] == ["veronese-b2"]
