import json
import os

import jsonschema
import pytest

import hopfq

FIXTURES = os.environ.get("HQ_FIXTURES_DIR", os.path.join(os.path.dirname(__file__), "..", "fixtures"))
SCHEMA = os.environ.get(
    "HQ_SCHEMA", os.path.join(os.path.dirname(__file__), "..", "..", "docs", "report.schema.json")
)


@pytest.fixture(scope="module")
def schema():
    with open(SCHEMA) as f:
        return json.load(f)


def test_catalog_contains_required_entries():
    names = {e["name"] for e in hopfq.catalog()}
    assert {"sweedler", "oq-sl-2", "klein-bottle-group"} <= names
    assert set(hopfq.catalog_names()) == names


def test_descent_integral_on_oq_sl_2():
    r = hopfq.run("integral", "oq-sl-2", method="descent")
    assert r.passed
    assert r["results"]["pi0"] == {"X11": "q^2", "X12": "0", "X21": "0", "X22": "1/q^2"}


def test_homology_integral_on_solvable():
    r = hopfq.run("integral", "u-solvable-2", method="homology")
    assert r["results"]["pi0"] == {"x": "0", "y": "-1"}


def test_twisted_top_homology():
    r = hopfq.run("hochschild", "u-solvable-2", twist="nakayama", truncate=8, window=3)
    assert r.passed
    assert r["results"]["top_homology"] == 1


def test_corrupted_fixture_fails():
    r = hopfq.run("axioms", os.path.join(FIXTURES, "oq-sl-2-corrupted.hopf"))
    assert r.exit_code == 1
    assert r["results"]["axioms"]["failures"]


def test_errors_are_reports():
    r = hopfq.run("integral", "sweedler", method="homology")
    assert r.exit_code == 2
    assert r["verdicts"]["error"]["kind"] == "MethodMismatch"


def test_reports_match_schema_and_round_trip(schema):
    for command, algebra, opts in [
        ("catalog", "", {}),
        ("axioms", "laurent-1", {}),
        ("integral", "klein-bottle-group", {"method": "both"}),
        ("nakayama", "taft-3", {"seed": 7}),
        ("radford", "sweedler", {}),
        ("hochschild", "taft-3", {}),
        ("duality", "laurent-1", {}),
        ("integral", "sweedler", {"method": "descent"}),
    ]:
        r = hopfq.run(command, algebra, **opts)
        jsonschema.validate(dict(r), schema)
        again = json.dumps(json.loads(r.text), indent=2, sort_keys=True, ensure_ascii=False) + "\n"
        assert again == r.text


def test_presentation_round_trip():
    p = hopfq.Presentation.from_catalog("oq-sl-2")
    text = p.write()
    q = hopfq.Presentation.read(text)
    assert q.write() == text
    assert q.generators == ["X11", "X12", "X21", "X22"]
    passed, failures = q.verify_axioms()
    assert passed and not failures
    assert p.normal_form("X12*X11") == q.normal_form("X12*X11")


def test_bad_presentation_raises():
    with pytest.raises(hopfq.HopfError):
        hopfq.Presentation.read("not a presentation")


def test_text_exports():
    assert hopfq.fd_structure("sweedler").startswith("fdhopf 1")
    assert hopfq.export_complex("laurent-1").startswith("complex 1")
