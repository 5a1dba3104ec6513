from __future__ import annotations

import json

import jsonschema
import pytest
from hypothesis import given, settings, strategies as st

from sandwich.classify import run_case
from sandwich.cli import main, render_case_text, report_to_dict
from sandwich.rootsys import SimpleType

from conftest import all_extremity_cases

VEC = {"type": "array", "items": {"type": "integer"}}
CASE_SCHEMA = {
    "type": "object",
    "required": ["family", "rank", "node", "g_type", "h_star_x2", "r_minus_count", "sandwich",
                 "property3", "descriptor", "verdict"],
    "properties": {
        "family": {"enum": list("ABCDEFG")},
        "rank": {"type": "integer"}, "node": {"type": "integer"},
        "g_type": {"type": "string"}, "h_star_x2": VEC,
        "r_minus_count": {"type": "integer"}, "sandwich": {"type": "boolean"},
        "property3": {"type": "boolean"},
        "descriptor": {"oneOf": [{"type": "null"}, {
            "type": "object", "required": ["abelian_dim", "heisenbergs"],
            "properties": {"abelian_dim": {"type": "integer"}, "heisenbergs": {
                "type": "array", "items": {"type": "object", "required": ["zeta_x2", "multiplicity"],
                                           "properties": {"zeta_x2": VEC,
                                                          "multiplicity": {"type": "integer"}}}}}}]},
        "witness": {"type": "array", "items": VEC, "minItems": 3, "maxItems": 3},
        "paper_entry": {"type": "object", "required": ["label", "printed_structure"]},
        "verdict": {"enum": ["match", "discrepancy", "not-in-paper", "non-sandwich"]},
    },
}
SCHEMA = {"type": "object", "required": ["cases"],
          "properties": {"cases": {"type": "array", "items": CASE_SCHEMA}}}


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_inspect_g2_node2(capsys):
    code, out, _ = run(["inspect", "G2", "2", "2"], capsys)
    assert code == 0
    assert "-3e1 - 3e2 - 2e3" in out and "nilradical structure: h_5" in out


def test_inspect_e8_node2(capsys):
    code, out, _ = run(["inspect", "E8", "8", "2"], capsys)
    assert code == 0 and "witness:" in out and "verdict: non-sandwich" in out


@pytest.mark.parametrize("argv, code", [
    (["inspect", "A", "3", "2"], 3),
    (["inspect", "A", "3", "7"], 2),
    (["inspect", "Q", "3", "1"], 2),
    (["inspect", "C", "2", "1"], 2),
    (["inspect", "E7", "8", "1"], 2),
    (["classify", "--max-rank", "3"], 2),
])
def test_exit_codes(argv, code, capsys):
    assert run(argv, capsys)[0] == code


def test_usage_error_from_argparse(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["inspect", "A"])
    assert exc.value.code == 2


def test_io_failure(tmp_path, capsys):
    target = tmp_path / "missing" / "out.json"
    assert run(["inspect", "A", "3", "1", "--output", str(target)], capsys)[0] == 1


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    assert run(["inspect", "B", "3", "3", "--format", "json", "-o", str(target)], capsys)[0] == 0
    doc = json.loads(target.read_text())
    assert doc["descriptor"]["heisenbergs"][0]["multiplicity"] == 1


def test_classify_json_schema_and_determinism(capsys):
    code, first, _ = run(["classify", "--max-rank", "5", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(first)
    jsonschema.validate(doc, SCHEMA)
    _, second, _ = run(["classify", "--max-rank", "5", "--format", "json"], capsys)
    assert first == second


def test_verify_paper_text_names_81(capsys):
    code, out, _ = run(["verify-paper", "--max-rank", "5"], capsys)
    assert code == 0
    assert "entry 8.1: discrepancy" in out
    assert r"{\mathrm{h}}^{\widehat{\zeta }}_{87}" in out


def test_verify_paper_json(capsys):
    _, out, _ = run(["verify-paper", "--max-rank", "4", "--format", "json"], capsys)
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert "8.1" in doc["summary"]["discrepancies"]


def test_env_default_max_rank(monkeypatch, capsys):
    monkeypatch.setenv("SANDWICH_MAX_RANK", "4")
    _, out, _ = run(["classify", "--format", "json"], capsys)
    assert max(c["rank"] for c in json.loads(out)["cases"] if c["family"] in "ABCD") == 4


CASES = all_extremity_cases(6)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(CASES), st.booleans())
def test_json_round_trip(case, detail):
    f, n, L = case
    d = report_to_dict(run_case(SimpleType(f, n), L), detail=detail)
    assert json.loads(json.dumps(d)) == d


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(CASES))
def test_text_and_json_carry_the_same_fields(case):
    f, n, L = case
    d = report_to_dict(run_case(SimpleType(f, n), L), detail=True)
    text = render_case_text(d)
    from sandwich.cli import _cow, _structure_of
    assert f"retained type: {d['g_type']}" in text
    assert _cow(d["h_star_x2"]) in text
    assert f"|R-| = {d['r_minus_count']}" in text
    assert f"sandwich: {d['sandwich']}" in text and f"property3: {d['property3']}" in text
    assert f"nilradical structure: {_structure_of(d)}" in text
    assert f"verdict: {d['verdict']}" in text
    if d["descriptor"]:
        assert text.count("m = ") == len(d["descriptor"]["heisenbergs"])
    assert text.count(" + ") >= sum(len(p["pairs_x2"]) for p in d["pair_sets"])
