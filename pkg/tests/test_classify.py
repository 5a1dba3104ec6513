from __future__ import annotations

import pytest

from sandwich.classify import (ENTRIES, PAPER_TABLE, classify_all, find_entry, run_case,
                               verify_paper)
from sandwich.carving import NotExtremityError
from sandwich.rootsys import SimpleType


@pytest.fixture(scope="module")
def reports():
    return classify_all(8)


@pytest.fixture(scope="module")
def audit():
    return verify_paper(8)


def test_table_labels():
    labels = [e.label for e in PAPER_TABLE]
    assert labels == ["1.1", "1.2", "2.1", "2.2", "3.1", "3.2", "4.1", "4.2", "4.3", "5.1",
                      "5.2", "6.1", "6.2", "7.1", "7.2", "7.3", "8.1", "8.2", "8.3", "9.1", "9.2"]
    assert len(set(labels)) == len(labels)


def test_f4_node4_match():
    r = run_case(SimpleType("F", 4), 4)
    assert r.verdict == "match"
    assert str(r.carving.g_type) == "B3" and str(r.carving.h_star) == "2e1"
    assert r.analysis.descriptor.render() == "h_9 + 6 x h_5"
    assert any("coefficients" in n for n in r.notes)


def test_e8_node2_non_sandwich():
    r = run_case(SimpleType("E", 8), 2)
    assert r.paper is None and r.verdict == "non-sandwich"
    assert r.analysis.witness is not None


def test_e7_node1_discrepancy_quotes_printed_value():
    r = run_case(SimpleType("E", 7), 1)
    assert r.verdict == "discrepancy"
    d = {x.field: x for x in r.discrepancies}
    assert d["structure"].computed == "h_33" and d["structure"].claimed == "h_87"
    assert r.paper.printed_structure == r"{\mathrm{h}}^{\widehat{\zeta }}_{87}"


def test_run_case_rejects_middle_node():
    with pytest.raises(NotExtremityError):
        run_case(SimpleType("D", 5), 3)


def test_classify_sorted_and_deterministic(reports):
    keys = [(r.type.family, r.type.rank, r.node) for r in reports]
    assert keys == sorted(keys)
    again = classify_all(8)
    assert [(r.case_id, r.verdict, r.carving.h_star) for r in again] == \
           [(r.case_id, r.verdict, r.carving.h_star) for r in reports]


def test_orbit_dedup(reports):
    by = {(str(r.type), r.node): r for r in reports}
    assert by[("A5", 1)].alias_of is None and by[("A5", 5)].alias_of == 1
    assert by[("D4", 1)].alias_of is None
    assert by[("D4", 3)].alias_of == 1 and by[("D4", 4)].alias_of == 1
    assert by[("D6", 5)].alias_of is None and by[("D6", 6)].alias_of == 5
    assert by[("E6", 6)].alias_of == 1 and by[("E6", 2)].alias_of is None
    assert any("C2" in n for n in by[("B2", 1)].notes)
    canonical = [r for r in reports if r.alias_of is None]
    assert len(canonical) < len(reports)


def test_every_case_has_an_entry_but_e8_node2(reports):
    missing = [r.case_id for r in reports if r.paper is None]
    assert missing == ["E8/2"]


def test_match_requires_agreement(reports):
    for r in reports:
        if r.verdict != "match":
            continue
        e, n = r.paper, r.type.rank
        assert r.carving.g_type == e.claimed_g(n)
        assert r.carving.h_star.coords_x2 == e.claimed_hstar_x2(n)
        assert len(r.carving.Rminus) == e.claimed_r_minus(n)
        assert r.analysis.sandwich and r.property3
        assert r.computed_structure() == e.claimed_structure(n)


def test_verify_paper_visits_each_entry_once(audit):
    assert [r.entry.label for r in audit] == [e.label for e in PAPER_TABLE]


def test_verify_paper_verdicts(audit):
    v = {r.entry.label: r.verdict for r in audit}
    for label in ("1.1", "1.2", "2.1", "3.1", "3.2", "4.1", "5.2", "6.1", "6.2", "7.1", "7.2"):
        assert v[label] == "match", label
    for label in ("5.1", "8.1", "8.2", "8.3", "9.1", "9.2"):
        assert v[label] == "discrepancy", label


@pytest.mark.parametrize("label", ["2.2", "4.2", "4.3"])
def test_parametric_hstar_off_by_two_at_odd_l(label, audit):
    res = next(r for r in audit if r.entry.label == label)
    for rep in res.reports:
        l = rep.type.rank - 1
        fields = {d.field for d in rep.discrepancies}
        assert fields == ({"h_star"} if l % 2 else set())
        if l % 2:
            assert "printed h* is 2 times the primitive generator" in rep.notes


def test_relation_multiset_matches_for_matched_entries(audit):
    for res in audit:
        for rep in res.reports:
            if rep.verdict == "match":
                got = tuple(sorted((len(ps) for ps in rep.analysis.pair_sets.values()), reverse=True))
                assert got == res.entry.claimed_structure(rep.type.rank)[1]


def test_find_entry():
    assert find_entry(SimpleType("D", 6), 5).label == "4.2"
    assert find_entry(SimpleType("D", 6), 6).label == "4.3"
    assert find_entry(SimpleType("E", 8), 2) is None
    assert ENTRIES["9.2"].node(8) == 8
