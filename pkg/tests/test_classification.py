from __future__ import annotations

from fractions import Fraction

import pytest

from orbifoldk3.classification import (
    DEGREE_FORMULA,
    EDGE_COUNT,
    RANK_BOUND,
    SurfaceRecord,
    admissibility,
    census,
    diff,
    emit,
    parse_records,
    search,
    surface_record,
)
from orbifoldk3.lattice import normalize_weights
from orbifoldk3.tables import golden_table
from oracles import brute_force_search


def test_search_tiny_bounds():
    assert [w.w for w in search(1)] == [(1, 1, 1, 1)]
    assert [w.w for w in search(2)] == [(1, 1, 1, 1), (1, 1, 1, 2), (1, 1, 2, 2)]


def test_search_rejects_bad_bound():
    with pytest.raises(ValueError):
        search(0)


@pytest.mark.parametrize("bound", [3, 5, 8])
def test_search_equals_brute_force_oracle(bound):
    assert [w.w for w in search(bound)] == brute_force_search(bound)


def test_search_finds_the_census(golden):
    hits = search(40)
    assert len(hits) == 95
    assert {w.w for w in hits} == {row.weights.w for row in golden}
    assert hits == sorted(hits)


def test_search_stable_under_larger_bound():
    assert set(search(40)) == set(search(60))


def test_admissibility_flags():
    flags = admissibility(normalize_weights((2, 2, 2, 3)))
    assert not flags.ambient_well_formed
    assert not flags.k3_candidate
    assert "ambient" in flags.failure_reason()
    good = admissibility(normalize_weights((1, 4, 6, 11)))
    assert good.k3_candidate
    assert good.failure_reason() is None


def test_surface_record_rejects_non_candidates():
    with pytest.raises(ValueError, match="not a K3 candidate"):
        surface_record(normalize_weights((2, 2, 2, 3)))


def test_census_records_are_labeled(census40):
    assert len(census40) == 95
    assert sorted(rec.label for rec in census40) == list(range(1, 96))
    rec33 = next(rec for rec in census40 if rec.label == 33)
    assert rec33.invariants.degree == Fraction(133, 12)
    assert rec33.invariants.dim == 48


def test_diff_match_and_mismatch_rows(census40, golden):
    report = diff(census40, golden)
    by_label = {row.label: row for row in report.rows}
    assert len(by_label) == 95
    assert by_label[33].matches
    assert by_label[1].matches
    assert report.mismatched_labels == (31, 64, 79, 84)
    assert report.match_count == 91


def test_diff_findings(census40, golden):
    report = diff(census40, golden)
    degree_flags = {f.label for f in report.findings_of_kind(DEGREE_FORMULA)}
    assert degree_flags == {31, 84}
    label84 = next(f for f in report.findings_of_kind(DEGREE_FORMULA) if f.label == 84)
    assert "1411/210" in label84.detail and "1411/70" in label84.detail
    assert {f.label for f in report.findings_of_kind(RANK_BOUND)} == {79}
    assert {f.label for f in report.findings_of_kind(EDGE_COUNT)} == {64}
    # Table 1 dims are consistent with Table 2 lists on every row
    assert report.findings_of_kind("dim_formula") == ()


def test_diff_is_deterministic_and_pure(census40, golden):
    first = diff(census40, golden)
    second = diff(census40, golden)
    assert first == second
    assert golden == golden_table()


def test_diff_rejects_key_mismatch(census40, golden):
    with pytest.raises(ValueError, match="weight keys differ"):
        diff(census40[:-1], golden)


def test_emit_csv_matches_schema(census40):
    rec33 = next(rec for rec in census40 if rec.label == 33)
    out = emit([rec33], "csv")
    header, row = out.strip().splitlines()
    assert header == "label,w0,w1,w2,w3,d,singularities,deg_num,deg_den,irreducibility,dim"
    assert row == "33,1,4,6,11,22,A1+A3+A5,133,12,certified,48"


def test_emit_markdown_row(census40):
    rec1 = next(rec for rec in census40 if rec.label == 1)
    out = emit([rec1], "markdown")
    assert "| 1 | (1,1,1,1) | 4 | — | 0 | certified | 90 |" in out.splitlines()


def test_emit_empty_and_unknown_format():
    assert emit([], "csv").strip() == (
        "label,w0,w1,w2,w3,d,singularities,deg_num,deg_den,irreducibility,dim"
    )
    with pytest.raises(ValueError, match="unknown format"):
        emit([], "yaml")


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_emit_round_trip(census40, fmt):
    text = emit(census40, fmt)
    parsed = parse_records(text, fmt)
    assert parsed == census40
    assert emit(parsed, fmt) == text


def test_parse_rejects_bad_input():
    with pytest.raises(ValueError):
        parse_records("nonsense", "csv")
    with pytest.raises(ValueError):
        parse_records("[]", "markdown")


def test_unlabeled_record_serialization():
    rec = surface_record(normalize_weights((1, 4, 6, 11)), label=None)
    csv_row = emit([rec], "csv").strip().splitlines()[1]
    assert csv_row.startswith(",1,4,6,11,")
    parsed = parse_records(emit([rec], "json"), "json")
    assert parsed == [rec]
