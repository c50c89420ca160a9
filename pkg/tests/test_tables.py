from __future__ import annotations

from fractions import Fraction

from orbifoldk3.lattice import normalize_weights
from orbifoldk3.singularities import SingularityData
from orbifoldk3.tables import golden_by_weights, golden_table, label_for_weights


def test_census_shape(golden):
    assert len(golden) == 95
    assert sorted(row.label for row in golden) == list(range(1, 96))
    assert len({row.weights for row in golden}) == 95


def test_rows_are_normalized(golden):
    for row in golden:
        assert row.weights == normalize_weights(row.weights.w)
        assert row.printed_degree == Fraction(row.printed_degree_text)


def test_label_33(golden):
    row = next(r for r in golden if r.label == 33)
    assert row.weights.w == (1, 4, 6, 11)
    assert row.printed_dim == 48
    assert row.printed_singularities == SingularityData(((2, 1), (4, 1), (6, 1)))
    assert row.printed_degree == Fraction(133, 12)


def test_label_1(golden):
    row = next(r for r in golden if r.label == 1)
    assert row.weights.w == (1, 1, 1, 1)
    assert row.printed_dim == 90
    assert row.printed_singularities == SingularityData(())
    assert row.printed_degree == 0


def test_label_79_transcribed_as_printed(golden):
    # printed data is kept verbatim even where recomputation disagrees
    row = next(r for r in golden if r.label == 79)
    assert row.weights.w == (4, 5, 7, 16)
    assert row.printed_dim == 0
    assert row.printed_singularities == SingularityData(((4, 2), (5, 2), (7, 1)))
    assert row.printed_degree_text == "1677/70"


def test_label_31_degree_kept_unreduced_as_text(golden):
    row = next(r for r in golden if r.label == 31)
    assert row.printed_degree_text == "110/10"
    assert row.printed_degree == Fraction(11)


def test_weight_lookup(golden):
    assert label_for_weights(normalize_weights((7, 8, 10, 25))) == 95
    assert label_for_weights(normalize_weights((1, 2, 3, 4))) == 17
    assert label_for_weights(normalize_weights((1, 1, 1, 7))) is None
    assert set(golden_by_weights()) == {row.weights for row in golden}


def test_stable_across_calls():
    assert golden_table() is golden_table()
