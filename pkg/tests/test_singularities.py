from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from orbifoldk3.hypersurface import singular_edges
from orbifoldk3.lattice import WeightVector, enumerate_monomials, normalize_weights
from orbifoldk3.singularities import (
    EdgeInterior,
    InternalInconsistencyError,
    SingularityData,
    Vertex,
    edge_singularities,
    finite_field_edge_oracle,
    singular_loci,
    singularity_data,
    vertex_singularity,
)


def test_vertex_singularity_examples():
    w = normalize_weights((1, 4, 6, 11))
    sing = vertex_singularity(w, 1)
    assert sing is not None
    assert (sing.order, sing.count, sing.locus) == (4, 1, Vertex(1))
    assert sing.type_label == "A3"
    assert vertex_singularity(w, 3) is None  # 11 divides 22
    unit = normalize_weights((1, 1, 1, 1))
    assert all(vertex_singularity(unit, i) is None for i in range(4))


def test_edge_singularity_examples():
    w = normalize_weights((1, 4, 6, 11))
    sing = edge_singularities(w, 1, 2)
    assert sing is not None
    assert (sing.order, sing.count, sing.locus) == (2, 1, EdgeInterior(1, 2))

    sing = edge_singularities(normalize_weights((2, 2, 3, 7)), 0, 1)
    assert (sing.order, sing.count) == (2, 7)

    sing = edge_singularities(normalize_weights((2, 3, 3, 4)), 1, 2)
    assert (sing.order, sing.count) == (3, 4)


def test_edge_singularities_rejects_coprime_edge():
    with pytest.raises(ValueError):
        edge_singularities(normalize_weights((1, 4, 6, 11)), 0, 1)


def test_singularity_data_examples():
    assert singularity_data(normalize_weights((1, 4, 6, 11))).entries == (
        (2, 1),
        (4, 1),
        (6, 1),
    )
    assert singularity_data(normalize_weights((1, 1, 1, 1))).entries == ()
    assert singularity_data(normalize_weights((5, 6, 7, 9))).entries == (
        (3, 1),
        (5, 1),
        (6, 1),
        (7, 1),
    )


def test_singularity_data_string_round_trip():
    data = singularity_data(normalize_weights((2, 2, 3, 7)))
    assert data.to_string() == "7*A1+A2"
    assert SingularityData.from_string("7*A1+A2") == data
    assert SingularityData.from_string("") == SingularityData(())
    assert SingularityData(()).to_string() == ""
    with pytest.raises(ValueError):
        SingularityData.from_string("B2")


def test_singularity_data_validation():
    with pytest.raises(ValueError):
        SingularityData(((1, 1),))  # order below 2
    with pytest.raises(ValueError):
        SingularityData(((3, 0),))  # empty count
    with pytest.raises(ValueError):
        SingularityData(((3, 1), (2, 1)))  # not ascending


def test_exceptional_rank_bound_on_census(golden):
    for row in golden:
        data = singularity_data(row.weights)
        assert data.exceptional_rank <= 19
        assert data.total_points == sum(c for _, c in data.entries)


@given(st.permutations(range(4)))
def test_singularity_data_permutation_invariant(perm):
    raw = (2, 3, 8, 11)
    permuted = [raw[i] for i in perm]
    assert singularity_data(normalize_weights(permuted)) == singularity_data(
        normalize_weights(raw)
    )


def test_vertex_error_when_member_misses_witness():
    # d = 13, vertex weight 4: member passes through but no monomial x2^k*xj
    w = normalize_weights((2, 3, 4, 4))
    with pytest.raises(InternalInconsistencyError):
        vertex_singularity(w, 2)


def test_vertex_error_when_not_a_type():
    # gcd(transverse weight, vertex weight) > 1 on an inadmissible input
    w = normalize_weights((2, 4, 5, 6))
    with pytest.raises(InternalInconsistencyError):
        vertex_singularity(w, 1)


def test_vertex_error_on_broken_congruence():
    # forged degree breaks w_p + w_q = 0 (mod w_i) while a witness survives
    w = WeightVector((2, 3, 5, 7), 19)
    with pytest.raises(InternalInconsistencyError):
        vertex_singularity(w, 1)


def test_edge_error_when_edge_contained_in_member():
    # 4a + 4b = 13 has no solution: the singular edge lies in the member
    w = normalize_weights((2, 3, 4, 4))
    with pytest.raises(InternalInconsistencyError):
        edge_singularities(w, 2, 3)


def test_finite_field_oracle_examples():
    assert finite_field_edge_oracle(normalize_weights((4, 5, 7, 16)), 0, 3) == 2
    assert finite_field_edge_oracle(
        normalize_weights((4, 5, 7, 16)), 0, 3, prime=10_007
    ) == 2
    assert finite_field_edge_oracle(normalize_weights((2, 2, 3, 7)), 0, 1) == 7
    # a single lattice solution leaves no interior zero (forced degree 6)
    lone = WeightVector((1, 2, 4, 6), 6)
    assert len(enumerate_monomials(lone, 6, (2, 3))) == 1
    assert finite_field_edge_oracle(lone, 2, 3) == 0


def test_finite_field_oracle_validates_inputs():
    w = normalize_weights((2, 2, 3, 7))
    with pytest.raises(ValueError):
        finite_field_edge_oracle(w, 0, 1, prime=7)  # not above d
    with pytest.raises(ValueError):
        finite_field_edge_oracle(w, 0, 1, prime=1_000_001)  # composite
    with pytest.raises(ValueError):
        finite_field_edge_oracle(w, 2, 3)  # coprime edge


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000))
def test_finite_field_oracle_matches_lattice_count_any_seed(seed):
    w = normalize_weights((2, 3, 10, 15))
    for i, j, _ in singular_edges(w):
        expected = len(enumerate_monomials(w, w.d, (i, j))) - 1
        assert finite_field_edge_oracle(w, i, j, seed=seed) == expected


def test_singular_loci_breakdown():
    loci = singular_loci(normalize_weights((2, 4, 5, 11)))
    kinds = {(type(s.locus).__name__, s.order, s.count) for s in loci}
    assert kinds == {
        ("Vertex", 4, 1),
        ("Vertex", 5, 1),
        ("EdgeInterior", 2, 5),
    }
