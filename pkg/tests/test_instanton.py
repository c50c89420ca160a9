from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from orbifoldk3.instanton import (
    CRITICAL_DEGREE,
    CertificateStatus,
    InstantonInvariants,
    certify,
    connection_degree,
    irreducibility,
    moduli_dimension,
)
from orbifoldk3.lattice import WeightVector, normalize_weights
from orbifoldk3.singularities import SingularityData, singularity_data

LABEL_33 = SingularityData(((2, 1), (4, 1), (6, 1)))
LABEL_28 = SingularityData(((2, 7), (3, 1)))
EMPTY = SingularityData(())


def test_connection_degree_examples():
    assert connection_degree(LABEL_33) == Fraction(133, 12)
    assert connection_degree(EMPTY) == Fraction(0, 1)
    assert connection_degree(LABEL_28) == Fraction(79, 6)


_data = st.dictionaries(st.integers(2, 15), st.integers(1, 6), max_size=5).map(
    SingularityData.from_counts
)


@given(_data)
def test_connection_degree_equals_m_minus_inverse_form(data):
    # (m^2 - 1) / m = m - 1/m; both evaluation orders must agree exactly
    alt = sum(
        (c * (Fraction(m) - Fraction(1, m)) for m, c in data.entries),
        Fraction(0),
    )
    assert connection_degree(data) == alt


def test_irreducibility_examples():
    assert irreducibility(Fraction(133, 12)).certified
    assert irreducibility(Fraction(0)).certified
    cert = irreducibility(Fraction(24))
    assert cert.status is CertificateStatus.UNDETERMINED
    assert not cert.certified
    assert cert.witness_degree == CRITICAL_DEGREE


def test_moduli_dimension_examples():
    assert moduli_dimension(LABEL_33) == 48
    assert moduli_dimension(EMPTY) == 90
    assert moduli_dimension(LABEL_28) == 38


@given(_data)
def test_moduli_dimension_is_even(data):
    assert moduli_dimension(data) % 2 == 0


@given(_data, st.integers(2, 15))
def test_adding_a_point_moves_both_invariants(data, m):
    counts = data.as_counts()
    counts[m] = counts.get(m, 0) + 1
    bigger = SingularityData.from_counts(counts)
    assert moduli_dimension(bigger) == moduli_dimension(data) - 2 * (2 * m - 1)
    assert connection_degree(bigger) > connection_degree(data)


def test_invariants_flag_out_of_range_dimension():
    heavy = SingularityData(((2, 30),))
    inv = InstantonInvariants.from_singularities(heavy)
    assert inv.dim == -90
    assert not inv.dim_in_range
    light = InstantonInvariants.from_singularities(LABEL_33)
    assert light.dim_in_range


def test_certify_label_33():
    w = normalize_weights((1, 4, 6, 11))
    data = singularity_data(w)
    text = certify(w, data, InstantonInvariants.from_singularities(data))
    assert "133/12" in text
    assert "certified" in text
    assert "moduli dimension (complex): 48" in text


def test_certify_smooth_family():
    w = normalize_weights((1, 1, 1, 1))
    data = singularity_data(w)
    text = certify(w, data, InstantonInvariants.from_singularities(data))
    assert "90" in text
    assert "certified" in text


def test_certify_rigid_when_dimension_zero():
    # 15 points of order 2 give dimension 0; forge the degree so the data
    # stays consistent with the weights (no census family is rigid)
    w = WeightVector((1, 1, 2, 2), 30)
    data = singularity_data(w)
    assert data == SingularityData(((2, 15),))
    inv = InstantonInvariants.from_singularities(data)
    assert inv.dim == 0
    text = certify(w, data, inv)
    assert "rigid" in text


def test_certify_undetermined_at_degree_24():
    # 16 points of order 2 give degree exactly 24; reachable only by forging
    # the degree on the weight vector (no census family hits 24)
    w = WeightVector((1, 1, 2, 2), 32)
    data = singularity_data(w)
    assert data == SingularityData(((2, 16),))
    inv = InstantonInvariants.from_singularities(data)
    assert connection_degree(data) == CRITICAL_DEGREE
    text = certify(w, data, inv)
    assert "undetermined" in text


def test_certify_rejects_inconsistent_inputs():
    w = normalize_weights((1, 4, 6, 11))
    with pytest.raises(ValueError):
        certify(w, EMPTY, InstantonInvariants.from_singularities(EMPTY))
    data = singularity_data(w)
    wrong = InstantonInvariants.from_singularities(EMPTY)
    with pytest.raises(ValueError):
        certify(w, data, wrong)
