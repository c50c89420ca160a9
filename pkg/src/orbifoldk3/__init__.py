"""Weighted projective K3 orbifold hypersurfaces: admissibility, singularity
data, instanton invariants, and the 95-family census with a golden-table diff.
"""

from .classification import (
    AdmissibilityFlags,
    DiffReport,
    Finding,
    SurfaceRecord,
    admissibility,
    census,
    diff,
    emit,
    parse_records,
    search,
    surface_record,
)
from .hypersurface import (
    QuasiSmoothWitness,
    ambient_well_formed,
    general_member_is_quasi_smooth,
    general_member_quasi_smooth,
    hypersurface_well_formed,
    is_linear_cone,
    k3_candidate,
)
from .instanton import (
    CRITICAL_DEGREE,
    InstantonInvariants,
    IrreducibilityCertificate,
    certify,
    connection_degree,
    irreducibility,
    moduli_dimension,
)
from .lattice import (
    ExponentVector,
    Rational,
    WeightVector,
    enumerate_monomials,
    normalize_weights,
    reduce,
    support,
    weighted_degree,
)
from .singularities import (
    CyclicSingularity,
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
from .tables import GoldenRow, golden_table, label_for_weights

__all__ = [
    "AdmissibilityFlags",
    "CRITICAL_DEGREE",
    "CyclicSingularity",
    "DiffReport",
    "EdgeInterior",
    "ExponentVector",
    "Finding",
    "GoldenRow",
    "InstantonInvariants",
    "InternalInconsistencyError",
    "IrreducibilityCertificate",
    "QuasiSmoothWitness",
    "Rational",
    "SingularityData",
    "SurfaceRecord",
    "Vertex",
    "WeightVector",
    "admissibility",
    "ambient_well_formed",
    "census",
    "certify",
    "connection_degree",
    "diff",
    "edge_singularities",
    "emit",
    "enumerate_monomials",
    "finite_field_edge_oracle",
    "general_member_is_quasi_smooth",
    "general_member_quasi_smooth",
    "golden_table",
    "hypersurface_well_formed",
    "irreducibility",
    "is_linear_cone",
    "k3_candidate",
    "label_for_weights",
    "moduli_dimension",
    "normalize_weights",
    "parse_records",
    "reduce",
    "search",
    "singular_loci",
    "singularity_data",
    "support",
    "surface_record",
    "vertex_singularity",
    "weighted_degree",
]
