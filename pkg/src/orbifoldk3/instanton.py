"""Invariants of the canonical transverse connection over an orbifold K3 leaf space.

Two exact quantities are attached to the singularity data {m_1, ..., m_k}:

* the connection degree  sum_j (m_j^2 - 1) / m_j  (an exact rational) — when
  it differs from 24 the transverse Levi-Civita connection is certified
  irreducible; equality leaves irreducibility undetermined, never "reducible";
* the complex dimension  90 - 2 * sum_j (2 m_j - 1)  of the moduli space of
  irreducible anti-self-dual contact instantons over any compatible Sasakian
  total space.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .lattice import Rational, WeightVector
from .singularities import SingularityData, singularity_data

# Degree value at which the irreducibility criterion is silent.
CRITICAL_DEGREE = Fraction(24)

# Moduli dimension over a smooth K3 leaf space (empty singularity data).
SMOOTH_MODULI_DIM = 90


class CertificateStatus(enum.Enum):
    CERTIFIED_IRREDUCIBLE = "certified"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class IrreducibilityCertificate:
    status: CertificateStatus
    witness_degree: Rational

    @property
    def certified(self) -> bool:
        return self.status is CertificateStatus.CERTIFIED_IRREDUCIBLE


def connection_degree(data: SingularityData) -> Rational:
    """Exact value of sum count * (m^2 - 1) / m; zero for empty data."""
    return sum(
        (c * Fraction(m * m - 1, m) for m, c in data.entries), Fraction(0)
    )


def irreducibility(degree: Rational) -> IrreducibilityCertificate:
    """Certified iff the degree differs from 24.

    The criterion is one-directional: degree exactly 24 yields UNDETERMINED,
    not a reducibility claim.
    """
    if degree != CRITICAL_DEGREE:
        status = CertificateStatus.CERTIFIED_IRREDUCIBLE
    else:
        status = CertificateStatus.UNDETERMINED
    return IrreducibilityCertificate(status=status, witness_degree=degree)


def moduli_dimension(data: SingularityData) -> int:
    """90 - 2 * sum count * (2m - 1); always even, may go negative off-census."""
    return SMOOTH_MODULI_DIM - 2 * sum(c * (2 * m - 1) for m, c in data.entries)


@dataclass(frozen=True)
class InstantonInvariants:
    degree: Rational
    certificate: IrreducibilityCertificate
    dim: int
    # False when the dimension formula returned a negative value, i.e. the
    # input lies outside the hypotheses under which the formula is asserted.
    dim_in_range: bool = True

    @classmethod
    def from_singularities(cls, data: SingularityData) -> "InstantonInvariants":
        degree = connection_degree(data)
        dim = moduli_dimension(data)
        return cls(
            degree=degree,
            certificate=irreducibility(degree),
            dim=dim,
            dim_in_range=dim >= 0,
        )


def certify(
    w: WeightVector, data: SingularityData, inv: InstantonInvariants
) -> str:
    """Human-readable certification record for one surface family.

    Inputs must be mutually consistent (data recomputable from w, invariants
    from data); anything else raises ValueError.
    """
    if singularity_data(w) != data:
        raise ValueError(f"singularity data inconsistent with weights {w}")
    if InstantonInvariants.from_singularities(data) != inv:
        raise ValueError("invariants inconsistent with singularity data")

    sing = data.to_string() or "none (smooth member)"
    orders = ", ".join(str(m) for m, c in data.entries for _ in range(c))
    lines = [
        f"surface family: X_{w.d} in CP{w}, general member",
        f"singular points: {sing}"
        + (f" ({data.total_points} points; isotropy orders {orders})" if data.entries else ""),
        f"connection degree: {inv.degree} (sum of (m^2-1)/m over singular points)",
    ]
    if inv.certificate.certified:
        lines += [
            f"irreducibility: certified (connection degree != {CRITICAL_DEGREE})",
            f"moduli dimension (complex): {inv.dim}",
            "",
            "Over any compact 5-dimensional Sasakian total space with a",
            "transverse Calabi-Yau structure whose leaf space is this surface,",
            "the transverse Levi-Civita connection is an irreducible",
            "anti-self-dual contact instanton, and the moduli space of",
            "irreducible anti-self-dual contact instantons is a non-empty",
            "hyperkaehler manifold of the complex dimension stated above.",
        ]
        if inv.dim == 0:
            lines += [
                "",
                "The moduli dimension is 0: this is the rigid case, the",
                "transverse Levi-Civita connection admits no deformations.",
            ]
    else:
        lines += [
            f"irreducibility: undetermined (connection degree equals"
            f" {CRITICAL_DEGREE}; the degree criterion is silent here)",
            f"moduli dimension if irreducible (complex): {inv.dim}",
        ]
    if not inv.dim_in_range:
        lines += [
            "",
            "warning: negative dimension, outside the scope of the dimension",
            "formula's hypotheses (input is not from the census).",
        ]
    return "\n".join(lines)
