"""Admissibility of a general hypersurface of degree d = sum(w) in CP(w).

A weight vector is accepted when the ambient space is well formed (no weight
triple shares a factor), the general member meets the ambient singular locus
only in points (no singular edge lies inside it), the member is quasi-smooth,
and the family is not a linear cone.  Quasi-smoothness is decided by the
classical monomial criterion: for every nonempty variable subset I either a
degree-d monomial supported in I exists, or |I| degree-d monomials of the
form (I-monomial)*x_e with pairwise distinct external indices e exist.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .lattice import (
    NUM_VARS,
    ExponentVector,
    WeightVector,
    first_monomial,
    has_monomial,
)

# Nonempty subsets of {0,1,2,3}, smallest first, lexicographic within a size.
INDEX_SUBSETS: tuple[tuple[int, ...], ...] = tuple(
    subset
    for size in range(1, NUM_VARS + 1)
    for subset in combinations(range(NUM_VARS), size)
)


@dataclass(frozen=True)
class QuasiSmoothWitness:
    """Monomial evidence that one variable subset passes the criterion.

    Exactly one of ``pure`` / ``tilted`` is set.  ``pure`` is an I-supported
    exponent vector of degree d.  ``tilted`` holds |I| pairs (vector, e): the
    full monomial including one factor of the external variable x_e, again of
    degree d, with the e pairwise distinct and outside I.
    """

    subset: tuple[int, ...]
    pure: ExponentVector | None = None
    tilted: tuple[tuple[ExponentVector, int], ...] | None = None

    def monomials(self) -> tuple[ExponentVector, ...]:
        if self.pure is not None:
            return (self.pure,)
        assert self.tilted is not None
        return tuple(vec for vec, _ in self.tilted)


def ambient_well_formed(w: WeightVector) -> bool:
    """Every triple of weights is coprime."""
    return all(
        gcd(gcd(w[i], w[j]), w[k]) == 1 for i, j, k in combinations(range(NUM_VARS), 3)
    )


def is_linear_cone(w: WeightVector) -> bool:
    """Degree equal to one of the weights (degenerate family).

    Unreachable when d = sum(w) with positive weights; kept because the
    admissibility pipeline should not rely on how ``w`` was constructed.
    """
    return any(w.d == wi for wi in w)


def _subset_passes(w: WeightVector, subset: tuple[int, ...]) -> bool:
    if has_monomial(w, w.d, subset):
        return True
    externals = [
        e
        for e in range(NUM_VARS)
        if e not in subset and has_monomial(w, w.d - w[e], subset)
    ]
    return len(externals) >= len(subset)


def general_member_is_quasi_smooth(w: WeightVector) -> bool:
    return all(_subset_passes(w, subset) for subset in INDEX_SUBSETS)


def general_member_quasi_smooth(w: WeightVector) -> list[QuasiSmoothWitness] | None:
    """Witness list (one per variable subset), or None when not quasi-smooth.

    Pure monomials are preferred; ties broken by lexicographic order.  For a
    tilted witness the |I| smallest admissible external indices are taken.
    """
    witnesses: list[QuasiSmoothWitness] = []
    for subset in INDEX_SUBSETS:
        pure = first_monomial(w, w.d, subset)
        if pure is not None:
            witnesses.append(QuasiSmoothWitness(subset=subset, pure=pure))
            continue
        tilted: list[tuple[ExponentVector, int]] = []
        for e in range(NUM_VARS):
            if e in subset:
                continue
            part = first_monomial(w, w.d - w[e], subset)
            if part is None:
                continue
            full = list(part)
            full[e] += 1
            tilted.append((tuple(full), e))
            if len(tilted) == len(subset):
                break
        if len(tilted) < len(subset):
            return None
        witnesses.append(QuasiSmoothWitness(subset=subset, tilted=tuple(tilted)))
    return witnesses


def singular_edges(w: WeightVector) -> list[tuple[int, int, int]]:
    """Pairs i<j with h = gcd(w_i, w_j) > 1, as (i, j, h)."""
    out = []
    for i, j in combinations(range(NUM_VARS), 2):
        h = gcd(w[i], w[j])
        if h > 1:
            out.append((i, j, h))
    return out


def hypersurface_well_formed(w: WeightVector) -> bool:
    """Ambient well-formedness plus: no singular edge is contained in the member.

    An edge (i, j) with gcd > 1 is avoided exactly when some degree-d monomial
    in x_i, x_j exists.  Vertex containment is fine (codimension 2 in a
    surface).
    """
    if not ambient_well_formed(w):
        return False
    return all(has_monomial(w, w.d, (i, j)) for i, j, _ in singular_edges(w))


def k3_candidate(w: WeightVector) -> bool:
    """Full admissibility: well-formed ambient and member, quasi-smooth, no cone."""
    return (
        not is_linear_cone(w)
        and ambient_well_formed(w)
        and hypersurface_well_formed(w)
        and general_member_is_quasi_smooth(w)
    )
