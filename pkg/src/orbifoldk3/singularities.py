"""Cyclic quotient singularities of the general member, from vertex and edge analysis.

On an accepted weight vector the singular points of the general member are
isolated A-type cyclic quotients inherited from the ambient space:

* vertex P_i carries one point of isotropy order w_i whenever w_i > 1 and
  w_i does not divide d (otherwise the member misses the vertex, or the
  point is smooth);
* the open edge (i, j) with h = gcd(w_i, w_j) > 1 carries N = |S| - 1 points
  of order h, where S is the set of degree-d monomials in x_i, x_j.  The
  restricted general form is a dense degree-(|S|-1) polynomial in the edge
  parameter, so it has that many simple nonzero roots.

The A-type congruences are asserted, never assumed: a violation raises
InternalInconsistencyError, signalling that the input was not actually an
admissible candidate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .hypersurface import singular_edges
from .lattice import NUM_VARS, WeightVector, enumerate_monomials


class InternalInconsistencyError(Exception):
    """A structural assertion about admissible candidates failed."""


@dataclass(frozen=True)
class Vertex:
    index: int


@dataclass(frozen=True)
class EdgeInterior:
    i: int
    j: int


@dataclass(frozen=True)
class CyclicSingularity:
    """``count`` points of type A_{order-1} on one coordinate locus."""

    locus: Vertex | EdgeInterior
    order: int
    count: int

    @property
    def type_label(self) -> str:
        return f"A{self.order - 1}"


@dataclass(frozen=True)
class SingularityData:
    """Multiset of isotropy orders: ``entries`` is ((m, count), ...) ascending in m."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        orders = [m for m, _ in self.entries]
        if any(m < 2 for m in orders):
            raise ValueError(f"isotropy orders must be >= 2: {self.entries}")
        if any(c < 1 for _, c in self.entries):
            raise ValueError(f"counts must be positive: {self.entries}")
        if orders != sorted(set(orders)):
            raise ValueError(f"orders must be strictly ascending: {self.entries}")

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> "SingularityData":
        return cls(tuple(sorted((m, c) for m, c in counts.items() if c)))

    @classmethod
    def from_string(cls, text: str) -> "SingularityData":
        """Parse the canonical form, e.g. ``"7*A1+A2"``; empty string is smooth."""
        counts: dict[int, int] = {}
        if text.strip():
            for term in text.split("+"):
                term = term.strip()
                count, _, label = term.rpartition("*")
                if not label.startswith("A") or not label[1:].isdigit():
                    raise ValueError(f"bad singularity term: {term!r}")
                m = int(label[1:]) + 1
                c = int(count) if count else 1
                counts[m] = counts.get(m, 0) + c
        return cls.from_counts(counts)

    def to_string(self) -> str:
        """Canonical string: ascending orders, ``k*A{m-1}`` with ``k=1`` omitted."""
        return "+".join(
            (f"{c}*" if c > 1 else "") + f"A{m - 1}" for m, c in self.entries
        )

    def as_counts(self) -> dict[int, int]:
        return dict(self.entries)

    def count_of(self, order: int) -> int:
        return dict(self.entries).get(order, 0)

    @property
    def total_points(self) -> int:
        return sum(c for _, c in self.entries)

    @property
    def exceptional_rank(self) -> int:
        """Rank of the exceptional lattice after minimal resolution: sum of count*(m-1)."""
        return sum(c * (m - 1) for m, c in self.entries)


# On a K3 resolution the exceptional curves plus a polarization stay
# independent in a rank-20 lattice, so the exceptional rank is at most 19.
# Diagnostic only; the derivation never uses it as a filter.
MAX_EXCEPTIONAL_RANK = 19


def vertex_singularity(w: WeightVector, i: int) -> CyclicSingularity | None:
    """Singularity of the general member at the coordinate vertex P_i.

    Caller guarantees ``w`` is an accepted candidate.  None when w_i = 1 or
    w_i | d.  Otherwise the A-type witness is asserted: some monomial
    x_i^k * x_j of degree d exists (smallest such j is taken), and the two
    transverse weights satisfy w_p + w_q = 0 (mod w_i) with gcd(w_p, w_i) = 1.
    """
    wi = w[i]
    if wi == 1 or w.d % wi == 0:
        return None
    tilt = [j for j in range(NUM_VARS) if j != i and (w.d - w[j]) % wi == 0]
    if not tilt:
        raise InternalInconsistencyError(
            f"vertex {i} of {w}: member passes through the vertex but no"
            f" monomial x{i}^k*xj of degree {w.d} exists"
        )
    j = tilt[0]
    p, q = (k for k in range(NUM_VARS) if k not in (i, j))
    if (w[p] + w[q]) % wi != 0:
        raise InternalInconsistencyError(
            f"vertex {i} of {w}: transverse weights {w[p]},{w[q]} do not sum"
            f" to 0 mod {wi}"
        )
    if gcd(w[p], wi) != 1:
        raise InternalInconsistencyError(
            f"vertex {i} of {w}: transverse weight {w[p]} shares a factor"
            f" with {wi}, not an A-type point"
        )
    return CyclicSingularity(locus=Vertex(i), order=wi, count=1)


def edge_singularities(w: WeightVector, i: int, j: int) -> CyclicSingularity | None:
    """Interior singular points on the edge (i, j); requires gcd(w_i, w_j) > 1.

    The count is |S| - 1 for S the degree-d monomials in x_i, x_j; None when
    that is zero.  Empty S means the singular edge lies inside the member,
    which well-formedness forbids.
    """
    if not (0 <= i < j < NUM_VARS):
        raise ValueError(f"need 0 <= i < j <= 3, got ({i}, {j})")
    h = gcd(w[i], w[j])
    if h <= 1:
        raise ValueError(f"edge ({i}, {j}) of {w} has coprime weights")
    solutions = enumerate_monomials(w, w.d, (i, j))
    if not solutions:
        raise InternalInconsistencyError(
            f"edge ({i}, {j}) of {w}: no degree-{w.d} monomial, the singular"
            f" edge is contained in the general member"
        )
    p, q = (k for k in range(NUM_VARS) if k not in (i, j))
    if (w[p] + w[q]) % h != 0:
        raise InternalInconsistencyError(
            f"edge ({i}, {j}) of {w}: transverse weights {w[p]},{w[q]} do not"
            f" sum to 0 mod {h}"
        )
    count = len(solutions) - 1
    if count == 0:
        return None
    return CyclicSingularity(locus=EdgeInterior(i, j), order=h, count=count)


def singular_loci(w: WeightVector) -> list[CyclicSingularity]:
    """All vertex and edge contributions, vertices first, in index order."""
    loci = []
    for i in range(NUM_VARS):
        vert = vertex_singularity(w, i)
        if vert is not None:
            loci.append(vert)
    for i, j, _ in singular_edges(w):
        edge = edge_singularities(w, i, j)
        if edge is not None:
            loci.append(edge)
    return loci


def singularity_data(w: WeightVector) -> SingularityData:
    """Aggregate multiset {order: count} of the singular points of the member."""
    counts: dict[int, int] = {}
    for sing in singular_loci(w):
        counts[sing.order] = counts.get(sing.order, 0) + sing.count
    return SingularityData.from_counts(counts)


# --- randomized finite-field verification of the edge count ---------------

DEFAULT_ORACLE_PRIME = 1_000_003
_ORACLE_RETRIES = 8

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin for n < 3.3e24
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d, s = d // 2, s + 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _poly_normalize(f: list[int], p: int) -> list[int]:
    f = [c % p for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    # remainder of a by b; b is nonzero and normalized
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = a[-1] * inv % p
        shift = len(a) - len(b)
        for k, c in enumerate(b):
            a[shift + k] = (a[shift + k] - coef * c) % p
        while a and a[-1] == 0:
            a.pop()
        if not a:
            break
    return a


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _poly_normalize(a, p), _poly_normalize(b, p)
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _distinct_root_count(f: list[int], p: int) -> int:
    """Distinct roots of f in an algebraic closure of F_p (squarefree degree)."""
    deriv = _poly_normalize([k * c for k, c in enumerate(f)][1:], p)
    if not deriv:
        raise InternalInconsistencyError("zero derivative for a nonconstant polynomial")
    return (len(f) - 1) - (len(_poly_gcd(f, deriv, p)) - 1)


def finite_field_edge_oracle(
    w: WeightVector,
    i: int,
    j: int,
    prime: int = DEFAULT_ORACLE_PRIME,
    seed: int = 0,
) -> int:
    """Independent check of the edge count by randomized root counting.

    Draws nonzero coefficients mod ``prime`` for every degree-d monomial in
    x_i, x_j (one coefficient per lattice solution, ordered by exponent),
    restricts to the edge parameter, and counts the distinct nonzero roots of
    the resulting polynomial in an algebraic closure of the prime field.  For
    a non-degenerate draw this equals |S| - 1; draws with repeated roots are
    retried on successive seeds a bounded number of times.
    """
    if prime <= w.d:
        raise ValueError(f"prime {prime} must exceed the degree {w.d}")
    if not _is_prime(prime):
        raise ValueError(f"{prime} is not prime")
    if gcd(w[i], w[j]) <= 1:
        raise ValueError(f"edge ({i}, {j}) of {w} has coprime weights")
    solutions = enumerate_monomials(w, w.d, (i, j))
    if not solutions:
        raise InternalInconsistencyError(
            f"edge ({i}, {j}) of {w}: no degree-{w.d} monomial to restrict"
        )
    if len(solutions) == 1:
        return 0
    for attempt in range(_ORACLE_RETRIES):
        rng = random.Random(seed * _ORACLE_RETRIES + attempt)
        coeffs = [rng.randrange(1, prime) for _ in solutions]
        roots = _distinct_root_count(coeffs, prime)
        if roots == len(coeffs) - 1:
            return roots
    raise InternalInconsistencyError(
        f"edge ({i}, {j}) of {w}: {_ORACLE_RETRIES} degenerate draws in a row"
    )
