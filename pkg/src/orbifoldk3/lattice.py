"""Exact arithmetic and weighted monomial enumeration.

Everything downstream (admissibility checks, singularity counts, the
connection-degree formula) reduces to integer lattice questions of the form
``a0*w0 + a1*w1 + a2*w2 + a3*w3 = target`` with non-negative exponents, plus
exact rational bookkeeping.  All arithmetic is plain Python ``int`` /
``fractions.Fraction``, so nothing can silently wrap or round.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

# Exact reduced fraction with positive denominator; structural equality is
# value equality, which the table diff relies on.
Rational = Fraction

# Exponents of a monomial x0^a0 x1^a1 x2^a2 x3^a3.
ExponentVector = tuple[int, int, int, int]

NUM_VARS = 4


def reduce(numerator: int, denominator: int) -> Rational:
    """Canonical reduced fraction; raises ZeroDivisionError on zero denominator."""
    return Fraction(numerator, denominator)


@dataclass(frozen=True, order=True)
class WeightVector:
    """Ascending positive weights (w0..w3) with hypersurface degree d.

    ``normalize_weights`` is the one constructor that guarantees the
    Calabi-Yau relation d = w0+w1+w2+w3; building the dataclass directly can
    bypass it, which a few defensive checks use on purpose.
    """

    w: tuple[int, int, int, int]
    d: int

    def __post_init__(self) -> None:
        if len(self.w) != NUM_VARS:
            raise ValueError(f"expected {NUM_VARS} weights, got {len(self.w)}")
        if any(wi <= 0 for wi in self.w):
            raise ValueError(f"weights must be positive: {self.w}")
        if any(a > b for a, b in zip(self.w, self.w[1:])):
            raise ValueError(f"weights must be ascending: {self.w}")

    def __iter__(self) -> Iterator[int]:
        return iter(self.w)

    def __getitem__(self, i: int) -> int:
        return self.w[i]

    def __str__(self) -> str:
        return f"({','.join(str(wi) for wi in self.w)})"


def normalize_weights(raw: Iterable[int]) -> WeightVector:
    """Sort raw weights ascending and attach d = sum of weights."""
    ws = tuple(sorted(raw))
    if len(ws) != NUM_VARS:
        raise ValueError(f"expected {NUM_VARS} weights, got {len(ws)}")
    if any(not isinstance(wi, int) for wi in ws):
        raise ValueError(f"weights must be integers: {ws}")
    if ws[0] <= 0:
        raise ValueError(f"weights must be positive: {ws}")
    return WeightVector(w=ws, d=sum(ws))


def support(a: ExponentVector) -> frozenset[int]:
    """Indices with a positive exponent."""
    return frozenset(i for i, ai in enumerate(a) if ai > 0)


def weighted_degree(a: ExponentVector, w: WeightVector | tuple[int, ...]) -> int:
    """Sum of a_i * w_i."""
    ws = w.w if isinstance(w, WeightVector) else w
    if len(a) != NUM_VARS or len(ws) != NUM_VARS:
        raise ValueError("exponent and weight vectors must have 4 components")
    return sum(ai * wi for ai, wi in zip(a, ws))


def _check_subset(subset: Iterable[int]) -> tuple[int, ...]:
    idx = tuple(sorted(set(subset)))
    if not idx:
        raise ValueError("index subset must be nonempty")
    if any(i not in range(NUM_VARS) for i in idx):
        raise ValueError(f"indices must lie in 0..3: {idx}")
    return idx


def enumerate_monomials(
    w: WeightVector | tuple[int, ...], target: int, subset: Iterable[int]
) -> list[ExponentVector]:
    """All exponent vectors supported inside ``subset`` of weighted degree ``target``.

    The list is strictly increasing in lexicographic order on the full
    4-tuple.  An empty list is a valid result.
    """
    if target < 1:
        raise ValueError(f"target degree must be >= 1, got {target}")
    ws = w.w if isinstance(w, WeightVector) else tuple(w)
    idx = _check_subset(subset)
    out: list[ExponentVector] = []

    def descend(pos: int, rem: int, acc: list[int]) -> None:
        if pos == len(idx) - 1:
            wi = ws[idx[pos]]
            if rem % wi == 0:
                vec = [0] * NUM_VARS
                for k in range(pos):
                    vec[idx[k]] = acc[k]
                vec[idx[pos]] = rem // wi
                out.append(tuple(vec))
            return
        wi = ws[idx[pos]]
        for ai in range(rem // wi + 1):
            acc.append(ai)
            descend(pos + 1, rem - ai * wi, acc)
            acc.pop()

    descend(0, target, [])
    return out


def first_monomial(
    w: WeightVector | tuple[int, ...], target: int, subset: Iterable[int]
) -> ExponentVector | None:
    """Lexicographically least solution, or None.  Early-exit existence probe."""
    if target < 1:
        raise ValueError(f"target degree must be >= 1, got {target}")
    ws = w.w if isinstance(w, WeightVector) else tuple(w)
    idx = _check_subset(subset)

    def descend(pos: int, rem: int, acc: list[int]) -> ExponentVector | None:
        wi = ws[idx[pos]]
        if pos == len(idx) - 1:
            if rem % wi == 0:
                vec = [0] * NUM_VARS
                for k in range(pos):
                    vec[idx[k]] = acc[k]
                vec[idx[pos]] = rem // wi
                return tuple(vec)
            return None
        for ai in range(rem // wi + 1):
            acc.append(ai)
            hit = descend(pos + 1, rem - ai * wi, acc)
            acc.pop()
            if hit is not None:
                return hit
        return None

    return descend(0, target, [])


def has_monomial(
    w: WeightVector | tuple[int, ...], target: int, subset: Iterable[int]
) -> bool:
    return first_monomial(w, target, subset) is not None
