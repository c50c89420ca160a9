"""Exhaustive census search, computed surface records, and the golden-table diff.

The search enumerates ascending weight vectors with d = sum(w) and keeps the
admissible ones.  Candidate generation is pruned by a necessary condition on
the largest weight: the singleton quasi-smoothness test at index 3 forces
w3 to divide one of s, s - w0, s - w1, s - w2 where s = w0 + w1 + w2, so only
divisors need to be visited.  The pruning is an optimization only: every
survivor is re-checked by the full admissibility predicate, and equivalence
with plain brute force is covered by tests at small bounds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .hypersurface import (
    ambient_well_formed,
    general_member_is_quasi_smooth,
    hypersurface_well_formed,
    is_linear_cone,
    k3_candidate,
    singular_edges,
)
from .instanton import (
    CertificateStatus,
    InstantonInvariants,
    IrreducibilityCertificate,
    connection_degree,
    moduli_dimension,
)
from .lattice import WeightVector, normalize_weights
from .singularities import (
    DEFAULT_ORACLE_PRIME,
    MAX_EXCEPTIONAL_RANK,
    SingularityData,
    finite_field_edge_oracle,
    singularity_data,
)
from .tables import GoldenRow, golden_table, label_for_weights


@dataclass(frozen=True)
class AdmissibilityFlags:
    ambient_well_formed: bool
    hypersurface_well_formed: bool
    quasi_smooth: bool
    linear_cone: bool

    @property
    def k3_candidate(self) -> bool:
        return (
            self.ambient_well_formed
            and self.hypersurface_well_formed
            and self.quasi_smooth
            and not self.linear_cone
        )

    def failure_reason(self) -> str | None:
        if self.linear_cone:
            return "linear cone (degree equals a weight)"
        if not self.ambient_well_formed:
            return "ambient not well-formed (a weight triple shares a factor)"
        if not self.hypersurface_well_formed:
            return "hypersurface not well-formed (a singular edge lies in the member)"
        if not self.quasi_smooth:
            return "general member not quasi-smooth"
        return None


ADMISSIBLE = AdmissibilityFlags(
    ambient_well_formed=True,
    hypersurface_well_formed=True,
    quasi_smooth=True,
    linear_cone=False,
)


def admissibility(w: WeightVector) -> AdmissibilityFlags:
    return AdmissibilityFlags(
        ambient_well_formed=ambient_well_formed(w),
        hypersurface_well_formed=hypersurface_well_formed(w),
        quasi_smooth=general_member_is_quasi_smooth(w),
        linear_cone=is_linear_cone(w),
    )


@dataclass(frozen=True)
class SurfaceRecord:
    """Everything computed for one admissible family."""

    weights: WeightVector
    data: SingularityData
    invariants: InstantonInvariants
    label: int | None = None
    flags: AdmissibilityFlags = ADMISSIBLE

    @property
    def d(self) -> int:
        return self.weights.d


def surface_record(w: WeightVector, label: int | None | str = "auto") -> SurfaceRecord:
    """Compute the record for an admissible weight vector.

    ``label="auto"`` looks the weights up in the embedded census table.
    Raises ValueError when the weights are not a K3 candidate.
    """
    flags = admissibility(w)
    if not flags.k3_candidate:
        raise ValueError(f"{w} is not a K3 candidate: {flags.failure_reason()}")
    data = singularity_data(w)
    if label == "auto":
        label = label_for_weights(w)
    return SurfaceRecord(
        weights=w,
        data=data,
        invariants=InstantonInvariants.from_singularities(data),
        label=label,
        flags=flags,
    )


def search(max_weight: int) -> list[WeightVector]:
    """All admissible ascending weight vectors with w3 <= max_weight, lex order.

    Output order is canonical (lexicographic) regardless of how candidates
    were generated or evaluated.
    """
    if max_weight < 1:
        raise ValueError(f"max_weight must be >= 1, got {max_weight}")
    limit = 3 * max_weight
    divisors: list[list[int]] = [[] for _ in range(limit + 1)]
    for h in range(1, limit + 1):
        for multiple in range(h, limit + 1, h):
            divisors[multiple].append(h)

    hits: list[WeightVector] = []
    for w0 in range(1, max_weight + 1):
        for w1 in range(w0, max_weight + 1):
            for w2 in range(w1, max_weight + 1):
                if gcd(gcd(w0, w1), w2) > 1:
                    continue  # this triple can never be well-formed
                s = w0 + w1 + w2
                candidates: set[int] = set()
                for t in (0, w0, w1, w2):
                    for h in divisors[s - t]:
                        if w2 <= h <= max_weight:
                            candidates.add(h)
                for w3 in sorted(candidates):
                    tup = (w0, w1, w2, w3)
                    d = s + w3
                    # singleton quasi-smoothness for the three small indices,
                    # as a cheap modular prefilter
                    ok = True
                    for i in range(3):
                        wi = tup[i]
                        if d % wi and all(
                            (d - tup[e]) % wi for e in range(4) if e != i
                        ):
                            ok = False
                            break
                    if not ok:
                        continue
                    wv = WeightVector(w=tup, d=d)
                    if k3_candidate(wv):
                        hits.append(wv)
    return sorted(hits)


def census(max_weight: int = 40) -> list[SurfaceRecord]:
    """Computed records for every family found up to the bound, labeled."""
    return [surface_record(w) for w in search(max_weight)]


# --- diff against the printed tables ---------------------------------------

#: diagnostic kinds attached to the printed data
RANK_BOUND = "rank_bound"
DIM_FORMULA = "dim_formula"
DEGREE_FORMULA = "degree_formula"
EDGE_COUNT = "edge_count"


@dataclass(frozen=True)
class FieldDiff:
    field: str
    computed: str
    printed: str


@dataclass(frozen=True)
class RowDiff:
    label: int
    weights: WeightVector
    fields: tuple[FieldDiff, ...]

    @property
    def matches(self) -> bool:
        return not self.fields


@dataclass(frozen=True)
class Finding:
    label: int
    kind: str
    detail: str


@dataclass(frozen=True)
class DiffReport:
    """Field-by-field comparison plus diagnostics on the printed data.

    Every label appears exactly once in ``rows``.  The golden data is never
    rewritten; disputes surface only as findings.
    """

    rows: tuple[RowDiff, ...]
    findings: tuple[Finding, ...]

    @property
    def match_count(self) -> int:
        return sum(1 for row in self.rows if row.matches)

    @property
    def mismatched_labels(self) -> tuple[int, ...]:
        return tuple(row.label for row in self.rows if not row.matches)

    def flagged_labels(self) -> frozenset[int]:
        return frozenset(f.label for f in self.findings)

    def findings_of_kind(self, kind: str) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.kind == kind)

    def field_summary(self) -> dict[str, int]:
        summary = {"singularities": 0, "degree": 0, "dim": 0}
        for row in self.rows:
            for fd in row.fields:
                summary[fd.field] += 1
        return summary

    def to_markdown(self) -> str:
        lines = [
            "# census diff: computed vs printed tables",
            "",
            f"{len(self.rows)} labels compared; {self.match_count} match on all"
            f" fields; mismatched labels: "
            + (", ".join(str(l) for l in self.mismatched_labels) or "none"),
            "",
        ]
        if self.mismatched_labels:
            lines += [
                "| label | weights | field | computed | printed |",
                "|---|---|---|---|---|",
            ]
            for row in self.rows:
                for fd in row.fields:
                    lines.append(
                        f"| {row.label} | {row.weights} | {fd.field} |"
                        f" {fd.computed} | {fd.printed} |"
                    )
            lines.append("")
        lines.append("## diagnostics on the printed data")
        if self.findings:
            for f in self.findings:
                lines.append(f"- label {f.label} [{f.kind}]: {f.detail}")
        else:
            lines.append("- none")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "summary": {
                "labels": len(self.rows),
                "matches": self.match_count,
                "mismatched_labels": list(self.mismatched_labels),
                "field_mismatches": self.field_summary(),
            },
            "rows": [
                {
                    "label": row.label,
                    "weights": list(row.weights.w),
                    "status": "match" if row.matches else "mismatch",
                    "fields": [
                        {
                            "field": fd.field,
                            "computed": fd.computed,
                            "printed": fd.printed,
                        }
                        for fd in row.fields
                    ],
                }
                for row in self.rows
            ],
            "findings": [
                {"label": f.label, "kind": f.kind, "detail": f.detail}
                for f in self.findings
            ],
        }
        return json.dumps(payload, indent=2) + "\n"

    def to_csv(self) -> str:
        lines = ["label,status,mismatched_fields,findings"]
        findings_by_label: dict[int, list[str]] = {}
        for f in self.findings:
            findings_by_label.setdefault(f.label, []).append(f.kind)
        for row in self.rows:
            status = "match" if row.matches else "mismatch"
            fields = ";".join(fd.field for fd in row.fields)
            kinds = ";".join(findings_by_label.get(row.label, []))
            lines.append(f"{row.label},{status},{fields},{kinds}")
        return "\n".join(lines) + "\n"


def diff(
    computed: list[SurfaceRecord],
    golden: tuple[GoldenRow, ...] | None = None,
    prime: int = DEFAULT_ORACLE_PRIME,
    seed: int = 0,
) -> DiffReport:
    """Compare computed records with the printed rows, keyed by weight vector.

    Besides the field comparison, three diagnostics run against the printed
    data itself: the exceptional-rank bound, the dimension formula, and the
    degree formula applied to the printed singularity list, plus a
    finite-field recount of every singular edge.  Deterministic for a fixed
    prime and seed; the golden rows are never mutated.
    """
    if golden is None:
        golden = golden_table()
    by_weights = {rec.weights: rec for rec in computed}
    if set(by_weights) != {row.weights for row in golden}:
        missing = sorted({row.weights for row in golden} - set(by_weights))
        extra = sorted(set(by_weights) - {row.weights for row in golden})
        raise ValueError(
            f"weight keys differ: missing={missing[:3]} extra={extra[:3]}"
        )

    rows: list[RowDiff] = []
    findings: list[Finding] = []
    for row in sorted(golden, key=lambda r: r.label):
        rec = by_weights[row.weights]
        fields = []
        if rec.data != row.printed_singularities:
            fields.append(
                FieldDiff(
                    "singularities",
                    rec.data.to_string() or "none",
                    row.printed_singularities.to_string() or "none",
                )
            )
        if rec.invariants.degree != row.printed_degree:
            fields.append(
                FieldDiff(
                    "degree", str(rec.invariants.degree), row.printed_degree_text
                )
            )
        if rec.invariants.dim != row.printed_dim:
            fields.append(
                FieldDiff("dim", str(rec.invariants.dim), str(row.printed_dim))
            )
        rows.append(RowDiff(label=row.label, weights=row.weights, fields=tuple(fields)))

        printed = row.printed_singularities
        rank = printed.exceptional_rank
        if rank > MAX_EXCEPTIONAL_RANK:
            findings.append(
                Finding(
                    row.label,
                    RANK_BOUND,
                    f"printed singularity list has exceptional rank {rank} >"
                    f" {MAX_EXCEPTIONAL_RANK}",
                )
            )
        recomputed_dim = moduli_dimension(printed)
        if recomputed_dim != row.printed_dim:
            findings.append(
                Finding(
                    row.label,
                    DIM_FORMULA,
                    f"printed dim {row.printed_dim} but the dimension formula on"
                    f" the printed singularity list gives {recomputed_dim}",
                )
            )
        recomputed_degree = connection_degree(printed)
        if recomputed_degree != row.printed_degree:
            findings.append(
                Finding(
                    row.label,
                    DEGREE_FORMULA,
                    f"printed degree {row.printed_degree_text} but the degree"
                    f" formula on the printed singularity list gives"
                    f" {recomputed_degree}",
                )
            )
        for i, j, h in singular_edges(row.weights):
            oracle = finite_field_edge_oracle(row.weights, i, j, prime=prime, seed=seed)
            if printed.count_of(h) != oracle:
                findings.append(
                    Finding(
                        row.label,
                        EDGE_COUNT,
                        f"edge ({i},{j}) has isotropy order {h} with {oracle}"
                        f" interior points by the finite-field oracle; printed"
                        f" count at order {h} is {printed.count_of(h)}",
                    )
                )
    return DiffReport(rows=tuple(rows), findings=tuple(findings))


# --- record serialization ---------------------------------------------------

CSV_HEADER = "label,w0,w1,w2,w3,d,singularities,deg_num,deg_den,irreducibility,dim"

FORMATS = ("csv", "markdown", "json")


def _record_fields(rec: SurfaceRecord) -> dict[str, object]:
    return {
        "label": rec.label,
        "w0": rec.weights[0],
        "w1": rec.weights[1],
        "w2": rec.weights[2],
        "w3": rec.weights[3],
        "d": rec.d,
        "singularities": rec.data.to_string(),
        "deg_num": rec.invariants.degree.numerator,
        "deg_den": rec.invariants.degree.denominator,
        "irreducibility": rec.invariants.certificate.status.value,
        "dim": rec.invariants.dim,
    }


def emit(records: list[SurfaceRecord], fmt: str) -> str:
    """Serialize records; ``fmt`` is one of csv, markdown, json."""
    if fmt == "csv":
        lines = [CSV_HEADER]
        for rec in records:
            f = _record_fields(rec)
            f["label"] = "" if f["label"] is None else f["label"]
            lines.append(",".join(str(f[k]) for k in CSV_HEADER.split(",")))
        return "\n".join(lines) + "\n"
    if fmt == "markdown":
        lines = [
            "| label | weights | d | singularities | degree | irreducibility | dim |",
            "|---|---|---|---|---|---|---|",
        ]
        for rec in records:
            label = "—" if rec.label is None else rec.label
            sing = rec.data.to_string() or "—"
            lines.append(
                f"| {label} | {rec.weights} | {rec.d} | {sing} |"
                f" {rec.invariants.degree} |"
                f" {rec.invariants.certificate.status.value} |"
                f" {rec.invariants.dim} |"
            )
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps([_record_fields(rec) for rec in records], indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")


def _record_from_fields(fields: dict[str, object]) -> SurfaceRecord:
    raw = tuple(int(fields[k]) for k in ("w0", "w1", "w2", "w3"))  # type: ignore[arg-type]
    weights = normalize_weights(raw)
    if weights.w != raw or weights.d != int(fields["d"]):  # type: ignore[arg-type]
        raise ValueError(f"inconsistent weights/degree in record: {fields}")
    degree = Fraction(int(fields["deg_num"]), int(fields["deg_den"]))  # type: ignore[arg-type]
    label = fields["label"]
    return SurfaceRecord(
        weights=weights,
        data=SingularityData.from_string(str(fields["singularities"])),
        invariants=InstantonInvariants(
            degree=degree,
            certificate=IrreducibilityCertificate(
                status=CertificateStatus(str(fields["irreducibility"])),
                witness_degree=degree,
            ),
            dim=int(fields["dim"]),  # type: ignore[arg-type]
            dim_in_range=int(fields["dim"]) >= 0,  # type: ignore[arg-type]
        ),
        label=None if label in (None, "") else int(label),  # type: ignore[arg-type]
    )


def parse_records(text: str, fmt: str) -> list[SurfaceRecord]:
    """Inverse of ``emit`` for the documented csv and json schemas."""
    if fmt == "csv":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0] != CSV_HEADER:
            raise ValueError("missing or unexpected csv header")
        keys = CSV_HEADER.split(",")
        return [
            _record_from_fields(dict(zip(keys, ln.split(","))))
            for ln in lines[1:]
        ]
    if fmt == "json":
        return [_record_from_fields(obj) for obj in json.loads(text)]
    raise ValueError(f"cannot parse format {fmt!r}, expected csv or json")
