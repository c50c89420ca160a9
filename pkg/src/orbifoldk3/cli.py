"""Command-line frontend: analyze one family, search the census, reproduce the
published tables, or diff computed values against them.

Exit codes: 0 for success (expected mismatch findings included), 1 for usage
errors, 2 for an internal-inconsistency failure in the math core.  Output is
byte-identical across identical invocations; randomness enters only through
the explicit --seed of the finite-field diagnostic.
"""

from __future__ import annotations

import argparse
import sys

from .classification import admissibility, census, diff, emit, surface_record
from .instanton import certify
from .lattice import WeightVector, normalize_weights
from .singularities import DEFAULT_ORACLE_PRIME, InternalInconsistencyError

DEFAULT_SEARCH_BOUND = 40


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _parse_weights(text: str) -> WeightVector:
    parts = [p.strip() for p in text.split(",")]
    try:
        raw = [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"weights must be integers, got {text!r}") from None
    if len(raw) != 4:
        raise UsageError(f"expected 4 comma-separated weights, got {len(raw)}")
    try:
        return normalize_weights(raw)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> _Parser:
    parser = _Parser(
        prog="orbifoldk3",
        description="Singularity data and instanton invariants of weighted"
        " projective K3 orbifold hypersurfaces.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    analyze = sub.add_parser("analyze", help="report on one weight vector")
    analyze.add_argument("--weights", required=True, metavar="W0,W1,W2,W3")
    analyze.add_argument(
        "--format", choices=("markdown", "csv", "json"), default="markdown"
    )

    search = sub.add_parser("search", help="enumerate all admissible families")
    search.add_argument("--max-weight", type=int, default=DEFAULT_SEARCH_BOUND)
    search.add_argument(
        "--format", choices=("markdown", "csv", "json"), default="csv"
    )

    reproduce = sub.add_parser(
        "reproduce", help="recompute the published tables in their layout"
    )
    reproduce.add_argument("--table", choices=("1", "2", "both"), default="both")
    reproduce.add_argument(
        "--format", choices=("markdown", "csv", "json"), default="markdown"
    )

    diff_cmd = sub.add_parser(
        "diff", help="compare computed values with the printed tables"
    )
    diff_cmd.add_argument(
        "--format", choices=("markdown", "csv", "json"), default="markdown"
    )
    diff_cmd.add_argument("--seed", type=int, default=0)
    diff_cmd.add_argument("--prime", type=int, default=DEFAULT_ORACLE_PRIME)

    return parser


def _cmd_analyze(args: argparse.Namespace) -> str:
    weights = _parse_weights(args.weights)
    flags = admissibility(weights)
    if not flags.k3_candidate:
        return (
            f"{weights}: not a K3 candidate: {flags.failure_reason()}\n"
            f"  ambient well-formed:      {flags.ambient_well_formed}\n"
            f"  hypersurface well-formed: {flags.hypersurface_well_formed}\n"
            f"  quasi-smooth:             {flags.quasi_smooth}\n"
            f"  linear cone:              {flags.linear_cone}\n"
        )
    record = surface_record(weights)
    if args.format == "markdown":
        table = emit([record], "markdown")
        summary = certify(weights, record.data, record.invariants)
        return table + "\n" + summary + "\n"
    return emit([record], args.format)


def _cmd_search(args: argparse.Namespace) -> str:
    if args.max_weight < 1:
        raise UsageError(f"--max-weight must be >= 1, got {args.max_weight}")
    return emit(census(args.max_weight), args.format)


def _census_by_label() -> list:
    records = census(DEFAULT_SEARCH_BOUND)
    return sorted(records, key=lambda r: (r.label is None, r.label))


def _cmd_reproduce(args: argparse.Namespace) -> str:
    records = _census_by_label()
    if args.format != "markdown":
        return emit(records, args.format)
    blocks = []
    if args.table in ("1", "both"):
        lines = [
            "## families and moduli dimensions",
            "",
            "| label | surface | dim |",
            "|---|---|---|",
        ]
        for rec in records:
            lines.append(
                f"| {rec.label} | X_{rec.d} in CP{rec.weights} |"
                f" {rec.invariants.dim} |"
            )
        blocks.append("\n".join(lines))
    if args.table in ("2", "both"):
        lines = [
            "## singularity data and connection degrees",
            "",
            "| label | singularities | degree |",
            "|---|---|---|",
        ]
        for rec in records:
            sing = rec.data.to_string() or "—"
            lines.append(f"| {rec.label} | {sing} | {rec.invariants.degree} |")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def _cmd_diff(args: argparse.Namespace) -> str:
    if args.prime <= 1:
        raise UsageError(f"--prime must be a prime > 1, got {args.prime}")
    report = diff(census(DEFAULT_SEARCH_BOUND), prime=args.prime, seed=args.seed)
    if args.format == "markdown":
        return report.to_markdown()
    if args.format == "json":
        return report.to_json()
    return report.to_csv()


def run(argv: list[str]) -> tuple[int, str]:
    """Execute one invocation; returns (exit code, textual output)."""
    try:
        args = build_parser().parse_args(argv)
        handler = {
            "analyze": _cmd_analyze,
            "search": _cmd_search,
            "reproduce": _cmd_reproduce,
            "diff": _cmd_diff,
        }[args.subcommand]
        return 0, handler(args)
    except UsageError as exc:
        return 1, f"usage error: {exc}\n"
    except ValueError as exc:
        return 1, f"usage error: {exc}\n"
    except InternalInconsistencyError as exc:
        return 2, f"internal inconsistency: {exc}\n"


def main() -> None:
    code, text = run(sys.argv[1:])
    stream = sys.stdout if code == 0 else sys.stderr
    stream.write(text)
    sys.exit(code)


if __name__ == "__main__":
    main()
