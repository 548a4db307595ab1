"""Command line interface: compute, audit, independence, concordance.

Exit codes: 0 success, 1 strict-mode axiom violation or independence-pattern
mismatch, 2 input or usage error.  The environment variable PCM_SEED
provides a default master seed; --seed overrides it.  With --json a single
report document is printed to stdout; re-running the same command with the
same flags reproduces it byte for byte.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .analysis import independence_table, ranking_concordance
from .axioms import AuditConfig, AuditReport, UnknownAxiomError, audit
from .core import DomainError, ReciprocalMatrix
from .indices import AXIOMS, INDEX_IDS, UnknownIndexError, eval_catalog, get_index
from .reporting import build_report, dumps_canonical

__all__ = ["main", "parse_matrix_file", "save_matrix_json", "CliError"]

DEFAULT_SEED = 42
DEFAULT_SAMPLES = 1000


class CliError(Exception):
    """Input or usage error; maps to exit code 2."""


def parse_matrix_file(path: str | Path, complete_lower: bool = False) -> tuple[ReciprocalMatrix, list[str] | None]:
    """Read a matrix file: JSON with a "matrix" key, or CSV rows.

    A single CSV row "t12,t13,t23" is interpreted as a triad.  Returns the
    validated matrix and the optional alternative labels.
    """
    path = Path(path)
    try:
        text = path.read_text("utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    if path.suffix.lower() == ".json":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CliError(f"{path} is not valid JSON: {exc}") from exc
        if not isinstance(doc, dict) or "matrix" not in doc:
            raise CliError(f'{path} must be a JSON object with a "matrix" key')
        rows = doc["matrix"]
        labels = doc.get("labels")
        if labels is not None:
            if not isinstance(labels, list) or not all(isinstance(v, str) for v in labels):
                raise CliError(f'"labels" in {path} must be a list of strings')
            if len(labels) != len(rows):
                raise CliError(f'"labels" in {path} must have one entry per row')
    else:
        rows = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            try:
                rows.append([float(cell) for cell in line.split(",")])
            except ValueError as exc:
                raise CliError(f"{path}: non-numeric cell in row {line!r}") from exc
        labels = None
        if len(rows) == 1 and len(rows[0]) == 3:
            t12, t13, t23 = rows[0]
            rows = [[1.0, t12, t13], [0.0, 1.0, t23], [0.0, 0.0, 1.0]]
            complete_lower = True
    if not rows:
        raise CliError(f"{path} contains no matrix rows")
    try:
        matrix = ReciprocalMatrix.from_rows(rows, complete_lower=complete_lower)
    except (DomainError, TypeError) as exc:
        raise CliError(f"{path}: {exc}") from exc
    return matrix, labels


def save_matrix_json(matrix: ReciprocalMatrix, path: str | Path, labels: list[str] | None = None) -> None:
    """Write a matrix file that parse_matrix_file reads back to the identical matrix."""
    doc: dict = {"matrix": [list(row) for row in matrix.entries]}
    if labels is not None:
        doc["labels"] = list(labels)
    Path(path).write_text(dumps_canonical(doc) + "\n", "utf-8")


def _resolve_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("PCM_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise CliError(f"PCM_SEED must be an integer, got {env!r}") from None
    return DEFAULT_SEED


def _config_from(args) -> AuditConfig:
    return AuditConfig(samples=getattr(args, "samples", DEFAULT_SAMPLES), master_seed=_resolve_seed(args))


def _parse_axioms(arg: str) -> tuple[str, ...]:
    if arg.strip().lower() == "all":
        return AXIOMS
    names = tuple(part.strip().upper() for part in arg.split(",") if part.strip())
    if not names:
        raise CliError("--axioms must name at least one axiom or be 'all'")
    unknown = [a for a in names if a not in AXIOMS]
    if unknown:
        raise CliError(f"unknown axiom name(s) {', '.join(unknown)}; valid axioms: {', '.join(AXIOMS)}")
    return names


def _print_report(doc: dict) -> None:
    sys.stdout.write(dumps_canonical(doc) + "\n")


def _witness_text(witness_dict: dict) -> str:
    triads = ", ".join(
        f"{name}=({t['t12']:.6g}, {t['t13']:.6g}, {t['t23']:.6g})" for name, t in witness_dict["triads"].items()
    )
    observed = ", ".join(f"I({k})={v:.12g}" for k, v in witness_dict["observed"].items())
    return f"{witness_dict['relation']}; {triads}; {observed}"


def _cmd_compute(args) -> int:
    matrix, labels = parse_matrix_file(args.matrix, complete_lower=args.complete_lower)
    if matrix.n != 3:
        raise CliError(f"triads only: index commands need a 3x3 matrix, got order {matrix.n}")
    triad = matrix.triad()
    ids = tuple(args.index) if args.index else INDEX_IDS
    try:
        values = {index_id: eval_catalog(index_id, triad) for index_id in ids}
    except UnknownIndexError as exc:
        raise CliError(str(exc)) from exc
    if args.json:
        results: dict = {"triad": triad.as_dict(), "indices": values}
        if labels is not None:
            results["labels"] = labels
        command = {
            "name": "compute",
            "matrix": str(args.matrix),
            "indices": list(ids),
            "complete_lower": bool(args.complete_lower),
        }
        _print_report(build_report(command, _config_from(args), results, []))
    else:
        width = max(len(i) for i in ids)
        for index_id in ids:
            print(f"{index_id:<{width}}  {values[index_id]:.12g}")
    return 0


def _render_audit_text(report: AuditReport, strict: bool) -> None:
    print(f"audit of {report.index_id}  (samples={report.config.samples}, seed={report.config.master_seed})")
    for v in report.verdicts:
        marker = "ok" if v.status == report.expected[v.axiom] else "UNEXPECTED"
        print(f"  {v.axiom:<4} {v.status:<4}  expected {report.expected[v.axiom]:<4}  [{marker}]")
        if v.witness is not None:
            print(f"       witness: {_witness_text(v.witness.to_dict())}")
    if strict and not report.all_pass:
        print("strict mode: at least one axiom check failed")


def _cmd_audit(args) -> int:
    try:
        descriptor = get_index(args.index)
    except UnknownIndexError as exc:
        raise CliError(str(exc)) from exc
    axioms = _parse_axioms(args.axioms)
    cfg = _config_from(args)
    try:
        report = audit(descriptor, axioms, cfg)
    except UnknownAxiomError as exc:
        raise CliError(str(exc)) from exc
    if args.json:
        command = {
            "name": "audit",
            "index": descriptor.id,
            "axioms": list(axioms),
            "strict": bool(args.strict),
        }
        witnesses = [w.to_dict() for w in report.witnesses()]
        _print_report(build_report(command, cfg, report.to_dict(), witnesses))
    else:
        _render_audit_text(report, args.strict)
    return 1 if args.strict and not report.all_pass else 0


def _cmd_independence(args) -> int:
    cfg = _config_from(args)
    table = independence_table(cfg)
    if args.json:
        witnesses = [
            {**cell.witness.to_dict(), "index": row.index_id}
            for row in table.rows
            for cell in row.cells
            if cell.witness is not None
        ]
        _print_report(build_report({"name": "independence"}, cfg, table.to_dict(), witnesses))
    else:
        axiom_header = "  ".join(f"{a:<4}" for a in table.to_dict()["axioms"])
        print(f"index  {axiom_header}")
        for row in table.rows:
            cells = "  ".join(f"{c.status:<4}" for c in row.cells)
            note = "" if row.matches_expected else "  <- unexpected pattern"
            print(f"{row.index_id:<5}  {cells}{note}")
        print(f"pattern matches expected diagonal: {'yes' if table.matches_expected else 'no'}")
    return 0 if table.matches_expected else 1


def _cmd_concordance(args) -> int:
    try:
        a = get_index(args.index_a)
        b = get_index(args.index_b)
    except UnknownIndexError as exc:
        raise CliError(str(exc)) from exc
    cfg = _config_from(args)
    stats = ranking_concordance(a, b, cfg)
    if args.json:
        witnesses = [stats.discordant_witness.to_dict()] if stats.discordant_witness is not None else []
        command = {"name": "concordance", "index_a": a.id, "index_b": b.id}
        _print_report(build_report(command, cfg, stats.to_dict(), witnesses))
    else:
        print(f"concordance of {a.id} vs {b.id} over {stats.pairs} pairs")
        print(f"  concordant   {stats.concordant}")
        print(f"  discordant   {stats.discordant}")
        print(f"  ties a only  {stats.ties_a_only}")
        print(f"  ties b only  {stats.ties_b_only}")
        print(f"  ties both    {stats.ties_both}")
        print(f"  kendall tau-b {stats.kendall_tau_b:.12g}")
        if stats.discordant_witness is not None:
            print(f"  witness: {_witness_text(stats.discordant_witness.to_dict())}")
    return 0


def _add_sampling_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="random probes per check")
    parser.add_argument("--seed", type=int, default=None, help="master seed (default: PCM_SEED or 42)")
    parser.add_argument("--json", action="store_true", help="emit a JSON report document")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="triadaudit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="evaluate inconsistency indices on a matrix file")
    compute.add_argument("--matrix", required=True, help="JSON or CSV matrix file")
    compute.add_argument("--index", action="append", default=None, help="index id (repeatable; default: all)")
    compute.add_argument("--complete-lower", action="store_true", help="fill the lower triangle from the upper")
    compute.add_argument("--json", action="store_true", help="emit a JSON report document")
    compute.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help=argparse.SUPPRESS)
    compute.add_argument("--seed", type=int, default=None, help=argparse.SUPPRESS)
    compute.set_defaults(func=_cmd_compute)

    audit_cmd = sub.add_parser("audit", help="check axioms for one index")
    audit_cmd.add_argument("index", help=f"index id, one of: {', '.join(INDEX_IDS)}")
    audit_cmd.add_argument("--axioms", default="all", help="comma-separated axiom names or 'all'")
    audit_cmd.add_argument("--strict", action="store_true", help="exit 1 if any verdict is fail")
    _add_sampling_flags(audit_cmd)
    audit_cmd.set_defaults(func=_cmd_audit)

    independence = sub.add_parser("independence", help="reproduce the six-axiom independence table")
    _add_sampling_flags(independence)
    independence.set_defaults(func=_cmd_independence)

    concordance = sub.add_parser("concordance", help="pairwise ranking agreement of two indices")
    concordance.add_argument("index_a")
    concordance.add_argument("index_b")
    _add_sampling_flags(concordance)
    concordance.set_defaults(func=_cmd_concordance)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, UnknownIndexError, UnknownAxiomError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
