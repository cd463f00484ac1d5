"""`tea` command-line interface.

Exit codes are a contract, stable across output formats: 0 success and
no error findings, 1 error-severity findings (or an unsupported root for
`eval`, or coverage gaps under --strict), 2 usage errors, I/O failures,
and files that do not parse.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import dsl, reports
from .errors import FileError, NotFoundError
from .evaluator import EvidenceStores, evaluate_case
from .fairness_map import BUILTIN_MAP_ID, UNADDRESSED, consideration_registry, map_coverage
from .lifecycle import stage_coverage
from .validator import validate

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_FATAL = 2


def _fatal(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_FATAL)


def _load_case(path: str):
    """Parse a .tea file; exit 2 when it cannot be read or parsed."""
    try:
        outcome = dsl.parse_file(path)
    except FileError as exc:
        _fatal(str(exc))
    if outcome.case is None:
        for diag in outcome.diagnostics:
            click.echo(_diag_line(diag, path), err=True)
        _fatal(f"{path}: file does not parse")
    return outcome


def _diag_line(diag, path: str) -> str:
    where = f"{path}:{diag.span.line}:{diag.span.column}" if diag.span else path
    node = f" [{diag.node_ref}]" if diag.node_ref else ""
    return f"{where}: {diag.severity} {diag.code}{node}: {diag.message}"


def _emit_json(obj):
    click.echo(json.dumps(obj, indent=2))


@click.group()
@click.version_option(package_name="tea-workbench")
def main():
    """Author, validate, and evaluate structured assurance cases."""


@main.command()
@click.argument("file", type=click.Path())
@click.option("--map", "map_id", default=BUILTIN_MAP_ID, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def check(file, map_id, fmt):
    """Parse FILE and run the structural rule table."""
    outcome = _load_case(file)
    diagnostics = validate(outcome.case, map_id=map_id)
    errors = sum(1 for d in diagnostics if d.is_error)
    warnings = len(diagnostics) - errors
    if fmt == "json":
        _emit_json(reports.diagnostics_to_json(diagnostics))
    else:
        for diag in diagnostics:
            click.echo(_diag_line(diag, file))
        click.echo(f"{errors} errors, {warnings} warnings")
    sys.exit(EXIT_FINDINGS if errors else EXIT_OK)


@main.command()
@click.argument("file", type=click.Path())
@click.option("--map", "map_id", default=BUILTIN_MAP_ID, show_default=True)
@click.option("--strict", is_flag=True, help="Treat uncovered stages and unaddressed considerations as failures.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def coverage(file, map_id, strict, fmt):
    """Report lifecycle-stage and considerations coverage for FILE."""
    outcome = _load_case(file)
    case = outcome.case
    stages = stage_coverage(case)
    try:
        considerations = map_coverage(case, map_id)
    except NotFoundError as exc:
        _fatal(str(exc))
    if fmt == "json":
        _emit_json(reports.coverage_to_json(stages, considerations))
    else:
        for stage_id, count in stages.per_stage.items():
            click.echo(f"{stage_id}: {count}")
        click.echo(
            "uncovered stages: " + (", ".join(stages.uncovered) if stages.uncovered else "none")
        )
        for cid, status in considerations.per_consideration.items():
            claims = considerations.addressing_claims[cid]
            suffix = f" ({', '.join(claims)})" if claims else ""
            click.echo(f"{cid}: {status}{suffix}")
    unaddressed = [
        cid for cid, status in considerations.per_consideration.items() if status == UNADDRESSED
    ]
    if fmt == "text" and unaddressed:
        click.echo("unaddressed considerations: " + ", ".join(unaddressed))
    gaps = bool(stages.uncovered or unaddressed)
    sys.exit(EXIT_FINDINGS if gaps and strict else EXIT_OK)


@main.command(name="eval")
@click.argument("file", type=click.Path())
@click.option("--evidence-dir", type=click.Path(), help="Directory document uris resolve against.")
@click.option("--datasets-dir", type=click.Path(), help="Directory holding {ref}.csv datasets (default: EVIDENCE_DIR/datasets).")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def eval_cmd(file, evidence_dir, datasets_dir, fmt):
    """Evaluate FILE's evidence and propagate claim statuses."""
    outcome = _load_case(file)
    case = outcome.case
    blocking = [d for d in validate(case) if d.is_error]
    if blocking:
        for diag in blocking:
            click.echo(_diag_line(diag, file), err=True)
        click.echo("case fails structural validation; not evaluated", err=True)
        sys.exit(EXIT_FINDINGS)
    stores = _stores(evidence_dir, datasets_dir)
    result = evaluate_case(case, stores)
    if fmt == "json":
        _emit_json(reports.evaluation_to_json(case, result))
    else:
        for eid in case.evidence:
            verdict = result.evidence_verdicts[eid]
            notes = f" ({'; '.join(verdict.notes)})" if verdict.notes else ""
            click.echo(f"evidence {eid}: {verdict.verdict}{notes}")
        for cid in case.preorder():
            click.echo(f"claim {cid}: {result.claim_statuses[cid].status}")
        click.echo(f"root: {result.root_status.status}")
    sys.exit(EXIT_FINDINGS if result.root_status.status == "unsupported" else EXIT_OK)


def _stores(evidence_dir, datasets_dir) -> EvidenceStores:
    ev_dir = Path(evidence_dir) if evidence_dir else None
    if datasets_dir:
        ds_dir = Path(datasets_dir)
    elif ev_dir is not None:
        ds_dir = ev_dir / "datasets"
    else:
        ds_dir = None
    return EvidenceStores(evidence_dir=ev_dir, datasets_dir=ds_dir)


@main.command()
@click.argument("file", type=click.Path())
@click.option("--format", "fmt", type=click.Choice(["dot", "json", "md"]), required=True)
@click.option("-o", "--output", type=click.Path(), help="Write to a file instead of stdout.")
@click.option("--evidence-dir", type=click.Path(), help="Evaluate against this directory for the md report.")
@click.option("--datasets-dir", type=click.Path())
@click.option("--map", "map_id", default=BUILTIN_MAP_ID, show_default=True)
def export(file, fmt, output, evidence_dir, datasets_dir, map_id):
    """Export FILE as a DOT graph, canonical JSON, or Markdown report."""
    outcome = _load_case(file)
    case = outcome.case
    if fmt == "json":
        from .case_model import to_canonical_json

        payload = to_canonical_json(case).decode("utf-8")
    elif fmt == "dot":
        diagnostics = validate(case, map_id=map_id)
        evaluation = None
        if not any(d.is_error for d in diagnostics):
            evaluation = evaluate_case(case, _stores(evidence_dir, datasets_dir))
        payload = reports.export_dot(case, evaluation)
    else:
        diagnostics = validate(case, map_id=map_id)
        try:
            entries = consideration_registry(map_id)
            considerations = map_coverage(case, map_id)
        except NotFoundError as exc:
            _fatal(str(exc))
        evaluation = None
        if not any(d.is_error for d in diagnostics):
            evaluation = evaluate_case(case, _stores(evidence_dir, datasets_dir))
        payload = reports.render_report(
            case, diagnostics, stage_coverage(case), considerations, evaluation, entries
        )
    if output:
        try:
            Path(output).write_text(payload, encoding="utf-8")
        except OSError as exc:
            _fatal(f"{output}: {exc}")
    else:
        click.echo(payload, nl=False)
    sys.exit(EXIT_OK)


@main.command()
@click.argument("file", type=click.Path())
@click.option("--write", is_flag=True, help="Rewrite FILE in place instead of printing.")
def fmt(file, write):
    """Canonically format a .tea FILE."""
    outcome = _load_case(file)
    text = dsl.format_case(outcome.case)
    if write:
        try:
            dsl.format_file(outcome.case, file)
        except FileError as exc:
            _fatal(str(exc))
    else:
        click.echo(text, nl=False)
    sys.exit(EXIT_OK)


@main.command()
@click.option("--port", default=8192, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--store", type=click.Path(), required=True, help="Root directory for cases, datasets, and evidence.")
def serve(port, host, store):
    """Run the HTTP JSON API over a file-backed store."""
    import uvicorn

    from .service import create_app

    app = create_app(Path(store))
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
