"""Renderings of cases and analysis results: DOT, Markdown, and the JSON
shapes shared verbatim by the CLI's ``--format json`` and the HTTP API.

Everything here is a pure function of its inputs and byte-deterministic,
so outputs are safe to golden-test and diff in version control.
"""

from __future__ import annotations

from .case_model import AssuranceCase
from .diagnostics import Diagnostic, to_json_obj
from .evaluator import EvaluationResult
from .fairness_map import WAIVED, Consideration, MapCoverage
from .lifecycle import Stage, StageCoverage, stage_registry

# ---------------------------------------------------------------------------
# JSON shapes (single source of truth for CLI and service)
# ---------------------------------------------------------------------------


def diagnostics_to_json(diagnostics: list[Diagnostic]) -> list[dict]:
    return [to_json_obj(d) for d in diagnostics]


def stages_to_json(stages: list[Stage]) -> list[dict]:
    return [
        {"id": s.id, "name": s.name, "phase": s.phase, "ordinal": s.ordinal} for s in stages
    ]


def considerations_to_json(entries: list[Consideration]) -> list[dict]:
    return [
        {
            "id": c.id,
            "stage": c.stage,
            "summary": c.summary,
            "prompt": c.prompt,
            "defaultSeverity": c.default_severity,
        }
        for c in entries
    ]


def stage_coverage_to_json(coverage: StageCoverage) -> dict:
    return {"perStage": dict(coverage.per_stage), "uncovered": list(coverage.uncovered)}


def map_coverage_to_json(coverage: MapCoverage) -> dict:
    return {
        "perConsideration": dict(coverage.per_consideration),
        "addressingClaims": {k: list(v) for k, v in coverage.addressing_claims.items()},
    }


def coverage_to_json(stages: StageCoverage, considerations: MapCoverage) -> dict:
    return {
        "stages": stage_coverage_to_json(stages),
        "considerations": map_coverage_to_json(considerations),
    }


def evaluation_to_json(case: AssuranceCase, result: EvaluationResult) -> dict:
    claims = [
        {
            "id": cid,
            "status": result.claim_statuses[cid].status,
            "attestedOnly": result.claim_statuses[cid].attested_only,
        }
        for cid in case.preorder()
    ]
    evidence = []
    for eid in case.evidence:
        verdict = result.evidence_verdicts[eid]
        evidence.append(
            {
                "id": eid,
                "verdict": verdict.verdict,
                "attested": verdict.attested,
                "unverified": verdict.unverified,
                "value": verdict.result.value if verdict.result else None,
                "notes": list(verdict.notes),
            }
        )
    return {"root": result.root_status.status, "claims": claims, "evidence": evidence}


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")


def export_dot(case: AssuranceCase, evaluation: EvaluationResult | None = None) -> str:
    """DOT digraph: claims as boxes, evidence as ellipses, decompose and
    by edges. Node order is claim pre-order then evidence declaration
    order, so output bytes are stable."""
    lines = ["digraph assurance_case {", "  rankdir=TB;"]
    order = case.preorder()
    for cid in order:
        claim = case.claims[cid]
        label = _dot_escape(f"{cid}\n{claim.statement}")
        attrs = [f'label="{label}"', "shape=box"]
        if evaluation is not None:
            attrs.append(f'class="{evaluation.claim_statuses[cid].status}"')
        lines.append(f'  "C:{cid}" [{", ".join(attrs)}];')
    for eid, ev in case.evidence.items():
        label = _dot_escape(f"{eid}\n{ev.title}")
        attrs = [f'label="{label}"', "shape=ellipse"]
        if evaluation is not None:
            attrs.append(f'class="{evaluation.evidence_verdicts[eid].verdict}"')
        lines.append(f'  "E:{eid}" [{", ".join(attrs)}];')
    for cid in order:
        for child in case.claims[cid].children:
            lines.append(f'  "C:{cid}" -> "C:{child}" [label="decomposes"];')
    for cid in order:
        for eid in sorted(case.claims[cid].evidence_refs):
            if eid in case.evidence:
                lines.append(f'  "C:{cid}" -> "E:{eid}" [label="by"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Markdown report
# ---------------------------------------------------------------------------


def _md_cell(text: str) -> str:
    return text.replace("|", "\\|").replace("\n", " ")


def render_report(
    case: AssuranceCase,
    diagnostics: list[Diagnostic],
    stages: StageCoverage,
    considerations: MapCoverage,
    evaluation: EvaluationResult | None,
    map_entries: list[Consideration] | None = None,
) -> str:
    """Markdown report with fixed section order: Summary, Diagnostics,
    Lifecycle Coverage, Considerations, Evidence Verdicts."""
    out: list[str] = [f"# Assurance Case Report: {_md_cell(case.title)}", ""]

    out.append("## Summary")
    out.append("")
    if evaluation is None:
        out.append(f"Root claim **{case.root_id}**: not evaluated.")
    else:
        status = evaluation.root_status.status
        suffix = " (attested evidence only)" if evaluation.root_status.attested_only else ""
        out.append(f"Root claim **{case.root_id}**: **{status}**{suffix}.")
    errors = sum(1 for d in diagnostics if d.is_error)
    warnings = len(diagnostics) - errors
    out.append(
        f"{len(case.claims)} claims, {len(case.evidence)} evidence nodes, "
        f"revision {case.revision}; {errors} errors, {warnings} warnings."
    )
    out.append("")

    out.append("## Diagnostics")
    out.append("")
    if not diagnostics:
        out.append("No findings.")
    else:
        out.append("| Code | Severity | Node | Message |")
        out.append("| --- | --- | --- | --- |")
        for d in diagnostics:
            where = d.node_ref or (f"{d.span.line}:{d.span.column}" if d.span else "-")
            out.append(
                f"| {d.code} | {d.severity} | {_md_cell(where)} | {_md_cell(d.message)} |"
            )
    out.append("")

    out.append("## Lifecycle Coverage")
    out.append("")
    out.append("| Stage | Phase | Claims |")
    out.append("| --- | --- | --- |")
    for stage in stage_registry():
        out.append(f"| {stage.name} | {stage.phase} | {stages.per_stage[stage.id]} |")
    out.append("")
    if stages.uncovered:
        out.append(f"Uncovered stages: {', '.join(stages.uncovered)}")
    else:
        out.append("Uncovered stages: none")
    out.append("")

    out.append("## Considerations")
    out.append("")
    out.append("| Consideration | Stage | Status | Claims / Rationale |")
    out.append("| --- | --- | --- | --- |")
    rationales = {w.consideration_id: w.rationale for w in case.waivers}
    summaries = {c.id: c for c in (map_entries or [])}
    for cid, status in considerations.per_consideration.items():
        entry = summaries.get(cid)
        stage_name = entry.stage if entry else "-"
        if status == WAIVED:
            detail = f"waived: {rationales.get(cid, '')}"
        else:
            detail = ", ".join(considerations.addressing_claims[cid]) or "-"
        out.append(f"| {cid} | {stage_name} | {status} | {_md_cell(detail)} |")
    out.append("")

    out.append("## Evidence Verdicts")
    out.append("")
    if evaluation is None:
        out.append("Not evaluated.")
    elif not case.evidence:
        out.append("No evidence declared.")
    else:
        out.append("| Evidence | Kind | Verdict | Flags | Notes |")
        out.append("| --- | --- | --- | --- | --- |")
        for eid, ev in case.evidence.items():
            verdict = evaluation.evidence_verdicts[eid]
            flags = []
            if verdict.attested:
                flags.append("attested")
            if verdict.unverified:
                flags.append("unverified")
            out.append(
                f"| {eid} | {ev.kind} | {verdict.verdict} | {', '.join(flags) or '-'} "
                f"| {_md_cell('; '.join(verdict.notes)) or '-'} |"
            )
    out.append("")
    return "\n".join(out)
