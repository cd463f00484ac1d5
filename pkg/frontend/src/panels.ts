/** View-model builders for the side panels.
 *
 * These only reshape API responses for display; no status or count is
 * computed locally, so the panels can never disagree with the engine.
 */

import type {
  CaseDoc,
  Consideration,
  ConsiderationStatus,
  CoverageResponse,
  Diagnostic,
  Evaluation,
  Stage,
} from "./types.js";

export interface DiagnosticsBadge {
  errors: number;
  warnings: number;
  total: number;
}

export function diagnosticsBadge(diagnostics: Diagnostic[]): DiagnosticsBadge {
  const errors = diagnostics.filter((d) => d.severity === "error").length;
  return { errors, warnings: diagnostics.length - errors, total: diagnostics.length };
}

export interface HeatmapCell {
  stageId: string;
  name: string;
  phase: string;
  ordinal: number;
  count: number;
}

/** 3x4 grid in registry order; counts come straight from the coverage
 * response. */
export function heatmapGrid(stages: Stage[], coverage: CoverageResponse): HeatmapCell[] {
  return stages.map((stage) => ({
    stageId: stage.id,
    name: stage.name,
    phase: stage.phase,
    ordinal: stage.ordinal,
    count: coverage.stages.perStage[stage.id] ?? 0,
  }));
}

export interface ChecklistRow {
  id: string;
  summary: string;
  prompt: string;
  stage: string;
  status: ConsiderationStatus;
  claims: string[];
  rationale: string | null;
}

export function checklistRows(
  registry: Consideration[],
  coverage: CoverageResponse,
  doc: CaseDoc,
): ChecklistRow[] {
  const rationales = new Map(doc.waivers.map((w) => [w.consideration, w.rationale]));
  return registry.map((entry) => ({
    id: entry.id,
    summary: entry.summary,
    prompt: entry.prompt,
    stage: entry.stage,
    status: coverage.considerations.perConsideration[entry.id] ?? "unaddressed",
    claims: coverage.considerations.addressingClaims[entry.id] ?? [],
    rationale: rationales.get(entry.id) ?? null,
  }));
}

export interface InspectorModel {
  id: string;
  kind: string;
  title: string;
  fields: [string, string][];
  verdict: string | null;
  flags: string[];
  notes: string[];
  value: number | null;
  linkedClaims: string[];
}

export function evidenceInspector(
  doc: CaseDoc,
  evaluation: Evaluation | null,
  evidenceId: string,
): InspectorModel | null {
  const ev = doc.evidence.find((e) => e.id === evidenceId);
  if (!ev) return null;
  const fields: [string, string][] = Object.entries(ev.payload).map(([key, value]) => [
    key,
    value === null ? "—" : Array.isArray(value) ? value.join(", ") : String(value),
  ]);
  const entry = evaluation?.evidence.find((e) => e.id === evidenceId) ?? null;
  const flags: string[] = [];
  if (entry?.attested) flags.push("attested");
  if (entry?.unverified) flags.push("unverified");
  return {
    id: ev.id,
    kind: ev.kind,
    title: ev.title,
    fields,
    verdict: entry?.verdict ?? null,
    flags,
    notes: entry?.notes ?? [],
    value: entry?.value ?? null,
    linkedClaims: doc.claims.filter((c) => c.evidence.includes(evidenceId)).map((c) => c.id),
  };
}
