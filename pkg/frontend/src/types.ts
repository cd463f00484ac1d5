/** Wire types for the tea-workbench HTTP API (schema tea-case/1). */

export type ClaimKind = "goal" | "intermediate";
export type EvidenceKind = "document" | "metric" | "record";
export type Comparator = "lte" | "gte";
export type Severity = "error" | "warning";
export type ClaimState = "supported" | "unsupported" | "undetermined";
export type Verdict = "pass" | "fail" | "indeterminate";
export type ConsiderationStatus = "addressed" | "waived" | "unaddressed";

export interface ClaimDoc {
  id: string;
  statement: string;
  kind: ClaimKind;
  stage: string | null;
  considers: string[];
  children: string[];
  evidence: string[];
}

export interface DocumentPayload {
  uri: string;
  sha256: string | null;
  description: string;
}

export interface MetricPayload {
  dataset: string;
  metric: string;
  group: string;
  condition: string | null;
  comparator: Comparator;
  threshold: number;
}

export interface RecordPayload {
  description: string;
  date: string;
  participants: string[];
}

export interface EvidenceDoc {
  id: string;
  title: string;
  kind: EvidenceKind;
  payload: DocumentPayload | MetricPayload | RecordPayload;
}

export interface WaiverDoc {
  consideration: string;
  rationale: string;
}

export interface CaseDoc {
  schema: "tea-case/1";
  title: string;
  revision: number;
  root: string;
  claims: ClaimDoc[];
  evidence: EvidenceDoc[];
  waivers: WaiverDoc[];
}

export interface CaseSummary {
  caseId: string;
  title: string;
  revision: number;
}

export interface Diagnostic {
  code: string;
  severity: Severity;
  message: string;
  node: string | null;
  line: number | null;
  column: number | null;
}

export interface StageCoverage {
  perStage: Record<string, number>;
  uncovered: string[];
}

export interface MapCoverage {
  perConsideration: Record<string, ConsiderationStatus>;
  addressingClaims: Record<string, string[]>;
}

export interface CoverageResponse {
  stages: StageCoverage;
  considerations: MapCoverage;
}

export interface ClaimStatusEntry {
  id: string;
  status: ClaimState;
  attestedOnly: boolean;
}

export interface EvidenceVerdictEntry {
  id: string;
  verdict: Verdict;
  attested: boolean;
  unverified: boolean;
  value: number | null;
  notes: string[];
}

export interface Evaluation {
  root: ClaimState;
  claims: ClaimStatusEntry[];
  evidence: EvidenceVerdictEntry[];
}

export interface Stage {
  id: string;
  name: string;
  phase: string;
  ordinal: number;
}

export interface Consideration {
  id: string;
  stage: string;
  summary: string;
  prompt: string;
  defaultSeverity: Severity;
}
