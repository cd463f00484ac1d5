/** Pure edit operations over the canonical case document.
 *
 * Every operation returns a fresh document and leaves its input alone,
 * mirroring the engine's value semantics. Only local shape rules are
 * enforced here (ids, parent existence); semantic judgements stay with
 * the service's validate/coverage/evaluate responses.
 */

import type { CaseDoc, ClaimDoc, EvidenceDoc } from "./types.js";

const NODE_ID = /^[A-Za-z][A-Za-z0-9_-]*$/;

export function isValidNodeId(id: string): boolean {
  return NODE_ID.test(id);
}

export function findClaim(doc: CaseDoc, id: string): ClaimDoc | undefined {
  return doc.claims.find((c) => c.id === id);
}

export function findEvidence(doc: CaseDoc, id: string): EvidenceDoc | undefined {
  return doc.evidence.find((e) => e.id === id);
}

export function parentOf(doc: CaseDoc, id: string): ClaimDoc | undefined {
  return doc.claims.find((c) => c.children.includes(id));
}

export function hasNode(doc: CaseDoc, id: string): boolean {
  return findClaim(doc, id) !== undefined || findEvidence(doc, id) !== undefined;
}

function clone(doc: CaseDoc): CaseDoc {
  return structuredClone(doc);
}

/** Claim ids in pre-order (the canonical document order). */
export function preorder(doc: CaseDoc): string[] {
  const byId = new Map(doc.claims.map((c) => [c.id, c]));
  const out: string[] = [];
  const walk = (id: string) => {
    const claim = byId.get(id);
    if (!claim || out.includes(id)) return;
    out.push(id);
    claim.children.forEach(walk);
  };
  walk(doc.root);
  return out;
}

function nextIdFrom(prefix: string, taken: Set<string>): string {
  for (let i = 1; ; i++) {
    const candidate = `${prefix}${i}`;
    if (!taken.has(candidate)) return candidate;
  }
}

export function suggestClaimId(doc: CaseDoc): string {
  return nextIdFrom("C", new Set(doc.claims.map((c) => c.id)));
}

export function suggestEvidenceId(doc: CaseDoc): string {
  return nextIdFrom("E", new Set(doc.evidence.map((e) => e.id)));
}

export function addClaim(doc: CaseDoc, parentId: string, id: string, statement: string): CaseDoc {
  if (!isValidNodeId(id)) throw new Error(`invalid claim id ${id}`);
  if (findClaim(doc, id)) throw new Error(`claim id ${id} already in use`);
  if (!statement) throw new Error("statement must be non-empty");
  const next = clone(doc);
  const parent = findClaim(next, parentId);
  if (!parent) throw new Error(`unknown parent ${parentId}`);
  parent.children.push(id);
  // keep the claims array in pre-order: insert after the parent's subtree
  const claim: ClaimDoc = {
    id,
    statement,
    kind: "intermediate",
    stage: null,
    considers: [],
    children: [],
    evidence: [],
  };
  next.claims.push(claim);
  next.claims = orderClaims(next);
  return next;
}

function orderClaims(doc: CaseDoc): ClaimDoc[] {
  const byId = new Map(doc.claims.map((c) => [c.id, c]));
  return preorder(doc).map((id) => byId.get(id)!);
}

export function updateStatement(doc: CaseDoc, id: string, statement: string): CaseDoc {
  if (!statement) throw new Error("statement must be non-empty");
  const next = clone(doc);
  const claim = findClaim(next, id);
  if (!claim) throw new Error(`unknown claim ${id}`);
  claim.statement = statement;
  return next;
}

export function setStage(doc: CaseDoc, id: string, stage: string | null): CaseDoc {
  const next = clone(doc);
  const claim = findClaim(next, id);
  if (!claim) throw new Error(`unknown claim ${id}`);
  claim.stage = stage;
  return next;
}

export function toggleConsider(doc: CaseDoc, id: string, considerationId: string): CaseDoc {
  const next = clone(doc);
  const claim = findClaim(next, id);
  if (!claim) throw new Error(`unknown claim ${id}`);
  const at = claim.considers.indexOf(considerationId);
  if (at >= 0) claim.considers.splice(at, 1);
  else {
    claim.considers.push(considerationId);
    claim.considers.sort();
  }
  return next;
}

export function deleteSubtree(doc: CaseDoc, id: string): CaseDoc {
  if (id === doc.root) throw new Error("cannot delete the root goal");
  if (!findClaim(doc, id)) throw new Error(`unknown claim ${id}`);
  const next = clone(doc);
  const doomed = new Set<string>();
  const collect = (cid: string) => {
    doomed.add(cid);
    findClaim(next, cid)?.children.forEach(collect);
  };
  collect(id);
  next.claims = next.claims.filter((c) => !doomed.has(c.id));
  for (const claim of next.claims) {
    claim.children = claim.children.filter((c) => !doomed.has(c));
  }
  return next;
}

export function addEvidence(doc: CaseDoc, evidence: EvidenceDoc): CaseDoc {
  if (!isValidNodeId(evidence.id)) throw new Error(`invalid evidence id ${evidence.id}`);
  if (findEvidence(doc, evidence.id)) throw new Error(`evidence id ${evidence.id} already in use`);
  const next = clone(doc);
  next.evidence.push(structuredClone(evidence));
  return next;
}

export function deleteEvidence(doc: CaseDoc, id: string): CaseDoc {
  const next = clone(doc);
  next.evidence = next.evidence.filter((e) => e.id !== id);
  for (const claim of next.claims) {
    claim.evidence = claim.evidence.filter((e) => e !== id);
  }
  return next;
}

export function linkEvidence(doc: CaseDoc, claimId: string, evidenceId: string): CaseDoc {
  const next = clone(doc);
  const claim = findClaim(next, claimId);
  if (!claim) throw new Error(`unknown claim ${claimId}`);
  if (!findEvidence(next, evidenceId)) throw new Error(`unknown evidence ${evidenceId}`);
  if (!claim.evidence.includes(evidenceId)) {
    claim.evidence.push(evidenceId);
    claim.evidence.sort();
  }
  return next;
}

export function unlinkEvidence(doc: CaseDoc, claimId: string, evidenceId: string): CaseDoc {
  const next = clone(doc);
  const claim = findClaim(next, claimId);
  if (!claim) throw new Error(`unknown claim ${claimId}`);
  claim.evidence = claim.evidence.filter((e) => e !== evidenceId);
  return next;
}

export function setWaiver(doc: CaseDoc, considerationId: string, rationale: string | null): CaseDoc {
  const next = clone(doc);
  next.waivers = next.waivers.filter((w) => w.consideration !== considerationId);
  if (rationale !== null) {
    if (!rationale) throw new Error("a waiver needs a rationale");
    next.waivers.push({ consideration: considerationId, rationale });
  }
  return next;
}

export function emptyCase(title: string, rootStatement: string): CaseDoc {
  return {
    schema: "tea-case/1",
    title,
    revision: 0,
    root: "G1",
    claims: [
      {
        id: "G1",
        statement: rootStatement,
        kind: "goal",
        stage: null,
        considers: [],
        children: [],
        evidence: [],
      },
    ],
    evidence: [],
    waivers: [],
  };
}
