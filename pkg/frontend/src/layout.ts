/** Top-down node-link layout for the argument tree.
 *
 * Claims are boxes laid out tidily (leaves left to right, parents
 * centred over their children); evidence nodes are ellipses in a bottom
 * band under the claims that cite them. Pure and deterministic so tests
 * can count and position nodes without a DOM.
 */

import type { CaseDoc, Evaluation } from "./types.js";
import { preorder } from "./caseDoc.js";

export const NODE_W = 168;
export const NODE_H = 64;
export const H_GAP = 24;
export const V_GAP = 56;

export interface LayoutNode {
  id: string;
  nodeType: "claim" | "evidence";
  label: string;
  detail: string;
  x: number; // centre
  y: number; // centre
  status: string | null; // claim state or evidence verdict when evaluated
  dimmed: boolean;
}

export interface LayoutEdge {
  from: string;
  to: string;
  edgeType: "decomposes" | "by";
}

export interface TreeLayout {
  nodes: LayoutNode[];
  edges: LayoutEdge[];
  width: number;
  height: number;
}

export function layoutCase(
  doc: CaseDoc,
  evaluation: Evaluation | null = null,
  stageFilter: string | null = null,
): TreeLayout {
  const byId = new Map(doc.claims.map((c) => [c.id, c]));
  const order = preorder(doc);
  const depth = new Map<string, number>([[doc.root, 0]]);
  for (const id of order) {
    const claim = byId.get(id)!;
    for (const child of claim.children) depth.set(child, (depth.get(id) ?? 0) + 1);
  }

  // tidy x positions: leaves get successive slots, parents centre over children
  const x = new Map<string, number>();
  let nextSlot = 0;
  const place = (id: string): number => {
    const claim = byId.get(id)!;
    if (claim.children.length === 0) {
      const pos = nextSlot * (NODE_W + H_GAP) + NODE_W / 2;
      nextSlot += 1;
      x.set(id, pos);
      return pos;
    }
    const xs = claim.children.map(place);
    const pos = (Math.min(...xs) + Math.max(...xs)) / 2;
    x.set(id, pos);
    return pos;
  };
  place(doc.root);

  const claimStatus = new Map(evaluation?.claims.map((c) => [c.id, c.status]) ?? []);
  const evidenceVerdict = new Map(evaluation?.evidence.map((e) => [e.id, e.verdict]) ?? []);

  const maxDepth = Math.max(0, ...depth.values());
  const nodes: LayoutNode[] = order.map((id) => {
    const claim = byId.get(id)!;
    return {
      id,
      nodeType: "claim",
      label: id,
      detail: claim.statement,
      x: x.get(id)!,
      y: depth.get(id)! * (NODE_H + V_GAP) + NODE_H / 2,
      status: claimStatus.get(id) ?? null,
      dimmed: stageFilter !== null && claim.stage !== stageFilter,
    };
  });

  // evidence band: centre each ellipse under the claims citing it
  const citers = new Map<string, string[]>();
  for (const claim of doc.claims) {
    for (const eid of claim.evidence) {
      const list = citers.get(eid) ?? [];
      list.push(claim.id);
      citers.set(eid, list);
    }
  }
  const bandY = (maxDepth + 1) * (NODE_H + V_GAP) + NODE_H / 2;
  const placed: LayoutNode[] = [];
  for (const ev of doc.evidence) {
    const anchors = (citers.get(ev.id) ?? []).map((cid) => x.get(cid) ?? 0);
    const want =
      anchors.length > 0
        ? anchors.reduce((a, b) => a + b, 0) / anchors.length
        : (placed.length + 0.5) * (NODE_W + H_GAP);
    placed.push({
      id: ev.id,
      nodeType: "evidence",
      label: ev.id,
      detail: ev.title,
      x: want,
      y: bandY,
      status: evidenceVerdict.get(ev.id) ?? null,
      dimmed: false,
    });
  }
  // resolve overlaps left to right
  placed.sort((a, b) => a.x - b.x || a.id.localeCompare(b.id));
  for (let i = 1; i < placed.length; i++) {
    const minX = placed[i - 1]!.x + NODE_W + H_GAP;
    if (placed[i]!.x < minX) placed[i]!.x = minX;
  }
  nodes.push(...placed);

  const edges: LayoutEdge[] = [];
  for (const id of order) {
    for (const child of byId.get(id)!.children) {
      edges.push({ from: id, to: child, edgeType: "decomposes" });
    }
  }
  for (const id of order) {
    for (const eid of [...byId.get(id)!.evidence].sort()) {
      if (doc.evidence.some((e) => e.id === eid)) {
        edges.push({ from: id, to: eid, edgeType: "by" });
      }
    }
  }

  const width = Math.max(...nodes.map((n) => n.x + NODE_W / 2), NODE_W) + H_GAP;
  const height = bandY + NODE_H / 2 + V_GAP;
  return { nodes, edges, width, height };
}
