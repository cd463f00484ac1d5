/** Workbench shell: renders the argument tree and panels, routes form
 * edits through the pure document operations, and saves with optimistic
 * concurrency (PUT + If-Match, conflict banner on 409).
 *
 * All displayed statuses, counts, and verdicts come from the last
 * fetched API responses; local edits mark the view dirty until saved,
 * and a successful save re-fetches validate, coverage, evaluate, and
 * the DSL preview.
 */

import { ApiClient, ConflictError, NotFoundError, PreconditionError } from "./api.js";
import {
  addClaim,
  addEvidence,
  deleteEvidence,
  deleteSubtree,
  emptyCase,
  findClaim,
  findEvidence,
  linkEvidence,
  setStage,
  setWaiver,
  suggestClaimId,
  suggestEvidenceId,
  toggleConsider,
  unlinkEvidence,
  updateStatement,
} from "./caseDoc.js";
import { NODE_H, NODE_W, layoutCase } from "./layout.js";
import { checklistRows, diagnosticsBadge, evidenceInspector, heatmapGrid } from "./panels.js";
import {
  ViewState,
  hitConflict,
  initialState,
  markDirty,
  openCase,
  reconcileSelection,
  reloaded,
  savedCleanly,
  select,
  toggleStageFilter,
} from "./state.js";
import type {
  CaseDoc,
  Consideration,
  CoverageResponse,
  Diagnostic,
  Evaluation,
  EvidenceDoc,
  Stage,
} from "./types.js";

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export class App {
  api: ApiClient;
  state: ViewState = initialState();
  doc: CaseDoc | null = null;
  revision = 0;
  diagnostics: Diagnostic[] = [];
  coverage: CoverageResponse | null = null;
  evaluation: Evaluation | null = null;
  evaluationBlocked: string | null = null;
  dslText = "";
  stagesRegistry: Stage[] = [];
  considerationsRegistry: Consideration[] = [];
  statusLine = "";

  constructor(
    private rootEl: HTMLElement,
    baseUrl: string,
    fetchFn?: typeof fetch,
  ) {
    this.api = new ApiClient(baseUrl, fetchFn);
  }

  async boot(caseId?: string): Promise<void> {
    [this.stagesRegistry, this.considerationsRegistry] = await Promise.all([
      this.api.stages(),
      this.api.considerations(),
    ]);
    const wanted = caseId ?? (await this.api.listCases())[0]?.caseId;
    if (wanted === undefined) {
      this.renderEmptyState("No cases yet.");
      return;
    }
    await this.open(wanted);
  }

  async open(caseId: string): Promise<void> {
    try {
      const { doc, revision } = await this.api.getCase(caseId);
      this.doc = doc;
      this.revision = revision;
      this.state = openCase(this.state, caseId);
      await this.refreshAnalysis();
      this.render();
    } catch (error) {
      if (error instanceof NotFoundError) {
        this.renderEmptyState(`Case "${caseId}" was not found.`);
        return;
      }
      throw error;
    }
  }

  async refreshAnalysis(): Promise<void> {
    const caseId = this.state.activeCaseId;
    if (!caseId) return;
    this.evaluationBlocked = null;
    const [diagnostics, coverage, evaluation, dsl] = await Promise.all([
      this.api.validate(caseId),
      this.api.coverage(caseId),
      this.api.evaluate(caseId).catch((error) => {
        if (error instanceof PreconditionError) {
          this.evaluationBlocked = error.message;
          return null;
        }
        throw error;
      }),
      this.api.dsl(caseId),
    ]);
    this.diagnostics = diagnostics;
    this.coverage = coverage;
    this.evaluation = evaluation;
    this.dslText = dsl;
  }

  // -- edit plumbing -------------------------------------------------------

  private apply(edit: (doc: CaseDoc) => CaseDoc): void {
    if (!this.doc) return;
    try {
      this.doc = edit(this.doc);
      this.state = markDirty(reconcileSelection(this.state, this.doc));
      this.statusLine = "";
    } catch (error) {
      this.statusLine = String(error instanceof Error ? error.message : error);
    }
    this.render();
  }

  async save(): Promise<void> {
    if (!this.doc || !this.state.activeCaseId) return;
    try {
      this.revision = await this.api.putCase(this.state.activeCaseId, this.doc, this.revision);
      this.state = savedCleanly(this.state);
      this.statusLine = `Saved at revision ${this.revision}.`;
      await this.refreshAnalysis();
    } catch (error) {
      if (error instanceof ConflictError) {
        this.state = hitConflict(this.state);
        this.statusLine = error.message;
      } else {
        this.statusLine = String(error instanceof Error ? error.message : error);
      }
    }
    this.render();
  }

  async reloadAfterConflict(): Promise<void> {
    if (!this.state.activeCaseId) return;
    const { doc, revision } = await this.api.getCase(this.state.activeCaseId);
    this.doc = doc;
    this.revision = revision;
    this.state = reconcileSelection(reloaded(this.state), doc);
    await this.refreshAnalysis();
    this.statusLine = "Reloaded the server copy.";
    this.render();
  }

  async createCase(title: string, rootStatement: string): Promise<void> {
    const { caseId } = await this.api.createCase(emptyCase(title, rootStatement));
    await this.open(caseId);
  }

  // -- rendering -----------------------------------------------------------

  renderEmptyState(message: string): void {
    this.rootEl.innerHTML = `
      <div class="empty-state">
        <p>${esc(message)}</p>
        <form id="create-form">
          <input id="new-title" placeholder="Case title" required>
          <input id="new-goal" placeholder="Top-level fairness claim" required>
          <button type="submit">Create case</button>
        </form>
      </div>`;
    const form = this.rootEl.querySelector<HTMLFormElement>("#create-form")!;
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      const title = form.querySelector<HTMLInputElement>("#new-title")!.value.trim();
      const goal = form.querySelector<HTMLInputElement>("#new-goal")!.value.trim();
      if (title && goal) void this.createCase(title, goal);
    });
  }

  render(): void {
    if (!this.doc) return;
    const badge = diagnosticsBadge(this.diagnostics);
    this.rootEl.innerHTML = `
      <header class="topbar">
        <h1>${esc(this.doc.title)}</h1>
        <span class="revision">rev ${this.revision}${this.state.dirty ? " · unsaved edits" : ""}</span>
        <button id="save-btn" ${this.state.dirty ? "" : "disabled"}>Save</button>
        <span id="status-line">${esc(this.statusLine)}</span>
      </header>
      ${
        this.state.conflict
          ? `<div id="conflict-banner">Someone else saved this case first (revision moved).
               <button id="reload-btn">Reload server copy</button></div>`
          : ""
      }
      <main class="columns">
        <section class="tree-pane">
          <div class="tree-tools">
            ${this.state.stageFilter ? `<span id="filter-chip">stage: ${esc(this.state.stageFilter)} ✕</span>` : ""}
          </div>
          <div id="tree">${this.renderTreeSvg()}</div>
          <details id="dsl-pane"><summary>DSL preview</summary>
            <pre id="dsl-preview">${esc(this.dslText)}</pre>
          </details>
        </section>
        <aside class="side-pane">
          ${this.renderDiagnosticsPanel(badge)}
          ${this.renderHeatmapPanel()}
          ${this.renderChecklistPanel()}
          ${this.renderSelectionPanel()}
        </aside>
      </main>`;
    this.wireEvents();
  }

  renderTreeSvg(): string {
    const layout = layoutCase(this.doc!, this.evaluation, this.state.stageFilter);
    const nodeById = new Map(layout.nodes.map((n) => [n.id, n]));
    const parts: string[] = [];
    for (const edge of layout.edges) {
      const from = nodeById.get(edge.from)!;
      const to = nodeById.get(edge.to)!;
      parts.push(
        `<line class="edge ${edge.edgeType}" x1="${from.x}" y1="${from.y + NODE_H / 2}" ` +
          `x2="${to.x}" y2="${to.y - NODE_H / 2}"></line>`,
      );
    }
    for (const node of layout.nodes) {
      const selected = this.state.selection === node.id ? " selected" : "";
      const dimmed = node.dimmed ? " dimmed" : "";
      const status = node.status ? ` status-${node.status}` : "";
      const shape =
        node.nodeType === "claim"
          ? `<rect x="${node.x - NODE_W / 2}" y="${node.y - NODE_H / 2}" width="${NODE_W}" height="${NODE_H}" rx="6"></rect>`
          : `<ellipse cx="${node.x}" cy="${node.y}" rx="${NODE_W / 2}" ry="${NODE_H / 2}"></ellipse>`;
      parts.push(
        `<g class="node ${node.nodeType}${selected}${dimmed}${status}" data-node="${esc(node.id)}">` +
          shape +
          `<text class="node-id" x="${node.x}" y="${node.y - 8}">${esc(node.label)}</text>` +
          `<text class="node-detail" x="${node.x}" y="${node.y + 12}">${esc(truncate(node.detail, 26))}</text>` +
          `</g>`,
      );
    }
    return (
      `<svg viewBox="0 0 ${layout.width} ${layout.height}" width="${layout.width}" height="${layout.height}">` +
      parts.join("") +
      `</svg>`
    );
  }

  renderDiagnosticsPanel(badge: { errors: number; warnings: number; total: number }): string {
    if (!this.state.panels.diagnostics) return "";
    const rows = this.diagnostics
      .map(
        (d) =>
          `<li class="diag ${d.severity}">${esc(d.code)} ${d.node ? `[${esc(d.node)}]` : ""} ${esc(d.message)}</li>`,
      )
      .join("");
    return `
      <section class="panel" id="diagnostics-panel">
        <h2>Diagnostics <span id="diag-badge" class="${badge.errors ? "bad" : "ok"}">${badge.total}</span></h2>
        <ul id="diag-list">${rows || "<li class='diag none'>No findings.</li>"}</ul>
      </section>`;
  }

  renderHeatmapPanel(): string {
    if (!this.state.panels.stageHeatmap || !this.coverage) return "";
    const cells = heatmapGrid(this.stagesRegistry, this.coverage)
      .map(
        (cell) =>
          `<div class="cell count-${Math.min(cell.count, 3)}${this.state.stageFilter === cell.stageId ? " active" : ""}"
                data-stage="${esc(cell.stageId)}" title="${esc(cell.name)}">
             <span class="cell-name">${esc(cell.name)}</span>
             <span class="cell-count">${cell.count}</span>
           </div>`,
      )
      .join("");
    return `
      <section class="panel" id="heatmap-panel">
        <h2>Lifecycle coverage</h2>
        <div id="heatmap">${cells}</div>
      </section>`;
  }

  renderChecklistPanel(): string {
    if (!this.state.panels.considerationsChecklist || !this.coverage) return "";
    const selectedClaim = this.state.selection ? findClaim(this.doc!, this.state.selection) : undefined;
    const rows = checklistRows(this.considerationsRegistry, this.coverage, this.doc!)
      .map((row) => {
        const tagged = selectedClaim?.considers.includes(row.id) ?? false;
        const tagControl = selectedClaim
          ? `<input type="checkbox" class="consider-toggle" data-consideration="${esc(row.id)}" ${tagged ? "checked" : ""} title="tag ${esc(selectedClaim.id)}">`
          : "";
        const detail =
          row.status === "waived"
            ? `waived: ${esc(row.rationale ?? "")}`
            : esc(row.claims.join(", "));
        return `<tr class="check-row ${row.status}" data-row="${esc(row.id)}">
            <td>${tagControl}</td>
            <td title="${esc(row.prompt)}">${esc(row.id)}</td>
            <td>${esc(row.summary)}</td>
            <td class="status">${row.status}</td>
            <td>${detail}</td>
            <td><button class="waive-btn" data-consideration="${esc(row.id)}">${row.rationale === null ? "waive" : "unwaive"}</button></td>
          </tr>`;
      })
      .join("");
    return `
      <section class="panel" id="checklist-panel">
        <h2>Fairness considerations</h2>
        <table id="checklist"><thead>
          <tr><th></th><th>Id</th><th>Consideration</th><th>Status</th><th>Claims</th><th></th></tr>
        </thead><tbody>${rows}</tbody></table>
      </section>`;
  }

  renderSelectionPanel(): string {
    const doc = this.doc!;
    const selection = this.state.selection;
    if (!selection) {
      return `<section class="panel" id="selection-panel"><h2>Selection</h2>
        <p>Select a claim or evidence node. Root: <code>${esc(doc.root)}</code></p>
        ${this.renderAddEvidenceForm()}</section>`;
    }
    const claim = findClaim(doc, selection);
    if (claim) {
      const stageOptions = [`<option value="">(no stage)</option>`]
        .concat(
          this.stagesRegistry.map(
            (s) =>
              `<option value="${esc(s.id)}" ${claim.stage === s.id ? "selected" : ""}>${esc(s.name)}</option>`,
          ),
        )
        .join("");
      const linkable = doc.evidence
        .filter((e) => !claim.evidence.includes(e.id))
        .map((e) => `<option value="${esc(e.id)}">${esc(e.id)}: ${esc(e.title)}</option>`)
        .join("");
      const linked = claim.evidence
        .map(
          (eid) =>
            `<li>${esc(eid)} <button class="unlink-btn" data-evidence="${esc(eid)}">unlink</button></li>`,
        )
        .join("");
      return `
      <section class="panel" id="selection-panel">
        <h2>Claim ${esc(claim.id)} ${claim.kind === "goal" ? "(goal)" : ""}</h2>
        <label>Statement
          <textarea id="statement-input" rows="3">${esc(claim.statement)}</textarea>
        </label>
        <button id="statement-save">Apply statement</button>
        <label>Stage <select id="stage-select">${stageOptions}</select></label>
        <ul id="linked-evidence">${linked || "<li>no evidence linked</li>"}</ul>
        ${linkable ? `<label>Link evidence <select id="link-select"><option value=""></option>${linkable}</select></label>` : ""}
        <div class="row-actions">
          <button id="add-child-btn">Add child claim</button>
          ${claim.id !== doc.root ? `<button id="delete-claim-btn" class="danger">Delete subtree</button>` : ""}
        </div>
        ${this.renderAddEvidenceForm()}
      </section>`;
    }
    const inspector = evidenceInspector(doc, this.evaluation, selection);
    if (!inspector || !this.state.panels.evidenceInspector) return "";
    const fields = inspector.fields
      .map(([key, value]) => `<tr><th>${esc(key)}</th><td>${esc(value)}</td></tr>`)
      .join("");
    return `
      <section class="panel" id="selection-panel">
        <h2>Evidence ${esc(inspector.id)} <span class="kind">${esc(inspector.kind)}</span></h2>
        <p id="inspector-title">${esc(inspector.title)}</p>
        <p id="inspector-verdict">verdict: <strong>${esc(inspector.verdict ?? "not evaluated")}</strong>
          ${inspector.flags.map((f) => `<span class="flag">${esc(f)}</span>`).join(" ")}
          ${inspector.value !== null ? `<span id="inspector-value">value ${inspector.value}</span>` : ""}</p>
        ${inspector.notes.length ? `<ul>${inspector.notes.map((n) => `<li>${esc(n)}</li>`).join("")}</ul>` : ""}
        <table id="inspector-fields">${fields}</table>
        <p>supports: ${inspector.linkedClaims.map(esc).join(", ") || "nothing"}</p>
        <button id="delete-evidence-btn" class="danger">Delete evidence</button>
      </section>`;
  }

  renderAddEvidenceForm(): string {
    return `
      <details id="add-evidence"><summary>Add evidence</summary>
        <form id="evidence-form">
          <select id="ev-kind">
            <option value="document">document</option>
            <option value="metric">metric</option>
            <option value="record">record</option>
          </select>
          <input id="ev-title" placeholder="Title" required>
          <input id="ev-main" placeholder="uri / dataset / description" required>
          <button type="submit">Add</button>
        </form>
      </details>`;
  }

  // -- event wiring --------------------------------------------------------

  private wireEvents(): void {
    const $ = <T extends Element>(selector: string) => this.rootEl.querySelector<T>(selector);

    $("#save-btn")?.addEventListener("click", () => void this.save());
    $("#reload-btn")?.addEventListener("click", () => void this.reloadAfterConflict());
    $("#filter-chip")?.addEventListener("click", () => {
      this.state = { ...this.state, stageFilter: null };
      this.render();
    });

    $("#tree")?.addEventListener("click", (event) => {
      const target = (event.target as Element).closest("[data-node]");
      if (target && this.doc) {
        this.state = select(this.state, this.doc, target.getAttribute("data-node"));
        this.render();
      }
    });

    this.rootEl.querySelectorAll<HTMLElement>("#heatmap .cell").forEach((cell) => {
      cell.addEventListener("click", () => {
        this.state = toggleStageFilter(this.state, cell.dataset.stage!);
        this.render();
      });
    });

    $("#statement-save")?.addEventListener("click", () => {
      const text = $<HTMLTextAreaElement>("#statement-input")!.value;
      this.apply((doc) => updateStatement(doc, this.state.selection!, text));
    });

    $<HTMLSelectElement>("#stage-select")?.addEventListener("change", (event) => {
      const value = (event.target as HTMLSelectElement).value || null;
      this.apply((doc) => setStage(doc, this.state.selection!, value));
    });

    $("#add-child-btn")?.addEventListener("click", () => {
      const parent = this.state.selection!;
      this.apply((doc) => {
        const id = suggestClaimId(doc);
        const next = addClaim(doc, parent, id, `New claim ${id}`);
        return next;
      });
    });

    $("#delete-claim-btn")?.addEventListener("click", () => {
      this.apply((doc) => deleteSubtree(doc, this.state.selection!));
    });

    $("#delete-evidence-btn")?.addEventListener("click", () => {
      this.apply((doc) => deleteEvidence(doc, this.state.selection!));
    });

    $<HTMLSelectElement>("#link-select")?.addEventListener("change", (event) => {
      const eid = (event.target as HTMLSelectElement).value;
      if (eid) this.apply((doc) => linkEvidence(doc, this.state.selection!, eid));
    });

    this.rootEl.querySelectorAll<HTMLButtonElement>(".unlink-btn").forEach((button) => {
      button.addEventListener("click", () => {
        this.apply((doc) => unlinkEvidence(doc, this.state.selection!, button.dataset.evidence!));
      });
    });

    this.rootEl.querySelectorAll<HTMLInputElement>(".consider-toggle").forEach((box) => {
      box.addEventListener("change", () => {
        this.apply((doc) => toggleConsider(doc, this.state.selection!, box.dataset.consideration!));
      });
    });

    this.rootEl.querySelectorAll<HTMLButtonElement>(".waive-btn").forEach((button) => {
      button.addEventListener("click", () => {
        const cid = button.dataset.consideration!;
        const existing = this.doc!.waivers.find((w) => w.consideration === cid);
        if (existing) {
          this.apply((doc) => setWaiver(doc, cid, null));
        } else {
          const rationale = window.prompt(`Rationale for waiving ${cid}:`) ?? "";
          if (rationale.trim()) this.apply((doc) => setWaiver(doc, cid, rationale.trim()));
        }
      });
    });

    $<HTMLFormElement>("#evidence-form")?.addEventListener("submit", (event) => {
      event.preventDefault();
      const kind = $<HTMLSelectElement>("#ev-kind")!.value as EvidenceDoc["kind"];
      const title = $<HTMLInputElement>("#ev-title")!.value.trim();
      const main = $<HTMLInputElement>("#ev-main")!.value.trim();
      if (!title || !main) return;
      this.apply((doc) => {
        const id = suggestEvidenceId(doc);
        const payload =
          kind === "document"
            ? { uri: main, sha256: null, description: "" }
            : kind === "metric"
              ? {
                  dataset: main,
                  metric: "statistical_parity_difference",
                  group: "group",
                  condition: null,
                  comparator: "lte" as const,
                  threshold: 0.1,
                }
              : { description: main, date: new Date().toISOString().slice(0, 10), participants: [] };
        let next = addEvidence(doc, { id, title, kind, payload });
        const claim = this.state.selection ? findClaim(next, this.state.selection) : undefined;
        if (claim) next = linkEvidence(next, claim.id, id);
        return next;
      });
    });
  }
}

function truncate(text: string, max: number): string {
  return text.length <= max ? text : `${text.slice(0, max - 1)}…`;
}

/** Browser entry point: reads the base URL from ?api=, localStorage, or
 * the current origin, then boots into ?case= or the first case. */
export function start(): void {
  const rootEl = document.querySelector<HTMLElement>("#app");
  if (!rootEl) throw new Error("missing #app element");
  const params = new URLSearchParams(window.location.search);
  const baseUrl =
    params.get("api") ?? window.localStorage.getItem("tea-base-url") ?? window.location.origin;
  window.localStorage.setItem("tea-base-url", baseUrl);
  const app = new App(rootEl, baseUrl);
  void app.boot(params.get("case") ?? undefined).catch((error) => {
    rootEl.innerHTML = `<div class="empty-state"><p>Cannot reach the case service at
      <code>${esc(baseUrl)}</code> (${esc(String(error))}). Start one with
      <code>tea serve --store DIR</code> and reload, or pass <code>?api=http://host:port</code>.</p></div>`;
  });
}
