/** View state and its transitions. Pure, so the save/conflict flow is
 * testable without a DOM. */

import type { CaseDoc } from "./types.js";
import { hasNode } from "./caseDoc.js";

export interface PanelVisibility {
  diagnostics: boolean;
  stageHeatmap: boolean;
  considerationsChecklist: boolean;
  evidenceInspector: boolean;
}

export interface ViewState {
  activeCaseId: string | null;
  selection: string | null;
  panels: PanelVisibility;
  dirty: boolean;
  conflict: boolean;
  stageFilter: string | null;
}

export function initialState(): ViewState {
  return {
    activeCaseId: null,
    selection: null,
    panels: {
      diagnostics: true,
      stageHeatmap: true,
      considerationsChecklist: true,
      evidenceInspector: true,
    },
    dirty: false,
    conflict: false,
    stageFilter: null,
  };
}

export function openCase(state: ViewState, caseId: string): ViewState {
  return { ...state, activeCaseId: caseId, selection: null, dirty: false, conflict: false, stageFilter: null };
}

/** Selection must always point at a node present in the loaded case. */
export function select(state: ViewState, doc: CaseDoc, id: string | null): ViewState {
  if (id !== null && !hasNode(doc, id)) return { ...state, selection: null };
  return { ...state, selection: id };
}

/** Re-check the selection after an edit (the node may be gone). */
export function reconcileSelection(state: ViewState, doc: CaseDoc): ViewState {
  if (state.selection !== null && !hasNode(doc, state.selection)) {
    return { ...state, selection: null };
  }
  return state;
}

export function markDirty(state: ViewState): ViewState {
  return { ...state, dirty: true };
}

export function savedCleanly(state: ViewState): ViewState {
  return { ...state, dirty: false, conflict: false };
}

export function hitConflict(state: ViewState): ViewState {
  return { ...state, conflict: true };
}

export function reloaded(state: ViewState): ViewState {
  return { ...state, dirty: false, conflict: false };
}

export function toggleStageFilter(state: ViewState, stageId: string): ViewState {
  return { ...state, stageFilter: state.stageFilter === stageId ? null : stageId };
}

export function togglePanel(state: ViewState, panel: keyof PanelVisibility): ViewState {
  return { ...state, panels: { ...state.panels, [panel]: !state.panels[panel] } };
}
