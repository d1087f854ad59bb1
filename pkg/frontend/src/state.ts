// Composer state and its pure transitions. base_lines always tracks the
// selected form's point count.

import type { FormInfo, ValidationReport } from "./api.js";

export interface ComposerState {
  forms: FormInfo[];
  selectedForm: string;
  baseLines: string[];
  poemDraft: string;
  freeEdit: boolean;
  lastReport: ValidationReport | null;
  error: string | null;
}

export function initialState(): ComposerState {
  return {
    forms: [],
    selectedForm: "",
    baseLines: [],
    poemDraft: "",
    freeEdit: false,
    lastReport: null,
    error: null,
  };
}

export function withForms(state: ComposerState, forms: FormInfo[]): ComposerState {
  const selected = forms.find((f) => f.name === state.selectedForm) ?? forms[0];
  return selectForm({ ...state, forms }, selected ? selected.name : "");
}

export function selectForm(state: ComposerState, name: string): ComposerState {
  const form = state.forms.find((f) => f.name === name);
  const count = form ? form.point_count : 0;
  const baseLines = Array.from({ length: count }, (_, i) => state.baseLines[i] ?? "");
  return { ...state, selectedForm: name, baseLines, lastReport: null };
}

export function setBaseLine(state: ComposerState, index: number, text: string): ComposerState {
  const baseLines = state.baseLines.slice();
  baseLines[index] = text;
  return { ...state, baseLines };
}

export function allSlotsFilled(state: ComposerState): boolean {
  return state.baseLines.length > 0 && state.baseLines.every((s) => s.trim() !== "");
}

export function selectedFormInfo(state: ComposerState): FormInfo | undefined {
  return state.forms.find((f) => f.name === state.selectedForm);
}
