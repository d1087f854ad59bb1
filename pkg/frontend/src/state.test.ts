import { describe, expect, it } from "vitest";

import type { FormInfo } from "./api.js";
import {
  allSlotsFilled,
  initialState,
  selectForm,
  selectedFormInfo,
  setBaseLine,
  withForms,
} from "./state.js";

const FORMS: FormInfo[] = [
  { name: "fano-paper", point_count: 7, stanza_shape: "7x3" },
  { name: "plane13", point_count: 13, stanza_shape: "13x4" },
];

describe("withForms", () => {
  it("selects the first form by default and sizes the slots", () => {
    const s = withForms(initialState(), FORMS);
    expect(s.selectedForm).toBe("fano-paper");
    expect(s.baseLines).toHaveLength(7);
    expect(s.baseLines.every((l) => l === "")).toBe(true);
  });

  it("keeps an existing selection when it is still offered", () => {
    let s = withForms(initialState(), FORMS);
    s = selectForm(s, "plane13");
    s = withForms(s, FORMS);
    expect(s.selectedForm).toBe("plane13");
    expect(s.baseLines).toHaveLength(13);
  });
});

describe("selectForm", () => {
  it("preserves typed lines that fit the new form", () => {
    let s = withForms(initialState(), FORMS);
    s = setBaseLine(s, 0, "the bird");
    s = setBaseLine(s, 6, "the stone");
    s = selectForm(s, "plane13");
    expect(s.baseLines).toHaveLength(13);
    expect(s.baseLines[0]).toBe("the bird");
    expect(s.baseLines[6]).toBe("the stone");
    expect(s.baseLines[12]).toBe("");
  });

  it("truncates lines beyond the new point count", () => {
    let s = withForms(initialState(), FORMS);
    s = selectForm(s, "plane13");
    s = setBaseLine(s, 12, "overflow");
    s = selectForm(s, "fano-paper");
    expect(s.baseLines).toHaveLength(7);
  });

  it("clears any stale validation report", () => {
    let s = withForms(initialState(), FORMS);
    s = {
      ...s,
      lastReport: {
        shape_ok: true,
        mode: "exact",
        threshold: 1,
        classes: {},
        violations: [],
        overall_ok: true,
      },
    };
    s = selectForm(s, "plane13");
    expect(s.lastReport).toBeNull();
  });
});

describe("allSlotsFilled", () => {
  it("is false initially, false with blanks, true when complete", () => {
    let s = withForms(initialState(), FORMS);
    expect(allSlotsFilled(s)).toBe(false);
    for (let i = 0; i < 7; i++) s = setBaseLine(s, i, `line ${i}`);
    expect(allSlotsFilled(s)).toBe(true);
    s = setBaseLine(s, 3, "   ");
    expect(allSlotsFilled(s)).toBe(false);
  });

  it("is false when no form is selected", () => {
    expect(allSlotsFilled(initialState())).toBe(false);
  });
});

describe("selectedFormInfo", () => {
  it("returns the record for the current selection", () => {
    const s = withForms(initialState(), FORMS);
    expect(selectedFormInfo(s)?.point_count).toBe(7);
  });
});
