// The composer widget: form picker, one base-line input per point id, a
// live scaffold preview, and an on-demand validation panel. All structural
// verdicts come from the HTTP service; the widget only renders them.

import { ApiClient, ApiError } from "./api.js";
import type { ScaffoldResponse, ValidationReport } from "./api.js";
import { colorForPoint } from "./colors.js";
import { debounce, latestOnly } from "./debounce.js";
import { highlightPoints, renderFanoDiagram } from "./fano.js";
import {
  ComposerState,
  allSlotsFilled,
  initialState,
  selectForm,
  selectedFormInfo,
  setBaseLine,
  withForms,
} from "./state.js";

const SCAFFOLD_DEBOUNCE_MS = 300;

export class Composer {
  state: ComposerState = initialState();
  private lastScaffold: ScaffoldResponse | null = null;
  private readonly scaffoldLatest: (
    form: string,
    lines: string[],
  ) => Promise<ScaffoldResponse | null>;
  private readonly scheduleScaffold: () => void;

  private readonly formSelect: HTMLSelectElement;
  private readonly slotsDiv: HTMLDivElement;
  private readonly previewDiv: HTMLDivElement;
  private readonly fanoDiv: HTMLDivElement;
  private readonly draftArea: HTMLTextAreaElement;
  private readonly resetDraftButton: HTMLButtonElement;
  private readonly modeSelect: HTMLSelectElement;
  private readonly thresholdInput: HTMLInputElement;
  private readonly validateButton: HTMLButtonElement;
  private readonly reportDiv: HTMLDivElement;
  private readonly errorBanner: HTMLDivElement;

  constructor(root: HTMLElement, private readonly client: ApiClient) {
    this.scaffoldLatest = latestOnly((form: string, lines: string[]) =>
      this.client.scaffold(form, lines),
    );
    this.scheduleScaffold = debounce(() => {
      void this.runScaffold();
    }, SCAFFOLD_DEBOUNCE_MS);

    root.innerHTML = `
      <div class="error-banner" hidden></div>
      <div class="composer-grid">
        <section class="panel">
          <h2>Form</h2>
          <select class="form-select"></select>
          <h2>Base lines</h2>
          <div class="slots"></div>
        </section>
        <section class="panel">
          <h2>Scaffold</h2>
          <div class="preview"></div>
          <div class="fano"></div>
        </section>
        <section class="panel">
          <h2>Draft</h2>
          <textarea class="draft-area" rows="12"
            placeholder="Scaffold output lands here; edit freely or paste a poem."></textarea>
          <button class="reset-draft-button">Reset to scaffold</button>
          <h2>Validation</h2>
          <label>Mode
            <select class="mode-select">
              <option value="fuzzy">fuzzy</option>
              <option value="normalized">normalized</option>
              <option value="exact">exact</option>
            </select>
          </label>
          <label>Threshold
            <input class="threshold-input" type="number" min="0" max="1" step="0.05" value="0.6" />
          </label>
          <button class="validate-button">Validate</button>
          <div class="report"></div>
        </section>
      </div>`;
    this.errorBanner = root.querySelector(".error-banner")!;
    this.formSelect = root.querySelector(".form-select")!;
    this.slotsDiv = root.querySelector(".slots")!;
    this.previewDiv = root.querySelector(".preview")!;
    this.fanoDiv = root.querySelector(".fano")!;
    this.draftArea = root.querySelector(".draft-area")!;
    this.resetDraftButton = root.querySelector(".reset-draft-button")!;
    this.modeSelect = root.querySelector(".mode-select")!;
    this.thresholdInput = root.querySelector(".threshold-input")!;
    this.validateButton = root.querySelector(".validate-button")!;
    this.reportDiv = root.querySelector(".report")!;

    this.formSelect.addEventListener("change", () => {
      this.state = selectForm(this.state, this.formSelect.value);
      this.lastScaffold = null;
      this.renderSlots();
      this.renderPreview();
      this.renderReport(null);
      this.scheduleScaffold();
    });
    this.draftArea.addEventListener("input", () => {
      this.state = { ...this.state, poemDraft: this.draftArea.value, freeEdit: true };
    });
    this.resetDraftButton.addEventListener("click", () => {
      this.state = { ...this.state, freeEdit: false };
      this.syncDraftFromScaffold();
    });
    this.validateButton.addEventListener("click", () => {
      void this.runValidate();
    });
  }

  /** Fetch the form list and draw the initial widget. */
  async start(): Promise<void> {
    try {
      const { forms } = await this.client.listForms();
      this.state = withForms(this.state, forms);
      this.setError(null);
    } catch (err) {
      this.setError(describeError(err));
    }
    this.formSelect.replaceChildren(
      ...this.state.forms.map((f) => {
        const opt = document.createElement("option");
        opt.value = f.name;
        opt.textContent = `${f.name} (${f.stanza_shape})`;
        return opt;
      }),
    );
    this.formSelect.value = this.state.selectedForm;
    this.renderSlots();
    this.renderPreview();
  }

  private renderSlots(): void {
    const rows = this.state.baseLines.map((text, pid) => {
      const row = document.createElement("div");
      row.className = "slot-row";
      const label = document.createElement("span");
      label.className = "slot-label";
      label.textContent = String(pid);
      label.style.background = colorForPoint(pid);
      const input = document.createElement("input");
      input.type = "text";
      input.value = text;
      input.dataset.point = String(pid);
      input.placeholder = `base line for point ${pid}`;
      input.addEventListener("input", () => {
        this.state = setBaseLine(this.state, pid, input.value);
        this.scheduleScaffold();
      });
      const err = document.createElement("span");
      err.className = "slot-error";
      row.append(label, input, err);
      return row;
    });
    this.slotsDiv.replaceChildren(...rows);
  }

  private markEmptySlots(): void {
    this.slotsDiv.querySelectorAll<HTMLInputElement>("input").forEach((input) => {
      const err = input.parentElement!.querySelector(".slot-error")!;
      err.textContent = input.value.trim() === "" ? "required" : "";
    });
  }

  private clearSlotErrors(): void {
    this.slotsDiv.querySelectorAll(".slot-error").forEach((e) => {
      e.textContent = "";
    });
  }

  private syncDraftFromScaffold(): void {
    if (!this.state.freeEdit && this.lastScaffold !== null) {
      this.draftArea.value = this.lastScaffold.poem;
      this.state = { ...this.state, poemDraft: this.lastScaffold.poem };
    }
  }

  private async runScaffold(): Promise<void> {
    if (!allSlotsFilled(this.state)) {
      // inline errors only; the poem pane keeps its last good render
      this.markEmptySlots();
      return;
    }
    this.clearSlotErrors();
    try {
      const resp = await this.scaffoldLatest(
        this.state.selectedForm,
        this.state.baseLines,
      );
      if (resp === null) return; // a newer request superseded this one
      this.lastScaffold = resp;
      this.setError(null);
      this.renderPreview();
      this.syncDraftFromScaffold();
    } catch (err) {
      if (err instanceof ApiError && err.code === "bad_base_lines") {
        this.markEmptySlots();
      } else {
        this.setError(describeError(err));
      }
    }
  }

  private renderPreview(): void {
    if (this.lastScaffold === null) {
      this.previewDiv.textContent = allSlotsFilled(this.state)
        ? ""
        : "Fill every base line to see the scaffold.";
      this.fanoDiv.replaceChildren();
      return;
    }
    const owner = slotOwners(this.lastScaffold);
    const stanzas = this.lastScaffold.poem.split(/\n\s*\n/);
    const blocks = stanzas.map((stanza, si) => {
      const block = document.createElement("div");
      block.className = "stanza";
      block.dataset.stanza = String(si);
      stanza.split("\n").forEach((line, j) => {
        const p = document.createElement("p");
        p.className = "poem-line";
        p.textContent = line;
        const pid = owner.get(`${si},${j}`);
        if (pid !== undefined) p.style.color = colorForPoint(pid);
        block.appendChild(p);
      });
      block.addEventListener("mouseenter", () => {
        const pids = stanza
          .split("\n")
          .map((_, j) => owner.get(`${si},${j}`))
          .filter((pid): pid is number => pid !== undefined);
        highlightPoints(this.fanoDiv, pids);
      });
      block.addEventListener("mouseleave", () => highlightPoints(this.fanoDiv, []));
      return block;
    });
    this.previewDiv.replaceChildren(...blocks);
    const info = selectedFormInfo(this.state);
    if (info && info.point_count === 7) {
      renderFanoDiagram(this.fanoDiv);
    } else {
      this.fanoDiv.replaceChildren();
    }
  }

  private async runValidate(): Promise<void> {
    const poem = this.draftArea.value;
    if (poem.trim() === "") {
      this.renderReport(null);
      return;
    }
    const threshold = Number(this.thresholdInput.value);
    try {
      const report = await this.client.validate(
        this.state.selectedForm,
        poem,
        this.modeSelect.value,
        Number.isFinite(threshold) ? threshold : undefined,
      );
      this.state = { ...this.state, lastReport: report };
      this.setError(null);
      this.renderReport(report);
    } catch (err) {
      this.setError(describeError(err));
    }
  }

  private renderReport(report: ValidationReport | null): void {
    if (report === null) {
      this.reportDiv.replaceChildren();
      return;
    }
    const verdict = document.createElement("p");
    verdict.className = report.overall_ok ? "verdict-pass" : "verdict-fail";
    verdict.textContent = report.overall_ok ? "PASS" : "FAIL";
    const list = document.createElement("ul");
    list.className = "class-list";
    for (const [pid, cls] of Object.entries(report.classes)) {
      const item = document.createElement("li");
      item.className = cls.ok ? "class-pass" : "class-fail";
      const tag = document.createElement("span");
      tag.className = "slot-label";
      tag.textContent = pid;
      tag.style.background = colorForPoint(Number(pid));
      item.append(
        tag,
        ` min similarity ${cls.min_pairwise_similarity.toFixed(6)} — ${
          cls.ok ? "ok" : "violated"
        }`,
      );
      list.appendChild(item);
    }
    const children: HTMLElement[] = [verdict, list];
    if (report.violations.length > 0) {
      const viol = document.createElement("ul");
      viol.className = "violation-list";
      for (const [a, b, sim] of report.violations) {
        const item = document.createElement("li");
        item.textContent = `stanza ${a[0] + 1} line ${a[1] + 1} vs stanza ${
          b[0] + 1
        } line ${b[1] + 1}: similarity ${sim.toFixed(6)}`;
        viol.appendChild(item);
      }
      children.push(viol);
    }
    this.reportDiv.replaceChildren(...children);
  }

  private setError(message: string | null): void {
    this.state = { ...this.state, error: message };
    this.errorBanner.hidden = message === null;
    this.errorBanner.textContent = message ?? "";
  }
}

/** Map "stanza,position" slot keys to the point id that owns them. */
export function slotOwners(resp: ScaffoldResponse): Map<string, number> {
  const owner = new Map<string, number>();
  resp.classes.forEach((slots, pid) => {
    for (const [si, j] of slots) owner.set(`${si},${j}`, pid);
  });
  return owner;
}

function describeError(err: unknown): string {
  if (err instanceof ApiError) {
    return err.status === 0
      ? "Service unreachable — your draft is preserved; retry when the server is back."
      : `${err.code}: ${err.message}`;
  }
  return String(err);
}
