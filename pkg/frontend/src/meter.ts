/** Live strength meter: a colored bar plus the five-rule checklist.
 *
 * The meter renders server truth only: the color class and band label
 * always come from the latest /score response, in-flight requests are
 * cancel-superseded so a stale response never paints, and "unavailable"
 * replaces the band whenever the service cannot be reached.
 */

import { MeterApi, RuleFlags, ScoreResponse } from "./api.js";

export type MeterStatus = "idle" | "live" | "unavailable";

export interface MeterViewState {
  status: MeterStatus;
  score: number;
  band: string | null;
  color: string | null;
  fillFraction: number;
  rules: RuleFlags | null;
  common: string | null;
}

export const IDLE_METER: MeterViewState = {
  status: "idle",
  score: 0,
  band: null,
  color: null,
  fillFraction: 0,
  rules: null,
  common: null,
};

export const UNAVAILABLE_METER: MeterViewState = {
  ...IDLE_METER,
  status: "unavailable",
};

export function meterStateFrom(response: ScoreResponse): MeterViewState {
  return {
    status: "live",
    score: response.score,
    band: response.band,
    color: response.color,
    fillFraction: response.score / 5,
    rules: response.rules,
    common: response.common,
  };
}

export const RULE_LABELS: [keyof RuleFlags, string][] = [
  ["has_capital", "At least one capital letter"],
  ["has_digit", "At least one digit"],
  ["has_special", "At least one special character"],
  ["has_letter", "At least one letter"],
  ["long_enough", "At least eight characters"],
];

const BAND_CLASSES = ["band-weak", "band-medium", "band-strong", "band-none"];

function ensureStructure(container: HTMLElement): void {
  if (container.querySelector(".meter-fill")) return;
  const doc = container.ownerDocument;
  const bar = doc.createElement("div");
  bar.className = "meter-bar";
  const fill = doc.createElement("div");
  fill.className = "meter-fill band-none";
  bar.appendChild(fill);
  const label = doc.createElement("p");
  label.className = "meter-label";
  const list = doc.createElement("ul");
  list.className = "rule-list";
  for (const [key, text] of RULE_LABELS) {
    const item = doc.createElement("li");
    item.dataset.rule = key;
    item.textContent = text;
    list.appendChild(item);
  }
  const commonNote = doc.createElement("p");
  commonNote.className = "common-note";
  commonNote.hidden = true;
  container.append(bar, label, list, commonNote);
}

export function renderMeter(container: HTMLElement, state: MeterViewState): void {
  ensureStructure(container);
  const fill = container.querySelector(".meter-fill") as HTMLElement;
  const label = container.querySelector(".meter-label") as HTMLElement;
  const commonNote = container.querySelector(".common-note") as HTMLElement;

  fill.classList.remove(...BAND_CLASSES);
  fill.classList.add(state.band ? `band-${state.band}` : "band-none");
  fill.style.width = `${Math.round(state.fillFraction * 100)}%`;

  if (state.status === "unavailable") {
    label.textContent = "strength check unavailable";
  } else if (state.status === "idle") {
    label.textContent = "";
  } else {
    label.textContent = `${state.score}/5 ${state.band}`;
  }

  for (const item of Array.from(container.querySelectorAll<HTMLElement>("[data-rule]"))) {
    const key = item.dataset.rule as keyof RuleFlags;
    item.classList.toggle("satisfied", state.rules ? state.rules[key] : false);
  }

  if (state.common) {
    commonNote.hidden = false;
    commonNote.textContent =
      `"${state.common}" wordlist match: this answer is easy for others to guess, ` +
      "so it will count as weak.";
  } else {
    commonNote.hidden = true;
    commonNote.textContent = "";
  }
}

/** Debounced keystroke -> /score -> render pipeline for one input field. */
export class MeterController {
  private sequence = 0;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private inFlight: AbortController | null = null;
  lastState: MeterViewState = IDLE_METER;

  constructor(
    private readonly api: MeterApi,
    private readonly container: HTMLElement,
    private readonly debounceMs = 120,
  ) {
    renderMeter(container, IDLE_METER);
  }

  attach(input: HTMLInputElement): void {
    input.addEventListener("input", () => this.schedule(input.value));
  }

  schedule(draft: string): void {
    if (this.timer) clearTimeout(this.timer);
    this.timer = setTimeout(() => void this.update(draft), this.debounceMs);
  }

  /** Score a draft now; only the newest response is allowed to paint. */
  async update(draft: string): Promise<void> {
    const ticket = ++this.sequence;
    this.inFlight?.abort();
    this.inFlight = new AbortController();
    let state: MeterViewState;
    try {
      state = meterStateFrom(await this.api.score(draft, this.inFlight.signal));
    } catch (error) {
      if ((error as Error).name === "AbortError") return;
      state = UNAVAILABLE_METER;
    }
    if (ticket !== this.sequence) return; // superseded by a newer draft
    this.lastState = state;
    renderMeter(this.container, state);
  }
}
