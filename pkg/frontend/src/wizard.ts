/** Five-slot setup wizard and the recovery page.
 *
 * Slots 1-3 are dropdowns over the question catalog (already-chosen
 * questions disappear from the other dropdowns), slots 4-5 are free-text
 * questions with inline duplicate errors.  Finalize stays disabled until
 * every slot is saved.  The recovery page shows granted/denied and
 * nothing else; no meter is rendered there.
 */

import {
  ApiError,
  MeterApi,
  QuestionInfo,
  SlotView,
  SubmitResponse,
} from "./api.js";
import { WeakSaveDialog } from "./dialog.js";
import { MeterController } from "./meter.js";

export function availableQuestions(
  all: QuestionInfo[],
  chosenByOthers: (string | null)[],
): QuestionInfo[] {
  const taken = new Set(chosenByOthers.filter((id): id is string => id !== null));
  return all.filter((q) => !taken.has(q.id));
}

interface SlotElements {
  section: HTMLElement;
  questionControl: HTMLSelectElement | HTMLInputElement;
  questionError: HTMLElement;
  answerInput: HTMLInputElement;
  saveButton: HTMLButtonElement;
  badge: HTMLElement;
  meter: MeterController;
}

export class SetupWizard {
  readonly dialog: WeakSaveDialog;
  private sessionId = "";
  private questions: QuestionInfo[] = [];
  private slots = new Map<number, SlotElements>();
  private slotViews = new Map<number, SlotView>();
  private finalizeButton!: HTMLButtonElement;
  private finalizeHint!: HTMLElement;
  private reviewList!: HTMLElement;
  profileId: string | null = null;

  constructor(
    private readonly api: MeterApi,
    private readonly root: HTMLElement,
  ) {
    this.dialog = new WeakSaveDialog(root);
  }

  private doc(): Document {
    return this.root.ownerDocument;
  }

  async start(): Promise<void> {
    this.questions = await this.api.questions();
    const created = await this.api.createSession();
    this.sessionId = created.session_id;
    for (const slot of created.slots) this.slotViews.set(slot.number, slot);
    this.buildDom();
    this.refreshDropdowns();
    this.refreshFinalize();
  }

  private buildDom(): void {
    const doc = this.doc();
    this.root.querySelector(".wizard")?.remove();
    const wizard = doc.createElement("div");
    wizard.className = "wizard";

    for (let number = 1; number <= 5; number++) {
      const kind = number <= 3 ? "predefined" : "custom";
      const section = doc.createElement("section");
      section.className = "slot";
      section.dataset.slot = String(number);

      const heading = doc.createElement("h2");
      heading.textContent =
        kind === "predefined"
          ? `Question ${number} - pick from the list`
          : `Question ${number} - write your own`;
      section.appendChild(heading);

      let questionControl: HTMLSelectElement | HTMLInputElement;
      if (kind === "predefined") {
        const select = doc.createElement("select");
        select.className = "question-select";
        select.addEventListener("change", () => {
          if (select.value) void this.selectQuestion(number, select.value);
        });
        questionControl = select;
      } else {
        const input = doc.createElement("input");
        input.type = "text";
        input.className = "question-text";
        input.placeholder = "A question only you can answer";
        input.addEventListener("change", () => {
          if (input.value.trim()) void this.setCustomQuestion(number, input.value);
        });
        questionControl = input;
      }
      section.appendChild(questionControl);

      const questionError = doc.createElement("p");
      questionError.className = "inline-error";
      questionError.hidden = true;
      section.appendChild(questionError);

      const answerInput = doc.createElement("input");
      answerInput.type = "text";
      answerInput.className = "answer-input";
      answerInput.placeholder = "Your answer";
      section.appendChild(answerInput);

      const meterContainer = doc.createElement("div");
      meterContainer.className = "meter";
      section.appendChild(meterContainer);
      const meter = new MeterController(this.api, meterContainer);
      meter.attach(answerInput);

      const saveButton = doc.createElement("button");
      saveButton.type = "button";
      saveButton.className = "save";
      saveButton.textContent = "Save answer";
      saveButton.addEventListener("click", () => void this.saveAnswer(number));
      section.appendChild(saveButton);

      const badge = doc.createElement("span");
      badge.className = "badge";
      section.appendChild(badge);

      wizard.appendChild(section);
      this.slots.set(number, {
        section,
        questionControl,
        questionError,
        answerInput,
        saveButton,
        badge,
        meter,
      });
    }

    this.finalizeButton = doc.createElement("button");
    this.finalizeButton.type = "button";
    this.finalizeButton.className = "finalize";
    this.finalizeButton.textContent = "Finalize my five answers";
    this.finalizeButton.addEventListener("click", () => void this.finalize());
    this.finalizeHint = doc.createElement("p");
    this.finalizeHint.className = "finalize-hint";
    this.reviewList = doc.createElement("div");
    this.reviewList.className = "review";
    wizard.append(this.finalizeButton, this.finalizeHint, this.reviewList);
    this.root.appendChild(wizard);
  }

  slotElements(number: number): SlotElements {
    const elements = this.slots.get(number);
    if (!elements) throw new Error(`slot ${number} not built`);
    return elements;
  }

  slotView(number: number): SlotView | undefined {
    return this.slotViews.get(number);
  }

  /** Dropdown options for slots 1-3, hiding questions other slots took. */
  refreshDropdowns(): void {
    const doc = this.doc();
    for (let number = 1; number <= 3; number++) {
      const { questionControl } = this.slotElements(number);
      const select = questionControl as HTMLSelectElement;
      const own = this.slotViews.get(number)?.question_id ?? null;
      const others = [1, 2, 3]
        .filter((n) => n !== number)
        .map((n) => this.slotViews.get(n)?.question_id ?? null);
      const options = availableQuestions(this.questions, others);
      select.textContent = "";
      const placeholder = doc.createElement("option");
      placeholder.value = "";
      placeholder.textContent = "Choose a question...";
      select.appendChild(placeholder);
      for (const q of options) {
        const option = doc.createElement("option");
        option.value = q.id;
        option.textContent = q.text;
        if (q.id === own) option.selected = true;
        select.appendChild(option);
      }
    }
  }

  private showInlineError(number: number, error: unknown): void {
    const { questionError } = this.slotElements(number);
    questionError.hidden = false;
    questionError.textContent =
      error instanceof ApiError ? error.message : "something went wrong, try again";
  }

  private clearInlineError(number: number): void {
    const { questionError } = this.slotElements(number);
    questionError.hidden = true;
    questionError.textContent = "";
  }

  async selectQuestion(number: number, questionId: string): Promise<void> {
    this.clearInlineError(number);
    try {
      const view = await this.api.setPredefined(this.sessionId, number, questionId);
      for (const slot of view.slots) this.slotViews.set(slot.number, slot);
    } catch (error) {
      this.showInlineError(number, error);
      return;
    }
    this.refreshDropdowns();
    this.refreshBadges();
    this.refreshFinalize();
  }

  async setCustomQuestion(number: number, text: string): Promise<void> {
    this.clearInlineError(number);
    try {
      const view = await this.api.setCustom(this.sessionId, number, text);
      for (const slot of view.slots) this.slotViews.set(slot.number, slot);
    } catch (error) {
      this.showInlineError(number, error);
      return;
    }
    this.refreshBadges();
    this.refreshFinalize();
  }

  /** Submit the slot's answer; open the dialog only on a weak outcome. */
  async saveAnswer(number: number): Promise<SubmitResponse | null> {
    const { answerInput } = this.slotElements(number);
    this.clearInlineError(number);
    let outcome: SubmitResponse;
    try {
      outcome = await this.api.submitAnswer(this.sessionId, number, answerInput.value);
    } catch (error) {
      this.showInlineError(number, error);
      return null;
    }
    this.slotViews.set(number, outcome.slot);
    this.refreshBadges();
    this.refreshFinalize();
    if (outcome.status === "weak_needs_confirmation" && outcome.suggestion) {
      this.dialog.show(outcome.suggestion, {
        onKeep: () => void this.keepWeak(number),
        onImprove: () => answerInput.focus(),
      });
    }
    return outcome;
  }

  async keepWeak(number: number): Promise<void> {
    const { answerInput } = this.slotElements(number);
    this.dialog.close();
    try {
      const body = await this.api.confirmWeak(this.sessionId, number, answerInput.value);
      this.slotViews.set(number, body.slot);
    } catch (error) {
      if (error instanceof ApiError && error.code === "conflict") {
        // the field changed since the dialog opened: re-submit the new text
        await this.saveAnswer(number);
        return;
      }
      this.showInlineError(number, error);
      return;
    }
    this.refreshBadges();
    this.refreshFinalize();
  }

  refreshBadges(): void {
    for (const [number, elements] of this.slots) {
      const view = this.slotViews.get(number);
      if (!view) continue;
      if (view.answer_state === "accepted") {
        elements.badge.textContent = view.weak_override ? "saved (weak)" : "saved";
        elements.badge.className = view.weak_override ? "badge weak" : "badge ok";
      } else if (view.answer_state === "pending_weak_confirmation") {
        elements.badge.textContent = "weak - confirm or improve";
        elements.badge.className = "badge pending";
      } else {
        elements.badge.textContent = "";
        elements.badge.className = "badge";
      }
    }
  }

  savedCount(): number {
    let count = 0;
    for (const view of this.slotViews.values()) {
      if (view.answer_state === "accepted") count++;
    }
    return count;
  }

  finalizeButtonDisabled(): boolean {
    return this.finalizeButton.disabled;
  }

  refreshFinalize(): void {
    const saved = this.savedCount();
    const ready = saved === 5;
    this.finalizeButton.disabled = !ready;
    this.finalizeHint.textContent = ready
      ? "All five saved. Review happens after finalize."
      : `Save all five answers to continue (${saved}/5).`;
  }

  async finalize(): Promise<void> {
    const doc = this.doc();
    let body;
    try {
      body = await this.api.finalize(this.sessionId);
    } catch (error) {
      this.finalizeHint.textContent =
        error instanceof ApiError ? error.message : "finalize failed";
      return;
    }
    this.profileId = body.profile_id;
    this.reviewList.textContent = "";
    const heading = doc.createElement("h2");
    heading.textContent = "Recovery profile created";
    const idLine = doc.createElement("p");
    idLine.textContent = `Profile id: ${body.profile_id}`;
    this.reviewList.append(heading, idLine);
    const list = doc.createElement("ul");
    for (const entry of body.entries) {
      const item = doc.createElement("li");
      item.textContent = entry.weak_override
        ? `${entry.question} - ${entry.band} (kept weak)`
        : `${entry.question} - ${entry.band}`;
      list.appendChild(item);
    }
    this.reviewList.appendChild(list);
    // answers are gone server-side; clear the fields client-side too
    for (const elements of this.slots.values()) {
      elements.answerInput.value = "";
      elements.answerInput.disabled = true;
      elements.saveButton.disabled = true;
    }
  }
}

/** Standalone recovery page: five answer fields, granted/denied, no meter. */
export class RecoveryPage {
  result: "granted" | "denied" | null = null;

  constructor(
    private readonly api: MeterApi,
    private readonly root: HTMLElement,
  ) {}

  render(questionLabels?: string[]): void {
    const doc = this.root.ownerDocument;
    this.root.querySelector(".recovery")?.remove();
    const page = doc.createElement("div");
    page.className = "recovery";
    const heading = doc.createElement("h2");
    heading.textContent = "Account recovery";
    page.appendChild(heading);
    const idInput = doc.createElement("input");
    idInput.type = "text";
    idInput.className = "profile-id";
    idInput.placeholder = "Profile id";
    page.appendChild(idInput);
    for (let i = 0; i < 5; i++) {
      const label = doc.createElement("label");
      label.textContent = questionLabels?.[i] ?? `Answer ${i + 1}`;
      const input = doc.createElement("input");
      input.type = "text";
      input.className = "recovery-answer";
      label.appendChild(input);
      page.appendChild(label);
    }
    const button = doc.createElement("button");
    button.type = "button";
    button.className = "recover";
    button.textContent = "Check my answers";
    button.addEventListener("click", () => void this.submit());
    page.appendChild(button);
    const verdict = doc.createElement("p");
    verdict.className = "verdict";
    page.appendChild(verdict);
    this.root.appendChild(page);
  }

  async submit(profileId?: string, answers?: (string | null)[]): Promise<boolean | null> {
    const page = this.root.querySelector(".recovery") as HTMLElement;
    const idInput = page.querySelector(".profile-id") as HTMLInputElement;
    const fields = Array.from(
      page.querySelectorAll<HTMLInputElement>(".recovery-answer"),
    );
    const id = profileId ?? idInput.value.trim();
    const attempts =
      answers ?? fields.map((f) => (f.value.trim() === "" ? null : f.value));
    const verdict = page.querySelector(".verdict") as HTMLElement;
    let granted: boolean;
    try {
      granted = await this.api.recover(id, attempts);
    } catch (error) {
      verdict.textContent =
        error instanceof ApiError && error.code === "not_found"
          ? "denied"
          : "recovery unavailable";
      this.result = error instanceof ApiError ? "denied" : null;
      return null;
    }
    this.result = granted ? "granted" : "denied";
    verdict.textContent = this.result;
    return granted;
  }
}
