/** The passive weak-save dialog.
 *
 * Shown only when a submit comes back weak_needs_confirmation.  Two ways
 * out: "Improve my answer" returns focus to the field, "Keep it anyway"
 * confirms the weak answer.  Clicking the backdrop counts as improve.
 */

import { SuggestionView } from "./api.js";

export interface WeakDialogCallbacks {
  onKeep: () => void;
  onImprove: () => void;
}

export class WeakSaveDialog {
  private backdrop: HTMLElement;
  private open = false;

  constructor(private readonly root: HTMLElement) {
    const doc = root.ownerDocument;
    this.backdrop = doc.createElement("div");
    this.backdrop.className = "dialog-backdrop";
    this.backdrop.hidden = true;
    this.backdrop.innerHTML = `
      <div class="dialog" role="dialog" aria-modal="true">
        <h3>That answer would be easy to guess</h3>
        <p class="dialog-intro">No pressure, it is your call. But here is the kind of
          answer that holds up, built from a memory only you have:</p>
        <p class="dialog-answer"></p>
        <p class="dialog-explanation"></p>
        <p class="dialog-coaching">Copy the pattern, not the words: abbreviate your own
          memory, keep a capital, a number and a symbol in it.</p>
        <div class="dialog-actions">
          <button type="button" class="improve">Improve my answer</button>
          <button type="button" class="keep">Keep it anyway</button>
        </div>
      </div>`;
    root.appendChild(this.backdrop);
  }

  isOpen(): boolean {
    return this.open;
  }

  show(suggestion: SuggestionView, callbacks: WeakDialogCallbacks): void {
    const answer = this.backdrop.querySelector(".dialog-answer") as HTMLElement;
    const explanation = this.backdrop.querySelector(".dialog-explanation") as HTMLElement;
    answer.textContent = suggestion.answer;
    explanation.textContent = suggestion.explanation;

    const keep = this.backdrop.querySelector("button.keep") as HTMLButtonElement;
    const improve = this.backdrop.querySelector("button.improve") as HTMLButtonElement;
    keep.onclick = () => {
      this.close();
      callbacks.onKeep();
    };
    improve.onclick = () => {
      this.close();
      callbacks.onImprove();
    };
    // dismissing by clicking outside the card equals "improve"
    this.backdrop.onclick = (event) => {
      if (event.target === this.backdrop) {
        this.close();
        callbacks.onImprove();
      }
    };
    this.backdrop.hidden = false;
    this.open = true;
  }

  close(): void {
    this.backdrop.hidden = true;
    this.open = false;
  }
}
