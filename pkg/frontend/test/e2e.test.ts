/** End-to-end checks against the real backing service. */

import assert from "node:assert/strict";
import { after, before, test } from "node:test";

import { MeterApi } from "../src/api.js";
import { MeterController } from "../src/meter.js";
import { RecoveryPage, SetupWizard } from "../src/wizard.js";
import { dom, startService, type RunningService } from "./helpers.js";

const PORT = 18731;
let service: RunningService;

before(async () => {
  service = await startService(PORT);
});

after(() => {
  service.stop();
});

// Twenty drafts across all bands, wordlist hits and non-ASCII text.
const SCRIPTED_INPUTS = [
  "",
  "a",
  "cricket",
  "blue",
  "james",
  "1234567",
  "!!!???",
  "        ",
  "Cricket",
  "Aus15@",
  "Cricket1",
  "abcd1234",
  "  CRICKET  ",
  "Café1990",
  "CrickICC15@Aus.",
  "TurqBIKE09#Rom!",
  "Zx9@LongOne!",
  "ΑθήναOLY04@GR!",
  "MatrDAD99@Hom.",
  "pass word 1 A!",
];

test("meter color class matches the service band on 20 scripted inputs", async () => {
  const { container } = dom();
  const api = new MeterApi(service.baseUrl);
  const meterRoot = container.ownerDocument.createElement("div");
  container.appendChild(meterRoot);
  const controller = new MeterController(api, meterRoot);

  let mismatches = 0;
  for (const draft of SCRIPTED_INPUTS) {
    await controller.update(draft);
    const truth = await api.score(draft);
    const fill = meterRoot.querySelector(".meter-fill") as HTMLElement;
    if (!fill.classList.contains(`band-${truth.band}`)) mismatches += 1;
    const label = meterRoot.querySelector(".meter-label") as HTMLElement;
    assert.match(label.textContent ?? "", new RegExp(`${truth.score}/5`));
  }
  assert.equal(mismatches, 0);
});

test("dialog appears iff a save returns weak_needs_confirmation", async () => {
  const { window, container } = dom();
  const setupRoot = window.document.getElementById("setup") as HTMLElement;
  const api = new MeterApi(service.baseUrl);
  const wizard = new SetupWizard(api, setupRoot);
  await wizard.start();

  await wizard.selectQuestion(1, "q-sport");
  await wizard.selectQuestion(2, "q-color");
  await wizard.selectQuestion(3, "q-movie");

  // weak save -> dialog opens
  wizard.slotElements(1).answerInput.value = "cricket";
  const weak = await wizard.saveAnswer(1);
  assert.equal(weak?.status, "weak_needs_confirmation");
  assert.ok(wizard.dialog.isOpen(), "dialog must open on a weak save");
  (setupRoot.querySelector("button.keep") as HTMLButtonElement).click();
  await new Promise((resolve) => setTimeout(resolve, 50));
  assert.ok(!wizard.dialog.isOpen());
  assert.equal(wizard.slotView(1)?.weak_override, true);

  // medium save -> no dialog
  wizard.slotElements(2).answerInput.value = "Aus15@";
  const medium = await wizard.saveAnswer(2);
  assert.equal(medium?.status, "accepted");
  assert.ok(!wizard.dialog.isOpen(), "dialog must not open on a medium save");

  // strong save -> no dialog
  wizard.slotElements(3).answerInput.value = "MatrDAD99@Hom.";
  const strong = await wizard.saveAnswer(3);
  assert.equal(strong?.status, "accepted");
  assert.ok(!wizard.dialog.isOpen(), "dialog must not open on a strong save");
});

test("full setup, finalize and recovery flow stays clean", async () => {
  const { window } = dom();
  const setupRoot = window.document.getElementById("setup") as HTMLElement;
  const api = new MeterApi(service.baseUrl);
  const wizard = new SetupWizard(api, setupRoot);
  await wizard.start();

  await wizard.selectQuestion(1, "q-sport");
  // chosen questions disappear from the other dropdowns
  const slot2options = Array.from(
    (wizard.slotElements(2).questionControl as HTMLSelectElement).options,
  ).map((o) => o.value);
  assert.ok(!slot2options.includes("q-sport"));

  await wizard.selectQuestion(2, "q-color");
  await wizard.selectQuestion(3, "q-movie");
  await wizard.setCustomQuestion(4, "Which alley did I bike down daily?");
  await wizard.setCustomQuestion(5, "First coach's nickname?");

  // duplicate custom question surfaces an inline error
  await wizard.setCustomQuestion(5, "Which alley did I bike down daily?");
  const error = wizard.slotElements(5).questionError;
  assert.equal(error.hidden, false);
  await wizard.setCustomQuestion(5, "First coach's nickname?");

  const answers: Record<number, string> = {
    1: "cricket",
    2: "TurqBIKE09#Rom!",
    3: "MatrDAD99@Hom.",
    4: "Mapl03!Lane?!.",
    5: "Gruff77$Coach!",
  };
  wizard.slotElements(1).answerInput.value = answers[1]!;
  await wizard.saveAnswer(1);
  await wizard.keepWeak(1);
  assert.ok(wizard.finalizeButtonDisabled(), "finalize must stay disabled at 1/5");
  for (const slot of [2, 3, 4, 5]) {
    wizard.slotElements(slot).answerInput.value = answers[slot]!;
    await wizard.saveAnswer(slot);
  }
  assert.ok(!wizard.finalizeButtonDisabled(), "finalize must enable at 5/5");

  await wizard.finalize();
  assert.ok(wizard.profileId, "finalize must yield a profile id");
  const review = setupRoot.querySelector(".review") as HTMLElement;
  for (const answer of Object.values(answers)) {
    assert.ok(!review.textContent?.includes(answer), "review must not echo answers");
  }

  // no plaintext answers in browser storage after finalize
  assert.equal(window.localStorage.length, 0);
  assert.equal(window.sessionStorage.length, 0);

  // recovery: threshold (3 of 5) grants, and shows only granted/denied
  const recoveryRoot = window.document.getElementById("recovery") as HTMLElement;
  const recovery = new RecoveryPage(new MeterApi(service.baseUrl), recoveryRoot);
  recovery.render();
  const granted = await recovery.submit(wizard.profileId!, [
    answers[1]!,
    answers[2]!,
    answers[3]!,
    null,
    null,
  ]);
  assert.equal(granted, true);
  const verdict = recoveryRoot.querySelector(".verdict") as HTMLElement;
  assert.equal(verdict.textContent, "granted");

  const denied = await recovery.submit(wizard.profileId!, [
    answers[1]!.toUpperCase(),
    answers[2]!,
    null,
    null,
    null,
  ]);
  assert.equal(denied, false);
  assert.equal(verdict.textContent, "denied");

  // the recovery page never renders a meter
  assert.equal(recoveryRoot.querySelector(".meter-fill"), null);
});
