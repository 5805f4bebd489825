import assert from "node:assert/strict";
import { test } from "node:test";

import type { ScoreResponse } from "../src/api.js";
import {
  IDLE_METER,
  UNAVAILABLE_METER,
  meterStateFrom,
  renderMeter,
} from "../src/meter.js";
import { dom } from "./helpers.js";

function response(partial: Partial<ScoreResponse>): ScoreResponse {
  return {
    rules: {
      has_capital: false,
      has_digit: false,
      has_special: false,
      has_letter: false,
      long_enough: false,
    },
    score: 0,
    band: "weak",
    color: "red",
    common: null,
    ...partial,
  };
}

test("meter state mirrors the score response", () => {
  const state = meterStateFrom(response({ score: 4, band: "medium", color: "orange" }));
  assert.equal(state.status, "live");
  assert.equal(state.fillFraction, 4 / 5);
  assert.equal(state.band, "medium");
});

test("render applies the band color class and fill width", () => {
  const { container } = dom();
  for (const [band, score] of [
    ["weak", 1],
    ["medium", 3],
    ["strong", 5],
  ] as const) {
    renderMeter(container, meterStateFrom(response({ band, score })));
    const fill = container.querySelector(".meter-fill") as HTMLElement;
    assert.ok(fill.classList.contains(`band-${band}`), `expected band-${band}`);
    assert.equal(fill.style.width, `${Math.round((score / 5) * 100)}%`);
  }
});

test("rule checklist ticks exactly the satisfied rules", () => {
  const { container } = dom();
  renderMeter(
    container,
    meterStateFrom(
      response({
        rules: {
          has_capital: true,
          has_digit: false,
          has_special: true,
          has_letter: true,
          long_enough: false,
        },
        score: 3,
        band: "medium",
        color: "orange",
      }),
    ),
  );
  const satisfied = Array.from(container.querySelectorAll("li.satisfied")).map(
    (li) => (li as HTMLElement).dataset.rule,
  );
  assert.deepEqual(satisfied, ["has_capital", "has_special", "has_letter"]);
});

test("unavailable state never shows a stale band", () => {
  const { container } = dom();
  renderMeter(container, meterStateFrom(response({ band: "strong", score: 5 })));
  renderMeter(container, UNAVAILABLE_METER);
  const fill = container.querySelector(".meter-fill") as HTMLElement;
  assert.ok(fill.classList.contains("band-none"));
  assert.ok(!fill.classList.contains("band-strong"));
  const label = container.querySelector(".meter-label") as HTMLElement;
  assert.match(label.textContent ?? "", /unavailable/);
});

test("common-answer hit renders its category note", () => {
  const { container } = dom();
  renderMeter(container, meterStateFrom(response({ common: "sport" })));
  const note = container.querySelector(".common-note") as HTMLElement;
  assert.equal(note.hidden, false);
  assert.match(note.textContent ?? "", /sport/);
  renderMeter(container, IDLE_METER);
  assert.equal(note.hidden, true);
});
