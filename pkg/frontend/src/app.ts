/** Page bootstrap: wire the wizard and recovery page into the document. */

import { MeterApi } from "./api.js";
import { RecoveryPage, SetupWizard } from "./wizard.js";

const DEFAULT_API = "http://127.0.0.1:8000";

function apiBase(): string {
  const override = new URLSearchParams(window.location.search).get("api");
  return override ?? DEFAULT_API;
}

export async function boot(root: HTMLElement): Promise<void> {
  const api = new MeterApi(apiBase());
  const setupRoot = root.querySelector<HTMLElement>("#setup");
  const recoveryRoot = root.querySelector<HTMLElement>("#recovery");
  if (setupRoot) {
    const wizard = new SetupWizard(api, setupRoot);
    try {
      await wizard.start();
    } catch {
      setupRoot.textContent =
        "The answer service is not reachable. Start it and reload this page.";
    }
  }
  if (recoveryRoot) {
    new RecoveryPage(api, recoveryRoot).render();
  }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  void boot(document.getElementById("app") as HTMLElement);
}
