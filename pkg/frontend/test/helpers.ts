/** Shared test plumbing: a jsdom window and a real backing service. */

import { spawn, type ChildProcess } from "node:child_process";
import { JSDOM } from "jsdom";

export function dom(): { window: Window & typeof globalThis; container: HTMLElement } {
  const jsdom = new JSDOM('<main id="app"><div id="setup"></div><div id="recovery"></div></main>', {
    url: "http://localhost/",
  });
  const window = jsdom.window as unknown as Window & typeof globalThis;
  return { window, container: window.document.getElementById("app") as HTMLElement };
}

export interface RunningService {
  baseUrl: string;
  stop: () => void;
}

export async function startService(port: number): Promise<RunningService> {
  const proc: ChildProcess = spawn(
    "python3",
    ["-m", "answermeter.cli", "serve", "--host", "127.0.0.1", "--port", String(port)],
    { stdio: "ignore" },
  );
  const baseUrl = `http://127.0.0.1:${port}`;
  for (let attempt = 0; attempt < 100; attempt++) {
    try {
      const response = await fetch(`${baseUrl}/questions`);
      if (response.ok) {
        return { baseUrl, stop: () => proc.kill() };
      }
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 100));
  }
  proc.kill();
  throw new Error(`service did not come up on port ${port}`);
}
