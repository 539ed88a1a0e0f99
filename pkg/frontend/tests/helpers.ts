import { readFileSync } from "node:fs";
import { join } from "node:path";

import type { StatePayload } from "../src/types.js";

export interface FixtureEntry {
  method: string;
  path: string;
  body: unknown;
  status: number;
  kind: "json" | "text";
  response: unknown;
}

export function loadFixture(name: string): FixtureEntry[] {
  // import.meta.url is rewritten by the DOM environment, so resolve
  // from the package root that vitest runs in.
  const path = join(process.cwd(), "tests", "fixtures", name);
  return JSON.parse(readFileSync(path, "utf8")) as FixtureEntry[];
}

export function payloadAt(entries: FixtureEntry[], index: number): StatePayload {
  const entry = entries[index];
  if (entry.kind !== "json") {
    throw new Error(`fixture step ${index} is ${entry.kind}, not json`);
  }
  return entry.response as StatePayload;
}

/** Replays recorded traffic, failing fast on any out-of-script request. */
export class ScriptedFetch {
  readonly calls: Array<{ method: string; path: string }> = [];
  private cursor = 0;

  constructor(private readonly entries: FixtureEntry[]) {}

  get remaining(): number {
    return this.entries.length - this.cursor;
  }

  fetch = async (path: string, init?: RequestInit): Promise<Response> => {
    const method = init?.method ?? "GET";
    const entry = this.entries[this.cursor];
    if (!entry) {
      throw new Error(`unexpected request past end of script: ${method} ${path}`);
    }
    if (entry.method !== method || entry.path !== path) {
      throw new Error(
        `expected ${entry.method} ${entry.path}, got ${method} ${path}`,
      );
    }
    this.cursor += 1;
    this.calls.push({ method, path });
    const text =
      entry.kind === "json"
        ? JSON.stringify(entry.response)
        : String(entry.response);
    const type =
      entry.kind === "json" ? "application/json" : "text/plain; charset=utf-8";
    return new Response(text, {
      status: entry.status,
      headers: { "content-type": type },
    });
  };
}

/** Lets queued fetches and re-renders settle. */
export async function flush(): Promise<void> {
  for (let i = 0; i < 10; i += 1) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}

export function makeRoot(): HTMLElement {
  const root = document.createElement("div");
  document.body.appendChild(root);
  return root;
}

export function nodeRect(root: HTMLElement, id: string): Element {
  const group = root.querySelector(`[data-node-id="${id}"]`);
  if (!group) {
    throw new Error(`node ${id} not rendered`);
  }
  const rect = group.querySelector("rect");
  if (!rect) {
    throw new Error(`node ${id} has no rect`);
  }
  return rect;
}

export function click(element: Element): void {
  element.dispatchEvent(new MouseEvent("click", { bubbles: true }));
}
