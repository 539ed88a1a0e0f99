import { statusFill, statusTextColor } from "./colors.js";
import { buildLayout } from "./layout.js";
import type { Engine, StatePayload } from "./types.js";

export interface ViewState {
  payload: StatePayload | null;
  /** Connection-failure text, shown without blocking the last view. */
  offline: string | null;
}

export interface ViewHandlers {
  onNodeClick(id: string): void;
  onReset(): void;
  onEngine(engine: Engine): void;
  onDownload(kind: "save" | "config.h" | "config.mk"): void;
}

export const CONFLICT_TEXT =
  "Impossible to satisfy: the enforced options contradict the model.";

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function toolbarHtml(payload: StatePayload | null): string {
  const engine = payload?.engine ?? "complete";
  const downloadable = payload !== null && payload.complete && !payload.conflict;
  const disabled = downloadable ? "" : " disabled";
  return `
  <header>
    <h1>configforge</h1>
    <span>engine:</span>
    <button data-engine="heuristic"${engine === "heuristic" ? " disabled" : ""}>heuristic</button>
    <button data-engine="complete"${engine === "complete" ? " disabled" : ""}>complete</button>
    <button data-action="reset">reset</button>
    <span class="spacer"></span>
    <button data-download="save"${disabled}>save configuration</button>
    <button data-download="config.h"${disabled}>config.h</button>
    <button data-download="config.mk"${disabled}>config.mk</button>
  </header>`;
}

function bannersHtml(state: ViewState): string {
  const parts: string[] = [];
  if (state.payload?.conflict) {
    parts.push(`<div class="banner conflict">${esc(CONFLICT_TEXT)}</div>`);
  } else if (state.payload?.complete) {
    parts.push(
      '<div class="banner info">Configuration complete: every option has a value.</div>',
    );
  }
  if (state.offline !== null) {
    parts.push(`<div class="banner offline">${esc(state.offline)}</div>`);
  }
  return parts.join("");
}

function svgHtml(payload: StatePayload): string {
  const layout = buildLayout(payload);
  const statusOf = new Map(payload.nodes.map((n) => [n.id, n.status]));
  const parts: string[] = [];
  parts.push(
    `<svg id="graph" width="${layout.width}" height="${layout.height}" ` +
      `viewBox="0 0 ${layout.width} ${layout.height}" xmlns="http://www.w3.org/2000/svg">`,
  );
  parts.push(
    '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" ' +
      'markerWidth="7" markerHeight="7" orient="auto-start-reverse">' +
      '<path d="M 0 0 L 10 5 L 0 10 z" fill="#555"></path></marker></defs>',
  );
  for (const cluster of layout.clusters) {
    parts.push(
      `<rect class="cluster" data-cluster="${esc(cluster.iface)}" ` +
        `x="${cluster.x - 4}" y="${cluster.y - 4}" ` +
        `width="${cluster.width + 8}" height="${cluster.height + 8}" ` +
        'fill="none" stroke="#888" stroke-dasharray="4 3" rx="6"></rect>',
    );
  }
  for (const edge of layout.edges) {
    parts.push(
      `<line x1="${edge.x1}" y1="${edge.y1}" x2="${edge.x2}" y2="${edge.y2}" ` +
        'stroke="#555" marker-end="url(#arrow)"></line>',
    );
  }
  for (const node of layout.nodes) {
    const status = statusOf.get(node.id) ?? "normal";
    parts.push(
      `<g class="node" data-node-id="${esc(node.id)}">` +
        `<rect x="${node.x}" y="${node.y}" width="${node.width}" height="${node.height}" ` +
        `rx="5" fill="${statusFill(status)}" data-status="${status}" stroke="#333"></rect>` +
        `<text x="${node.x + node.width / 2}" y="${node.y + node.height / 2 + 4}" ` +
        `text-anchor="middle" fill="${statusTextColor(status)}" font-size="12">` +
        `${esc(node.id)}</text></g>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

export function render(
  root: HTMLElement,
  state: ViewState,
  handlers: ViewHandlers,
): void {
  const graph = state.payload
    ? svgHtml(state.payload)
    : '<div class="banner info">Loading model...</div>';
  root.innerHTML = toolbarHtml(state.payload) + bannersHtml(state) + graph;

  for (const element of root.querySelectorAll<Element>("[data-node-id]")) {
    const id = element.getAttribute("data-node-id") as string;
    element.addEventListener("click", () => handlers.onNodeClick(id));
  }
  for (const button of root.querySelectorAll<HTMLButtonElement>("[data-engine]")) {
    const engine = button.getAttribute("data-engine") as Engine;
    button.addEventListener("click", () => handlers.onEngine(engine));
  }
  root
    .querySelector<HTMLButtonElement>('[data-action="reset"]')
    ?.addEventListener("click", () => handlers.onReset());
  for (const button of root.querySelectorAll<HTMLButtonElement>("[data-download]")) {
    const kind = button.getAttribute("data-download") as
      | "save"
      | "config.h"
      | "config.mk";
    button.addEventListener("click", () => handlers.onDownload(kind));
  }
}
