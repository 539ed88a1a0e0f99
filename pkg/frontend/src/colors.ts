import type { NodeStatus } from "./types.js";

// Same palette as the DOT export: enforced values dark, implied light.
const FILLS: Record<NodeStatus, string> = {
  enforced_true: "darkgreen",
  enforced_false: "darkred",
  implied_true: "lightgreen",
  implied_false: "lightcoral",
  normal: "lightgray",
};

export function statusFill(status: NodeStatus): string {
  return FILLS[status];
}

export function statusTextColor(status: NodeStatus): string {
  return status === "enforced_true" || status === "enforced_false"
    ? "white"
    : "black";
}
