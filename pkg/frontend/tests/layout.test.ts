import { describe, expect, it } from "vitest";

import { buildLayout, NODE_H, NODE_W } from "../src/layout.js";
import type { StatePayload } from "../src/types.js";
import { loadFixture, payloadAt } from "./helpers.js";

const fig1 = payloadAt(loadFixture("flow_llsc.json"), 0);

function overlaps(
  a: { x: number; y: number; width: number; height: number },
  b: { x: number; y: number; width: number; height: number },
): boolean {
  return (
    a.x < b.x + b.width &&
    b.x < a.x + a.width &&
    a.y < b.y + b.height &&
    b.y < a.y + a.height
  );
}

function contains(
  outer: { x: number; y: number; width: number; height: number },
  inner: { x: number; y: number; width: number; height: number },
): boolean {
  return (
    inner.x >= outer.x &&
    inner.y >= outer.y &&
    inner.x + inner.width <= outer.x + outer.width &&
    inner.y + inner.height <= outer.y + outer.height
  );
}

describe("buildLayout", () => {
  it("places every node exactly once", () => {
    const layout = buildLayout(fig1);
    const ids = layout.nodes.map((n) => n.id).sort();
    const expected = fig1.nodes.map((n) => n.id).sort();
    expect(ids).toEqual(expected);
  });

  it("sizes every node box uniformly", () => {
    const layout = buildLayout(fig1);
    for (const node of layout.nodes) {
      expect(node.width).toBe(NODE_W);
      expect(node.height).toBe(NODE_H);
      expect(node.x).toBeGreaterThanOrEqual(0);
      expect(node.y).toBeGreaterThanOrEqual(0);
      expect(node.x + node.width).toBeLessThanOrEqual(layout.width);
      expect(node.y + node.height).toBeLessThanOrEqual(layout.height);
    }
  });

  it("never overlaps two node boxes", () => {
    const layout = buildLayout(fig1);
    for (let i = 0; i < layout.nodes.length; i += 1) {
      for (let j = i + 1; j < layout.nodes.length; j += 1) {
        expect(overlaps(layout.nodes[i], layout.nodes[j])).toBe(false);
      }
    }
  });

  it("encloses each implementation in its interface box", () => {
    const layout = buildLayout(fig1);
    const boxOf = new Map(layout.nodes.map((n) => [n.id, n]));
    const clusterOf = new Map(layout.clusters.map((c) => [c.iface, c]));
    expect(layout.clusters.length).toBe(fig1.clusters.length);
    for (const cluster of fig1.clusters) {
      const rect = clusterOf.get(cluster.iface);
      expect(rect).toBeDefined();
      for (const impl of cluster.impls) {
        expect(contains(rect!, boxOf.get(impl)!)).toBe(true);
      }
    }
  });

  it("keeps a top-level interface inside its own box only", () => {
    const layout = buildLayout(fig1);
    const boxOf = new Map(layout.nodes.map((n) => [n.id, n]));
    const spinlock = boxOf.get("spinlock")!;
    for (const cluster of layout.clusters) {
      expect(contains(cluster, spinlock)).toBe(cluster.iface === "spinlock");
    }
  });

  it("draws a nested interface in the parent box, not its own", () => {
    // top: mid | leaf; mid: a | b. mid is an implementation of top, so
    // its node sits in top's box while mid's box holds only a and b.
    const payload: StatePayload = {
      nodes: [
        { id: "top", status: "normal", interface: null },
        { id: "mid", status: "normal", interface: "top" },
        { id: "leaf", status: "normal", interface: "top" },
        { id: "a", status: "normal", interface: "mid" },
        { id: "b", status: "normal", interface: "mid" },
      ],
      clusters: [
        { iface: "top", impls: ["mid", "leaf"] },
        { iface: "mid", impls: ["a", "b"] },
      ],
      edges: [],
      conflict: false,
      complete: false,
      engine: "complete",
    };
    const layout = buildLayout(payload);
    const boxOf = new Map(layout.nodes.map((n) => [n.id, n]));
    const topBox = layout.clusters.find((c) => c.iface === "top")!;
    const midBox = layout.clusters.find((c) => c.iface === "mid")!;
    expect(contains(topBox, boxOf.get("mid")!)).toBe(true);
    expect(contains(midBox, boxOf.get("mid")!)).toBe(false);
    expect(contains(midBox, boxOf.get("a")!)).toBe(true);
    expect(contains(midBox, boxOf.get("b")!)).toBe(true);
  });

  it("anchors each edge line to its endpoint boxes", () => {
    const layout = buildLayout(fig1);
    const boxOf = new Map(layout.nodes.map((n) => [n.id, n]));
    expect(layout.edges.length).toBe(fig1.edges.length);
    for (const line of layout.edges) {
      const from = boxOf.get(line.from)!;
      const to = boxOf.get(line.to)!;
      expect(line.y1).toBe(from.y + from.height / 2);
      expect(line.y2).toBe(to.y + to.height / 2);
      expect([from.x, from.x + from.width]).toContain(line.x1);
      expect([to.x, to.x + to.width]).toContain(line.x2);
    }
  });

  it("is deterministic", () => {
    expect(JSON.stringify(buildLayout(fig1))).toBe(
      JSON.stringify(buildLayout(fig1)),
    );
  });

  it("terminates on cyclic dependencies and places both nodes", () => {
    const payload: StatePayload = {
      nodes: [
        { id: "a", status: "normal", interface: null },
        { id: "b", status: "normal", interface: null },
      ],
      clusters: [],
      edges: [
        { from: "a", to: "b" },
        { from: "b", to: "a" },
      ],
      conflict: false,
      complete: false,
      engine: "complete",
    };
    const layout = buildLayout(payload);
    expect(layout.nodes.map((n) => n.id).sort()).toEqual(["a", "b"]);
    expect(layout.edges.length).toBe(2);
  });

  it("handles an empty model", () => {
    const payload: StatePayload = {
      nodes: [],
      clusters: [],
      edges: [],
      conflict: false,
      complete: true,
      engine: "complete",
    };
    const layout = buildLayout(payload);
    expect(layout.nodes).toEqual([]);
    expect(layout.width).toBeGreaterThan(0);
    expect(layout.height).toBeGreaterThan(0);
  });
});
