import { describe, expect, it } from "vitest";

import { ClickQueue } from "../src/queue.js";
import { flush } from "./helpers.js";

interface Deferred {
  id: string;
  resolve: () => void;
  reject: (error: Error) => void;
}

function manualSend(): { queue: ClickQueue; started: Deferred[] } {
  const started: Deferred[] = [];
  const queue = new ClickQueue(
    (id) =>
      new Promise<void>((resolve, reject) => {
        started.push({ id, resolve, reject });
      }),
  );
  return { queue, started };
}

describe("ClickQueue", () => {
  it("keeps at most one request in flight", async () => {
    const { queue, started } = manualSend();
    queue.push("a");
    queue.push("b");
    queue.push("c");
    await flush();

    expect(started.map((d) => d.id)).toEqual(["a"]);
    expect(queue.busy).toBe(true);
    expect(queue.depth).toBe(2);

    started[0].resolve();
    await flush();
    expect(started.map((d) => d.id)).toEqual(["a", "b"]);

    started[1].resolve();
    await flush();
    expect(started.map((d) => d.id)).toEqual(["a", "b", "c"]);

    started[2].resolve();
    await flush();
    expect(queue.busy).toBe(false);
    expect(queue.depth).toBe(0);
  });

  it("preserves click order", async () => {
    const order: string[] = [];
    const queue = new ClickQueue(async (id) => {
      order.push(id);
    });
    for (const id of ["sched", "arm", "arm", "arm", "s12xe"]) {
      queue.push(id);
    }
    await flush();
    expect(order).toEqual(["sched", "arm", "arm", "arm", "s12xe"]);
  });

  it("keeps draining after a failed send", async () => {
    const { queue, started } = manualSend();
    queue.push("a");
    queue.push("b");
    await flush();

    started[0].reject(new Error("boom"));
    await flush();
    expect(started.map((d) => d.id)).toEqual(["a", "b"]);

    started[1].resolve();
    await flush();
    expect(queue.busy).toBe(false);
  });

  it("accepts clicks pushed while draining", async () => {
    const { queue, started } = manualSend();
    queue.push("a");
    await flush();
    queue.push("b");
    expect(queue.depth).toBe(1);

    started[0].resolve();
    await flush();
    expect(started.map((d) => d.id)).toEqual(["a", "b"]);
    started[1].resolve();
    await flush();
    expect(queue.depth).toBe(0);
  });
});
