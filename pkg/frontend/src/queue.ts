/* Single in-flight mutation: clicks arriving while a request is on the
   wire are queued and replayed in order once it settles. The send
   callback owns error handling; a failed send never stalls the queue. */

export class ClickQueue {
  private readonly pending: string[] = [];
  private inFlight = false;

  constructor(private readonly send: (id: string) => Promise<void>) {}

  get busy(): boolean {
    return this.inFlight;
  }

  get depth(): number {
    return this.pending.length;
  }

  push(id: string): void {
    this.pending.push(id);
    void this.drain();
  }

  private async drain(): Promise<void> {
    if (this.inFlight) return;
    this.inFlight = true;
    try {
      while (this.pending.length > 0) {
        const id = this.pending.shift() as string;
        try {
          await this.send(id);
        } catch {
          // send reports its own failures
        }
      }
    } finally {
      this.inFlight = false;
    }
  }
}
