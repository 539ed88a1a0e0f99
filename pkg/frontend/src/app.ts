import { ApiClient, ApiError } from "./api.js";
import { ClickQueue } from "./queue.js";
import type { Engine, StatePayload } from "./types.js";
import { render, type ViewState } from "./view.js";

export type SaveFile = (name: string, text: string) => void;

const OFFLINE_TEXT = "Cannot reach the server; showing the last known state.";

function blobDownload(name: string, text: string): void {
  const url = URL.createObjectURL(new Blob([text]));
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = name;
  anchor.click();
  URL.revokeObjectURL(url);
}

const DOWNLOAD_NAMES = {
  save: "saved.config",
  "config.h": "config.h",
  "config.mk": "config.mk",
} as const;

export class App {
  readonly state: ViewState = { payload: null, offline: null };
  private readonly queue: ClickQueue;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private readonly saveFile: SaveFile = blobDownload,
  ) {
    this.queue = new ClickQueue((id) => this.mutate(() => this.api.click(id)));
  }

  async start(): Promise<void> {
    this.render();
    await this.mutate(() => this.api.graph());
  }

  /** The view only ever shows the most recent server payload. */
  private async mutate(operation: () => Promise<StatePayload>): Promise<void> {
    try {
      this.state.payload = await operation();
      this.state.offline = null;
    } catch (error) {
      this.state.offline =
        error instanceof ApiError
          ? `Server rejected the request: ${error.message}`
          : OFFLINE_TEXT;
    }
    this.render();
  }

  private async download(kind: "save" | "config.h" | "config.mk"): Promise<void> {
    try {
      const text =
        kind === "save"
          ? await this.api.saveText()
          : kind === "config.h"
            ? await this.api.configH()
            : await this.api.configMk();
      this.saveFile(DOWNLOAD_NAMES[kind], text);
      this.state.offline = null;
    } catch (error) {
      this.state.offline =
        error instanceof ApiError
          ? `Server rejected the request: ${error.message}`
          : OFFLINE_TEXT;
    }
    this.render();
  }

  private render(): void {
    render(this.root, this.state, {
      onNodeClick: (id) => this.queue.push(id),
      onReset: () => void this.mutate(() => this.api.reset()),
      onEngine: (engine: Engine) =>
        void this.mutate(() => this.api.setEngine(engine)),
      onDownload: (kind) => void this.download(kind),
    });
  }
}
