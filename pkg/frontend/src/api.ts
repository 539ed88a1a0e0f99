import type { Engine, StatePayload } from "./types.js";

export type FetchLike = (
  input: string,
  init?: RequestInit,
) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
    readonly body: unknown,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function errorFrom(response: Response): Promise<ApiError> {
  let body: unknown = null;
  let message = `${response.status}`;
  try {
    body = await response.json();
    const record = body as Record<string, unknown>;
    if (typeof record?.error === "string") message = record.error;
  } catch {
    // non-JSON error body; the status code is all we have
  }
  return new ApiError(message, response.status, body);
}

export class ApiClient {
  private readonly fetchImpl: FetchLike;

  constructor(fetchImpl?: FetchLike) {
    this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
  }

  private async request(path: string, init?: RequestInit): Promise<Response> {
    const response = await this.fetchImpl(path, init);
    if (!response.ok) throw await errorFrom(response);
    return response;
  }

  private async state(path: string, init?: RequestInit): Promise<StatePayload> {
    const response = await this.request(path, init);
    return (await response.json()) as StatePayload;
  }

  graph(): Promise<StatePayload> {
    return this.state("/api/graph");
  }

  click(id: string): Promise<StatePayload> {
    return this.state(`/api/click/${encodeURIComponent(id)}`, {
      method: "POST",
    });
  }

  reset(): Promise<StatePayload> {
    return this.state("/api/reset", { method: "POST" });
  }

  setEngine(engine: Engine): Promise<StatePayload> {
    return this.state("/api/engine", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ engine }),
    });
  }

  async saveText(): Promise<string> {
    const response = await this.request("/api/save", { method: "POST" });
    return response.text();
  }

  async configH(): Promise<string> {
    const response = await this.request("/api/config.h");
    return response.text();
  }

  async configMk(): Promise<string> {
    const response = await this.request("/api/config.mk");
    return response.text();
  }
}
