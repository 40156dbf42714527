import type { ApiError, CreateSessionRequest, Hint, Snapshot } from "./types.js";

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiRejection extends Error {
  constructor(public readonly info: ApiError) {
    super(info.detail ?? info.error);
  }
}

/**
 * Turn a FastAPI error body into a flat ApiError. The server nests
 * machine-readable payloads under "detail"; plain strings and already
 * flat objects are passed through.
 */
export function normalizeError(status: number, body: unknown): ApiError {
  const out: ApiError = { status, error: "unknown" };
  let payload = body as Record<string, unknown> | string | null;
  // flat bodies ({"error": ..., "detail": "..."}) stay as-is; FastAPI's
  // nested form ({"detail": {...}} or {"detail": "..."}) gets unwrapped
  if (
    payload &&
    typeof payload === "object" &&
    typeof payload.error !== "string" &&
    "detail" in payload
  ) {
    payload = (payload as { detail: Record<string, unknown> | string }).detail;
  }
  if (typeof payload === "string") {
    out.error = "error";
    out.detail = payload;
    return out;
  }
  if (payload && typeof payload === "object") {
    if (typeof payload.error === "string") out.error = payload.error;
    if (typeof payload.detail === "string") out.detail = payload.detail;
    if (typeof payload.addable === "number") out.addable = payload.addable;
  }
  return out;
}

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await this.fetchImpl(this.base + path, init);
    let body: unknown = null;
    try {
      body = await resp.json();
    } catch {
      // non-JSON error bodies fall through to the status-only rejection
    }
    if (!resp.ok) throw new ApiRejection(normalizeError(resp.status, body));
    return body as T;
  }

  createSession(req: CreateSessionRequest): Promise<Snapshot> {
    return this.request("/api/sessions", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(req),
    });
  }

  getState(id: string): Promise<Snapshot> {
    return this.request(`/api/sessions/${id}`);
  }

  postMove(id: string, vertices: number[]): Promise<Snapshot> {
    return this.request(`/api/sessions/${id}/moves`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ vertices }),
    });
  }

  getHint(id: string): Promise<Hint> {
    return this.request(`/api/sessions/${id}/hint`);
  }
}
