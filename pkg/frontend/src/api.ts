import type { RevealResult, SessionInfo, SessionStatus } from "./types.js";

/** Error body shape is {"error": code} for every non-2xx response. */
export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
  ) {
    super(`${status}: ${code}`);
  }
}

async function errorFrom(response: Response): Promise<ApiError> {
  let code = "unknown_error";
  try {
    const body = await response.json();
    if (typeof body.error === "string") code = body.error;
  } catch {
    // non-JSON error body; keep the fallback code
  }
  return new ApiError(response.status, code);
}

/** Thin typed client for the session service. `fetchFn` is injectable so
 * tests can run against a recorded transport. */
export class Api {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: typeof fetch = (...args) => fetch(...args),
  ) {}

  private async request(path: string, init?: RequestInit): Promise<Response> {
    const response = await this.fetchFn(this.base + path, init);
    if (!response.ok) {
      throw await errorFrom(response);
    }
    return response;
  }

  async createSession(csv: Blob | string, spec: object): Promise<SessionInfo> {
    const form = new FormData();
    form.append("data", csv instanceof Blob ? csv : new Blob([csv]), "data.csv");
    form.append("spec", new Blob([JSON.stringify(spec)]), "spec.json");
    const response = await this.request("/sessions", { method: "POST", body: form });
    return response.json();
  }

  async lineupSvg(sessionId: string): Promise<string> {
    const response = await this.request(`/sessions/${sessionId}/lineup.svg`);
    return response.text();
  }

  async submitResponse(
    sessionId: string,
    observerTag: string,
    panel: number,
  ): Promise<{ accepted: boolean; responses_so_far: number }> {
    const response = await this.request(`/sessions/${sessionId}/responses`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ observer_tag: observerTag, panel }),
    });
    return response.json();
  }

  async reveal(sessionId: string, adminToken: string): Promise<RevealResult> {
    const response = await this.request(`/sessions/${sessionId}/reveal`, {
      method: "POST",
      headers: { "X-Admin-Token": adminToken },
    });
    return response.json();
  }

  async status(sessionId: string): Promise<SessionStatus> {
    const response = await this.request(`/sessions/${sessionId}/status`);
    return response.json();
  }
}
