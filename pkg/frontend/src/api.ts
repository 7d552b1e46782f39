// Thin typed client over the session service's HTTP+JSON API.

export interface Round {
  instruction: string | null;
  seed: number | null;
  sampler: string | null;
  steps: number | null;
  tau_start: number | null;
  init_from_ref: boolean | null;
  silhouette_id: number | null;
  image: string; // base64 PNG
  latency_ms: number;
}

export interface Session {
  id: string;
  created_at: string;
  model_version: string;
  rounds: Round[];
}

export interface EditOptions {
  text: string;
  silhouette_id?: number | null;
  seed?: number | null;
  sampler?: string;
  steps?: number;
  tau_start?: number;
  init_from_ref?: boolean;
}

export interface CompareResult {
  image_a: string;
  image_b: string;
  consistency: number;
  seed: number;
  silhouette_id: number;
}

export interface Pose {
  template_id: number;
  image: string;
}

export type AttrDict = Record<string, string>;

export class ApiError extends Error {
  constructor(public status: number, public detail: string) {
    super(`HTTP ${status}: ${detail}`);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  const body = await response.json().catch(() => ({}));
  if (!response.ok) {
    const detail = typeof body?.detail === "string" ? body.detail : JSON.stringify(body);
    throw new ApiError(response.status, detail);
  }
  return body as T;
}

export class ApiClient {
  constructor(private base: string = "") {}

  health(): Promise<{ status: string; model_version: string }> {
    return request(`${this.base}/health`);
  }

  poses(): Promise<{ poses: Pose[] }> {
    return request(`${this.base}/poses`);
  }

  createSession(body: { attrs?: AttrDict; image?: string }): Promise<Session> {
    return request(`${this.base}/sessions`, { method: "POST", body: JSON.stringify(body) });
  }

  getSession(id: string): Promise<Session> {
    return request(`${this.base}/sessions/${id}`);
  }

  applyEdit(id: string, options: EditOptions): Promise<Round> {
    return request(`${this.base}/sessions/${id}/edits`, {
      method: "POST",
      body: JSON.stringify(options),
    });
  }

  compare(
    id: string,
    body: { t1: string; t2: string; seed?: number | null; sampler?: string; steps?: number; tau_start?: number },
  ): Promise<CompareResult> {
    return request(`${this.base}/sessions/${id}/compare`, {
      method: "POST",
      body: JSON.stringify(body),
    });
  }

  undo(id: string): Promise<Session> {
    return request(`${this.base}/sessions/${id}/undo`, { method: "POST" });
  }
}
