/** Typed client for the kfactors HTTP service. */

export type Edge = [number, number];

export interface GraphPayload {
  n: number;
  edges: Edge[];
}

export interface SwitchStepPayload {
  target: "A" | "B";
  removed: Edge[];
  added: Edge[];
}

export interface ReportPayload {
  sequence: number[];
  k: number;
  rao_verdict: "connected_factorable" | "not_connected_factorable";
  witness_s: number | null;
  factor_components: number[][];
  factor_connected: boolean;
}

export interface CountersPayload {
  initial_shared_edges: number;
  switch_count: number;
  candidate_scans: number;
  max_scans_per_switch: number;
}

export interface KFactorResponse {
  sequence: number[];
  k: number;
  realization: GraphPayload;
  d_minus_k_graph: GraphPayload;
  factor: GraphPayload;
  trace: SwitchStepPayload[];
  counters: CountersPayload;
  report: ReportPayload;
  seed: number | null;
  elapsed_ms: number;
  version: string;
}

export interface GenerateResponse {
  mode: string;
  seed: number;
  prng: string;
  params: Record<string, unknown>;
  n: number;
  sequence: number[];
  elapsed_ms: number;
  version: string;
}

export interface CheckResponse {
  graphic: boolean;
  k_factorable?: boolean;
  rao_connected: boolean;
  witness_s?: number;
}

export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly status: number,
  ) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(`${this.base}${path}`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
      });
    } catch (err) {
      throw new ApiError("NetworkError", `cannot reach the service: ${err}`, 0);
    }
    const payload = await response.json().catch(() => null);
    if (!response.ok) {
      const error = payload?.error ?? {};
      throw new ApiError(
        error.code ?? `HTTP${response.status}`,
        error.message ?? response.statusText,
        response.status,
      );
    }
    return payload as T;
  }

  check(seq: number[], k?: number): Promise<CheckResponse> {
    return this.post("/api/check", k === undefined ? { seq } : { seq, k });
  }

  generate(body: Record<string, unknown>): Promise<GenerateResponse> {
    return this.post("/api/generate", body);
  }

  kfactor(seq: number[], k: number): Promise<KFactorResponse> {
    return this.post("/api/kfactor", { seq, k });
  }
}
