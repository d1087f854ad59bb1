// Typed client for the planepoem HTTP service. The UI never computes form
// mathematics locally; every verdict shown comes from these endpoints.

export interface FormInfo {
  name: string;
  point_count: number;
  stanza_shape: string;
}

export interface ScaffoldResponse {
  form: string;
  poem: string;
  classes: [number, number][][]; // per point id: [stanza, position] slots
}

export interface ClassReport {
  positions: [number, number][];
  min_pairwise_similarity: number;
  ok: boolean;
}

export interface ValidationReport {
  shape_ok: boolean;
  mode: string;
  threshold: number;
  classes: Record<string, ClassReport>;
  violations: [[number, number], [number, number], number][];
  overall_ok: boolean;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

export class ApiClient {
  constructor(readonly baseUrl: string) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let resp: Response;
    try {
      resp = await fetch(this.baseUrl + path, init);
    } catch (err) {
      throw new ApiError(0, "unreachable", `service unreachable: ${err}`);
    }
    const body = await resp.json().catch(() => null);
    if (!resp.ok) {
      const code = body?.code ?? "unknown";
      const message = body?.message ?? `request failed with status ${resp.status}`;
      throw new ApiError(resp.status, code, message);
    }
    return body as T;
  }

  listForms(): Promise<{ forms: FormInfo[] }> {
    return this.request("/api/forms");
  }

  scaffold(form: string, baseLines: string[]): Promise<ScaffoldResponse> {
    return this.request("/api/scaffold", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ form, base_lines: baseLines }),
    });
  }

  validate(
    form: string,
    poem: string,
    mode: string,
    threshold?: number,
  ): Promise<ValidationReport> {
    const payload: Record<string, unknown> = { form, poem, mode };
    if (threshold !== undefined) payload.threshold = threshold;
    return this.request("/api/validate", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
  }
}
