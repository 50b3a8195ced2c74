// Typed client for the segmentation service's /v1 API.

import type { RleMask } from "./rle";
import type { PromptSpec } from "./prompts";

export interface ExamplePayload {
  /** Base64 PNG of a reference image, or null/absent with image_id. */
  image?: string | null;
  /** "target" means the prompts refer to the query image itself. */
  image_id?: "target" | null;
  prompts: PromptSpec[];
  /** Examples sharing a concept act as one pooled in-context query. */
  concept?: string;
}

export interface SegmentOptions {
  n_incontext: number;
  score_threshold: number;
  seed: number;
}

export interface SegmentRequest {
  image: string;
  mode: "generic" | "referring";
  examples: ExamplePayload[];
  bank_categories?: string[] | null;
  options: SegmentOptions;
}

export interface MaskResult {
  mask: RleMask;
  score: number;
  box: [number, number, number, number];
  category: string | null;
  example_id: number | null;
}

export interface SegmentResponse {
  masks: MaskResult[];
  timing_ms: number;
  mode: string;
}

export interface BankCategory {
  id: number;
  name: string;
  count: number;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export function isAbort(err: unknown): boolean {
  return err instanceof DOMException && err.name === "AbortError";
}

async function errorMessage(resp: Response): Promise<string> {
  try {
    const body = await resp.json();
    const detail = body?.detail;
    if (typeof detail === "string") return detail;
    if (Array.isArray(detail)) {
      return detail
        .map((d) => `${(d.loc ?? []).join(".")}: ${d.msg ?? ""}`)
        .join("; ");
    }
  } catch {
    // non-JSON error body; fall through to the status line
  }
  return `${resp.status} ${resp.statusText}`;
}

export class SegmentClient {
  private inflight: AbortController | null = null;

  constructor(private base: string = "") {}

  /**
   * POST /v1/segment. Only one request is ever in flight: starting a new
   * one aborts the previous, whose promise rejects with an AbortError the
   * caller should swallow (see isAbort).
   */
  async segment(req: SegmentRequest): Promise<SegmentResponse> {
    this.inflight?.abort();
    const ctl = new AbortController();
    this.inflight = ctl;
    try {
      const resp = await fetch(this.base + "/v1/segment", {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(req),
        signal: ctl.signal,
      });
      if (!resp.ok) throw new ApiError(resp.status, await errorMessage(resp));
      return (await resp.json()) as SegmentResponse;
    } finally {
      if (this.inflight === ctl) this.inflight = null;
    }
  }

  async bankCategories(): Promise<BankCategory[]> {
    const resp = await fetch(this.base + "/v1/bank/categories");
    if (!resp.ok) throw new ApiError(resp.status, await errorMessage(resp));
    const body = await resp.json();
    return body.categories as BankCategory[];
  }

  async health(): Promise<Record<string, unknown>> {
    const resp = await fetch(this.base + "/v1/health");
    if (!resp.ok) throw new ApiError(resp.status, await errorMessage(resp));
    return (await resp.json()) as Record<string, unknown>;
  }
}
