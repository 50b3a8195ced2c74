// A minimal stand-in for the segmentation service, faithful to its wire
// format: canonical run-length masks, examples pooled by concept, score-
// sorted results, pydantic-style 400 bodies. The loop test runs against
// this by default and against a real server when CTXSEG_SERVER is set.

import { createServer, type Server } from "node:http";
import type { AddressInfo } from "node:net";

interface MockOptions {
  /** Delay responses by this many ms (for cancellation tests). */
  delayMs?: number;
}

export interface MockService {
  base: string;
  requests: unknown[];
  server: Server;
  /** Fail the next /v1/segment with this HTTP status. */
  failNext: { status: number; detail: string } | null;
  setDelay(ms: number): void;
  close(): Promise<void>;
}

function encodeRle(flat: Uint8Array, height: number, width: number) {
  const runs: [number, number][] = [];
  let value = flat[0];
  let length = 0;
  for (let i = 0; i < flat.length; i++) {
    if (flat[i] === value) {
      length += 1;
    } else {
      runs.push([value, length]);
      value = flat[i];
      length = 1;
    }
  }
  runs.push([value, length]);
  return { size: [height, width], runs };
}

function squareAt(cx: number, cy: number, height: number, width: number) {
  const flat = new Uint8Array(height * width);
  const half = 8;
  const px = Math.round(cx * (width - 1));
  const py = Math.round(cy * (height - 1));
  for (let y = Math.max(0, py - half); y <= Math.min(height - 1, py + half); y++) {
    for (let x = Math.max(0, px - half); x <= Math.min(width - 1, px + half); x++) {
      flat[y * width + x] = 1;
    }
  }
  return flat;
}

function firstPoint(prompts: any[]): [number, number] {
  const p = prompts[0];
  if (p.kind === "point") return p.point;
  if (p.kind === "box") return [(p.box[0] + p.box[2]) / 2, (p.box[1] + p.box[3]) / 2];
  if (p.kind === "scribble") return p.points[0];
  return [0.5, 0.5];
}

function badRequest(loc: string[], msg: string) {
  return JSON.stringify({ detail: [{ loc, msg, type: "value_error" }] });
}

export function startMockService(opts: MockOptions = {}): Promise<MockService> {
  const requests: unknown[] = [];
  let delayMs = opts.delayMs ?? 0;
  const mock: Partial<MockService> = { requests, failNext: null };

  const server = createServer((req, res) => {
    const respond = (status: number, body: string) => {
      setTimeout(() => {
        res.writeHead(status, { "Content-Type": "application/json" });
        res.end(body);
      }, delayMs);
    };

    if (req.method === "GET" && req.url === "/v1/health") {
      respond(200, JSON.stringify({ status: "ok", model: "mock" }));
      return;
    }
    if (req.method === "GET" && req.url === "/v1/bank/categories") {
      respond(
        200,
        JSON.stringify({
          categories: [
            { id: 0, name: "disc", count: 4 },
            { id: 1, name: "ring", count: 3 },
          ],
          meta: { source_split: "train" },
        }),
      );
      return;
    }
    if (req.method === "POST" && req.url === "/v1/segment") {
      let raw = "";
      req.on("data", (chunk) => (raw += chunk));
      req.on("end", () => {
        if (mock.failNext) {
          const { status, detail } = mock.failNext;
          mock.failNext = null;
          respond(status, JSON.stringify({ detail }));
          return;
        }
        let body: any;
        try {
          body = JSON.parse(raw);
        } catch {
          respond(400, badRequest(["body"], "invalid JSON"));
          return;
        }
        requests.push(body);
        if (typeof body.image !== "string" || body.image.length === 0) {
          respond(400, badRequest(["body", "image"], "field required"));
          return;
        }
        if (body.mode !== "generic" && body.mode !== "referring") {
          respond(400, badRequest(["body", "mode"], "unknown mode"));
          return;
        }
        for (const ex of body.examples ?? []) {
          if (!Array.isArray(ex.prompts) || ex.prompts.length === 0) {
            respond(400, badRequest(["body", "examples", "prompts"], "at least one prompt"));
            return;
          }
        }
        if (body.mode === "referring" && (body.examples ?? []).length === 0) {
          respond(400, badRequest(["examples"], "referring mode needs at least one example"));
          return;
        }

        const height = 128;
        const width = 128;
        const masks: any[] = [];
        let score = 0.95;

        // just like the real endpoint: an explicit category list wins,
        // then drawn examples pooled by concept, else the request is bad
        if (body.mode === "generic" && body.bank_categories != null) {
          const known = ["disc", "ring"];
          const unknown = body.bank_categories.filter(
            (n: string) => !known.includes(n),
          );
          if (unknown.length > 0) {
            respond(400, badRequest(["bank_categories"], `unknown categories: ${unknown}`));
            return;
          }
          if (body.bank_categories.length === 0) {
            respond(400, badRequest(["bank_categories"], "empty category list"));
            return;
          }
          body.bank_categories.forEach((name: string, i: number) => {
            const cx = 0.3 + 0.4 * i;
            masks.push({
              mask: encodeRle(squareAt(cx, 0.5, height, width), height, width),
              score,
              box: [cx - 0.06, 0.44, cx + 0.06, 0.56],
              category: name,
              example_id: null,
            });
            score -= 0.1;
          });
        } else if ((body.examples ?? []).length > 0) {
          const byConcept = new Map<string, any[]>();
          for (const ex of body.examples) {
            const key = ex.concept ?? "0";
            if (!byConcept.has(key)) byConcept.set(key, []);
            byConcept.get(key)!.push(ex);
          }
          let exampleId = 0;
          for (const [concept, group] of byConcept) {
            const [cx, cy] = firstPoint(group[0].prompts);
            masks.push({
              mask: encodeRle(squareAt(cx, cy, height, width), height, width),
              score,
              box: [
                Math.max(0, cx - 0.06),
                Math.max(0, cy - 0.06),
                Math.min(1, cx + 0.06),
                Math.min(1, cy + 0.06),
              ],
              category: body.mode === "generic" ? concept : null,
              example_id: body.mode === "generic" ? null : exampleId,
            });
            score -= 0.1;
            exampleId += 1;
          }
        } else {
          respond(400, badRequest(["examples"], "generic mode needs examples or bank_categories"));
          return;
        }
        respond(
          200,
          JSON.stringify({ masks, timing_ms: delayMs + 3.2, mode: body.mode }),
        );
      });
      return;
    }
    respond(404, JSON.stringify({ detail: "not found" }));
  });

  return new Promise((resolve) => {
    server.listen(0, "127.0.0.1", () => {
      const addr = server.address() as AddressInfo;
      mock.base = `http://127.0.0.1:${addr.port}`;
      mock.server = server;
      mock.setDelay = (ms: number) => {
        delayMs = ms;
      };
      mock.close = () =>
        new Promise<void>((done) => server.close(() => done()));
      resolve(mock as MockService);
    });
  });
}
