// The full prompting loop, scripted: load a scene, scribble on an object,
// segment, see an overlay, refine with a second example, repeat. Runs
// against the bundled mock service by default; point CTXSEG_SERVER at a
// live `ctxseg serve` instance to drive the real stack instead.

import { afterAll, beforeAll, beforeEach, describe, expect, it, vi } from "vitest";
import { initApp, type AppHandles } from "../src/main";
import { SegmentClient, isAbort } from "../src/api";
import { setRect, contextOf } from "./setup";
import { startMockService, type MockService } from "./mockService";

const REAL_SERVER = process.env.CTXSEG_SERVER;

let mock: MockService | null = null;
let base: string;

// The bundled sample scene has objects at these image pixels (128x128);
// strokes that should hit something are drawn across them.
const OBJECT_A: [number, number][] = [
  [72, 62],
  [77, 63],
  [81, 64],
  [85, 64],
];
const OBJECT_B: [number, number][] = [
  [72, 89],
  [78, 90],
  [84, 91],
];

beforeAll(async () => {
  if (REAL_SERVER) {
    base = REAL_SERVER;
    // pay the model's first-request warmup outside the timed loop
    const { SAMPLE_SCENE_B64 } = await import("../src/scene");
    await new SegmentClient(base).segment({
      image: SAMPLE_SCENE_B64,
      mode: "referring",
      examples: [
        {
          image_id: "target",
          prompts: [{ kind: "point", point: [0.5, 0.5] }],
          concept: "0",
        },
      ],
      bank_categories: null,
      options: { n_incontext: 4, score_threshold: 0.25, seed: 0 },
    });
  } else {
    mock = await startMockService();
    base = mock.base;
  }
}, 60000);

afterAll(async () => {
  await mock?.close();
});

function freshApp(): AppHandles {
  document.body.innerHTML = `<div id="app"></div>`;
  const root = document.getElementById("app") as HTMLElement;
  const app = initApp(root, { client: new SegmentClient(base) });
  const draw = root.querySelector<HTMLCanvasElement>('[data-role="draw"]')!;
  // pin layout: canvas client rect == image pixels, 1:1
  setRect(draw, { left: 0, top: 0, width: 128, height: 128 });
  return app;
}

function pointer(
  el: HTMLElement,
  type: "pointerdown" | "pointermove" | "pointerup",
  x: number,
  y: number,
): void {
  el.dispatchEvent(
    new MouseEvent(type, { clientX: x, clientY: y, bubbles: true }),
  );
}

function scribbleAcross(el: HTMLElement, points: [number, number][]): void {
  pointer(el, "pointerdown", points[0][0], points[0][1]);
  for (const [x, y] of points.slice(1)) pointer(el, "pointermove", x, y);
  const last = points[points.length - 1];
  pointer(el, "pointerup", last[0], last[1]);
}

function overlayCount(root: HTMLElement): number {
  const overlay = root.querySelector<HTMLCanvasElement>('[data-role="overlay"]')!;
  return Number(overlay.dataset.masks ?? "0");
}

describe("the prompting loop", () => {
  beforeEach(() => {
    mock?.setDelay(0);
    if (mock) mock.requests.length = 0;
  });

  it("scene, scribble, segment: an overlay lands within two seconds", async () => {
    const app = freshApp();
    const draw = app.root.querySelector<HTMLCanvasElement>('[data-role="draw"]')!;

    app.loadSampleScene();
    expect(app.state.imageB64).toBeTruthy();
    expect(app.state.imageWidth).toBe(128);

    // referring mode: find things like the one I scribble on
    const modeSelect = app.root.querySelector<HTMLSelectElement>('[data-role="mode"]')!;
    modeSelect.value = "referring";
    modeSelect.dispatchEvent(new Event("change"));

    scribbleAcross(draw, OBJECT_A);
    expect(app.state.examples).toHaveLength(1);
    expect(app.state.examples[0].prompts[0].kind).toBe("scribble");

    const segment = app.root.querySelector<HTMLButtonElement>('[data-role="segment"]')!;
    expect(segment.disabled).toBe(false);

    const started = performance.now();
    segment.click();
    await vi.waitFor(() => expect(overlayCount(app.root)).toBeGreaterThan(0), {
      timeout: 2000,
    });
    expect(performance.now() - started).toBeLessThan(2000);

    // the overlay was actually painted, and labels carry scores
    const overlayCtx = contextOf(
      app.root.querySelector<HTMLCanvasElement>('[data-role="overlay"]')!,
    );
    expect(overlayCtx.putImageData).toHaveBeenCalled();
    expect(app.root.querySelectorAll(".mask-label").length).toBeGreaterThan(0);
  });

  it("a second example rides the next request and refreshes the overlay", async () => {
    const app = freshApp();
    const draw = app.root.querySelector<HTMLCanvasElement>('[data-role="draw"]')!;
    app.loadSampleScene();
    const modeSelect = app.root.querySelector<HTMLSelectElement>('[data-role="mode"]')!;
    modeSelect.value = "referring";
    modeSelect.dispatchEvent(new Event("change"));

    scribbleAcross(draw, OBJECT_A);
    await app.segmentNow();
    const firstStatus = app.root.querySelector('[data-role="status"]')!.textContent;
    expect(overlayCount(app.root)).toBeGreaterThan(0);

    // a second stroke on a lookalike object refines the same concept
    scribbleAcross(draw, OBJECT_B);
    expect(app.state.examples).toHaveLength(2);
    await app.segmentNow();

    expect(overlayCount(app.root)).toBeGreaterThan(0);
    const secondStatus = app.root.querySelector('[data-role="status"]')!.textContent;
    expect(secondStatus).toMatch(/masks in/);
    expect(firstStatus).toMatch(/masks in/);
    if (mock) {
      const last = mock.requests[mock.requests.length - 1] as {
        examples: unknown[];
      };
      expect(last.examples).toHaveLength(2);
    }
  });

  it("a zero-length scribble is discarded with a toast, not sent", async () => {
    const app = freshApp();
    const draw = app.root.querySelector<HTMLCanvasElement>('[data-role="draw"]')!;
    app.loadSampleScene();

    pointer(draw, "pointerdown", 60, 60);
    pointer(draw, "pointerup", 60, 60);

    expect(app.state.examples).toHaveLength(0);
    const toast = app.root.querySelector<HTMLDivElement>('[data-role="toast"]')!;
    expect(toast.hidden).toBe(false);
    expect(toast.textContent).toMatch(/discard/);
  });

  it("generic mode with no examples still segments via the bank", async () => {
    const app = freshApp();
    app.loadSampleScene();
    expect(app.state.mode).toBe("generic");
    await app.bankReady;
    expect(app.state.bankNames.length).toBeGreaterThan(0);
    await app.segmentNow();
    await vi.waitFor(() => expect(overlayCount(app.root)).toBeGreaterThan(0), {
      timeout: 2000,
    });
    if (mock) {
      const last = mock.requests[mock.requests.length - 1] as {
        bank_categories: string[] | null;
      };
      expect(last.bank_categories).toEqual(app.state.bankNames);
    }
  });
});

describe("request lifecycle", () => {
  it("only the newest request survives; the older one aborts", async () => {
    if (!mock) return; // needs a controllable delay
    mock.setDelay(250);
    const client = new SegmentClient(base);
    const req = {
      image: "aGVsbG8=",
      mode: "generic" as const,
      examples: [],
      bank_categories: ["disc"],
      options: { n_incontext: 4, score_threshold: 0.25, seed: 0 },
    };
    const first = client.segment(req);
    mock.setDelay(0);
    const second = client.segment(req);
    const [a, b] = await Promise.allSettled([first, second]);
    expect(a.status).toBe("rejected");
    expect(isAbort((a as PromiseRejectedResult).reason)).toBe(true);
    expect(b.status).toBe("fulfilled");
  });

  it("a failing request shows a banner and keeps the session intact", async () => {
    if (!mock) return; // cannot ask a real server to fail on cue
    const app = freshApp();
    const draw = app.root.querySelector<HTMLCanvasElement>('[data-role="draw"]')!;
    app.loadSampleScene();
    scribbleAcross(draw, [
      [20, 20],
      [30, 30],
    ]);

    mock.failNext = { status: 503, detail: "model not loaded" };
    await app.segmentNow();

    const banner = app.root.querySelector<HTMLDivElement>('[data-role="banner"]')!;
    expect(banner.hidden).toBe(false);
    expect(banner.textContent).toMatch(/model not loaded/);
    expect(app.state.examples).toHaveLength(1); // nothing lost

    // and the session recovers on the next attempt
    await app.segmentNow();
    expect(banner.hidden).toBe(true);
    expect(overlayCount(app.root)).toBeGreaterThan(0);
  });
});
