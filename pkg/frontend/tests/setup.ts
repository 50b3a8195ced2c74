// jsdom has no 2D canvas or layout engine, so stub the pieces the app
// touches: a context that remembers what was painted, and a bounding rect
// each test positions explicitly.

import { vi } from "vitest";

export interface FakeContext {
  putImageData: ReturnType<typeof vi.fn>;
  clearRect: ReturnType<typeof vi.fn>;
  drawImage: ReturnType<typeof vi.fn>;
  strokeRect: ReturnType<typeof vi.fn>;
  beginPath: ReturnType<typeof vi.fn>;
  moveTo: ReturnType<typeof vi.fn>;
  lineTo: ReturnType<typeof vi.fn>;
  arc: ReturnType<typeof vi.fn>;
  fill: ReturnType<typeof vi.fn>;
  stroke: ReturnType<typeof vi.fn>;
  strokeStyle: string;
  fillStyle: string;
  lineWidth: number;
}

const contexts = new WeakMap<HTMLCanvasElement, FakeContext>();

function makeContext(): FakeContext {
  return {
    putImageData: vi.fn(),
    clearRect: vi.fn(),
    drawImage: vi.fn(),
    strokeRect: vi.fn(),
    beginPath: vi.fn(),
    moveTo: vi.fn(),
    lineTo: vi.fn(),
    arc: vi.fn(),
    fill: vi.fn(),
    stroke: vi.fn(),
    strokeStyle: "",
    fillStyle: "",
    lineWidth: 1,
  };
}

HTMLCanvasElement.prototype.getContext = function (this: HTMLCanvasElement) {
  let ctx = contexts.get(this);
  if (!ctx) {
    ctx = makeContext();
    contexts.set(this, ctx);
  }
  return ctx as unknown as CanvasRenderingContext2D;
} as unknown as typeof HTMLCanvasElement.prototype.getContext;

/** The fake 2D context for a canvas, for asserting on paint calls. */
export function contextOf(canvas: HTMLCanvasElement): FakeContext {
  canvas.getContext("2d");
  return contexts.get(canvas)!;
}

/** Pin an element's layout rect, since jsdom computes none. */
export function setRect(
  el: HTMLElement,
  rect: { left: number; top: number; width: number; height: number },
): void {
  el.getBoundingClientRect = () =>
    ({
      left: rect.left,
      top: rect.top,
      width: rect.width,
      height: rect.height,
      right: rect.left + rect.width,
      bottom: rect.top + rect.height,
      x: rect.left,
      y: rect.top,
      toJSON: () => rect,
    }) as DOMRect;
}

// jsdom lacks PointerEvent; the app only reads clientX/clientY, so
// MouseEvent dispatched under the pointer event names is equivalent.
if (typeof window.PointerEvent === "undefined") {
  (window as unknown as { PointerEvent: typeof MouseEvent }).PointerEvent =
    MouseEvent;
}

// Some jsdom builds omit ImageData unless the native canvas package is
// present; the app only needs the buffer-and-dimensions shape.
if (typeof globalThis.ImageData === "undefined") {
  class MinimalImageData {
    readonly width: number;
    readonly height: number;
    readonly data: Uint8ClampedArray;
    constructor(width: number, height: number) {
      this.width = width;
      this.height = height;
      this.data = new Uint8ClampedArray(width * height * 4);
    }
  }
  (globalThis as unknown as { ImageData: unknown }).ImageData =
    MinimalImageData;
}
