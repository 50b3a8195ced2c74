// Gesture-to-prompt mapping. The service takes prompts with coordinates
// normalized to [0, 1] relative to the image, so everything here works in
// that space; pixels only exist at the canvas boundary.

import type { RleMask } from "./rle";

export const DEFAULT_SCRIBBLE_RADIUS = 0.02;

export interface PointPrompt {
  kind: "point";
  point: [number, number];
}

export interface BoxPrompt {
  kind: "box";
  box: [number, number, number, number];
}

export interface ScribblePrompt {
  kind: "scribble";
  points: [number, number][];
  radius: number;
}

export interface MaskPrompt {
  kind: "mask";
  mask: RleMask;
}

export type PromptSpec = PointPrompt | BoxPrompt | ScribblePrompt | MaskPrompt;

/** The drawing surface's place in client coordinates (getBoundingClientRect). */
export interface SurfaceRect {
  left: number;
  top: number;
  width: number;
  height: number;
}

function clamp01(v: number): number {
  return v < 0 ? 0 : v > 1 ? 1 : v;
}

function round6(v: number): number {
  return Math.round(v * 1e6) / 1e6;
}

/** Client coordinates to normalized image coordinates. */
export function toNormalized(
  clientX: number,
  clientY: number,
  rect: SurfaceRect,
): [number, number] {
  return [
    round6(clamp01((clientX - rect.left) / rect.width)),
    round6(clamp01((clientY - rect.top) / rect.height)),
  ];
}

export function pointFromClick(
  clientX: number,
  clientY: number,
  rect: SurfaceRect,
): PointPrompt {
  return { kind: "point", point: toNormalized(clientX, clientY, rect) };
}

/**
 * Box from a press-drag-release. Corners may arrive in any order; the
 * result is (x0, y0, x1, y1) with x0 <= x1, y0 <= y1. A drag with no area
 * is not a box — callers should treat it as a click.
 */
export function boxFromDrag(
  start: { clientX: number; clientY: number },
  end: { clientX: number; clientY: number },
  rect: SurfaceRect,
): BoxPrompt | null {
  const [ax, ay] = toNormalized(start.clientX, start.clientY, rect);
  const [bx, by] = toNormalized(end.clientX, end.clientY, rect);
  const x0 = Math.min(ax, bx);
  const x1 = Math.max(ax, bx);
  const y0 = Math.min(ay, by);
  const y1 = Math.max(ay, by);
  if (x1 - x0 <= 0 || y1 - y0 <= 0) return null;
  return { kind: "box", box: [x0, y0, x1, y1] };
}

/**
 * Scribble from a pointer path. Consecutive duplicate positions collapse;
 * a path that never leaves its starting pixel is no stroke at all, so the
 * result is null and the caller should tell the user rather than send it.
 */
export function scribbleFromPath(
  path: { clientX: number; clientY: number }[],
  rect: SurfaceRect,
  radius: number = DEFAULT_SCRIBBLE_RADIUS,
): ScribblePrompt | null {
  const points: [number, number][] = [];
  for (const p of path) {
    const q = toNormalized(p.clientX, p.clientY, rect);
    const last = points[points.length - 1];
    if (!last || last[0] !== q[0] || last[1] !== q[1]) points.push(q);
  }
  if (points.length < 2) return null;
  return { kind: "scribble", points, radius };
}

export function describePrompt(spec: PromptSpec): string {
  switch (spec.kind) {
    case "point":
      return `point (${spec.point[0].toFixed(2)}, ${spec.point[1].toFixed(2)})`;
    case "box":
      return `box ${(spec.box[2] - spec.box[0]).toFixed(2)}x${(spec.box[3] - spec.box[1]).toFixed(2)}`;
    case "scribble":
      return `scribble, ${spec.points.length} points`;
    case "mask":
      return `mask ${spec.mask.size[0]}x${spec.mask.size[1]}`;
  }
}
