// Gesture mapping: client pixels in, normalized prompt specs out.

import { describe, expect, it } from "vitest";
import {
  DEFAULT_SCRIBBLE_RADIUS,
  boxFromDrag,
  pointFromClick,
  scribbleFromPath,
  toNormalized,
  type SurfaceRect,
} from "../src/prompts";

const rect400: SurfaceRect = { left: 100, top: 50, width: 400, height: 400 };

describe("pointFromClick", () => {
  it("maps the canvas center to (0.5, 0.5) within a pixel", () => {
    const spec = pointFromClick(300, 250, rect400);
    expect(spec.kind).toBe("point");
    expect(Math.abs(spec.point[0] - 0.5)).toBeLessThanOrEqual(1 / 400);
    expect(Math.abs(spec.point[1] - 0.5)).toBeLessThanOrEqual(1 / 400);
  });

  it("clamps clicks that land outside the surface", () => {
    const spec = pointFromClick(90, 470, rect400);
    expect(spec.point).toEqual([0, 1]);
  });

  it("is resolution independent up to pixel quantization", () => {
    const small: SurfaceRect = { left: 0, top: 0, width: 200, height: 200 };
    const large: SurfaceRect = { left: 0, top: 0, width: 400, height: 400 };
    // the same image-relative position, drawn on displays of both sizes
    const a = pointFromClick(61, 137, small);
    const b = pointFromClick(122, 274, large);
    expect(Math.abs(a.point[0] - b.point[0])).toBeLessThanOrEqual(1 / 200);
    expect(Math.abs(a.point[1] - b.point[1])).toBeLessThanOrEqual(1 / 200);
  });
});

describe("boxFromDrag", () => {
  it("maps a corner-to-corner drag to the full frame", () => {
    const spec = boxFromDrag(
      { clientX: 100, clientY: 50 },
      { clientX: 500, clientY: 450 },
      rect400,
    );
    expect(spec).not.toBeNull();
    expect(spec!.box).toEqual([0, 0, 1, 1]);
  });

  it("orders corners regardless of drag direction", () => {
    const spec = boxFromDrag(
      { clientX: 500, clientY: 450 },
      { clientX: 100, clientY: 50 },
      rect400,
    );
    expect(spec!.box).toEqual([0, 0, 1, 1]);
  });

  it("rejects a drag with no area", () => {
    const spec = boxFromDrag(
      { clientX: 200, clientY: 200 },
      { clientX: 200, clientY: 320 },
      rect400,
    );
    expect(spec).toBeNull();
  });
});

describe("scribbleFromPath", () => {
  it("normalizes a stroke and keeps the default radius", () => {
    const spec = scribbleFromPath(
      [
        { clientX: 100, clientY: 50 },
        { clientX: 300, clientY: 250 },
        { clientX: 500, clientY: 450 },
      ],
      rect400,
    );
    expect(spec).not.toBeNull();
    expect(spec!.radius).toBe(DEFAULT_SCRIBBLE_RADIUS);
    expect(spec!.points).toEqual([
      [0, 0],
      [0.5, 0.5],
      [1, 1],
    ]);
  });

  it("collapses consecutive duplicate positions", () => {
    const spec = scribbleFromPath(
      [
        { clientX: 100, clientY: 50 },
        { clientX: 100, clientY: 50 },
        { clientX: 140, clientY: 90 },
        { clientX: 140, clientY: 90 },
      ],
      rect400,
    );
    expect(spec!.points).toHaveLength(2);
  });

  it("discards a stroke that never moves", () => {
    const spec = scribbleFromPath(
      [
        { clientX: 250, clientY: 250 },
        { clientX: 250, clientY: 250 },
        { clientX: 250, clientY: 250 },
      ],
      rect400,
    );
    expect(spec).toBeNull();
  });

  it("discards an empty path", () => {
    expect(scribbleFromPath([], rect400)).toBeNull();
  });
});

describe("toNormalized", () => {
  it("rounds to six decimals for stable request bodies", () => {
    const rect: SurfaceRect = { left: 0, top: 0, width: 3, height: 3 };
    const [x, y] = toNormalized(1, 2, rect);
    expect(x).toBe(0.333333);
    expect(y).toBe(0.666667);
  });
});
