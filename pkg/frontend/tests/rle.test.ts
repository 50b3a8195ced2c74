// The decoder must agree bit for bit with the service's encoder. The
// vectors file is generated by the backend and checked by its test suite
// too, so both sides are pinned to the same bytes.

import { describe, expect, it } from "vitest";
import { readFileSync } from "node:fs";
import { resolve } from "node:path";
import { decodeRle, maskArea, maskCentroid, maskToImageData, type RleMask } from "../src/rle";

interface RleVector {
  name: string;
  rle: RleMask;
  pixels: string[];
}

// vitest runs with cwd at the frontend root; the vectors live one level up
const vectorPath = resolve(process.cwd(), "../shared/test_vectors.json");
const vectors = JSON.parse(readFileSync(vectorPath, "utf-8")) as {
  rle: RleVector[];
};

function pixelsToBytes(pixels: string[]): Uint8Array {
  const height = pixels.length;
  const width = pixels[0].length;
  const out = new Uint8Array(height * width);
  for (let y = 0; y < height; y++) {
    for (let x = 0; x < width; x++) {
      out[y * width + x] = pixels[y][x] === "1" ? 1 : 0;
    }
  }
  return out;
}

describe("decodeRle against the shared vectors", () => {
  for (const vec of vectors.rle) {
    it(`decodes ${vec.name} exactly`, () => {
      const mask = decodeRle(vec.rle);
      expect(mask.height).toBe(vec.rle.size[0]);
      expect(mask.width).toBe(vec.rle.size[1]);
      expect(mask.data).toEqual(pixelsToBytes(vec.pixels));
    });
  }

  it("covers every vector in the file", () => {
    expect(vectors.rle.length).toBeGreaterThanOrEqual(10);
  });
});

describe("decodeRle validation", () => {
  it("rejects runs that overflow the mask", () => {
    expect(() =>
      decodeRle({ size: [2, 2], runs: [[0, 3], [1, 3]] }),
    ).toThrow(/overflow/);
  });

  it("rejects runs that come up short", () => {
    expect(() => decodeRle({ size: [2, 2], runs: [[1, 3]] })).toThrow(/cover/);
  });

  it("rejects non-binary values and bad lengths", () => {
    expect(() => decodeRle({ size: [1, 2], runs: [[2, 2]] })).toThrow(/value/);
    expect(() => decodeRle({ size: [1, 2], runs: [[0, 0], [1, 2]] })).toThrow(
      /length/,
    );
    expect(() => decodeRle({ size: [0, 4], runs: [] })).toThrow(/size/);
  });

  it("accepts repeated values, not just alternating runs", () => {
    const mask = decodeRle({ size: [1, 4], runs: [[1, 1], [1, 1], [0, 2]] });
    expect(Array.from(mask.data)).toEqual([1, 1, 0, 0]);
  });
});

describe("mask helpers", () => {
  const plus = decodeRle({
    size: [3, 3],
    runs: [[0, 1], [1, 1], [0, 1], [1, 3], [0, 1], [1, 1], [0, 1]],
  });

  it("counts area", () => {
    expect(maskArea(plus)).toBe(5);
  });

  it("finds the centroid of a symmetric mask at its center", () => {
    expect(maskCentroid(plus)).toEqual({ x: 1, y: 1 });
  });

  it("returns null centroid for an empty mask", () => {
    const empty = decodeRle({ size: [2, 2], runs: [[0, 4]] });
    expect(maskCentroid(empty)).toBeNull();
  });

  it("paints only mask pixels into the image buffer", () => {
    const img = maskToImageData(plus, { r: 10, g: 20, b: 30, a: 128 });
    expect(img.width).toBe(3);
    expect(img.height).toBe(3);
    // corner (0,0) is off, center (1,1) is on
    expect(Array.from(img.data.slice(0, 4))).toEqual([0, 0, 0, 0]);
    expect(Array.from(img.data.slice(4 * 4, 4 * 4 + 4))).toEqual([
      10, 20, 30, 128,
    ]);
  });
});
