// Compositing: the painted pixel set must be exactly the union of the
// decoded masks, with overlaps resolved toward the higher score.

import { describe, expect, it } from "vitest";
import { composeOverlay, colorFor, PALETTE } from "../src/overlay";
import { decodeRle } from "../src/rle";
import type { MaskResult } from "../src/api";

function result(rle: MaskResult["mask"], score: number): MaskResult {
  return { mask: rle, score, box: [0, 0, 1, 1], category: null, example_id: null };
}

// 4x4: left half / right half, plus one overlapping column
const leftHalf: MaskResult["mask"] = {
  size: [4, 4],
  runs: [[1, 2], [0, 2], [1, 2], [0, 2], [1, 2], [0, 2], [1, 2], [0, 2]],
};
const rightThree: MaskResult["mask"] = {
  size: [4, 4],
  runs: [[0, 1], [1, 3], [0, 1], [1, 3], [0, 1], [1, 3], [0, 1], [1, 3]],
};

describe("composeOverlay", () => {
  it("paints exactly the union of the decoded masks", () => {
    const { image } = composeOverlay(
      [result(leftHalf, 0.9), result(rightThree, 0.5)],
      4,
      4,
    );
    const a = decodeRle(leftHalf);
    const b = decodeRle(rightThree);
    for (let p = 0; p < 16; p++) {
      const painted = image.data[p * 4 + 3] !== 0;
      expect(painted).toBe(Boolean(a.data[p] || b.data[p]));
    }
  });

  it("keeps the stronger mask's color where masks overlap", () => {
    const { image } = composeOverlay(
      [result(leftHalf, 0.9), result(rightThree, 0.5)],
      4,
      4,
    );
    // column 1 is claimed by both; results arrive sorted by score, so the
    // first (stronger) color must win
    const o = (0 * 4 + 1) * 4;
    expect(image.data[o]).toBe(colorFor(0).r);
    expect(image.data[o + 1]).toBe(colorFor(0).g);
    expect(image.data[o + 2]).toBe(colorFor(0).b);
  });

  it("labels each non-empty mask with its score", () => {
    const { labels } = composeOverlay(
      [result(leftHalf, 0.87), result(rightThree, 0.42)],
      4,
      4,
    );
    expect(labels).toHaveLength(2);
    expect(labels[0].text).toBe("0.87");
    expect(labels[1].text).toBe("0.42");
  });

  it("prefixes the category name when present", () => {
    const named = { ...result(leftHalf, 0.5), category: "ring" };
    const { labels } = composeOverlay([named], 4, 4);
    expect(labels[0].text).toBe("ring 0.50");
  });

  it("rejects masks whose size disagrees with the image", () => {
    expect(() => composeOverlay([result(leftHalf, 0.5)], 8, 8)).toThrow(
      /4x4/,
    );
  });

  it("cycles the palette beyond its length", () => {
    expect(colorFor(PALETTE.length + 2)).toEqual(PALETTE[2]);
  });
});
