// Request construction and the enable/disable bookkeeping around it.

import { describe, expect, it } from "vitest";
import {
  addExample,
  buildRequest,
  canSegment,
  initialState,
  removeExample,
  toggleExample,
  type SessionState,
} from "../src/state";
import type { PromptSpec } from "../src/prompts";

const scribble: PromptSpec = {
  kind: "scribble",
  points: [
    [0.1, 0.2],
    [0.3, 0.4],
  ],
  radius: 0.02,
};

const point: PromptSpec = { kind: "point", point: [0.5, 0.5] };

function loadedState(): SessionState {
  const s = initialState();
  s.imageB64 = "aGVsbG8=";
  s.imageWidth = 128;
  s.imageHeight = 128;
  return s;
}

describe("buildRequest", () => {
  it("produces identical bodies for identical state", () => {
    const make = () => {
      const s = loadedState();
      s.mode = "referring";
      addExample(s, [scribble], "scribble");
      addExample(s, [point], "point");
      return JSON.stringify(buildRequest(s));
    };
    expect(make()).toBe(make());
  });

  it("matches the wire format field for field", () => {
    const s = loadedState();
    s.mode = "referring";
    addExample(s, [scribble], "scribble");
    expect(buildRequest(s)).toEqual({
      image: "aGVsbG8=",
      mode: "referring",
      examples: [{ image_id: "target", prompts: [scribble], concept: "0" }],
      bank_categories: null,
      options: { n_incontext: 16, score_threshold: 0.25, seed: 0 },
    });
  });

  it("excludes disabled examples from the payload", () => {
    const s = loadedState();
    const first = addExample(s, [scribble], "scribble");
    addExample(s, [point], "point");
    toggleExample(s, first.id);
    const req = buildRequest(s);
    expect(req.examples).toHaveLength(1);
    expect(req.examples[0].prompts).toEqual([point]);
  });

  it("names bank categories only when generic mode has no examples", () => {
    const s = loadedState();
    s.bankNames = ["ring", "cross", "disc"];
    expect(buildRequest(s).bank_categories).toEqual(["ring", "cross", "disc"]);
    s.bankSelected = ["ring"];
    expect(buildRequest(s).bank_categories).toEqual(["ring"]);
    // a drawn example takes over from the bank
    addExample(s, [point], "point");
    expect(buildRequest(s).bank_categories).toBeNull();
    s.mode = "referring";
    expect(buildRequest(s).bank_categories).toBeNull();
  });

  it("refuses to build without an image", () => {
    expect(() => buildRequest(initialState())).toThrow(/no image/);
  });
});

describe("canSegment", () => {
  it("needs an image first", () => {
    expect(canSegment(initialState())).toBe(false);
  });

  it("allows generic mode with no examples once the bank is known", () => {
    const s = loadedState();
    expect(canSegment(s)).toBe(false); // nothing to query yet
    s.bankNames = ["ring"];
    expect(canSegment(s)).toBe(true);
    s.bankSelected = [];
    expect(canSegment(s)).toBe(false); // every category unticked
  });

  it("blocks referring mode when every example is toggled off", () => {
    const s = loadedState();
    s.mode = "referring";
    expect(canSegment(s)).toBe(false);
    const entry = addExample(s, [scribble], "scribble");
    expect(canSegment(s)).toBe(true);
    toggleExample(s, entry.id);
    expect(canSegment(s)).toBe(false);
    toggleExample(s, entry.id);
    expect(canSegment(s)).toBe(true);
  });

  it("treats removal like disabling", () => {
    const s = loadedState();
    s.mode = "referring";
    const entry = addExample(s, [scribble], "scribble");
    removeExample(s, entry.id);
    expect(canSegment(s)).toBe(false);
  });
});
