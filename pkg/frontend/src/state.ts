// Session state and the pure logic around it. Everything that decides what
// gets sent to the service lives here, DOM-free, so tests can drive it
// directly.

import type { PromptSpec } from "./prompts";
import type { SegmentRequest, ExamplePayload } from "./api";

export type Mode = "generic" | "referring";
export type Tool = "point" | "box" | "scribble";

export interface ExampleEntry {
  id: number;
  prompts: PromptSpec[];
  concept: string;
  enabled: boolean;
  label: string;
}

export interface SessionState {
  imageB64: string | null;
  imageWidth: number;
  imageHeight: number;
  mode: Mode;
  tool: Tool;
  examples: ExampleEntry[];
  nextId: number;
  nIncontext: number;
  scoreThreshold: number;
  seed: number;
  /** Every category the server's bank offers (empty until fetched). */
  bankNames: string[];
  /** The user's selection among bankNames; null means all of them. */
  bankSelected: string[] | null;
}

export function initialState(): SessionState {
  return {
    imageB64: null,
    imageWidth: 0,
    imageHeight: 0,
    mode: "generic",
    tool: "scribble",
    examples: [],
    nextId: 1,
    nIncontext: 16,
    scoreThreshold: 0.25,
    seed: 0,
    bankNames: [],
    bankSelected: null,
  };
}

export function addExample(
  state: SessionState,
  prompts: PromptSpec[],
  label: string,
  concept: string = "0",
): ExampleEntry {
  const entry: ExampleEntry = {
    id: state.nextId,
    prompts,
    concept,
    enabled: true,
    label,
  };
  state.nextId += 1;
  state.examples.push(entry);
  return entry;
}

export function toggleExample(state: SessionState, id: number): void {
  const entry = state.examples.find((e) => e.id === id);
  if (entry) entry.enabled = !entry.enabled;
}

export function removeExample(state: SessionState, id: number): void {
  state.examples = state.examples.filter((e) => e.id !== id);
}

export function enabledExamples(state: SessionState): ExampleEntry[] {
  return state.examples.filter((e) => e.enabled);
}

/** The bank categories a request would name: the selection, or all known. */
export function bankCategoriesFor(state: SessionState): string[] {
  return state.bankSelected ?? state.bankNames;
}

/**
 * Whether a segment request makes sense right now. Referring mode needs at
 * least one active example. Generic mode runs off drawn examples too, or,
 * with none, off the server's prompt bank, which the wire format addresses
 * by category name: no examples and no usable names means nothing to ask.
 */
export function canSegment(state: SessionState): boolean {
  if (!state.imageB64) return false;
  if (enabledExamples(state).length > 0) return true;
  return state.mode === "generic" && bankCategoriesFor(state).length > 0;
}

/**
 * The exact /v1/segment body for the current state. Pure: the same state
 * always yields the same object, so request bodies are reproducible.
 *
 * Drawn examples take precedence over the bank; the service would prefer
 * bank_categories if both were sent, so it is null unless examples are
 * absent.
 */
export function buildRequest(state: SessionState): SegmentRequest {
  if (!state.imageB64) throw new Error("no image loaded");
  const examples: ExamplePayload[] = enabledExamples(state).map((e) => ({
    image_id: "target",
    prompts: e.prompts,
    concept: e.concept,
  }));
  const useBank = state.mode === "generic" && examples.length === 0;
  return {
    image: state.imageB64,
    mode: state.mode,
    examples,
    bank_categories: useBank ? bankCategoriesFor(state) : null,
    options: {
      n_incontext: state.nIncontext,
      score_threshold: state.scoreThreshold,
      seed: state.seed,
    },
  };
}
