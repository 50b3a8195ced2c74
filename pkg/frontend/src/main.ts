// App assembly: wires the drawing surface, example list, and service client
// together. All segmentation logic lives server-side; this page only maps
// gestures to prompts and paints what comes back.

import { SegmentClient, isAbort, type SegmentResponse } from "./api";
import {
  pointFromClick,
  boxFromDrag,
  scribbleFromPath,
  describePrompt,
  type PromptSpec,
  type SurfaceRect,
} from "./prompts";
import {
  initialState,
  addExample,
  toggleExample,
  removeExample,
  canSegment,
  buildRequest,
  type SessionState,
  type Tool,
  type Mode,
} from "./state";
import { composeOverlay, colorFor } from "./overlay";
import {
  SAMPLE_SCENE_B64,
  SAMPLE_SCENE_WIDTH,
  SAMPLE_SCENE_HEIGHT,
} from "./scene";

export interface AppHandles {
  state: SessionState;
  client: SegmentClient;
  root: HTMLElement;
  /** Resolves once the bank category list has been fetched (or failed). */
  bankReady: Promise<void>;
  loadSampleScene(): void;
  loadSceneFromB64(b64: string, width: number, height: number): void;
  segmentNow(): Promise<void>;
}

interface Stroke {
  path: { clientX: number; clientY: number }[];
  active: boolean;
}

export function initApp(
  root: HTMLElement,
  opts: { client?: SegmentClient } = {},
): AppHandles {
  const state = initialState();
  const client = opts.client ?? new SegmentClient();

  root.innerHTML = `
    <header>
      <h1>ctxseg studio</h1>
      <span class="status" data-role="status">no scene loaded</span>
    </header>
    <div class="banner" data-role="banner" hidden></div>
    <div class="toast" data-role="toast" hidden></div>
    <div class="toolbar">
      <label>mode
        <select data-role="mode">
          <option value="generic">generic</option>
          <option value="referring">referring</option>
        </select>
      </label>
      <label>tool
        <select data-role="tool">
          <option value="scribble">scribble</option>
          <option value="point">point</option>
          <option value="box">box</option>
        </select>
      </label>
      <label>examples per query
        <input data-role="n-incontext" type="number" min="1" max="64" value="16">
      </label>
      <button data-role="segment" disabled>Segment</button>
      <button data-role="clear">Clear examples</button>
      <button data-role="sample">Load sample scene</button>
    </div>
    <div class="workspace">
      <div class="stage" data-role="stage">
        <canvas data-role="scene"></canvas>
        <canvas data-role="overlay"></canvas>
        <canvas data-role="draw"></canvas>
        <div class="labels" data-role="labels"></div>
      </div>
      <aside class="sidebar">
        <h2>Examples</h2>
        <ul class="examples" data-role="examples"></ul>
        <h2>Bank categories</h2>
        <div class="bank" data-role="bank"><span class="muted">loading...</span></div>
      </aside>
    </div>
  `;

  const el = <T extends HTMLElement>(role: string): T =>
    root.querySelector(`[data-role="${role}"]`) as T;

  const status = el<HTMLSpanElement>("status");
  const banner = el<HTMLDivElement>("banner");
  const toast = el<HTMLDivElement>("toast");
  const modeSelect = el<HTMLSelectElement>("mode");
  const toolSelect = el<HTMLSelectElement>("tool");
  const nInput = el<HTMLInputElement>("n-incontext");
  const segmentButton = el<HTMLButtonElement>("segment");
  const clearButton = el<HTMLButtonElement>("clear");
  const sampleButton = el<HTMLButtonElement>("sample");
  const sceneCanvas = el<HTMLCanvasElement>("scene");
  const overlayCanvas = el<HTMLCanvasElement>("overlay");
  const drawCanvas = el<HTMLCanvasElement>("draw");
  const labelsDiv = el<HTMLDivElement>("labels");
  const examplesList = el<HTMLUListElement>("examples");
  const bankDiv = el<HTMLDivElement>("bank");

  let toastTimer: ReturnType<typeof setTimeout> | null = null;

  function showToast(message: string): void {
    toast.textContent = message;
    toast.hidden = false;
    if (toastTimer) clearTimeout(toastTimer);
    toastTimer = setTimeout(() => {
      toast.hidden = true;
    }, 2500);
  }

  function showError(message: string): void {
    banner.textContent = message;
    banner.hidden = false;
  }

  function clearError(): void {
    banner.hidden = true;
    banner.textContent = "";
  }

  function surfaceRect(): SurfaceRect {
    const r = drawCanvas.getBoundingClientRect();
    return { left: r.left, top: r.top, width: r.width, height: r.height };
  }

  function updateControls(): void {
    segmentButton.disabled = !canSegment(state);
  }

  function renderExamples(): void {
    examplesList.innerHTML = "";
    state.examples.forEach((entry, i) => {
      const li = document.createElement("li");
      const color = colorFor(i);
      li.innerHTML = `
        <label>
          <input type="checkbox" ${entry.enabled ? "checked" : ""}>
          <span class="swatch" style="background: rgb(${color.r},${color.g},${color.b})"></span>
          <span>${entry.label}</span>
        </label>
        <button class="remove" title="remove">x</button>
      `;
      const checkbox = li.querySelector("input") as HTMLInputElement;
      checkbox.addEventListener("change", () => {
        toggleExample(state, entry.id);
        updateControls();
      });
      (li.querySelector(".remove") as HTMLButtonElement).addEventListener(
        "click",
        () => {
          removeExample(state, entry.id);
          renderExamples();
          redrawPrompts();
          updateControls();
        },
      );
      examplesList.appendChild(li);
    });
    updateControls();
  }

  function redrawPrompts(): void {
    const ctx = drawCanvas.getContext("2d");
    if (!ctx) return;
    ctx.clearRect(0, 0, drawCanvas.width, drawCanvas.height);
    const w = drawCanvas.width;
    const h = drawCanvas.height;
    state.examples.forEach((entry, i) => {
      const c = colorFor(i);
      ctx.strokeStyle = `rgb(${c.r},${c.g},${c.b})`;
      ctx.fillStyle = ctx.strokeStyle;
      ctx.lineWidth = 2;
      for (const spec of entry.prompts) drawSpec(ctx, spec, w, h);
    });
  }

  function drawSpec(
    ctx: CanvasRenderingContext2D,
    spec: PromptSpec,
    w: number,
    h: number,
  ): void {
    if (spec.kind === "point") {
      ctx.beginPath();
      ctx.arc(spec.point[0] * w, spec.point[1] * h, 4, 0, Math.PI * 2);
      ctx.fill();
    } else if (spec.kind === "box") {
      const [x0, y0, x1, y1] = spec.box;
      ctx.strokeRect(x0 * w, y0 * h, (x1 - x0) * w, (y1 - y0) * h);
    } else if (spec.kind === "scribble") {
      ctx.beginPath();
      spec.points.forEach(([x, y], i) => {
        if (i === 0) ctx.moveTo(x * w, y * h);
        else ctx.lineTo(x * w, y * h);
      });
      ctx.stroke();
    }
    // mask prompts have no hand-drawn form; the overlay shows them
  }

  function setCanvasSizes(width: number, height: number): void {
    for (const canvas of [sceneCanvas, overlayCanvas, drawCanvas]) {
      canvas.width = width;
      canvas.height = height;
    }
  }

  function loadSceneFromB64(b64: string, width: number, height: number): void {
    state.imageB64 = b64;
    state.imageWidth = width;
    state.imageHeight = height;
    state.examples = [];
    setCanvasSizes(width, height);
    clearOverlay();
    renderExamples();
    redrawPrompts();
    status.textContent = `${width}x${height} scene loaded`;

    const ctx = sceneCanvas.getContext("2d");
    if (ctx) {
      const img = new Image();
      img.onload = () => ctx.drawImage(img, 0, 0);
      img.src = `data:image/png;base64,${b64}`;
    }
    updateControls();
  }

  function loadSampleScene(): void {
    loadSceneFromB64(SAMPLE_SCENE_B64, SAMPLE_SCENE_WIDTH, SAMPLE_SCENE_HEIGHT);
  }

  function clearOverlay(): void {
    const ctx = overlayCanvas.getContext("2d");
    if (ctx) ctx.clearRect(0, 0, overlayCanvas.width, overlayCanvas.height);
    labelsDiv.innerHTML = "";
    overlayCanvas.dataset.masks = "0";
  }

  function renderResponse(resp: SegmentResponse): void {
    clearOverlay();
    const { image, labels } = composeOverlay(
      resp.masks,
      state.imageWidth,
      state.imageHeight,
    );
    const ctx = overlayCanvas.getContext("2d");
    if (ctx) ctx.putImageData(image, 0, 0);
    for (const label of labels) {
      const span = document.createElement("span");
      span.className = "mask-label";
      span.textContent = label.text;
      span.style.left = `${(label.x / state.imageWidth) * 100}%`;
      span.style.top = `${(label.y / state.imageHeight) * 100}%`;
      labelsDiv.appendChild(span);
    }
    overlayCanvas.dataset.masks = String(resp.masks.length);
    status.textContent = `${resp.masks.length} masks in ${resp.timing_ms.toFixed(0)} ms`;
  }

  async function segmentNow(): Promise<void> {
    if (!canSegment(state)) return;
    clearError();
    status.textContent = "segmenting...";
    try {
      const resp = await client.segment(buildRequest(state));
      renderResponse(resp);
    } catch (err) {
      if (isAbort(err)) return; // superseded by a newer request
      status.textContent = "request failed";
      showError(err instanceof Error ? err.message : String(err));
    }
  }

  // -- gestures --------------------------------------------------------------

  const stroke: Stroke = { path: [], active: false };

  drawCanvas.addEventListener("pointerdown", (ev) => {
    if (!state.imageB64) return;
    stroke.active = true;
    stroke.path = [{ clientX: ev.clientX, clientY: ev.clientY }];
  });

  drawCanvas.addEventListener("pointermove", (ev) => {
    if (!stroke.active) return;
    stroke.path.push({ clientX: ev.clientX, clientY: ev.clientY });
  });

  drawCanvas.addEventListener("pointerup", (ev) => {
    if (!stroke.active) return;
    stroke.active = false;
    stroke.path.push({ clientX: ev.clientX, clientY: ev.clientY });
    finishStroke(stroke.path, state.tool);
  });

  function finishStroke(
    path: { clientX: number; clientY: number }[],
    tool: Tool,
  ): void {
    const rect = surfaceRect();
    let spec: PromptSpec | null = null;
    if (tool === "point") {
      const last = path[path.length - 1];
      spec = pointFromClick(last.clientX, last.clientY, rect);
    } else if (tool === "box") {
      spec = boxFromDrag(path[0], path[path.length - 1], rect);
      if (!spec) {
        showToast("drag across the object to draw a box");
        return;
      }
    } else {
      spec = scribbleFromPath(path, rect);
      if (!spec) {
        showToast("scribble discarded: draw a stroke, not a click");
        return;
      }
    }
    addExample(state, [spec], describePrompt(spec));
    renderExamples();
    redrawPrompts();
  }

  // -- controls --------------------------------------------------------------

  modeSelect.addEventListener("change", () => {
    state.mode = modeSelect.value as Mode;
    updateControls();
  });

  toolSelect.addEventListener("change", () => {
    state.tool = toolSelect.value as Tool;
  });

  nInput.addEventListener("change", () => {
    const n = parseInt(nInput.value, 10);
    if (Number.isFinite(n) && n >= 1) state.nIncontext = n;
  });

  segmentButton.addEventListener("click", () => {
    void segmentNow();
  });

  clearButton.addEventListener("click", () => {
    state.examples = [];
    renderExamples();
    redrawPrompts();
    clearOverlay();
  });

  sampleButton.addEventListener("click", loadSampleScene);

  // -- bank ------------------------------------------------------------------

  const bankReady = (async () => {
    try {
      const categories = await client.bankCategories();
      state.bankNames = categories.map((c) => c.name);
      bankDiv.innerHTML = "";
      if (categories.length === 0) {
        bankDiv.innerHTML = `<span class="muted">bank is empty</span>`;
      }
      for (const cat of categories) {
        const label = document.createElement("label");
        label.className = "bank-row";
        label.innerHTML = `<input type="checkbox" checked> ${cat.name} <span class="muted">(${cat.count})</span>`;
        const box = label.querySelector("input") as HTMLInputElement;
        box.addEventListener("change", () => {
          const checked = Array.from(
            bankDiv.querySelectorAll<HTMLInputElement>("input"),
          );
          const names = categories
            .filter((_, i) => checked[i].checked)
            .map((c) => c.name);
          state.bankSelected = names.length === categories.length ? null : names;
          updateControls();
        });
        bankDiv.appendChild(label);
      }
    } catch {
      bankDiv.innerHTML = `<span class="muted">bank unavailable</span>`;
    }
    updateControls();
  })();

  updateControls();

  return {
    state,
    client,
    root,
    bankReady,
    loadSampleScene,
    loadSceneFromB64,
    segmentNow,
  };
}

const mount = document.getElementById("app");
if (mount && !import.meta.env?.TEST) {
  initApp(mount);
}
