/** Page wiring: inputs, preset buttons, run, three panels, trace stepper. */

import { ApiClient } from "./api.js";
import { renderPanel } from "./render.js";
import {
  applyPreset,
  canRun,
  clampCursor,
  initialState,
  panelModels,
  runKFactor,
  stepHighlight,
  UiState,
} from "./state.js";

let state: UiState = initialState();

const el = {
  sequence: document.getElementById("sequence") as HTMLInputElement,
  k: document.getElementById("k") as HTMLInputElement,
  seed: document.getElementById("seed") as HTMLInputElement,
  apiBase: document.getElementById("api-base") as HTMLInputElement,
  run: document.getElementById("run") as HTMLButtonElement,
  presetConnected: document.getElementById("preset-connected") as HTMLButtonElement,
  presetDisconnected: document.getElementById("preset-disconnected") as HTMLButtonElement,
  error: document.getElementById("error") as HTMLDivElement,
  panels: document.getElementById("panels") as HTMLDivElement,
  trace: document.getElementById("trace") as HTMLDivElement,
  tracePrev: document.getElementById("trace-prev") as HTMLButtonElement,
  traceNext: document.getElementById("trace-next") as HTMLButtonElement,
  traceLabel: document.getElementById("trace-label") as HTMLSpanElement,
  stats: document.getElementById("stats") as HTMLDivElement,
};

function client(): ApiClient {
  return new ApiClient(el.apiBase.value.trim());
}

function syncStateFromInputs(): void {
  state = {
    ...state,
    sequenceText: el.sequence.value,
    kText: el.k.value,
    seedText: el.seed.value,
  };
}

function render(): void {
  el.sequence.value = state.sequenceText;
  el.k.value = state.kText;
  el.seed.value = state.seedText;
  el.run.disabled = !canRun(state);
  el.presetConnected.disabled = state.inFlight;
  el.presetDisconnected.disabled = state.inFlight;

  el.error.textContent = state.error ?? "";
  el.error.hidden = state.error === null;

  el.panels.replaceChildren();
  if (state.last) {
    const resp = state.last;
    const highlight = stepHighlight(resp, state.traceCursor);
    const layoutSeed = resp.seed ?? resp.sequence.length * 7919;
    for (const panel of panelModels(resp)) {
      const holder = document.createElement("div");
      holder.className = "panel";
      holder.id = `panel-${panel.id}`;
      renderPanel(holder, panel, layoutSeed, highlight);
      el.panels.appendChild(holder);
    }

    const c = resp.counters;
    el.stats.textContent =
      `rao: ${resp.report.rao_verdict}` +
      (resp.report.witness_s !== null ? ` (violated at s=${resp.report.witness_s})` : "") +
      ` | shared edges: ${c.initial_shared_edges} | switches: ${c.switch_count}` +
      ` | elapsed: ${resp.elapsed_ms} ms | backend ${resp.version}`;

    el.trace.hidden = resp.trace.length === 0;
    el.tracePrev.disabled = state.traceCursor <= 0;
    el.traceNext.disabled = state.traceCursor >= resp.trace.length;
    el.traceLabel.textContent = highlight
      ? highlight.label
      : `trace: ${resp.trace.length} switch${resp.trace.length === 1 ? "" : "es"} (step through to highlight)`;
  } else {
    el.stats.textContent = "";
    el.trace.hidden = true;
  }
}

async function withFlight(action: () => Promise<UiState>): Promise<void> {
  syncStateFromInputs();
  state = { ...state, inFlight: true, error: null };
  render();
  state = await action();
  render();
}

el.run.addEventListener("click", () => {
  void withFlight(() => runKFactor(state, client()));
});
el.presetConnected.addEventListener("click", () => {
  void withFlight(() => applyPreset(state, client(), "connected"));
});
el.presetDisconnected.addEventListener("click", () => {
  void withFlight(() => applyPreset(state, client(), "disconnected"));
});
el.tracePrev.addEventListener("click", () => {
  if (!state.last) return;
  state = {
    ...state,
    traceCursor: clampCursor(state.traceCursor - 1, state.last.trace.length),
  };
  render();
});
el.traceNext.addEventListener("click", () => {
  if (!state.last) return;
  state = {
    ...state,
    traceCursor: clampCursor(state.traceCursor + 1, state.last.trace.length),
  };
  render();
});
for (const input of [el.sequence, el.k, el.seed]) {
  input.addEventListener("input", () => {
    syncStateFromInputs();
    el.run.disabled = !canRun(state);
  });
}

render();
