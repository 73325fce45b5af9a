/** View-model: all UI behavior that does not touch the DOM.
 *
 * Keeping this pure makes every advertised behavior testable: preset
 * buttons populate the inputs, panel edge counts mirror the payload, the
 * component badge mirrors the report, and the trace cursor stays in
 * range.
 */

import {
  ApiClient,
  ApiError,
  Edge,
  GraphPayload,
  KFactorResponse,
} from "./api.js";

export interface UiState {
  sequenceText: string;
  kText: string;
  seedText: string;
  inFlight: boolean;
  error: string | null;
  last: KFactorResponse | null;
  traceCursor: number;
}

export function initialState(): UiState {
  return {
    sequenceText: "3,3,2,2,2,2",
    kText: "2",
    seedText: "",
    inFlight: false,
    error: null,
    last: null,
    traceCursor: 0,
  };
}

export function parseSequenceText(text: string): number[] | null {
  const parts = text.split(/[\s,]+/).filter((p) => p.length > 0);
  if (parts.length === 0) return null;
  const values = parts.map((p) => Number(p));
  if (values.some((v) => !Number.isInteger(v) || v < 0)) return null;
  return values;
}

export function parsePositiveInt(text: string): number | null {
  const v = Number(text.trim());
  return Number.isInteger(v) && v >= 1 ? v : null;
}

export function canRun(state: UiState): boolean {
  return (
    !state.inFlight &&
    parseSequenceText(state.sequenceText) !== null &&
    parsePositiveInt(state.kText) !== null
  );
}

export function clampCursor(cursor: number, traceLength: number): number {
  return Math.max(0, Math.min(cursor, traceLength));
}

export type PanelId = "original" | "d_minus_k" | "factor";

export interface PanelModel {
  id: PanelId;
  title: string;
  graph: GraphPayload;
  edgeCount: number;
  badge: number | null; // component count, factor panel only
}

export function panelModels(resp: KFactorResponse): PanelModel[] {
  return [
    {
      id: "original",
      title: `realization of d (n=${resp.realization.n})`,
      graph: resp.realization,
      edgeCount: resp.realization.edges.length,
      badge: null,
    },
    {
      id: "d_minus_k",
      title: `graph A: d - ${resp.k}`,
      graph: resp.d_minus_k_graph,
      edgeCount: resp.d_minus_k_graph.edges.length,
      badge: null,
    },
    {
      id: "factor",
      title: `${resp.k}-factor`,
      graph: resp.factor,
      edgeCount: resp.factor.edges.length,
      badge: componentBadge(resp),
    },
  ];
}

export function componentBadge(resp: KFactorResponse): number {
  return resp.report.factor_components.length;
}

export interface TraceHighlight {
  panelId: PanelId;
  removed: Edge[];
  added: Edge[];
  label: string;
}

/** Highlight for the step just before the cursor (cursor 0 = nothing). */
export function stepHighlight(
  resp: KFactorResponse,
  cursor: number,
): TraceHighlight | null {
  if (cursor <= 0 || cursor > resp.trace.length) return null;
  const step = resp.trace[cursor - 1];
  const where: PanelId = step.target === "A" ? "d_minus_k" : "original";
  const note =
    step.target === "A" ? "switch in A" : "switch in B (complement shown)";
  return {
    panelId: where,
    removed: step.removed,
    added: step.added,
    label:
      `step ${cursor}/${resp.trace.length}: ${note}, ` +
      `removed ${formatEdges(step.removed)}, added ${formatEdges(step.added)}`,
  };
}

function formatEdges(edges: Edge[]): string {
  return edges.map(([u, v]) => `{${u},${v}}`).join(" ");
}

export async function runKFactor(
  state: UiState,
  client: ApiClient,
): Promise<UiState> {
  const seq = parseSequenceText(state.sequenceText);
  const k = parsePositiveInt(state.kText);
  if (seq === null || k === null) {
    return { ...state, error: "sequence and k must be nonnegative integers" };
  }
  try {
    const resp = await client.kfactor(seq, k);
    return { ...state, inFlight: false, error: null, last: resp, traceCursor: 0 };
  } catch (err) {
    const message =
      err instanceof ApiError ? `${err.code}: ${err.message}` : String(err);
    return { ...state, inFlight: false, error: message };
  }
}

/** Preset buttons: fetch a generated sequence and populate the inputs. */
export async function applyPreset(
  state: UiState,
  client: ApiClient,
  mode: "connected" | "disconnected",
  drawSeed: () => number = () => Math.floor(Math.random() * 2 ** 31),
): Promise<UiState> {
  const seed = parsePositiveInt(state.seedText) ?? drawSeed();
  const body =
    mode === "connected"
      ? { mode, a: 6, b: 5, k: 2, seed }
      : { mode, n: 16, k: 2, seed };
  try {
    const resp = await client.generate(body);
    return {
      ...state,
      inFlight: false,
      error: null,
      sequenceText: resp.sequence.join(","),
      kText: String(body.k),
      seedText: String(resp.seed),
    };
  } catch (err) {
    const message =
      err instanceof ApiError ? `${err.code}: ${err.message}` : String(err);
    return { ...state, inFlight: false, error: message };
  }
}
