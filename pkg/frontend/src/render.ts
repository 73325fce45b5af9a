/** SVG rendering of one graph panel plus trace highlights. */

import type { Edge } from "./api.js";
import { forceLayout, Point } from "./layout.js";
import type { PanelModel, TraceHighlight } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";
export const PANEL_WIDTH = 340;
export const PANEL_HEIGHT = 300;

function svgElement<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

function drawEdges(
  svg: SVGSVGElement,
  edges: Edge[],
  pts: Point[],
  className: string,
): void {
  for (const [u, v] of edges) {
    const line = svgElement("line", {
      x1: pts[u].x,
      y1: pts[u].y,
      x2: pts[v].x,
      y2: pts[v].y,
      class: className,
    });
    svg.appendChild(line);
  }
}

export function renderPanel(
  container: HTMLElement,
  panel: PanelModel,
  seed: number,
  highlight: TraceHighlight | null,
): void {
  container.replaceChildren();

  const header = document.createElement("div");
  header.className = "panel-header";
  const title = document.createElement("span");
  title.textContent = `${panel.title} - ${panel.edgeCount} edge${panel.edgeCount === 1 ? "" : "s"}`;
  header.appendChild(title);
  if (panel.badge !== null) {
    const badge = document.createElement("span");
    badge.className = panel.badge === 1 ? "badge badge-one" : "badge badge-many";
    badge.dataset.testid = "component-badge";
    badge.textContent = `${panel.badge} component${panel.badge === 1 ? "" : "s"}`;
    header.appendChild(badge);
  }
  container.appendChild(header);

  const pts = forceLayout(
    panel.graph.n,
    panel.graph.edges,
    seed,
    PANEL_WIDTH,
    PANEL_HEIGHT,
  );
  const svg = svgElement("svg", {
    viewBox: `0 0 ${PANEL_WIDTH} ${PANEL_HEIGHT}`,
    class: "graph-canvas",
  });

  drawEdges(svg, panel.graph.edges, pts, "edge");
  if (highlight && highlight.panelId === panel.id) {
    drawEdges(svg, highlight.removed, pts, "edge edge-removed");
    drawEdges(svg, highlight.added, pts, "edge edge-added");
  }

  pts.forEach((p, i) => {
    svg.appendChild(
      svgElement("circle", { cx: p.x, cy: p.y, r: 9, class: "vertex" }),
    );
    const label = svgElement("text", {
      x: p.x,
      y: p.y + 3.5,
      class: "vertex-label",
      "text-anchor": "middle",
    });
    label.textContent = String(i);
    svg.appendChild(label);
  });

  container.appendChild(svg);
}
