/** Seeded force-directed layout.
 *
 * Positions are a pure function of (n, edges, seed, size): initial spots
 * come from a seeded PRNG and the simulation runs a fixed number of
 * iterations, so the same response always renders the same picture.
 */

import type { Edge } from "./api.js";

export interface Point {
  x: number;
  y: number;
}

/** Deterministic 32-bit PRNG (mulberry32). */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function forceLayout(
  n: number,
  edges: Edge[],
  seed: number,
  width: number,
  height: number,
  iterations = 150,
): Point[] {
  const rng = mulberry32(seed ^ (n * 2654435761));
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) * 0.38;
  const pts: Point[] = [];
  for (let i = 0; i < n; i++) {
    const angle = (2 * Math.PI * i) / n + (rng() - 0.5) * 0.4;
    const r = radius * (0.55 + 0.45 * rng());
    pts.push({ x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  }
  if (n === 1) {
    return [{ x: cx, y: cy }];
  }

  const area = width * height;
  const ideal = Math.sqrt(area / n) * 0.7;
  const maxStep = Math.min(width, height) / 12;

  for (let iter = 0; iter < iterations; iter++) {
    const cooling = 1 - iter / iterations;
    const disp: Point[] = pts.map(() => ({ x: 0, y: 0 }));

    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let dx = pts[i].x - pts[j].x;
        let dy = pts[i].y - pts[j].y;
        let d2 = dx * dx + dy * dy;
        if (d2 < 1e-6) {
          // split coincident points deterministically
          dx = 0.01 * (i - j);
          dy = 0.01;
          d2 = dx * dx + dy * dy;
        }
        const repulse = (ideal * ideal) / d2;
        disp[i].x += dx * repulse;
        disp[i].y += dy * repulse;
        disp[j].x -= dx * repulse;
        disp[j].y -= dy * repulse;
      }
    }

    for (const [u, v] of edges) {
      const dx = pts[u].x - pts[v].x;
      const dy = pts[u].y - pts[v].y;
      const dist = Math.sqrt(dx * dx + dy * dy) || 1e-3;
      const attract = (dist - ideal) / dist * 0.08;
      disp[u].x -= dx * attract;
      disp[u].y -= dy * attract;
      disp[v].x += dx * attract;
      disp[v].y += dy * attract;
    }

    for (let i = 0; i < n; i++) {
      // weak pull to the center keeps disconnected pieces on screen
      disp[i].x += (cx - pts[i].x) * 0.01;
      disp[i].y += (cy - pts[i].y) * 0.01;
      const len = Math.sqrt(disp[i].x ** 2 + disp[i].y ** 2) || 1e-9;
      const step = Math.min(len, maxStep * cooling);
      pts[i].x += (disp[i].x / len) * step;
      pts[i].y += (disp[i].y / len) * step;
      pts[i].x = Math.min(width - 14, Math.max(14, pts[i].x));
      pts[i].y = Math.min(height - 14, Math.max(14, pts[i].y));
    }
  }
  return pts;
}
