import type { GraphPayload } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

// Fixed coordinates for the two builtins people screenshot: the prism
// as nested triangles, the cube as nested squares. Unit box [0,1]^2.
const PRISM_POINTS: Point[] = [
  { x: 0.5, y: 0.08 },
  { x: 0.92, y: 0.82 },
  { x: 0.08, y: 0.82 },
  { x: 0.5, y: 0.32 },
  { x: 0.72, y: 0.66 },
  { x: 0.28, y: 0.66 },
];

const CUBE_POINTS: Point[] = [
  { x: 0.1, y: 0.1 },
  { x: 0.9, y: 0.1 },
  { x: 0.1, y: 0.9 },
  { x: 0.9, y: 0.9 },
  { x: 0.32, y: 0.32 },
  { x: 0.68, y: 0.32 },
  { x: 0.32, y: 0.68 },
  { x: 0.68, y: 0.68 },
];

function edgeKey(edges: Array<[number, number]>): string {
  return edges
    .map(([u, v]) => (u < v ? `${u}-${v}` : `${v}-${u}`))
    .sort()
    .join(",");
}

const PRISM_KEY = edgeKey([
  [0, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5], [0, 3], [1, 4], [2, 5],
]);
const CUBE_KEY = edgeKey([
  [0, 1], [0, 2], [1, 3], [2, 3], [4, 5], [4, 6], [5, 7], [6, 7],
  [0, 4], [1, 5], [2, 6], [3, 7],
]);

/** Deterministic 32-bit PRNG so force layouts are stable run to run. */
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

/**
 * Small spring embedder: neighbors attract, all pairs repel, everything
 * is pulled gently to the center. Seeded, fixed iteration count.
 */
export function forceLayout(graph: GraphPayload, seed = 7, iterations = 250): Point[] {
  const n = graph.n;
  if (n === 1) return [{ x: 0.5, y: 0.5 }];
  const rand = mulberry32(seed);
  const pts: Point[] = [];
  for (let v = 0; v < n; v++) {
    const angle = (2 * Math.PI * v) / n + rand() * 0.3;
    const radius = 0.3 + rand() * 0.1;
    pts.push({ x: 0.5 + radius * Math.cos(angle), y: 0.5 + radius * Math.sin(angle) });
  }
  const ideal = 0.8 / Math.sqrt(n);
  for (let step = 0; step < iterations; step++) {
    const cool = 0.05 * (1 - step / iterations) + 0.005;
    const fx = new Array<number>(n).fill(0);
    const fy = new Array<number>(n).fill(0);
    for (let u = 0; u < n; u++) {
      for (let v = u + 1; v < n; v++) {
        const dx = pts[u].x - pts[v].x;
        const dy = pts[u].y - pts[v].y;
        const d2 = Math.max(dx * dx + dy * dy, 1e-6);
        const push = (ideal * ideal) / d2;
        fx[u] += dx * push;
        fy[u] += dy * push;
        fx[v] -= dx * push;
        fy[v] -= dy * push;
      }
    }
    for (const [u, v] of graph.edges) {
      const dx = pts[u].x - pts[v].x;
      const dy = pts[u].y - pts[v].y;
      const d = Math.sqrt(Math.max(dx * dx + dy * dy, 1e-6));
      const pull = (d - ideal) / d;
      fx[u] -= dx * pull;
      fy[u] -= dy * pull;
      fx[v] += dx * pull;
      fy[v] += dy * pull;
    }
    for (let v = 0; v < n; v++) {
      fx[v] += (0.5 - pts[v].x) * 0.05;
      fy[v] += (0.5 - pts[v].y) * 0.05;
      pts[v].x = Math.min(0.95, Math.max(0.05, pts[v].x + fx[v] * cool));
      pts[v].y = Math.min(0.95, Math.max(0.05, pts[v].y + fy[v] * cool));
    }
  }
  return pts;
}

/** Fixed coordinates for recognized builtins, force layout otherwise. */
export function layoutFor(graph: GraphPayload, seed = 7): Point[] {
  const key = edgeKey(graph.edges);
  if (graph.n === 6 && key === PRISM_KEY) return PRISM_POINTS.map((p) => ({ ...p }));
  if (graph.n === 8 && key === CUBE_KEY) return CUBE_POINTS.map((p) => ({ ...p }));
  return forceLayout(graph, seed);
}
