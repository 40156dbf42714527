import { describe, expect, it } from "vitest";

import { forceLayout, layoutFor, mulberry32 } from "../src/layout.js";
import { PRISM_EDGES, prismSnapshot } from "./fixtures.js";

const CUBE_EDGES: Array<[number, number]> = [
  [0, 1], [0, 2], [1, 3], [2, 3], [4, 5], [4, 6], [5, 7], [6, 7],
  [0, 4], [1, 5], [2, 6], [3, 7],
];

describe("mulberry32", () => {
  it("is deterministic per seed", () => {
    const a = mulberry32(7);
    const b = mulberry32(7);
    const c = mulberry32(8);
    const seqA = [a(), a(), a()];
    const seqB = [b(), b(), b()];
    expect(seqA).toEqual(seqB);
    expect(seqA).not.toEqual([c(), c(), c()]);
  });

  it("stays in [0, 1)", () => {
    const rand = mulberry32(123);
    for (let i = 0; i < 100; i++) {
      const x = rand();
      expect(x).toBeGreaterThanOrEqual(0);
      expect(x).toBeLessThan(1);
    }
  });
});

describe("layoutFor", () => {
  it("uses the fixed prism coordinates", () => {
    const pts = layoutFor(prismSnapshot().graph);
    expect(pts).toHaveLength(6);
    // nested triangles: outer vertex 0 sits above inner vertex 3
    expect(pts[0].x).toBeCloseTo(pts[3].x);
    expect(pts[0].y).toBeLessThan(pts[3].y);
  });

  it("uses the fixed cube coordinates", () => {
    const pts = layoutFor({ n: 8, edges: CUBE_EDGES, labels: [] });
    expect(pts).toHaveLength(8);
    expect(new Set(pts.map((p) => `${p.x},${p.y}`)).size).toBe(8);
  });

  it("recognizes the prism regardless of edge order", () => {
    const shuffled = [...PRISM_EDGES].reverse();
    const a = layoutFor({ n: 6, edges: PRISM_EDGES, labels: [] });
    const b = layoutFor({ n: 6, edges: shuffled, labels: [] });
    expect(a).toEqual(b);
  });
});

describe("forceLayout", () => {
  const graph = {
    n: 7,
    edges: [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 6], [6, 0]] as Array<
      [number, number]
    >,
    labels: [],
  };

  it("is deterministic for a fixed seed", () => {
    expect(forceLayout(graph, 7)).toEqual(forceLayout(graph, 7));
  });

  it("keeps every vertex inside the unit box", () => {
    for (const p of forceLayout(graph, 3)) {
      expect(p.x).toBeGreaterThanOrEqual(0.05);
      expect(p.x).toBeLessThanOrEqual(0.95);
      expect(p.y).toBeGreaterThanOrEqual(0.05);
      expect(p.y).toBeLessThanOrEqual(0.95);
    }
  });

  it("separates the vertices", () => {
    const pts = forceLayout(graph, 7);
    for (let u = 0; u < pts.length; u++) {
      for (let v = u + 1; v < pts.length; v++) {
        const d = Math.hypot(pts[u].x - pts[v].x, pts[u].y - pts[v].y);
        expect(d).toBeGreaterThan(0.02);
      }
    }
  });

  it("handles a single vertex", () => {
    expect(forceLayout({ n: 1, edges: [], labels: [] })).toEqual([
      { x: 0.5, y: 0.5 },
    ]);
  });
});
