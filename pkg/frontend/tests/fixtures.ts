import type { Snapshot } from "../src/types.js";

export const PRISM_EDGES: Array<[number, number]> = [
  [0, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5], [0, 3], [1, 4], [2, 5],
];

export function prismSnapshot(overrides: Partial<Snapshot> = {}): Snapshot {
  return {
    id: "abc123",
    graph: {
      n: 6,
      edges: PRISM_EDGES,
      labels: ["1", "2", "3", "4", "5", "6"],
    },
    human_role: "painter",
    engine: "exact",
    hints: false,
    remaining: [0, 1, 2, 3, 4, 5],
    score: 0,
    moves: [],
    pending: { role: "painter", mark: [0, 1, 2, 3, 4, 5] },
    finished: false,
    ...overrides,
  };
}
