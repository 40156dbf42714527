import { describe, expect, it } from "vitest";

import {
  finalBanner,
  rejectionText,
  roundRows,
  statusLine,
  transcriptScore,
} from "../src/format.js";
import { prismSnapshot } from "./fixtures.js";

const FULL_GAME = [
  { marked: [0, 1, 2, 3, 4, 5], deleted: [2, 3] },
  { marked: [0, 1, 4, 5], deleted: [0, 4] },
  { marked: [1, 5], deleted: [1, 5] },
];

describe("transcript timeline", () => {
  it("shows per-round labels and running score", () => {
    const s = prismSnapshot({ moves: FULL_GAME, remaining: [], score: 12 });
    const rows = roundRows(s);
    expect(rows).toHaveLength(3);
    expect(rows[0]).toEqual({
      round: 1,
      marked: ["1", "2", "3", "4", "5", "6"],
      deleted: ["3", "4"],
      scoreAfter: 6,
    });
    expect(rows[2].scoreAfter).toBe(12);
  });

  it("transcript score equals the displayed score", () => {
    const s = prismSnapshot({
      moves: FULL_GAME,
      remaining: [],
      score: 12,
      finished: true,
      final_score: 12,
      pending: null,
    });
    expect(transcriptScore(s.moves)).toBe(s.final_score);
  });
});

describe("final banner", () => {
  it("absent while the game runs", () => {
    expect(finalBanner(prismSnapshot())).toBeNull();
  });

  it("reports the bound comparison", () => {
    const s = prismSnapshot({
      finished: true,
      pending: null,
      final_score: 12,
      score: 12,
      bound: { claim: 10, met: true, sharp: false },
    });
    const banner = finalBanner(s)!;
    expect(banner.headline).toBe("final score 12 / bound 10");
    expect(banner.detail).toMatch(/bound met/);
    expect(banner.badge).toBeNull();
  });

  it("shows the sharp badge only when the server says so", () => {
    const s = prismSnapshot({
      finished: true,
      pending: null,
      final_score: 10,
      score: 10,
      bound: { claim: 10, met: true, sharp: true },
    });
    expect(finalBanner(s)!.badge).toBe("sharp instance");
  });

  it("plain score when no bound applies", () => {
    const s = prismSnapshot({
      finished: true,
      pending: null,
      final_score: 4,
      score: 4,
      bound: null,
    });
    const banner = finalBanner(s)!;
    expect(banner.headline).toBe("final score 4");
    expect(banner.badge).toBeNull();
  });
});

describe("status line", () => {
  it("prompts the painter with the engine's mark", () => {
    expect(statusLine(prismSnapshot())).toMatch(/engine marked \{1, 2, 3, 4, 5, 6\}/);
  });

  it("prompts the lister to mark", () => {
    const s = prismSnapshot({ human_role: "lister", pending: { role: "lister" } });
    expect(statusLine(s)).toMatch(/nonempty/);
  });

  it("signals waiting and game over", () => {
    expect(statusLine(prismSnapshot({ pending: { role: "lister" } }))).toMatch(/engine/);
    expect(statusLine(prismSnapshot({ finished: true, pending: null }))).toBe("game over");
  });
});

describe("rejection text", () => {
  it("names the addable vertex by label", () => {
    const text = rejectionText(
      { status: 422, error: "not-maximal", addable: 4 },
      prismSnapshot(),
    );
    expect(text).toBe("not maximal: vertex 5 could still be deleted");
  });

  it("falls back to the raw index without a snapshot", () => {
    const text = rejectionText({ status: 422, error: "not-maximal", addable: 4 }, null);
    expect(text).toMatch(/vertex 4/);
  });

  it("renders generic errors verbatim", () => {
    expect(
      rejectionText({ status: 422, error: "invalid-graph", detail: "loop at 3" }, null),
    ).toBe("invalid-graph: loop at 3");
  });
});
