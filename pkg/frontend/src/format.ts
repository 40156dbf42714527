import type { ApiError, MovePayload, Snapshot } from "./types.js";
import { label } from "./selection.js";

export interface RoundRow {
  round: number;
  marked: string[];
  deleted: string[];
  scoreAfter: number;
}

/** Transcript timeline rows with running score. */
export function roundRows(snapshot: Snapshot): RoundRow[] {
  let score = 0;
  return snapshot.moves.map((move: MovePayload, i: number) => {
    score += move.marked.length;
    return {
      round: i + 1,
      marked: move.marked.map((v) => label(snapshot, v)),
      deleted: move.deleted.map((v) => label(snapshot, v)),
      scoreAfter: score,
    };
  });
}

/** The displayed score must equal what the transcript adds up to. */
export function transcriptScore(moves: MovePayload[]): number {
  return moves.reduce((acc, m) => acc + m.marked.length, 0);
}

export interface Banner {
  headline: string;
  detail: string | null;
  badge: string | null;
}

export function finalBanner(snapshot: Snapshot): Banner | null {
  if (!snapshot.finished) return null;
  const score = snapshot.final_score ?? snapshot.score;
  const bound = snapshot.bound ?? null;
  if (!bound) {
    return { headline: `final score ${score}`, detail: null, badge: null };
  }
  const comparison = bound.met ? "bound met" : "bound NOT met";
  return {
    headline: `final score ${score} / bound ${bound.claim}`,
    detail: `score ≥ 3n/2 + k: ${comparison}`,
    badge: bound.sharp ? "sharp instance" : null,
  };
}

export function statusLine(snapshot: Snapshot): string {
  if (snapshot.finished) return "game over";
  if (!snapshot.pending) return "waiting";
  if (snapshot.pending.role !== snapshot.human_role) return "engine is thinking";
  if (snapshot.pending.mark !== undefined) {
    const marked = snapshot.pending.mark.map((v) => label(snapshot, v)).join(", ");
    return `engine marked {${marked}} — pick a maximal independent subset to delete`;
  }
  return "your turn — mark a nonempty set of remaining vertices";
}

/** Inline text for a server rejection, naming the addable vertex. */
export function rejectionText(err: ApiError, snapshot: Snapshot | null): string {
  if (err.error === "not-maximal" && err.addable !== undefined) {
    const name = snapshot ? label(snapshot, err.addable) : String(err.addable);
    return `not maximal: vertex ${name} could still be deleted`;
  }
  if (err.detail) return `${err.error}: ${err.detail}`;
  return err.error;
}
