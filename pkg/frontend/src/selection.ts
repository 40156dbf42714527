import type { GraphPayload, Snapshot } from "./types.js";

/** Symmetric adjacency lookup keyed "u:v" with u < v. */
export function edgeIndex(graph: GraphPayload): Set<string> {
  const idx = new Set<string>();
  for (const [u, v] of graph.edges) {
    idx.add(u < v ? `${u}:${v}` : `${v}:${u}`);
  }
  return idx;
}

export function adjacent(idx: Set<string>, u: number, v: number): boolean {
  return idx.has(u < v ? `${u}:${v}` : `${v}:${u}`);
}

export function isIndependent(idx: Set<string>, vertices: number[]): boolean {
  for (let i = 0; i < vertices.length; i++) {
    for (let j = i + 1; j < vertices.length; j++) {
      if (adjacent(idx, vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

/** Vertices the human may toggle in the current position. */
export function candidates(snapshot: Snapshot): Set<number> {
  if (snapshot.finished || !snapshot.pending) return new Set();
  if (snapshot.pending.role !== snapshot.human_role) return new Set();
  if (snapshot.pending.mark !== undefined) return new Set(snapshot.pending.mark);
  return new Set(snapshot.remaining);
}

export function toggle(selection: Set<number>, v: number, allowed: Set<number>): Set<number> {
  if (!allowed.has(v)) return selection;
  const next = new Set(selection);
  if (next.has(v)) next.delete(v);
  else next.add(v);
  return next;
}

export interface SubmitCheck {
  ok: boolean;
  reason: string | null;
}

/**
 * Local plausibility gate for the submit control. Lister marks must be
 * nonempty; Painter replies must be independent. Maximality is left to
 * the server on purpose: its 422 names the addable vertex, which is
 * the teachable part.
 */
export function checkSubmit(snapshot: Snapshot, selection: Set<number>): SubmitCheck {
  if (snapshot.finished || !snapshot.pending) {
    return { ok: false, reason: "game over" };
  }
  if (snapshot.pending.role !== snapshot.human_role) {
    return { ok: false, reason: "waiting for the engine" };
  }
  const picked = [...selection].sort((a, b) => a - b);
  const allowed = candidates(snapshot);
  for (const v of picked) {
    if (!allowed.has(v)) {
      return { ok: false, reason: `vertex ${label(snapshot, v)} is not selectable` };
    }
  }
  if (snapshot.pending.mark !== undefined) {
    // Painter reply: independent subset of the mark (possibly empty is
    // still rejected server-side via maximality, but locally we only
    // require independence so the lesson comes from the server)
    const idx = edgeIndex(snapshot.graph);
    if (!isIndependent(idx, picked)) {
      return { ok: false, reason: "selected vertices are adjacent" };
    }
    return { ok: true, reason: null };
  }
  if (picked.length === 0) {
    return { ok: false, reason: "mark at least one vertex" };
  }
  return { ok: true, reason: null };
}

export function label(snapshot: Snapshot, v: number): string {
  return snapshot.graph.labels[v] ?? String(v);
}
