import type { Snapshot } from "./types.js";
import type { Point } from "./layout.js";
import { label } from "./selection.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const SIZE = 420;

export type VertexStatus = "remaining" | "deleted" | "marked" | "selected";

export function vertexStatus(
  snapshot: Snapshot,
  selection: Set<number>,
  v: number,
): VertexStatus {
  if (!snapshot.remaining.includes(v)) return "deleted";
  if (selection.has(v)) return "selected";
  if (snapshot.pending?.mark?.includes(v)) return "marked";
  return "remaining";
}

/** Round in which each deleted vertex left the game, for tooltips. */
export function deletionRound(snapshot: Snapshot): Map<number, number> {
  const rounds = new Map<number, number>();
  snapshot.moves.forEach((move, i) => {
    for (const v of move.deleted) rounds.set(v, i + 1);
  });
  return rounds;
}

export function renderBoard(
  host: HTMLElement,
  snapshot: Snapshot,
  layout: Point[],
  selection: Set<number>,
  onVertexClick: (v: number) => void,
): void {
  host.textContent = "";
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${SIZE} ${SIZE}`);
  svg.classList.add("board");

  const px = (p: Point) => p.x * SIZE;
  const py = (p: Point) => p.y * SIZE;

  for (const [u, v] of snapshot.graph.edges) {
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(px(layout[u])));
    line.setAttribute("y1", String(py(layout[u])));
    line.setAttribute("x2", String(px(layout[v])));
    line.setAttribute("y2", String(py(layout[v])));
    const gone =
      !snapshot.remaining.includes(u) || !snapshot.remaining.includes(v);
    line.setAttribute("class", gone ? "edge edge-gone" : "edge");
    svg.appendChild(line);
  }

  const rounds = deletionRound(snapshot);
  for (let v = 0; v < snapshot.graph.n; v++) {
    const status = vertexStatus(snapshot, selection, v);
    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("class", `vertex vertex-${status}`);

    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(px(layout[v])));
    circle.setAttribute("cy", String(py(layout[v])));
    circle.setAttribute("r", "16");
    group.appendChild(circle);

    const text = document.createElementNS(SVG_NS, "text");
    text.setAttribute("x", String(px(layout[v])));
    text.setAttribute("y", String(py(layout[v]) + 5));
    text.setAttribute("text-anchor", "middle");
    text.textContent = label(snapshot, v);
    group.appendChild(text);

    const round = rounds.get(v);
    if (round !== undefined) {
      const title = document.createElementNS(SVG_NS, "title");
      title.textContent = `deleted in round ${round}`;
      group.appendChild(title);
    }
    group.addEventListener("click", () => onVertexClick(v));
    svg.appendChild(group);
  }
  host.appendChild(svg);
}
