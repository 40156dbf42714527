import { ApiClient, ApiRejection } from "./api.js";
import { renderBoard } from "./board.js";
import { finalBanner, rejectionText, roundRows, statusLine } from "./format.js";
import { layoutFor, type Point } from "./layout.js";
import { candidates, checkSubmit, toggle } from "./selection.js";
import type { Engine, Role, Snapshot } from "./types.js";

const POLL_MS = 1500;

const BUILTINS = [
  "prism", "cube", "petersen", "path:6", "cycle:8", "star:6",
  "complete:4", "bipartite:3,3",
];

interface Refs {
  picker: HTMLSelectElement;
  upload: HTMLTextAreaElement;
  role: HTMLSelectElement;
  engine: HTMLSelectElement;
  hints: HTMLInputElement;
  start: HTMLButtonElement;
  setupError: HTMLElement;
  game: HTMLElement;
  board: HTMLElement;
  status: HTMLElement;
  score: HTMLElement;
  moveError: HTMLElement;
  submit: HTMLButtonElement;
  clear: HTMLButtonElement;
  hint: HTMLButtonElement;
  hintBox: HTMLElement;
  timeline: HTMLElement;
  banner: HTMLElement;
}

export class App {
  private snapshot: Snapshot | null = null;
  private selection = new Set<number>();
  private layout: Point[] = [];
  private pollTimer: number | null = null;

  constructor(
    private readonly refs: Refs,
    private readonly api: ApiClient = new ApiClient(),
  ) {}

  mount(): void {
    for (const name of BUILTINS) {
      const opt = document.createElement("option");
      opt.value = name;
      opt.textContent = name;
      this.refs.picker.appendChild(opt);
    }
    this.refs.start.addEventListener("click", () => void this.start());
    this.refs.submit.addEventListener("click", () => void this.submit());
    this.refs.clear.addEventListener("click", () => {
      this.selection = new Set();
      this.render();
    });
    this.refs.hint.addEventListener("click", () => void this.showHint());
  }

  private graphSpec(): string | { n: number; edges: Array<[number, number]> } {
    const uploaded = this.refs.upload.value.trim();
    if (!uploaded) return this.refs.picker.value;
    return parseEdgeList(uploaded);
  }

  private async start(): Promise<void> {
    this.refs.setupError.textContent = "";
    try {
      const snapshot = await this.api.createSession({
        graph: this.graphSpec(),
        human_role: this.refs.role.value as Role,
        engine: this.refs.engine.value as Engine,
        hints: this.refs.hints.checked,
      });
      this.adopt(snapshot);
      this.refs.game.hidden = false;
    } catch (err) {
      this.refs.setupError.textContent =
        err instanceof ApiRejection
          ? rejectionText(err.info, null)
          : String(err instanceof Error ? err.message : err);
    }
  }

  private adopt(snapshot: Snapshot): void {
    const fresh = this.snapshot?.id !== snapshot.id;
    this.snapshot = snapshot;
    if (fresh) {
      this.layout = layoutFor(snapshot.graph);
      this.selection = new Set();
    }
    this.render();
    this.schedulePoll();
  }

  private schedulePoll(): void {
    if (this.pollTimer !== null) window.clearTimeout(this.pollTimer);
    const s = this.snapshot;
    if (!s || s.finished) return;
    const ourTurn = s.pending !== null && s.pending.role === s.human_role;
    if (ourTurn) return; // nothing to poll for; the human acts next
    this.pollTimer = window.setTimeout(() => {
      void this.api.getState(s.id).then((next) => this.adopt(next));
    }, POLL_MS);
  }

  private async submit(): Promise<void> {
    const s = this.snapshot;
    if (!s) return;
    this.refs.moveError.textContent = "";
    try {
      const next = await this.api.postMove(s.id, [...this.selection].sort((a, b) => a - b));
      this.selection = new Set();
      this.adopt(next);
    } catch (err) {
      if (err instanceof ApiRejection) {
        // surface the server's reason inline; the board state is
        // untouched so the human can fix the selection and resubmit
        this.refs.moveError.textContent = rejectionText(err.info, s);
      } else {
        this.refs.moveError.textContent = String(err);
      }
    }
  }

  private async showHint(): Promise<void> {
    const s = this.snapshot;
    if (!s) return;
    try {
      const hint = await this.api.getHint(s.id);
      const names = hint.move.map((v) => s.graph.labels[v] ?? String(v));
      this.refs.hintBox.textContent =
        `suggested: {${names.join(", ")}} — value to go ${hint.value_to_go}, ` +
        `projected final score ${hint.projected_final_score}`;
    } catch (err) {
      this.refs.hintBox.textContent =
        err instanceof ApiRejection ? rejectionText(err.info, s) : String(err);
    }
  }

  private onVertexClick(v: number): void {
    const s = this.snapshot;
    if (!s) return;
    this.selection = toggle(this.selection, v, candidates(s));
    this.render();
  }

  private render(): void {
    const s = this.snapshot;
    if (!s) return;
    renderBoard(this.refs.board, s, this.layout, this.selection, (v) =>
      this.onVertexClick(v),
    );
    this.refs.status.textContent = statusLine(s);
    this.refs.score.textContent = `score: ${s.score}`;
    const check = checkSubmit(s, this.selection);
    this.refs.submit.disabled = !check.ok;
    this.refs.submit.title = check.reason ?? "";
    this.refs.hint.hidden = !s.hints || s.finished;

    this.refs.timeline.textContent = "";
    for (const row of roundRows(s)) {
      const item = document.createElement("li");
      item.textContent =
        `round ${row.round}: marked {${row.marked.join(", ")}}, ` +
        `deleted {${row.deleted.join(", ")}} — score ${row.scoreAfter}`;
      this.refs.timeline.appendChild(item);
    }

    const banner = finalBanner(s);
    this.refs.banner.textContent = "";
    this.refs.banner.hidden = banner === null;
    if (banner) {
      const head = document.createElement("strong");
      head.textContent = banner.headline;
      this.refs.banner.appendChild(head);
      if (banner.detail) {
        this.refs.banner.appendChild(document.createTextNode(` — ${banner.detail}`));
      }
      if (banner.badge) {
        const badge = document.createElement("span");
        badge.className = "badge";
        badge.textContent = banner.badge;
        this.refs.banner.appendChild(badge);
      }
    }
  }
}

/** Parse the "n m" edge-list format used by the solver's CLI. */
export function parseEdgeList(text: string): { n: number; edges: Array<[number, number]> } {
  const lines = text
    .split("\n")
    .map((line) => line.split("#")[0].trim())
    .filter((line) => line.length > 0);
  if (lines.length === 0) throw new Error("empty graph file");
  const [n, m] = lines[0].split(/\s+/).map(Number);
  if (!Number.isInteger(n) || !Number.isInteger(m)) {
    throw new Error(`bad header line: ${lines[0]!}`);
  }
  const edges: Array<[number, number]> = [];
  for (const line of lines.slice(1)) {
    const [u, v] = line.split(/\s+/).map(Number);
    if (!Number.isInteger(u) || !Number.isInteger(v)) {
      throw new Error(`bad edge line: ${line}`);
    }
    edges.push([u, v]);
  }
  if (edges.length !== m) {
    throw new Error(`header declares ${m} edges, found ${edges.length}`);
  }
  return { n, edges };
}

export function grabRefs(root: Document): Refs {
  const get = <T extends HTMLElement>(id: string): T => {
    const el = root.getElementById(id);
    if (!el) throw new Error(`missing element #${id}`);
    return el as T;
  };
  return {
    picker: get("graph-picker"),
    upload: get("graph-upload"),
    role: get("role"),
    engine: get("engine"),
    hints: get("hints"),
    start: get("start"),
    setupError: get("setup-error"),
    game: get("game"),
    board: get("board"),
    status: get("status"),
    score: get("score"),
    moveError: get("move-error"),
    submit: get("submit"),
    clear: get("clear"),
    hint: get("hint"),
    hintBox: get("hint-box"),
    timeline: get("timeline"),
    banner: get("banner"),
  };
}
