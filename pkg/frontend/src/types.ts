export type Role = "lister" | "painter";
export type Engine = "exact" | "greedy";

export interface GraphPayload {
  n: number;
  edges: Array<[number, number]>;
  labels: string[];
}

export interface MovePayload {
  marked: number[];
  deleted: number[];
}

export interface PendingDecision {
  role: Role;
  mark?: number[]; // present when the engine's mark awaits a Painter reply
}

export interface BoundInfo {
  claim: number;
  met: boolean;
  sharp: boolean;
}

export interface Snapshot {
  id: string;
  graph: GraphPayload;
  human_role: Role;
  engine: Engine;
  hints: boolean;
  remaining: number[];
  score: number;
  moves: MovePayload[];
  pending: PendingDecision | null;
  finished: boolean;
  final_score?: number;
  bound?: BoundInfo | null;
}

export interface Hint {
  move: number[];
  value_to_go: number;
  projected_final_score: number;
}

/** Normalized server-side rejection. */
export interface ApiError {
  status: number;
  error: string;
  detail?: string;
  addable?: number;
}

export interface CreateSessionRequest {
  graph: string | { n: number; edges: Array<[number, number]>; labels?: string[] };
  human_role: Role;
  engine: Engine;
  hints: boolean;
}
