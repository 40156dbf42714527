"""Slow coloring game rules: states, legal moves, scoring, transcripts.

Single source of truth for legality; solver, strategies, CLI and the
HTTP service all validate through here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, VertexSet, bits, is_independent, mask_of, maximal_independent_subsets


class IllegalMove(ValueError):
    """Mark or reply violates the game rules."""

    def __init__(self, message: str, addable: int | None = None):
        super().__init__(message)
        self.addable = addable  # witness vertex for non-maximal replies


@dataclass(frozen=True)
class Move:
    marked: VertexSet
    deleted: VertexSet

    def to_json(self) -> dict:
        return {"marked": sorted(bits(self.marked)), "deleted": sorted(bits(self.deleted))}


@dataclass(frozen=True)
class GameState:
    graph: Graph
    remaining: VertexSet
    score: int = 0
    transcript: tuple[Move, ...] = ()

    def to_json(self) -> dict:
        return {
            "remaining": sorted(bits(self.remaining)),
            "score": self.score,
            "moves": [m.to_json() for m in self.transcript],
        }


def new_game(g: Graph) -> GameState:
    return GameState(g, g.all_vertices)


def is_terminal(s: GameState) -> bool:
    return s.remaining == 0


def check_mark(s: GameState, m: VertexSet):
    if m == 0:
        raise IllegalMove("mark must be nonempty")
    if m & ~s.remaining:
        stray = sorted(bits(m & ~s.remaining))
        raise IllegalMove(f"marked vertices not remaining: {stray}")


def check_reply(s: GameState, m: VertexSet, d: VertexSet):
    """Reply must be an independent subset of m, maximal within m."""
    check_mark(s, m)
    if d & ~m:
        raise IllegalMove(f"deleted vertices outside the mark: {sorted(bits(d & ~m))}")
    if not is_independent(s.graph, d):
        raise IllegalMove("reply not independent")
    for v in bits(m & ~d):
        if not s.graph.adj[v] & d:
            raise IllegalMove(f"reply not maximal: vertex {v} addable", addable=v)


def legal_painter_replies(s: GameState, m: VertexSet) -> list[VertexSet]:
    check_mark(s, m)
    return maximal_independent_subsets(s.graph, m)


def apply_move(s: GameState, m: VertexSet, d: VertexSet) -> GameState:
    check_reply(s, m, d)
    return GameState(
        graph=s.graph,
        remaining=s.remaining & ~d,
        score=s.score + m.bit_count(),
        transcript=s.transcript + (Move(m, d),),
    )


def replay(g: Graph, moves) -> GameState:
    """Re-run a transcript through the rules; raises IllegalMove on any bad step."""
    s = new_game(g)
    for mv in moves:
        if isinstance(mv, Move):
            m, d = mv.marked, mv.deleted
        else:
            m, d = mask_of(mv["marked"]), mask_of(mv["deleted"])
        s = apply_move(s, m, d)
    return s
