"""Playable strategies: the 2k-matching-pair Lister opening, exact
solver-backed play, greedy baselines, and a match runner with an
exhaustive adversarial sweep over Painter's options."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

from . import game, solver
from .connectivity import Matching
from .game import GameState, IllegalMove
from .graph import Graph, GraphError, VertexSet, bits, maximal_independent_subsets


@dataclass(frozen=True)
class Strategy:
    role: str  # "lister" | "painter"
    name: str
    # lister: f(state) -> mark; painter: f(state, mark) -> reply
    decide: Callable


@dataclass(frozen=True)
class MatchOutcome:
    final: GameState
    claimed_bound: int | None
    bound_met: bool | None

    @property
    def score(self) -> int:
        return self.final.score

    def to_json(self) -> dict:
        out = self.final.to_json()
        out["claimed_bound"] = self.claimed_bound
        out["bound_met"] = self.bound_met
        return out


def lister_3k_opening(g: Graph, matching: Matching, k: int) -> VertexSet:
    """Union of the 2k matching pairs with smallest minimum endpoint."""
    if not matching.is_perfect(g):
        raise GraphError("matching not perfect")
    if 4 * k > g.n:
        raise GraphError(f"n={g.n} < 4k={4 * k}")
    pairs = sorted(matching.edges, key=min)[: 2 * k]
    mark = 0
    for u, v in pairs:
        mark |= (1 << u) | (1 << v)
    return mark


def lister_3k_strategy(g: Graph, matching: Matching, k: int,
                       options: solver.SolveOptions | None = None) -> Strategy:
    """Open with 2k matching pairs, then continue with exact-optimal marks."""
    opening = lister_3k_opening(g, matching, k)

    def decide(s: GameState) -> VertexSet:
        if not s.transcript:
            return opening
        return solver.optimal_lister_move(s.graph, s.remaining, options)

    return Strategy("lister", f"3k-opening(k={k})", decide)


def lister_exact(g: Graph, options: solver.SolveOptions | None = None) -> Strategy:
    return Strategy(
        "lister", "exact",
        lambda s: solver.optimal_lister_move(s.graph, s.remaining, options),
    )


def painter_exact(g: Graph, options: solver.SolveOptions | None = None) -> Strategy:
    return Strategy(
        "painter", "exact",
        lambda s, m: solver.optimal_painter_reply(s.graph, s.remaining, m, options),
    )


def painter_greedy(s: GameState, m: VertexSet) -> VertexSet:
    """Largest maximal independent reply; ties to the smallest bitmask."""
    replies = game.legal_painter_replies(s, m)
    return min(replies, key=lambda d: (-d.bit_count(), d))


def painter_greedy_strategy(g: Graph) -> Strategy:
    return Strategy("painter", "greedy", painter_greedy)


def lister_all_strategy(g: Graph) -> Strategy:
    """Baseline: always mark everything remaining."""
    return Strategy("lister", "mark-all", lambda s: s.remaining)


def play_match(
    g: Graph,
    lister: Strategy,
    painter: Strategy,
    claimed_bound: int | None = None,
    claimed_by: str = "lister",
) -> MatchOutcome:
    """Full playout; every move is validated by the game engine.

    An illegal strategy output aborts with the offending state
    serialized into the exception message.
    """
    s = game.new_game(g)
    while not game.is_terminal(s):
        m = lister.decide(s)
        d = painter.decide(s, m)
        try:
            s = game.apply_move(s, m, d)
        except IllegalMove as exc:
            raise IllegalMove(
                f"{exc} (state: {json.dumps(s.to_json())}, mark={sorted(bits(m))},"
                f" reply={sorted(bits(d))})"
            ) from exc
    bound_met = None
    if claimed_bound is not None:
        bound_met = s.score >= claimed_bound if claimed_by == "lister" else s.score <= claimed_bound
    return MatchOutcome(s, claimed_bound, bound_met)


@dataclass(frozen=True)
class SweepResult:
    min_score: int
    max_score: int
    branches: int  # completed games explored


def adversarial_sweep(g: Graph, lister: Strategy) -> SweepResult:
    """Play the Lister strategy against EVERY Painter reply sequence.

    Exhaustive over Painter's options; returns the guaranteed score
    band. This is the strategy-level content of a lower-bound claim.
    """
    best = [None, None, 0]

    def walk(s: GameState):
        if game.is_terminal(s):
            best[0] = s.score if best[0] is None else min(best[0], s.score)
            best[1] = s.score if best[1] is None else max(best[1], s.score)
            best[2] += 1
            return
        m = lister.decide(s)
        for d in game.legal_painter_replies(s, m):
            walk(game.apply_move(s, m, d))

    walk(game.new_game(g))
    return SweepResult(best[0], best[1], best[2])
