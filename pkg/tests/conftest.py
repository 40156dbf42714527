"""Shared fixtures and independent oracles.

Every oracle here deliberately avoids the code paths it checks:
exhaustive subset/cut/game-tree enumeration only.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

import pytest

from slowcolor.graph import Graph, bits, from_edges, is_independent, mask_of
from slowcolor import families


# --- brute-force oracles -------------------------------------------------

def brute_force_mis(g: Graph, m: int) -> list[int]:
    """Maximal independent subsets of G[m] by checking all 2^|m| subsets."""
    verts = list(bits(m))
    out = []
    for r in range(len(verts) + 1):
        for combo in itertools.combinations(verts, r):
            s = mask_of(combo)
            if not is_independent(g, s):
                continue
            if any(
                not (g.adj[u] & s) for u in bits(m & ~s)
            ):
                continue  # some vertex of m is addable
            out.append(s)
    return sorted(out, key=lambda s: tuple(sorted(bits(s))))


def naive_game_value(g: Graph, remaining: int | None = None) -> int:
    """No-memo minimax over the full game tree (exponential; n <= 5).

    Game values are never memoized; only the per-mark reply lists are
    cached, which does not change the search shape.
    """
    if remaining is None:
        remaining = g.all_vertices
    mis_cache: dict[int, list[int]] = {}

    def replies(m: int) -> list[int]:
        if m not in mis_cache:
            mis_cache[m] = brute_force_mis(g, m)
        return mis_cache[m]

    def walk(rem: int) -> int:
        if rem == 0:
            return 0
        best = 0
        m = rem
        while m:
            worst = min(walk(rem & ~d) for d in replies(m))
            best = max(best, m.bit_count() + worst)
            m = (m - 1) & rem
        return best

    return walk(remaining)


def connectivity_by_cut_enumeration(g: Graph) -> int:
    """Minimum |S| with g - S disconnected or trivial, else n-1."""
    from slowcolor.graph import components

    for size in range(g.n - 1):
        for cut in itertools.combinations(range(g.n), size):
            alive = g.all_vertices & ~mask_of(cut)
            if alive == 0:
                continue
            if len(components(g, alive)) > 1:
                return size
    return g.n - 1


def perfect_matching_by_enumeration(g: Graph) -> bool:
    edges = g.edges()
    if g.n % 2:
        return False
    for combo in itertools.combinations(edges, g.n // 2):
        covered = 0
        ok = True
        for u, v in combo:
            pair = (1 << u) | (1 << v)
            if covered & pair:
                ok = False
                break
            covered |= pair
        if ok and covered == g.all_vertices:
            return True
    return False


def forest_13_by_enumeration(g: Graph, allow_odd_exception: bool) -> bool:
    """Any edge subset that is acyclic with degrees 1/3 (one 0/6 if allowed)."""
    from slowcolor.graph import edge_degrees, find_cycle

    edges = g.edges()
    relaxed = allow_odd_exception and g.n % 2 == 1
    for r in range(len(edges) + 1):
        for combo in itertools.combinations(edges, r):
            deg = edge_degrees(combo, g.n)
            bad = [v for v in range(g.n) if deg[v] not in (1, 3)]
            if relaxed:
                if len(bad) != 1 or deg[bad[0]] not in (0, 6):
                    continue
            elif bad:
                continue
            if find_cycle(g, frozenset(combo)) is None:
                return True
    return False


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return from_edges(n, edges)


# --- fixtures -------------------------------------------------------------

@pytest.fixture
def prism():
    return families.prism()


@pytest.fixture
def p4():
    return families.path(4)
