"""Pure-Python solver kernel.

Fills the full bottom-up table of subgame values over remaining-vertex
bitmasks. The compiled twin in _kernel_c.pyx implements the same
contract; slowcolor.solver picks whichever imports.
"""

from __future__ import annotations

import time

KERNEL_NAME = "python"


def maximal_independent_masks(adj: tuple[int, ...], m: int) -> list[int]:
    """Maximal independent subsets of the graph induced on mask m.

    Bron-Kerbosch on the complement graph; sorted by descending size
    then ascending mask (Painter move ordering).
    """
    n = len(adj)
    full = (1 << n) - 1
    out: list[int] = []

    def bk(r: int, p: int, x: int):
        if p == 0 and x == 0:
            out.append(r)
            return
        p_iter = p
        while p_iter:
            low = p_iter & -p_iter
            v = low.bit_length() - 1
            nonadj = ~adj[v] & ~low & full
            bk(r | low, p & nonadj, x & nonadj)
            p &= ~low
            x |= low
            p_iter ^= low
        return

    bk(0, m, 0)
    out.sort(key=lambda d: (-d.bit_count(), d))
    return out


def value_table(n: int, adj: tuple[int, ...], deadline: float | None = None):
    """Exact subgame values val[R] for every remaining-set mask R.

    val(R) = max over nonempty M subset of R of
             |M| + min over maximal independent D of G[M] of val(R \\ D).

    Returns (table, nodes_expanded). Raises TimeoutError past deadline.
    """
    size = 1 << n
    mis: list[list[int] | None] = [None] * size
    val = [0] * size
    # triangle numbers: val(R) <= T(|R|) (complete-graph worst case)
    tri = [m * (m + 1) // 2 for m in range(n + 1)]
    nodes = 0

    for r in range(1, size):
        if deadline is not None and r % 1024 == 0 and time.monotonic() > deadline:
            raise TimeoutError("solver deadline exceeded")
        best = 0
        ub_cont = tri[r.bit_count() - 1]  # Painter always deletes >= 1 vertex
        m = r
        while m:
            size_m = m.bit_count()
            if size_m + ub_cont > best:
                nodes += 1
                lists = mis[m]
                if lists is None:
                    lists = mis[m] = maximal_independent_masks(adj, m)
                bound = best - size_m  # continuation must beat this
                worst = None
                for d in lists:
                    cont = val[r & ~d]
                    if worst is None or cont < worst:
                        worst = cont
                        if worst <= bound:
                            break
                if size_m + worst > best:
                    best = size_m + worst
            m = (m - 1) & r
        val[r] = best
    return val, nodes
