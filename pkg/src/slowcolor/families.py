"""Named builtin graphs and parametric families.

Specs are strings like "prism", "path:5", "bipartite:3,3"; generated
graphs are canonical (same labeling on every run).
"""

from __future__ import annotations

from .graph import Graph, GraphError, from_edges

# the triangular prism: two triangles {0,1,2}, {3,4,5} joined by the
# perfect matching rungs (0,3), (1,4), (2,5); labels follow the
# 1-indexed convention so label "3" is vertex index 2
PRISM_EDGES = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
PRISM_MATCHING = [(0, 3), (1, 4), (2, 5)]


def prism() -> Graph:
    return from_edges(6, PRISM_EDGES, labels=[str(i + 1) for i in range(6)])


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """K_{1,n-1}: center 0, leaves 1..n-1."""
    if n < 1:
        raise GraphError("star needs n >= 1")
    return from_edges(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def edgeless(n: int) -> Graph:
    return from_edges(n, [])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def cube() -> Graph:
    """Q3: vertices are 3-bit strings, edges flip one bit."""
    edges = [(v, v ^ (1 << i)) for v in range(8) for i in range(3) if v < v ^ (1 << i)]
    return from_edges(8, edges)


def petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))        # outer cycle
        edges.append((i, i + 5))              # spokes
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
    return from_edges(10, edges)


def builtin(spec: str) -> Graph:
    """Resolve a builtin graph spec like "prism" or "path:5"."""
    name, _, arg = spec.partition(":")
    try:
        if name == "prism":
            return prism()
        if name == "cube":
            return cube()
        if name == "petersen":
            return petersen()
        if name == "path":
            return path(int(arg))
        if name == "cycle":
            return cycle(int(arg))
        if name == "star":
            return star(int(arg))
        if name == "complete":
            return complete(int(arg))
        if name == "edgeless":
            return edgeless(int(arg))
        if name == "bipartite":
            a, b = arg.split(",")
            return complete_bipartite(int(a), int(b))
    except (ValueError, TypeError) as exc:
        raise GraphError(f"bad builtin spec {spec!r}: {exc}") from exc
    raise GraphError(f"unknown builtin graph {spec!r}")
