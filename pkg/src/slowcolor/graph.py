"""Graph representation and independence machinery.

Vertex sets are plain ints used as bitmasks over vertex indices
0..n-1 (n <= 64, so a set is one machine word). Edge sets are
frozensets of normalized (u, v) pairs with u < v.
"""

from __future__ import annotations

from dataclasses import dataclass
import json

MAX_VERTICES = 64

VertexSet = int
Edge = tuple[int, int]
EdgeSet = frozenset


class GraphError(ValueError):
    """Invalid graph structure or malformed graph input."""


def bits(mask: int):
    """Iterate set bit indices of `mask` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def edge(u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with bitmask adjacency.

    adj[v] is the neighbor mask of v; symmetric and irreflexive.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length != n")
        full = self.all_vertices
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has neighbor index >= n")
            if nb >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels length != n")

    @property
    def all_vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def edge_set(self) -> EdgeSet:
        return frozenset(self.edges())

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)


def from_edges(n: int, edges, labels=None) -> Graph:
    adj = [0] * n
    seen = set()
    for u, v in edges:
        u, v = edge(u, v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        if (u, v) in seen:
            raise GraphError(f"duplicate edge ({u},{v})")
        seen.add((u, v))
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), tuple(labels) if labels else None)


def load_graph(source: str) -> Graph:
    """Parse a graph from edge-list text or a JSON object.

    Edge-list format: first line "n m", then m lines "u v";
    '#' starts a comment. JSON: {"n": int, "edges": [[u,v],...],
    "labels": [...]?}.
    """
    stripped = source.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(source)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid JSON graph: {exc}") from exc
        try:
            return from_edges(obj["n"], obj["edges"], obj.get("labels"))
        except KeyError as exc:
            raise GraphError(f"JSON graph missing field {exc}") from exc

    lines = source.splitlines()
    header = None
    edges = []
    m_declared = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers, got {line!r}")
        if header is None:
            header = (a, b)
            m_declared = b
        else:
            if a == b:
                raise GraphError(f"line {lineno}: loop at vertex {a}")
            edges.append((a, b))
    if header is None:
        raise GraphError("empty graph input")
    n = header[0]
    if len(edges) != m_declared:
        raise GraphError(f"declared {m_declared} edges, found {len(edges)}")
    try:
        return from_edges(n, edges)
    except GraphError as exc:
        raise GraphError(str(exc)) from exc


def is_independent(g: Graph, s: VertexSet) -> bool:
    """True iff no two vertices of s are adjacent. Empty set qualifies."""
    for v in bits(s):
        if g.adj[v] & s:
            return False
    return True


def maximal_independent_subsets(g: Graph, m: VertexSet) -> list[VertexSet]:
    """All subsets of m that are independent and maximal within m.

    Include/exclude branching on the smallest undecided vertex, with a
    maximality check at the leaves; emits sets in lexicographic order
    (lowest-index members first).
    """
    if m == 0:
        raise GraphError("marked set must be nonempty")
    if m & ~g.all_vertices:
        raise GraphError("marked set contains out-of-range vertices")
    out: list[VertexSet] = []

    def descend(chosen: int, candidates: int):
        if candidates == 0:
            # maximal within m iff no vertex of m is addable
            addable = m & ~chosen
            for u in bits(addable):
                if not g.adj[u] & chosen:
                    return
            out.append(chosen)
            return
        low = candidates & -candidates
        v = low.bit_length() - 1
        descend(chosen | low, candidates & ~low & ~g.adj[v])
        descend(chosen, candidates ^ low)

    descend(0, m)
    return out


def independence_number(g: Graph, within: VertexSet | None = None) -> int:
    """Maximum independent-set size within `within` (default: all of V)."""
    scope = g.all_vertices if within is None else within
    best = 0

    def descend(chosen_size: int, candidates: int):
        nonlocal best
        if chosen_size + candidates.bit_count() <= best:
            return
        if candidates == 0:
            best = max(best, chosen_size)
            return
        low = candidates & -candidates
        v = low.bit_length() - 1
        descend(chosen_size + 1, candidates & ~low & ~g.adj[v])
        descend(chosen_size, candidates ^ low)

    descend(0, scope)
    return best


def components(g: Graph, within: VertexSet) -> list[VertexSet]:
    """Connected components of the induced subgraph, sorted by smallest member."""
    remaining = within
    comps = []
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.adj[v] & within
            frontier = grow & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def find_cycle(g: Graph, edges: EdgeSet) -> list[int] | None:
    """Some cycle in the subgraph (V, edges) as a vertex sequence, or None.

    Deterministic: depth-first from the smallest vertex, smallest
    neighbor first.
    """
    nbrs: dict[int, list[int]] = {}
    for u, v in sorted(edges):
        if not g.has_edge(u, v):
            raise GraphError(f"({u},{v}) is not an edge of the graph")
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    for lst in nbrs.values():
        lst.sort()

    visited: set[int] = set()
    for root in sorted(nbrs):
        if root in visited:
            continue
        # iterative DFS keeping the current path for cycle extraction
        parent: dict[int, int | None] = {root: None}
        stack = [(root, None)]
        while stack:
            v, par = stack.pop()
            if v in visited:
                continue
            visited.add(v)
            parent[v] = par
            for w in reversed(nbrs[v]):
                if w == par:
                    continue
                if w in visited:
                    # back edge: walk v up to w
                    path = [v]
                    cur = v
                    while cur != w:
                        cur = parent[cur]
                        path.append(cur)
                    return path[::-1]
                stack.append((w, v))
    return None


def symmetric_difference(a: EdgeSet, b: EdgeSet) -> EdgeSet:
    """Edges in exactly one of a, b."""
    return frozenset(a) ^ frozenset(b)


def edge_degrees(edges, n: int) -> list[int]:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def subgraph(g: Graph, within: VertexSet) -> tuple[Graph, list[int]]:
    """Re-indexed induced subgraph plus new-index -> old-index map."""
    verts = list(bits(within))
    if not verts:
        raise GraphError("cannot build an empty subgraph")
    pos = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for v in verts:
        for u in bits(g.adj[v] & within):
            adj[pos[v]] |= 1 << pos[u]
    labels = tuple(g.label(v) for v in verts) if g.labels else None
    return Graph(len(verts), tuple(adj), labels), verts
