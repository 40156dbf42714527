"""Perfect matchings, vertex connectivity, and vertex-disjoint path systems."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import EdgeSet, Graph, GraphError, VertexSet, bits, edge, mask_of


class InsufficientConnectivity(GraphError):
    """Fewer disjoint paths exist than requested (Menger hypothesis fails)."""


@dataclass(frozen=True)
class Matching:
    edges: EdgeSet

    def __post_init__(self):
        covered = 0
        for u, v in self.edges:
            pair = (1 << u) | (1 << v)
            if covered & pair:
                raise GraphError("matching edges share a vertex")
            covered |= pair

    @property
    def covered(self) -> VertexSet:
        return mask_of(v for e in self.edges for v in e)

    def is_perfect(self, g: Graph) -> bool:
        return self.covered == g.all_vertices

    def partner(self, v: int) -> int:
        for u, w in self.edges:
            if v == u:
                return w
            if v == w:
                return u
        raise GraphError(f"vertex {v} is not covered by the matching")

    def to_json(self) -> dict:
        return {"matching": sorted(list(e) for e in self.edges)}


@dataclass(frozen=True)
class PathSystem:
    """Vertex-disjoint paths from sources (A) to sinks (B)."""

    paths: tuple[tuple[int, ...], ...]
    sources: VertexSet
    sinks: VertexSet

    def validate(self, g: Graph):
        seen = 0
        for p in self.paths:
            if not p:
                raise GraphError("empty path")
            if not (self.sources >> p[0] & 1 and self.sinks >> p[-1] & 1):
                raise GraphError("path endpoints not in A/B")
            for u, v in zip(p, p[1:]):
                if not g.has_edge(u, v):
                    raise GraphError(f"path uses non-edge ({u},{v})")
            pm = mask_of(p)
            if pm.bit_count() != len(p) or pm & seen:
                raise GraphError("paths not vertex-disjoint")
            seen |= pm

    def edge_set(self) -> EdgeSet:
        return frozenset(edge(u, v) for p in self.paths for u, v in zip(p, p[1:]))

    def to_json(self) -> dict:
        return {"paths": [list(p) for p in self.paths]}


def disjoint_paths_within(
    g: Graph, alive: VertexSet, a: VertexSet, b: VertexSet, count: int
) -> PathSystem:
    """disjoint_paths restricted to the subgraph induced on `alive`,
    with paths reported in the original vertex labels."""
    from .graph import subgraph  # local import to avoid cycle at module load

    sub, old_index = subgraph(g, alive)
    pos = {v: i for i, v in enumerate(old_index)}
    a_sub = mask_of(pos[v] for v in bits(a))
    b_sub = mask_of(pos[v] for v in bits(b))
    system = disjoint_paths(sub, a_sub, b_sub, count)
    paths = tuple(tuple(old_index[v] for v in p) for p in system.paths)
    mapped = PathSystem(paths, a, b)
    mapped.validate(g)
    return mapped


def min_degree(g: Graph) -> int:
    return min(g.degree(v) for v in range(g.n))


def find_perfect_matching(g: Graph) -> Matching | None:
    """Backtracking search, memoized on the covered-vertex mask."""
    if g.n % 2:
        return None
    full = g.all_vertices
    dead: set[int] = set()
    chosen: list[tuple[int, int]] = []

    def descend(covered: int) -> bool:
        if covered == full:
            return True
        if covered in dead:
            return False
        low = (~covered & full) & -(~covered & full)
        v = low.bit_length() - 1
        for u in bits(g.adj[v] & ~covered):
            chosen.append((v, u))
            if descend(covered | low | (1 << u)):
                return True
            chosen.pop()
        dead.add(covered)
        return False

    if descend(0):
        return Matching(frozenset(edge(u, v) for u, v in chosen))
    return None


# --- unit-vertex-capacity max flow (vertex splitting) ---------------------
#
# Node 2v = v_in, 2v+1 = v_out. Arc v_in -> v_out carries v's capacity;
# each graph edge becomes two infinite arcs between out- and in-sides.

_INF = 1 << 30


class _FlowNet:
    def __init__(self, size: int):
        self.head: list[list[int]] = [[] for _ in range(size)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add(self, u: int, v: int, c: int):
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def max_flow(self, s: int, t: int, limit: int) -> int:
        flow = 0
        while flow < limit:
            # BFS augmenting path, smallest node indices first
            prev_arc = [-1] * len(self.head)
            prev_arc[s] = -2
            queue = [s]
            while queue and prev_arc[t] == -1:
                nxt = []
                for u in queue:
                    for a in self.head[u]:
                        v = self.to[a]
                        if self.cap[a] > 0 and prev_arc[v] == -1:
                            prev_arc[v] = a
                            nxt.append(v)
                queue = nxt
            if prev_arc[t] == -1:
                break
            v = t
            while v != s:
                a = prev_arc[v]
                self.cap[a] -= 1
                self.cap[a ^ 1] += 1
                v = self.to[a ^ 1]
            flow += 1
        return flow


def _split_network(g: Graph) -> _FlowNet:
    net = _FlowNet(2 * g.n + 2)
    for v in range(g.n):
        net.add(2 * v, 2 * v + 1, 1)
    for u, v in g.edges():
        net.add(2 * u + 1, 2 * v, _INF)
        net.add(2 * v + 1, 2 * u, _INF)
    return net


def _local_connectivity(g: Graph, s: int, t: int) -> int:
    net = _split_network(g)
    return net.max_flow(2 * s + 1, 2 * t, g.n)


def vertex_connectivity(g: Graph) -> int:
    """kappa(g); n-1 for complete graphs, via pairwise vertex-capacity flows."""
    if g.n == 1:
        return 0
    if all(g.degree(v) == g.n - 1 for v in range(g.n)):
        return g.n - 1
    # fix the minimum-degree vertex; flow to its non-neighbors, then
    # repeat from each of its neighbors (a minimum cut avoids one of them)
    v0 = min(range(g.n), key=lambda v: (g.degree(v), v))
    best = g.n - 1
    pivots = [v0] + list(bits(g.adj[v0]))
    for s in pivots:
        for t in range(g.n):
            if t != s and not g.has_edge(s, t):
                best = min(best, _local_connectivity(g, s, t))
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    if k < 1:
        raise GraphError("k must be >= 1")
    return g.n > k and vertex_connectivity(g) >= k


def disjoint_paths(g: Graph, a: VertexSet, b: VertexSet, count: int) -> PathSystem:
    """`count` fully vertex-disjoint A-B paths from an integral max flow.

    Endpoints consume their own vertex capacity, so no path passes
    through another terminal. Raises InsufficientConnectivity when the
    flow value falls short.
    """
    if a & b:
        raise GraphError("A and B must be disjoint")
    if count < 1 or a.bit_count() != count or b.bit_count() != count:
        raise GraphError("need |A| = |B| = count >= 1")
    net = _split_network(g)
    src, snk = 2 * g.n, 2 * g.n + 1
    for v in bits(a):
        net.add(src, 2 * v, 1)
    for v in bits(b):
        net.add(2 * v + 1, snk, 1)
    flow = net.max_flow(src, snk, count)
    if flow < count:
        raise InsufficientConnectivity(
            f"only {flow} disjoint paths exist, {count} requested"
        )

    # net per-direction flow on edge arcs (cancels residual 2-cycles),
    # then greedy source-to-sink tracing, smallest successor first
    raw: dict[tuple[int, int], int] = {}
    for v in range(g.n):
        for idx in net.head[2 * v + 1]:
            if idx % 2 == 0 and net.to[idx] % 2 == 0 and net.to[idx] < 2 * g.n:
                used = _INF - net.cap[idx]
                if used > 0:
                    raw[(v, net.to[idx] // 2)] = used
    flow_edges: dict[tuple[int, int], int] = {}
    for (u, v), f in raw.items():
        f_net = f - raw.get((v, u), 0)
        if f_net > 0:
            flow_edges[(u, v)] = f_net

    paths = []
    for start in sorted(bits(a)):
        path = [start]
        v = start
        while not b >> v & 1:
            succ = sorted(u for (x, u), f in flow_edges.items() if x == v and f > 0)
            if not succ:
                raise GraphError("flow decomposition failed")  # pragma: no cover
            u = succ[0]
            flow_edges[(v, u)] -= 1
            path.append(u)
            v = u
        paths.append(tuple(path))
    system = PathSystem(tuple(paths), a, b)
    system.validate(g)
    return system
