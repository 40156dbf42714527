"""Spanning forests with degrees in {1,3}: the matching-xor-paths
construction and an exhaustive existence search with certificates."""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import Matching, PathSystem
from .graph import (
    EdgeSet,
    Graph,
    GraphError,
    VertexSet,
    bits,
    edge_degrees,
    find_cycle,
    is_independent,
    symmetric_difference,
)

SEARCH_MAX_N = 12
SEARCH_MAX_EDGES = 24


@dataclass(frozen=True)
class BetaContext:
    """G minus a Painter deletion, with its orphaned matching partners.

    g is the ambient graph; alive = V(g) \\ d is the vertex set of the
    induced view G-. d_prime holds the beta-vertices (matching partners
    of deleted vertices); f0 the matching edges surviving in G-.
    """

    g: Graph
    d: VertexSet
    d_prime: VertexSet
    f0: EdgeSet

    @property
    def alive(self) -> VertexSet:
        return self.g.all_vertices & ~self.d


@dataclass(frozen=True)
class ForestCertificate:
    """Edge set claimed acyclic with all degrees 1 or 3 on its vertex set.

    In "odd-exception" mode exactly one vertex may have degree 0 or 6.
    Independently checkable via validate().
    """

    edges: EdgeSet
    vertices: VertexSet
    mode: str = "strict"

    def degree_profile(self, n: int) -> dict[int, int]:
        deg = edge_degrees(self.edges, n)
        return {v: deg[v] for v in bits(self.vertices)}

    def validate(self, g: Graph):
        for u, v in self.edges:
            if not g.has_edge(u, v):
                raise GraphError(f"certificate edge ({u},{v}) not in graph")
            if not (self.vertices >> u & 1 and self.vertices >> v & 1):
                raise GraphError(f"certificate edge ({u},{v}) leaves vertex set")
        if find_cycle(g, self.edges) is not None:
            raise GraphError("certificate contains a cycle")
        profile = self.degree_profile(g.n)
        exceptions = [v for v, d in profile.items() if d not in (1, 3)]
        if self.mode == "strict":
            if exceptions:
                raise GraphError(f"degrees outside {{1,3}} at {exceptions}")
        elif self.mode == "odd-exception":
            if len(exceptions) != 1 or profile[exceptions[0]] not in (0, 6):
                raise GraphError("odd-exception mode needs exactly one degree-0/6 vertex")
        else:
            raise GraphError(f"unknown certificate mode {self.mode!r}")

    def to_json(self, g: Graph) -> dict:
        return {
            "edges": sorted(list(e) for e in self.edges),
            "degrees": {str(v): d for v, d in sorted(self.degree_profile(g.n).items())},
            "mode": self.mode,
        }


def beta_context(g: Graph, matching: Matching, d: VertexSet) -> BetaContext:
    if not matching.is_perfect(g):
        raise GraphError("matching not perfect")
    if not is_independent(g, d):
        raise GraphError("D not independent")
    d_prime = 0
    f0 = []
    for u, v in matching.edges:
        du, dv = d >> u & 1, d >> v & 1
        if du and dv:
            raise GraphError("D not independent")  # pragma: no cover (adjacent pair)
        if du:
            d_prime |= 1 << v
        elif dv:
            d_prime |= 1 << u
        else:
            f0.append((u, v))
    return BetaContext(g, d, d_prime, frozenset(f0))


def split_betas(d_prime: VertexSet) -> tuple[VertexSet, VertexSet]:
    """Deterministic equal split: lower-index half to A."""
    verts = list(bits(d_prime))
    if len(verts) % 2:
        raise GraphError("beta-vertex set has odd cardinality")
    half = len(verts) // 2
    a = 0
    for v in verts[:half]:
        a |= 1 << v
    return a, d_prime & ~a


def build_forest(ctx: BetaContext, paths: PathSystem) -> ForestCertificate:
    """Matching xor path edges, then iterative cycle removal.

    The paths must form a system between an equal split of the
    beta-vertices, inside the surviving graph. The result is a strict
    certificate: acyclic with every surviving vertex of degree 1 or 3.
    """
    a, b = split_betas(ctx.d_prime)
    if paths.sources != a or paths.sinks != b:
        raise GraphError("path endpoints not in D' split")
    paths.validate(ctx.g)  # raises on non-disjoint or non-edges
    for p in paths.paths:
        for v in p:
            if ctx.d >> v & 1:
                raise GraphError(f"path visits deleted vertex {v}")

    edges = symmetric_difference(ctx.f0, paths.edge_set())
    while True:
        cyc = find_cycle(ctx.g, edges)
        if cyc is None:
            break
        cyc_edges = frozenset(
            (min(u, v), max(u, v)) for u, v in zip(cyc, cyc[1:] + [cyc[0]])
        )
        edges = edges - cyc_edges

    cert = ForestCertificate(edges, ctx.alive, "strict")
    cert.validate(ctx.g)
    return cert


def forest_from_betas(
    g: Graph, alive: VertexSet, betas: VertexSet, f0: EdgeSet
) -> tuple[ForestCertificate, PathSystem]:
    """Run the full construction on an induced view: split the beta
    set, route disjoint paths inside `alive`, xor with the surviving
    matching, strip cycles. Returns the certificate and the paths used."""
    from .connectivity import disjoint_paths_within

    a, b = split_betas(betas)
    k_star = a.bit_count()
    if k_star == 0:
        paths = PathSystem((), 0, 0)
    else:
        paths = disjoint_paths_within(g, alive, a, b, k_star)
    ctx = BetaContext(g, g.all_vertices & ~alive, betas, f0)
    return build_forest(ctx, paths), paths


def construct_forest(ctx: BetaContext) -> tuple[ForestCertificate, PathSystem]:
    """Convenience wrapper: find the Menger paths for ctx and build."""
    return forest_from_betas(ctx.g, ctx.alive, ctx.d_prime, ctx.f0)


def spanning_forest_13_exists(g: Graph, allow_odd_exception: bool) -> ForestCertificate | None:
    """Exhaustive search for a spanning forest with all degrees 1 or 3.

    With allow_odd_exception and odd n, exactly one vertex may instead
    have degree 0 or 6. Branch-and-bound over edge subsets: cycles are
    cut by union-find on inclusion, and a vertex whose incident edges
    are all decided must land on an allowed degree.
    """
    edges = g.edges()
    if g.n > SEARCH_MAX_N or len(edges) > SEARCH_MAX_EDGES:
        raise GraphError("instance too large for exhaustive forest search")
    relaxed = allow_odd_exception and g.n % 2 == 1
    last_incident = [-1] * g.n
    for i, (u, v) in enumerate(edges):
        last_incident[u] = i
        last_incident[v] = i

    deg = [0] * g.n
    cap = 6 if relaxed else 3

    def find(parent: list[int], x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def finalize(i: int, exc: int | None) -> tuple[bool, int | None]:
        # vertices whose last incident edge is i now have their final
        # degree; it must be allowed, possibly consuming the exception
        u, v = edges[i]
        for w in (u, v) if u != v else (u,):
            if last_incident[w] == i and deg[w] not in (1, 3) and w != exc:
                if relaxed and exc is None and deg[w] in (0, 6):
                    exc = w
                else:
                    return False, exc
        return True, exc

    def descend(i: int, exc: int | None, chosen: list, parent: list) -> list | None:
        if i == len(edges):
            offenders = [
                w for w in range(g.n) if deg[w] not in (1, 3) and w != exc
            ]
            if exc is None and relaxed:
                # odd n forces exactly one even-degree vertex
                if len(offenders) == 1 and deg[offenders[0]] in (0, 6):
                    return list(chosen)
                return None
            return list(chosen) if not offenders else None

        u, v = edges[i]
        # include edge i unless it closes a cycle or overshoots a degree
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv and deg[u] < cap and deg[v] < cap:
            deg[u] += 1
            deg[v] += 1
            feasible, exc2 = finalize(i, exc)
            if feasible:
                merged = list(parent)
                merged[ru] = rv
                chosen.append((u, v))
                result = descend(i + 1, exc2, chosen, merged)
                if result is not None:
                    return result
                chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        # exclude edge i
        feasible, exc2 = finalize(i, exc)
        if feasible:
            result = descend(i + 1, exc2, chosen, parent)
            if result is not None:
                return result
        return None

    found = descend(0, None, [], list(range(g.n)))
    if found is None:
        return None
    cert = ForestCertificate(
        frozenset(found), g.all_vertices, "odd-exception" if relaxed else "strict"
    )
    cert.validate(g)
    return cert
