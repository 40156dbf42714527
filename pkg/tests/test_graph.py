import pytest
from hypothesis import given, strategies as st

from slowcolor import families
from slowcolor.graph import (
    GraphError,
    bits,
    components,
    edge_degrees,
    find_cycle,
    from_edges,
    independence_number,
    is_independent,
    load_graph,
    mask_of,
    maximal_independent_subsets,
    subgraph,
    symmetric_difference,
)
from conftest import brute_force_mis, random_graph

PRISM_TEXT = "6 9\n0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n0 3\n1 4\n2 5"


class TestLoadGraph:
    def test_prism_edge_list(self):
        g = load_graph(PRISM_TEXT)
        assert g.n == 6
        assert sorted(g.edges()) == sorted(families.prism().edges())

    def test_single_vertex(self):
        g = load_graph("1 0")
        assert g.n == 1 and g.edges() == []

    def test_loop_rejected(self):
        with pytest.raises(GraphError, match="loop"):
            load_graph("2 1\n0 0")

    def test_duplicate_rejected(self):
        with pytest.raises(GraphError, match="duplicate"):
            load_graph("3 2\n0 1\n1 0")

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphError):
            load_graph("2 1\n0 5")

    def test_bad_line_reports_number(self):
        with pytest.raises(GraphError, match="line 3"):
            load_graph("3 2\n0 1\nnope")

    def test_comments_and_blanks(self):
        g = load_graph("# prism\n\n3 1  # header\n0 1\n")
        assert g.n == 3 and g.edges() == [(0, 1)]

    def test_json_form(self):
        g = load_graph('{"n": 3, "edges": [[0, 1], [1, 2]], "labels": ["a", "b", "c"]}')
        assert g.label(2) == "c"
        assert g.edges() == [(0, 1), (1, 2)]

    def test_edge_count_mismatch(self):
        with pytest.raises(GraphError, match="declared"):
            load_graph("3 2\n0 1")


class TestIndependence:
    def test_empty_set(self, prism):
        assert is_independent(prism, 0)

    def test_paper_pair(self, prism):
        # paper labels 3 and 4 are indices 2 and 3
        assert is_independent(prism, mask_of([2, 3]))

    def test_triangle_pair(self, prism):
        assert not is_independent(prism, mask_of([0, 1]))

    def test_alpha_c5(self):
        assert independence_number(families.cycle(5)) == 2

    def test_alpha_edgeless(self):
        assert independence_number(families.edgeless(7)) == 7

    def test_alpha_prism(self, prism):
        assert independence_number(prism) == 2

    def test_alpha_within_mask(self, prism):
        # restricted to one triangle, alpha is 1
        assert independence_number(prism, mask_of([0, 1, 2])) == 1


class TestMaximalIndependentSubsets:
    def test_p3(self):
        g = families.path(3)
        assert maximal_independent_subsets(g, 0b111) == [0b101, 0b010]

    def test_prism_contains_paper_reply(self, prism):
        assert mask_of([2, 3]) in maximal_independent_subsets(prism, prism.all_vertices)

    def test_edgeless_whole_set(self):
        g = families.edgeless(4)
        assert maximal_independent_subsets(g, 0b1011) == [0b1011]

    def test_empty_mark_rejected(self, prism):
        with pytest.raises(GraphError):
            maximal_independent_subsets(prism, 0)

    @pytest.mark.parametrize("seed", range(12))
    def test_matches_brute_force(self, seed):
        import random

        rng = random.Random(seed)
        g = random_graph(6, 0.45, rng)
        for _ in range(8):
            m = rng.randrange(1, 1 << 6)
            got = maximal_independent_subsets(g, m)
            assert sorted(got) == sorted(brute_force_mis(g, m))
            assert len(set(got)) == len(got)

    def test_lexicographic_order(self):
        g = families.path(3)
        out = maximal_independent_subsets(g, 0b111)
        keys = [tuple(sorted(bits(s))) for s in out]
        assert keys == sorted(keys)


class TestComponents:
    def test_prism_connected(self, prism):
        assert components(prism, prism.all_vertices) == [prism.all_vertices]

    def test_prism_minus_paper_pair(self, prism):
        alive = prism.all_vertices & ~mask_of([2, 3])
        comps = components(prism, alive)
        assert comps == [alive]  # the path 1-2-5-6 in paper labels

    def test_two_disjoint_edges(self):
        g = from_edges(4, [(0, 1), (2, 3)])
        assert components(g, g.all_vertices) == [0b0011, 0b1100]

    def test_empty(self, prism):
        assert components(prism, 0) == []


class TestFindCycle:
    def test_triangle(self):
        g = families.complete(3)
        cyc = find_cycle(g, g.edge_set())
        assert cyc is not None and len(cyc) == 3 and len(set(cyc)) == 3

    def test_forest_none(self):
        g = families.path(5)
        assert find_cycle(g, g.edge_set()) is None

    def test_prism_cycle_is_closed_walk(self, prism):
        cyc = find_cycle(prism, prism.edge_set())
        assert cyc is not None and len(set(cyc)) == len(cyc) >= 3
        ring = cyc + [cyc[0]]
        for u, v in zip(ring, ring[1:]):
            assert prism.has_edge(u, v)

    @pytest.mark.parametrize("seed", range(10))
    def test_acyclic_iff_edge_count(self, seed):
        # |edges| = |touched vertices| - #components of the edge subgraph
        import random

        rng = random.Random(seed)
        g = random_graph(7, 0.4, rng)
        all_edges = g.edges()
        sub = frozenset(e for e in all_edges if rng.random() < 0.6)
        touched = mask_of(v for e in sub for v in e)
        comp_count = len(components(_edge_graph(g.n, sub), touched))
        acyclic = find_cycle(g, sub) is None
        assert acyclic == (len(sub) == touched.bit_count() - comp_count)


def _edge_graph(n, edges):
    return from_edges(n, edges)


class TestSymmetricDifference:
    def test_prism_instance(self):
        # matching edge (2,5) cancels against the path edges
        a = frozenset([(0, 1), (1, 4), (4, 5)])
        b = frozenset([(1, 4)])
        assert symmetric_difference(a, b) == frozenset([(0, 1), (4, 5)])

    def test_self_is_empty(self):
        a = frozenset([(0, 1), (2, 3)])
        assert symmetric_difference(a, a) == frozenset()

    def test_identity(self):
        a = frozenset([(0, 1)])
        assert symmetric_difference(a, frozenset()) == a

    @given(st.data())
    def test_parity_law(self, data):
        n = 8
        universe = [(u, v) for u in range(n) for v in range(u + 1, n)]
        a = frozenset(data.draw(st.sets(st.sampled_from(universe))))
        b = frozenset(data.draw(st.sets(st.sampled_from(universe))))
        da = edge_degrees(a, n)
        db = edge_degrees(b, n)
        dx = edge_degrees(symmetric_difference(a, b), n)
        for v in range(n):
            assert dx[v] % 2 == (da[v] + db[v]) % 2


class TestSubgraph:
    def test_reindexing(self, prism):
        sub, old = subgraph(prism, mask_of([0, 1, 4, 5]))
        assert sub.n == 4
        assert old == [0, 1, 4, 5]
        # path 0-1-4-5 survives as 0-1-2-3
        assert sorted(sub.edges()) == [(0, 1), (1, 2), (2, 3)]

    def test_labels_carried(self, prism):
        sub, _ = subgraph(prism, mask_of([2, 3]))
        assert [sub.label(v) for v in range(2)] == ["3", "4"]


class TestBuiltins:
    def test_prism_pinned(self, prism):
        assert len(prism.edges()) == 9
        assert all(prism.degree(v) == 3 for v in range(6))

    def test_cube_pinned(self):
        g = families.cube()
        assert len(g.edges()) == 12
        assert all(g.degree(v) == 3 for v in range(8))

    def test_petersen_pinned(self):
        g = families.petersen()
        assert g.n == 10 and len(g.edges()) == 15
        assert all(g.degree(v) == 3 for v in range(10))

    def test_unknown_rejected(self):
        with pytest.raises(GraphError):
            families.builtin("moebius")
