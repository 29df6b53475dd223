import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chroma.core import (
    ColoredOrientation,
    EdgeColoredGraph,
    OrientedGraph,
    color_degree,
    color_set,
    color_set_between,
    edge_critical_core,
    is_properly_colored,
    is_rainbow,
    min_color_degree,
    mono_degree,
    mono_degree_max,
    side_proper_subgraph,
    total_color_degree,
)
from chroma.constructions import (
    random_bipartite_edge_colored,
    random_edge_colored_graph,
    transitive_tournament,
)
from chroma.transforms import signature


def mono_triangle():
    return EdgeColoredGraph(3, [(0, 1, 5), (1, 2, 5), (0, 2, 5)])


def rainbow_k(n):
    edges = []
    c = 0
    for u in range(n):
        for v in range(u + 1, n):
            edges.append((u, v, c))
            c += 1
    return EdgeColoredGraph(n, edges)


def seeded_graph(seed, max_n=12, max_colors=6):
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    return random_edge_colored_graph(
        n, rng.choice([0.2, 0.5, 0.8]), rng.randint(1, max_colors), rng.getrandbits(32)
    )


class TestInvariants:
    def test_rejects_loop(self):
        with pytest.raises(ValueError, match="loop"):
            EdgeColoredGraph(3, [(1, 1, 0)])

    def test_rejects_duplicate_pair_any_orientation(self):
        with pytest.raises(ValueError, match="duplicate"):
            EdgeColoredGraph(3, [(0, 1, 0), (1, 0, 2)])

    def test_rejects_negative_color(self):
        with pytest.raises(ValueError, match="color"):
            EdgeColoredGraph(3, [(0, 1, -1)])

    def test_rejects_bad_vertex(self):
        with pytest.raises(ValueError, match="vertex"):
            EdgeColoredGraph(2, [(0, 2, 0)])

    def test_canonical_storage(self):
        G = EdgeColoredGraph(4, [(3, 1, 7), (2, 0, 1)])
        assert G.edges == ((0, 2, 1), (1, 3, 7))

    def test_bipartition_must_cover_and_cross(self):
        with pytest.raises(ValueError, match="cover"):
            EdgeColoredGraph(3, [], bipartition=([0], [1]))
        with pytest.raises(ValueError, match="overlap"):
            EdgeColoredGraph(2, [], bipartition=([0, 1], [1]))
        with pytest.raises(ValueError, match="cross"):
            EdgeColoredGraph(3, [(1, 2, 0)], bipartition=([0], [1, 2]))

    def test_oriented_graph_rejects_antiparallel(self):
        with pytest.raises(ValueError, match="anti-parallel"):
            OrientedGraph(2, [(0, 1), (1, 0)])

    def test_colored_orientation_must_match_host(self):
        host = EdgeColoredGraph(3, [(0, 1, 4)])
        assert ColoredOrientation(host, [(1, 0, 4)]).arcs == ((1, 0, 4),)
        with pytest.raises(ValueError, match="host"):
            ColoredOrientation(host, [(0, 1, 5)])
        with pytest.raises(ValueError, match="host"):
            ColoredOrientation(host, [(0, 2, 4)])


class TestColorDegree:
    def test_monochromatic_triangle(self):
        G = mono_triangle()
        assert all(color_degree(G, v) == 1 for v in range(3))

    def test_star_with_repeated_color(self):
        G = EdgeColoredGraph(4, [(0, 1, 1), (0, 2, 2), (0, 3, 2)])
        assert color_degree(G, 0) == 2

    def test_transitive_signature_total(self):
        # total color degree of the order-n transitive tournament signature
        # is n(n+1)/2 - 1
        for n in (2, 4, 5, 9):
            G = signature(transitive_tournament(n))
            assert total_color_degree(G) == n * (n + 1) // 2 - 1

    def test_invalid_vertex(self):
        with pytest.raises(ValueError):
            color_degree(mono_triangle(), 3)

    def test_edgeless(self):
        G = EdgeColoredGraph(3)
        assert min_color_degree(G) == 0
        assert total_color_degree(G) == 0

    def test_rainbow_triangle(self):
        G = rainbow_k(3)
        assert min_color_degree(G) == 2
        assert total_color_degree(G) == 6

    def test_min_color_degree_empty_graph(self):
        with pytest.raises(ValueError):
            min_color_degree(EdgeColoredGraph(0))

    def test_circulant_signature_min_degree(self):
        from chroma.constructions import circulant_tournament

        D = circulant_tournament(7)
        G = signature(D)
        # independent recount straight from the arc list
        by_vertex = {v: set() for v in range(7)}
        for t, h in D.arcs:
            by_vertex[t].add(h)
            by_vertex[h].add(h)
        assert min(len(s) for s in by_vertex.values()) == 4
        assert min_color_degree(G) == 4


class TestMonoDegree:
    def test_rainbow_k4(self):
        G = rainbow_k(4)
        assert all(mono_degree(G, v) == 1 for v in range(4))
        assert mono_degree_max(G) == 1

    def test_monochromatic_star(self):
        G = EdgeColoredGraph(6, [(0, v, 3) for v in range(1, 6)])
        assert mono_degree(G, 0) == 5
        assert mono_degree(G, 1) == 1

    def test_transitive_signature_sink(self):
        G = signature(transitive_tournament(4))
        # all in-arcs of the last vertex carry its own id as color
        assert mono_degree(G, 3) == 3

    def test_isolated(self):
        assert mono_degree(EdgeColoredGraph(2), 0) == 0


class TestColorSets:
    def test_isolated_vertex(self):
        assert color_set(EdgeColoredGraph(2), 0) == frozenset()

    def test_path_endpoints(self):
        G = EdgeColoredGraph(3, [(0, 1, 1), (1, 2, 2)])
        assert color_set_between(G, {0}, {2}) == frozenset()
        assert color_set_between(G, {0, 2}, {1}) == frozenset({1, 2})

    def test_k22_all_colors(self):
        G = EdgeColoredGraph(4, [(0, 2, 1), (0, 3, 2), (1, 2, 3), (1, 3, 4)])
        assert color_set_between(G, {0, 1}, {2, 3}) == frozenset({1, 2, 3, 4})

    def test_overlap_rejected(self):
        with pytest.raises(ValueError, match="overlap"):
            color_set_between(mono_triangle(), {0, 1}, {1, 2})


class TestPredicates:
    def c4(self, c1, c2, c3, c4):
        return EdgeColoredGraph(4, [(0, 1, c1), (1, 2, c2), (2, 3, c3), (0, 3, c4)])

    def test_alternating_c4(self):
        G = self.c4(1, 2, 1, 2)
        cycle = [(0, 1), (1, 2), (2, 3), (0, 3)]
        assert is_properly_colored(G, cycle)
        assert not is_rainbow(G, cycle)

    def test_signature_of_directed_triangle(self):
        G = signature(OrientedGraph(3, [(0, 1), (1, 2), (2, 0)]))
        edges = [(u, v) for u, v, _ in G.edges]
        assert is_properly_colored(G, edges)
        assert is_rainbow(G, edges)

    def test_foreign_edge(self):
        with pytest.raises(ValueError, match="not in graph"):
            is_properly_colored(mono_triangle(), [(0, 1), (1, 3)])
        with pytest.raises(ValueError, match="color"):
            is_rainbow(mono_triangle(), [(0, 1, 9)])

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_rainbow_implies_properly_colored(self, seed):
        rng = random.Random(seed)
        G = seeded_graph(seed)
        if G.m == 0:
            return
        k = rng.randint(1, G.m)
        subset = rng.sample(list(G.edges), k)
        if is_rainbow(G, subset):
            assert is_properly_colored(G, subset)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_degree_inequalities(self, seed):
        G = seeded_graph(seed)
        for v in range(G.n):
            d = G.degree(v)
            dc = color_degree(G, v)
            mono = mono_degree(G, v)
            if d >= 1:
                assert 1 <= dc <= d
            assert mono <= d
            assert dc * mono >= d


class TestSideProperSubgraph:
    def test_requires_bipartition(self):
        with pytest.raises(ValueError, match="bipartition"):
            side_proper_subgraph(mono_triangle(), 1)

    def test_bad_side(self):
        G = random_bipartite_edge_colored(2, 2, 1.0, 2, 0)
        with pytest.raises(ValueError, match="side"):
            side_proper_subgraph(G, 3)

    def test_idempotent_on_proper_input(self):
        G = EdgeColoredGraph(
            4, [(0, 2, 1), (0, 3, 2), (1, 2, 3)], bipartition=([0, 1], [2, 3])
        )
        assert side_proper_subgraph(G, 1) == G

    def test_keeps_smallest_neighbor(self):
        G = EdgeColoredGraph(
            4, [(0, 1, 7), (0, 2, 7), (0, 3, 7)], bipartition=([0], [1, 2, 3])
        )
        H = side_proper_subgraph(G, 1)
        assert H.edges == ((0, 1, 7),)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_degree_equals_color_degree(self, seed):
        rng = random.Random(seed)
        G = random_bipartite_edge_colored(
            rng.randint(1, 8), rng.randint(1, 8), 0.6, rng.randint(1, 4), seed
        )
        for side in (1, 2):
            H = side_proper_subgraph(G, side)
            for u in G.bipartition[side - 1]:
                assert H.degree(u) == color_degree(G, u)
                cols = [c for _, c in H.adj[u]]
                assert len(set(cols)) == len(cols)
            # spanning subgraph with colors preserved
            assert H.n == G.n
            assert set(H.edges) <= set(G.edges)


class TestEdgeCriticalCore:
    def test_rainbow_unchanged(self):
        G = rainbow_k(4)
        assert edge_critical_core(G) == G

    def test_monochromatic_triangle(self):
        H = edge_critical_core(mono_triangle())
        assert H.m == 2

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_core_properties(self, seed):
        G = seeded_graph(seed, max_n=10, max_colors=3)
        H = edge_critical_core(G)
        # color degrees preserved everywhere
        for v in range(G.n):
            assert color_degree(H, v) == color_degree(G, v)
        # every remaining edge is critical
        for i in range(H.m):
            edges = list(H.edges)
            u, v, _ = edges.pop(i)
            smaller = EdgeColoredGraph(H.n, edges)
            assert (
                color_degree(smaller, u) < color_degree(H, u)
                or color_degree(smaller, v) < color_degree(H, v)
            )
        # monochromatic classes are unions of vertex-disjoint stars: every
        # edge of a class has an endpoint of class-degree 1
        by_color = {}
        for u, v, c in H.edges:
            by_color.setdefault(c, []).append((u, v))
        for pairs in by_color.values():
            deg = {}
            for u, v in pairs:
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            assert all(deg[u] == 1 or deg[v] == 1 for u, v in pairs)
