"""Graph container, graph6 codec and combinatorial invariants, checked
against brute force and against networkx where it offers an independent
implementation."""

import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgeideals.graphs import (
    Graph,
    bits,
    complete,
    cycle,
    delete_vertices,
    disjoint_union,
    duplicate_vertex,
    empty_graph,
    from_edges,
    graph_stats,
    induced_matching_number,
    is_connected,
    mask_of,
    matching_number,
    max_independent,
    maximal_independent_sets,
    min_maximal_independent,
    parse_graph6,
    path,
    s_suspension,
    star,
    to_graph6,
)


def all_pairs(n):
    return list(combinations(range(n), 2))


def random_graph(n, rng, density=0.5):
    return from_edges(
        n, [e for e in all_pairs(n) if rng.random() < density]
    )


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


class TestConstruction:
    def test_from_edges_basic(self):
        g = from_edges(3, [(0, 1), (1, 2)])
        assert g.edges() == [(0, 1), (1, 2)]
        assert g.num_edges() == 2
        assert g.has_edge(1, 0) and not g.has_edge(0, 2)

    def test_duplicate_edges_collapse(self):
        g = from_edges(2, [(0, 1), (1, 0), (0, 1)])
        assert g.num_edges() == 1

    def test_loop_rejected(self):
        with pytest.raises(ValueError):
            from_edges(2, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            from_edges(2, [(0, 2)])

    def test_asymmetric_adjacency_rejected(self):
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0b00))

    def test_vertex_count_bounds(self):
        with pytest.raises(ValueError):
            Graph(65, (0,) * 65)
        assert Graph(0, ()).n == 0  # deletion closure

    def test_bits_and_mask(self):
        assert list(bits(0b10110)) == [1, 2, 4]
        assert mask_of([1, 2, 4]) == 0b10110


class TestGraph6:
    def test_k2_is_golden_string(self):
        assert to_graph6(from_edges(2, [(0, 1)])) == "A_"

    def test_header_tolerated(self):
        assert parse_graph6(">>graph6<<A_").num_edges() == 1

    def test_roundtrip_corpus_against_networkx(self):
        rng = random.Random(5)
        for n in range(1, 8):
            for _ in range(25):
                g = random_graph(n, rng)
                mine = to_graph6(g)
                theirs = nx.to_graph6_bytes(
                    to_nx(g), header=False
                ).decode().strip()
                assert mine == theirs
                assert parse_graph6(mine) == g

    def test_parse_rejects_garbage(self):
        for bad in ["", "A", "B~~", "\x1f", "C????"]:
            with pytest.raises(ValueError):
                parse_graph6(bad)

    def test_trailing_bits_must_be_zero(self):
        # 'A' header (n=2) with body bit 2 set is out of range
        with pytest.raises(ValueError):
            parse_graph6("AO")

    @given(st.integers(2, 9), st.data())
    @settings(max_examples=60, deadline=None)
    def test_roundtrip_property(self, n, data):
        edges = data.draw(
            st.lists(st.sampled_from(all_pairs(n)), unique=True)
        )
        g = from_edges(n, edges)
        assert parse_graph6(to_graph6(g)) == g


class TestInvariantsBruteForce:
    def brute_stats(self, g):
        ind = [
            s
            for s in range(1 << g.n)
            if g.is_independent(s)
        ]
        maximal = [
            s
            for s in ind
            if all(
                (s | 1 << v) not in ind for v in range(g.n) if not s >> v & 1
            )
        ]
        sizes = [bin(s).count("1") for s in maximal]
        edges = g.edges()
        m = im = 0
        for k in range(1, len(edges) + 1):
            for combo in combinations(edges, k):
                verts = [v for e in combo for v in e]
                if len(set(verts)) < 2 * k:
                    continue
                m = max(m, k)
                if all(
                    not g.has_edge(a, b)
                    for a, b in combinations(verts, 2)
                    if (min(a, b), max(a, b)) not in combo
                ):
                    im = max(im, k)
        return max(sizes), min(sizes), m, im

    def test_against_brute_force(self):
        rng = random.Random(11)
        samples = [random_graph(n, rng, d) for n in (3, 4, 5, 6)
                   for d in (0.2, 0.5, 0.8) for _ in range(6)]
        samples += [cycle(5), star(6), complete(5), path(6), empty_graph(4)]
        for g in samples:
            d, p, m, im = self.brute_stats(g)
            assert max_independent(g) == d
            assert min_maximal_independent(g) == p
            assert matching_number(g) == m
            assert induced_matching_number(g) == im
            assert graph_stats(g) == (d, p, m, im)

    def test_maximal_independent_sets_unique_and_maximal(self):
        rng = random.Random(3)
        for _ in range(20):
            g = random_graph(6, rng)
            sets = list(maximal_independent_sets(g))
            assert len(sets) == len(set(sets))
            for s in sets:
                assert g.is_independent(s)
                for v in range(g.n):
                    if not s >> v & 1:
                        assert not g.is_independent(s | 1 << v)

    def test_known_values(self):
        assert max_independent(cycle(5)) == 2
        assert min_maximal_independent(star(7)) == 1
        assert matching_number(path(6)) == 3
        assert induced_matching_number(path(6)) == 2
        assert induced_matching_number(cycle(5)) == 1


class TestConnectivity:
    def test_matches_networkx(self):
        rng = random.Random(17)
        for n in range(1, 8):
            for _ in range(30):
                g = random_graph(n, rng, 0.3)
                assert is_connected(g) == nx.is_connected(to_nx(g))

    def test_empty_graph_connected_by_convention(self):
        assert is_connected(Graph(0, ()))


class TestOperations:
    def test_delete_vertices_relabels(self):
        g = cycle(5)
        res = delete_vertices(g, mask_of([0]))
        assert res.kept == (1, 2, 3, 4)
        assert res.graph.edges() == [(0, 1), (1, 2), (2, 3)]  # a path

    def test_delete_everything(self):
        assert delete_vertices(cycle(4), 0b1111).graph.n == 0

    def test_s_suspension_adjacency(self):
        g = path(3)
        s = mask_of([0, 2])  # independent in P3
        gs = s_suspension(g, s)
        assert gs.n == 4
        assert sorted(bits(gs.adj[3])) == [1]

    def test_s_suspension_requires_independent(self):
        with pytest.raises(ValueError):
            s_suspension(path(3), mask_of([0, 1]))

    def test_duplicate_vertex_is_nonadjacent_twin(self):
        g = cycle(4)
        g2 = duplicate_vertex(g, 0)
        assert g2.adj[4] == g.adj[0]
        assert not g2.has_edge(0, 4)

    def test_disjoint_union_counts(self):
        g = disjoint_union(cycle(3), path(2))
        assert g.n == 5 and g.num_edges() == 4
        assert not is_connected(g)

    def test_generators(self):
        assert star(5).num_edges() == 4
        assert complete(4).num_edges() == 6
        assert cycle(6).num_edges() == 6
        assert path(4).num_edges() == 3
        assert empty_graph(3).num_edges() == 0
