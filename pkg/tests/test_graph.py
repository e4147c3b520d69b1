import random

import pytest
from hypothesis import given

from k5choose.graph import (
    Graph,
    Separation,
    articulation_vertices,
    components,
    contract_edge,
    find_small_cut_separating,
    is_two_connected,
)
from k5choose.oracle import brute_force_small_cut
from k5choose.selftest import atlas_graphs, random_graph

from conftest import complete, cycle, graphs, path


def test_rejects_loops_and_unknown_endpoints():
    with pytest.raises(ValueError):
        Graph([0], [(0, 0)])
    with pytest.raises(ValueError):
        Graph([0], [(0, 1)])
    with pytest.raises(ValueError):
        Graph([-1])


def test_parallel_edges_collapse():
    g = Graph([0, 1], [(0, 1), (1, 0), (0, 1)])
    assert g.edges == {(0, 1)}


def test_graph_is_a_value():
    g = path(3)
    h = g.add_edge(0, 2)
    assert g.size() == 2 and h.size() == 3
    assert g == path(3) and hash(g) == hash(path(3))


class TestContract:
    def test_triangle(self):
        h = contract_edge(complete(3), 0, 1)
        assert h.vertices == {0, 2}
        assert h.edges == {(0, 2)}

    def test_path(self):
        h = contract_edge(Graph([4, 7, 9], [(7, 4), (4, 9)]), 7, 4)
        assert h == Graph([4, 9], [(4, 9)])

    def test_k4_gives_k3(self):
        h = contract_edge(complete(4), 2, 3)
        assert h == Graph([0, 1, 2], [(0, 1), (0, 2), (1, 2)])

    def test_non_edge_rejected(self):
        with pytest.raises(ValueError):
            contract_edge(path(3), 0, 2)

    @given(graphs(min_n=2))
    def test_keeps_smaller_id(self, g):
        for u, v in g.sorted_edges():
            h = contract_edge(g, v, u)
            assert h.vertices == g.vertices - {max(u, v)}
            assert h.neighbors(u) == (g.neighbors(u) | g.neighbors(v)) - {u, v}


class TestComponents:
    def test_examples(self):
        assert components(Graph.from_edges([(0, 1), (2, 3)])) == [{0, 1}, {2, 3}]
        assert components(complete(3)) == [{0, 1, 2}]
        assert components(Graph([5, 1, 3])) == [{1}, {3}, {5}]

    @given(graphs())
    def test_partition_with_no_crossing_edges(self, g):
        comps = components(g)
        assert sorted(v for c in comps for v in c) == sorted(g.vertices)
        where = {v: i for i, c in enumerate(comps) for v in c}
        assert all(where[u] == where[v] for u, v in g.edges)
        assert [min(c) for c in comps] == sorted(min(c) for c in comps)


class TestArticulation:
    def test_examples(self):
        assert articulation_vertices(path(3)) == {1}
        assert articulation_vertices(complete(3)) == set()
        bowtie = Graph.from_edges([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
        assert articulation_vertices(bowtie) == {2}

    @given(graphs())
    def test_matches_definition(self, g):
        base = len(components(g))
        direct = {v for v in g if len(components(g.remove_vertex(v))) > base}
        assert articulation_vertices(g) == direct


class TestTwoConnected:
    def test_examples(self):
        assert is_two_connected(complete(3))
        assert not is_two_connected(path(3))
        assert is_two_connected(cycle(4))
        assert not is_two_connected(complete(2))

    def test_exhaustive_connected_up_to_six(self):
        count = 0
        for g in atlas_graphs(6):
            if len(g) >= 3 and len(components(g)) == 1:
                count += 1
                assert is_two_connected(g) == (not articulation_vertices(g))
        assert count == 141


class TestSmallCut:
    def test_path(self):
        cut, sep = find_small_cut_separating(path(3), {0, 2}, 1)
        assert cut == {1}
        assert sep.is_valid_for(path(3)) and sep.order == 1

    def test_c4(self):
        g = cycle(4)
        cut, sep = find_small_cut_separating(g, {0, 2}, 2)
        assert cut == {1, 3}
        assert sep.is_valid_for(g)

    def test_k4_has_none(self):
        for s in [{0, 1}, {0, 3}, {2, 3}]:
            assert find_small_cut_separating(complete(4), s, 2) is None

    def test_rejects_foreign_targets(self):
        with pytest.raises(ValueError):
            find_small_cut_separating(path(3), {0, 9}, 1)

    def test_require_member(self):
        g = cycle(6)
        cut, _ = find_small_cut_separating(g, {0, 3}, 2, require_member_of={2})
        assert cut == {2, 4}

    def test_agrees_with_brute_force(self):
        rng = random.Random(7)
        checked = 0
        while checked < 600:
            g = random_graph(rng, rng.randint(3, 7), rng.uniform(0.2, 0.8))
            if len(components(g)) != 1:
                continue
            s = set(rng.sample(sorted(g.vertices), rng.randint(2, len(g))))
            order = rng.choice([1, 2])
            req = set(rng.sample(sorted(g.vertices), rng.randint(1, len(g)))) if rng.random() < 0.4 else None
            got = find_small_cut_separating(g, s, order, req)
            want = brute_force_small_cut(g, s, order, req)
            if want is None:
                assert got is None
            else:
                cut, sep = got
                assert cut == want
                assert sep.is_valid_for(g) and sep.separator == cut
                assert sep.left - sep.right & s and sep.right - sep.left & s
            checked += 1


def test_separation_validity():
    g = path(3)
    assert Separation(frozenset({0, 1}), frozenset({1, 2})).is_valid_for(g)
    assert not Separation(frozenset({0, 1}), frozenset({2})).is_valid_for(g)
    assert not Separation(frozenset({0, 1, 2}), frozenset({1})).is_valid_for(g)
