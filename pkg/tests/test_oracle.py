import random

import pytest

from k5choose.choose import verify_coloring
from k5choose.graph import Graph
from k5choose.minors import OracleScaleExceeded
from k5choose.oracle import brute_force_list_color
from k5choose.selftest import random_graph

from conftest import complete, cycle


def test_forced_conflict():
    assert brute_force_list_color(complete(3), {0: {1}, 1: {1}, 2: {1, 2}}) is None


def test_k2():
    assert brute_force_list_color(complete(2), {0: {1, 2}, 1: {1}}) == {0: 2, 1: 1}


def test_k4_from_four_colours():
    lists = {v: {1, 2, 3, 4} for v in range(4)}
    col = brute_force_list_color(complete(4), lists)
    assert verify_coloring(complete(4), lists, col)


def test_odd_cycle_two_colours():
    assert brute_force_list_color(cycle(5), {v: {1, 2} for v in range(5)}) is None


def test_guard():
    with pytest.raises(OracleScaleExceeded):
        brute_force_list_color(cycle(13), {v: {1, 2, 3} for v in range(13)})


def test_lists_as_long_as_the_graph_always_work():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(1, 8)
        g = random_graph(rng, n, rng.random())
        lists = {v: set(rng.sample(range(1, 3 * n + 1), n)) for v in g}
        col = brute_force_list_color(g, lists)
        assert col is not None and verify_coloring(g, lists, col)


def test_agrees_with_exhaustive_product():
    from itertools import product

    rng = random.Random(6)
    for _ in range(150):
        n = rng.randint(1, 6)
        g = random_graph(rng, n, rng.uniform(0.3, 0.9))
        lists = {v: set(rng.sample(range(1, 5), rng.randint(1, 3))) for v in g}
        verts = sorted(g.vertices)
        exists = any(
            verify_coloring(g, lists, dict(zip(verts, combo)))
            for combo in product(*(sorted(lists[v]) for v in verts))
        )
        col = brute_force_list_color(g, lists)
        assert (col is not None) == exists
        if col is not None:
            assert verify_coloring(g, lists, col)


def test_isolated_vertices():
    g = Graph([3, 9])
    assert brute_force_list_color(g, {3: {7}, 9: {7}}) == {3: 7, 9: 7}
