import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k5choose.boundary import Instance, InvalidInstance, check_instance
from k5choose.choose import (
    InternalContradiction,
    Trace,
    _Solver,
    color,
    five_choose,
    verify_coloring,
)
from k5choose.generators import apollonian, random_instance, random_triangle_sum
from k5choose.graph import Graph
from k5choose.oracle import brute_force_list_color
from k5choose.selftest import thinned

from conftest import complete, cycle

FIVE = frozenset(range(1, 6))


def colored(inst, **kw):
    trace = Trace(check_subinstances=True)
    col = color(inst, trace=trace, **kw)
    assert verify_coloring(inst.graph, inst.lists, col)
    for x in inst.A:
        assert col[x] in inst.lists[x]
    assert trace.subinstance_violations == []
    assert all(child < parent for _, parent, child in trace.steps)
    return col, trace


class TestExamples:
    def test_single_vertex(self):
        col, trace = colored(Instance(Graph([0]), (), (), {0: FIVE}))
        assert col == {0: 1}
        assert list(trace.cases) == [1, 8]

    def test_forced_triangle(self):
        inst = Instance(complete(3), {0, 1}, {0, 1, 2}, {0: {1}, 1: {2}, 2: {1, 2, 3}})
        col, _ = colored(inst)
        assert col == {0: 1, 1: 2, 2: 3}

    def test_k4(self):
        g = complete(4)
        col = five_choose(g, {v: FIVE for v in g})
        assert verify_coloring(g, {v: FIVE for v in g}, col)
        assert len(set(col.values())) == 4
        assert brute_force_list_color(g, {v: FIVE for v in g}) is not None

    def test_edgeless(self):
        g = Graph([0, 1, 2])
        assert five_choose(g, {v: FIVE for v in g}) == {0: 1, 1: 1, 2: 1}

    def test_apollonian_ten(self):
        rng = random.Random(10)
        for seed in range(20):
            g = apollonian(10, seed)
            lists = {v: frozenset(rng.sample(range(1, 9), 5)) for v in g}
            col = five_choose(g, lists, deep=True)
            assert verify_coloring(g, lists, col)
            assert brute_force_list_color(g, lists) is not None

    def test_empty_graph(self):
        assert color(Instance(Graph(), (), (), {})) == {}


class TestVerify:
    def test_examples(self):
        k2 = complete(2)
        lists = {0: {1, 2}, 1: {1, 2}}
        assert verify_coloring(k2, lists, {0: 1, 1: 2})
        assert not verify_coloring(k2, lists, {0: 1, 1: 1})
        assert not verify_coloring(k2, lists, {0: 1})
        assert not verify_coloring(k2, lists, {0: 3, 1: 2})
        assert not verify_coloring(k2, lists, {0: 1, 1: 2, 5: 1})


class TestErrors:
    def test_shallow_invalid_rejected(self):
        with pytest.raises(InvalidInstance) as e:
            color(Instance(complete(3), (), (), {0: {1, 2}, 1: FIVE, 2: FIVE}))
        assert any("|L(x)| >= 5" in v for v in e.value.violations)

    def test_not_a_boundary_is_a_contradiction(self):
        # plus(K4, V) = K5: case 7 finds the rooted triangle behind the K5 minor.
        g = complete(4)
        inst = Instance(g, (), set(g.vertices), {v: {1, 2, 3} for v in g})
        with pytest.raises(InternalContradiction, match="not a boundary"):
            color(inst)

    def test_deep_mode_rejects_bad_boundary_up_front(self):
        g = complete(4)
        inst = Instance(g, (), set(g.vertices), {v: {1, 2, 3} for v in g})
        with pytest.raises(InvalidInstance):
            color(inst, deep=True)


class TestCase7Reduction:
    def test_two_cut_from_bad_vertex(self):
        # 0 has boundary neighbours 1, 2, 3, which only 4 joins in G - 0.
        g = Graph.from_edges([(0, 1), (0, 2), (0, 3), (4, 1), (4, 2), (4, 3)])
        cut, sep = _Solver(False, None, 14).case7(g, frozenset({0, 1, 2, 3}))
        assert cut == {0, 4}
        assert sep.is_valid_for(g) and sep.separator == cut

    def test_single_cut_from_bad_vertex(self):
        g = Graph.from_edges([(0, 1), (0, 2), (0, 3), (4, 1), (4, 2), (4, 3), (4, 6)])
        b = frozenset({0, 1, 2, 3, 6})
        cut, sep = _Solver(False, None, 14).case7(g, b)
        assert cut == {4}
        assert sep.is_valid_for(g)
        assert sep.left - sep.right & b and sep.right - sep.left & b

    def test_no_degree_three_boundary_vertex(self):
        assert _Solver(False, None, 14).case7(cycle(5), frozenset(range(5))) is None


def test_large_colors_are_opaque():
    g = apollonian(8, 2)
    lists = {v: frozenset({10**9 + v % 3, 7, 10**12, 2**40, 99}) for v in g}
    col = five_choose(g, lists)
    assert verify_coloring(g, lists, col)


def test_lists_longer_than_needed():
    g = apollonian(9, 4)
    lists = {v: frozenset(range(v, v + 9)) for v in g}
    assert verify_coloring(g, lists, five_choose(g, lists))


def test_scales_beyond_the_oracles():
    g = apollonian(150, 1)
    rng = random.Random(0)
    lists = {v: frozenset(rng.sample(range(1, 12), 5)) for v in g}
    assert verify_coloring(g, lists, five_choose(g, lists))


def test_all_nontrivial_cases_reached():
    seen = set()
    additions = 0
    rng = random.Random(1)
    for i in range(150):
        g = random_triangle_sum(3, 5, i) if i % 2 else apollonian(4 + i % 9, i)
        g = thinned(g, 0.7, rng)
        mode = "empty" if i % 3 == 0 else "vertex-neighborhood"
        inst = random_instance(g, mode, 8, i)
        _, trace = colored(inst, deep=True)
        seen |= set(trace.cases)
        additions += len(trace.case6_checks)
        assert all(trace.case6_checks)
    assert seen >= {1, 2, 3, 4, 5, 6, 8, 9}
    assert additions > 0


def test_precoloured_clique_respected():
    g = apollonian(9, 3)
    a = {0, 1, 2}
    lists = {v: FIVE for v in g}
    lists.update({0: {4}, 1: {5}, 2: {1}})
    # For this seed the starting triangle is still a face, so it is a boundary.
    inst = Instance(g, a, a, lists)
    assert check_instance(inst, deep=True) == []
    col, _ = colored(inst, deep=True)
    assert (col[0], col[1], col[2]) == (4, 5, 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 11), st.integers(0, 2**32), st.floats(0.5, 1.0))
def test_random_sparse_planar_instances(n, seed, keep):
    g = thinned(apollonian(n, seed), keep, random.Random(seed))
    inst = random_instance(g, "vertex-neighborhood", 7, seed)
    colored(inst, deep=True)


def test_deterministic():
    for seed in range(20):
        inst = random_instance(random_triangle_sum(3, 5, seed), "vertex-neighborhood", 8, seed)
        t1, t2 = Trace(), Trace()
        assert color(inst, trace=t1) == color(inst, trace=t2)
        assert t1.steps == t2.steps
