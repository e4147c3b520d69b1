"""Exhaustive and randomised property checks, runnable from the CLI."""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx

from .boundary import boundary_after_delete, check_instance
from .choose import Trace, color, verify_coloring
from .generators import apollonian, random_instance, random_triangle_sum
from .graph import Graph, articulation_vertices, components, contract_edge, is_connected, is_two_connected
from .minors import is_boundary
from .oracle import brute_force_list_color, brute_force_rooted_k3
from .rooted import extract_rooted_k3, find_contractible_edge, has_rooted_k3, validate_witness


def atlas_graphs(max_n: int):
    """Every graph on at most ``max_n`` <= 7 vertices, one per isomorphism class."""
    if max_n > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    for h in nx.graph_atlas_g():
        if 0 < h.number_of_nodes() <= max_n:
            yield Graph(h.nodes, h.edges)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(range(n), [e for e in combinations(range(n), 2) if rng.random() < p])


def random_two_connected(rng: random.Random, max_n: int) -> Graph:
    while True:
        g = random_graph(rng, rng.randint(3, max_n), rng.uniform(0.3, 0.9))
        if is_two_connected(g):
            return g


def thinned(g: Graph, keep: float, rng: random.Random) -> Graph:
    """Random spanning subgraph; stays K5-minor-free if ``g`` is."""
    return Graph(g.vertices, [e for e in g.sorted_edges() if rng.random() < keep])


def check_articulation(max_n: int) -> tuple[int, int]:
    ok = total = 0
    for g in atlas_graphs(max_n):
        total += 1
        base = len(components(g))
        direct = {v for v in g if len(components(g.remove_vertex(v))) > base}
        two = len(g) >= 3 and is_connected(g) and not direct
        ok += articulation_vertices(g) == direct and is_two_connected(g) == two
    return ok, total


def check_rooted(max_n: int) -> tuple[int, int]:
    ok = total = 0
    for g in atlas_graphs(min(max_n, 6)):
        for x, y, z in combinations(g.sorted_vertices(), 3):
            total += 1
            dec = has_rooted_k3(g, x, y, z)
            wit = extract_rooted_k3(g, x, y, z)
            agree = dec == brute_force_rooted_k3(g, x, y, z) == (wit is not None)
            ok += agree and (wit is None or not validate_witness(g, wit))
    return ok, total


def check_rooted_iff_two_connected(max_n: int) -> tuple[int, int]:
    ok = total = 0
    for g in atlas_graphs(max_n):
        if len(g) < 3 or not is_connected(g):
            continue
        total += 1
        every = all(has_rooted_k3(g, *t) for t in combinations(g.sorted_vertices(), 3))
        ok += every == is_two_connected(g)
    return ok, total


def check_contractible(samples: int, seed: int) -> tuple[int, int]:
    rng = random.Random(seed)
    ok = total = 0
    for _ in range(samples):
        g = random_two_connected(rng, 7)
        for v in g:
            total += 1
            _, w = find_contractible_edge(g, v)
            h = contract_edge(g, v, w)
            ok += len(g) == 3 or is_two_connected(h)
    return ok, total


def sample_graph(rng: random.Random, max_n: int) -> Graph:
    if rng.random() < 0.5:
        g = apollonian(rng.randint(3, max_n), rng.getrandbits(32))
    else:
        g = random_triangle_sum(rng.randint(2, 3), 5, rng.getrandbits(32))
        if len(g) > max_n:
            g = g.subgraph(sorted(g.vertices)[:max_n])
    if rng.random() < 0.4:
        g = thinned(g, 0.75, rng)
    return g


def check_coloring(samples: int, seed: int, max_n: int = 9) -> tuple[int, int]:
    rng = random.Random(seed)
    ok = total = 0
    for i in range(samples):
        g = sample_graph(rng, max_n)
        mode = "empty" if i % 2 else "vertex-neighborhood"
        if mode != "empty" and len(g) < 2:
            mode = "empty"
        inst = random_instance(g, mode, 8, rng.getrandbits(32))
        trace = Trace()
        col = color(inst, deep=True, trace=trace)
        ref = brute_force_list_color(inst.graph, inst.lists)
        total += 1
        ok += (
            verify_coloring(inst.graph, inst.lists, col)
            and ref is not None
            and all(col[x] in inst.lists[x] for x in inst.A)
            and all(child < parent for _, parent, child in trace.steps)
            and all(trace.case6_checks)
        )
    return ok, total


def check_boundary_after_delete(samples: int, seed: int) -> tuple[int, int]:
    rng = random.Random(seed)
    ok = total = 0
    for _ in range(samples):
        g = sample_graph(rng, 12)
        if len(g) < 2:
            continue
        inst = random_instance(g, "vertex-neighborhood", 8, rng.getrandbits(32))
        if check_instance(inst, deep=True):
            total += 1
            continue
        for v in sorted(inst.B):
            total += 1
            h = inst.graph.remove_vertex(v)
            ok += is_boundary(h, boundary_after_delete(inst.B, v, inst.graph.neighbors(v)))
    return ok, total


def run_all(max_n: int = 6, samples: int = 100, seed: int = 0):
    """Yield (name, passed, total) for each suite."""
    yield "articulation / 2-connectivity", *check_articulation(max_n)
    yield "rooted K3 decision, extraction, brute force", *check_rooted(max_n)
    yield "all rooted K3 minors iff 2-connected", *check_rooted_iff_two_connected(max_n)
    yield "contractible edge in 2-connected graphs", *check_contractible(samples, seed)
    yield "boundary after deleting a boundary vertex", *check_boundary_after_delete(samples, seed)
    yield "list colouring vs brute force", *check_coloring(samples, seed)

