"""Seeded generators for K5-minor-free graphs and boundary instances.

All randomness goes through ``random.Random(seed)`` (Mersenne Twister,
MT19937), so a given seed reproduces the same output on any CPython.
"""

from __future__ import annotations

import random
from itertools import combinations

from .boundary import Instance
from .graph import Graph


def _rng(seed: int) -> random.Random:
    if not isinstance(seed, int) or seed < 0 or seed >= 1 << 64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed!r}")
    return random.Random(seed)


def apollonian(n: int, seed: int = 0) -> Graph:
    """Random Apollonian network on vertices 0..n-1 (3n - 6 edges)."""
    if n < 3:
        raise ValueError("an Apollonian network needs n >= 3")
    rng = _rng(seed)
    edges = [(0, 1), (1, 2), (0, 2)]
    # The starting triangle bounds two faces.
    faces = [(0, 1, 2), (0, 1, 2)]
    for v in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        edges += [(a, v), (b, v), (c, v)]
        faces += [(a, b, v), (b, c, v), (a, c, v)]
    return Graph(range(n), edges)


def cliques(g: Graph, k: int) -> list[tuple[int, ...]]:
    """All k-cliques as sorted tuples, in lexicographic order."""
    return [c for c in combinations(g.sorted_vertices(), k) if g.induces_clique(c)]


def clique_sum(g1: Graph, g2: Graph, k: int, clique1=None, clique2=None) -> Graph:
    """Glue g2 onto g1 along a k-clique of each.

    By default the lexicographically smallest clique of each graph is used,
    matched in sorted order.  Vertices of g2 off the clique get fresh ids
    above those of g1, in increasing order.
    """
    if not 0 <= k <= 3:
        raise ValueError("clique sums are taken over cliques of size 0..3")
    if clique1 is None:
        found = cliques(g1, k)
        if not found:
            raise ValueError(f"first graph has no {k}-clique")
        clique1 = found[0]
    if clique2 is None:
        found = cliques(g2, k)
        if not found:
            raise ValueError(f"second graph has no {k}-clique")
        clique2 = found[0]
    clique1, clique2 = tuple(sorted(clique1)), tuple(sorted(clique2))
    if len(clique1) != k or len(clique2) != k:
        raise ValueError(f"cliques must have exactly {k} vertices")
    if not g1.induces_clique(clique1) or not g2.induces_clique(clique2):
        raise ValueError("glue sets must be cliques")

    relabel = dict(zip(clique2, clique1))
    nxt = g1.max_id() + 1
    for v in g2.sorted_vertices():
        if v not in relabel:
            relabel[v] = nxt
            nxt += 1
    vertices = set(g1.vertices) | set(relabel.values())
    edges = set(g1.edges)
    for u, v in g2.edges:
        a, b = relabel[u], relabel[v]
        edges.add((min(a, b), max(a, b)))
    return Graph(vertices, edges)


def random_triangle_sum(pieces: int, max_piece: int, seed: int = 0) -> Graph:
    """Chain of Apollonian pieces glued along randomly chosen triangles."""
    rng = _rng(seed)
    g = apollonian(rng.randint(3, max_piece), rng.getrandbits(32))
    for _ in range(pieces - 1):
        h = apollonian(rng.randint(3, max_piece), rng.getrandbits(32))
        t1 = rng.choice(cliques(g, 3))
        t2 = list(rng.choice(cliques(h, 3)))
        rng.shuffle(t2)
        g = _glue_ordered(g, h, t1, t2)
    return g


def _glue_ordered(g1: Graph, g2: Graph, t1, t2) -> Graph:
    # clique_sum matches sorted cliques; relabel g2 first to get an arbitrary matching.
    order = sorted(t2)
    perm = {old: new for old, new in zip(t2, order)}
    h = Graph(g2.vertices, [(perm.get(u, u), perm.get(v, v)) for u, v in g2.edges])
    return clique_sum(g1, h, len(t1), t1, order)


def random_lists(vertices, size: int, palette: int, rng: random.Random) -> dict[int, frozenset[int]]:
    colors = range(1, palette + 1)
    return {v: frozenset(rng.sample(colors, size)) for v in sorted(vertices)}


def random_instance(
    g: Graph,
    boundary_mode: str = "empty",
    palette: int = 5,
    seed: int = 0,
    center: int | None = None,
) -> Instance:
    """A valid (G, A, B, L) instance built from the K5-minor-free graph ``g``.

    ``empty``: A = B = {} and every list is a random 5-subset of 1..palette.

    ``vertex-neighborhood``: delete a vertex u (random unless ``center`` is
    given) and use B = N(u) in G - u, with A = {}, 3-lists on B and 5-lists
    elsewhere.  Putting u back is exactly the plus construction, so B is a
    boundary whenever ``g`` is K5-minor-free.
    """
    if palette < 5:
        raise ValueError("palette must have at least 5 colours")
    rng = _rng(seed)
    if boundary_mode == "empty":
        return Instance(g, frozenset(), frozenset(), random_lists(g.vertices, 5, palette, rng))
    if boundary_mode != "vertex-neighborhood":
        raise ValueError(f"unknown boundary mode {boundary_mode!r}")
    if len(g) == 0:
        raise ValueError("vertex-neighborhood mode needs a non-empty graph")
    u = rng.choice(g.sorted_vertices()) if center is None else center
    if u not in g:
        raise ValueError(f"center {u} is not a vertex")
    h = g.remove_vertex(u)
    b = frozenset(g.neighbors(u))
    lists = random_lists(b, 3, palette, rng)
    lists.update(random_lists(h.vertices - b, 5, palette, rng))
    return Instance(h, frozenset(), b, dict(sorted(lists.items())))
