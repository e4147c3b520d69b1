"""Brute-force oracles used as ground truth in differential tests.

Each one is deliberately naive so it can be trusted by inspection.
"""

from __future__ import annotations

from itertools import combinations, product

from .graph import Graph, components, is_connected
from .minors import OracleScaleExceeded

DEFAULT_COLOR_GUARD = 12


def brute_force_list_color(g: Graph, lists, size_guard: int = DEFAULT_COLOR_GUARD):
    """Some proper colouring with colour(v) in lists[v], or None if none exists.

    Plain backtracking; the next vertex is always the one with the fewest
    colours still available (ties to the smaller id).
    """
    if len(g) > size_guard:
        raise OracleScaleExceeded(
            f"oracle scale exceeded: {len(g)} vertices > size guard {size_guard}"
        )
    coloring: dict[int, int] = {}

    def available(v):
        used = {coloring[u] for u in g.neighbors(v) if u in coloring}
        return sorted(c for c in lists[v] if c not in used)

    def extend():
        todo = [v for v in g if v not in coloring]
        if not todo:
            return True
        v = min(todo, key=lambda x: (len(available(x)), x))
        for c in available(v):
            coloring[v] = c
            if extend():
                return True
            del coloring[v]
        return False

    return dict(sorted(coloring.items())) if extend() else None


def brute_force_rooted_k3(g: Graph, x: int, y: int, z: int) -> bool:
    """Try every assignment of the non-root vertices to X, Y, Z or unused."""

    others = [v for v in g if v not in (x, y, z)]
    for labels in product(range(4), repeat=len(others)):
        parts = [{x}, {y}, {z}]
        for v, lab in zip(others, labels):
            if lab < 3:
                parts[lab].add(v)
        if not all(is_connected(g.subgraph(p)) for p in parts):
            continue
        if all(
            any(g.neighbors(u) & parts[j] for u in parts[i])
            for i, j in ((0, 1), (0, 2), (1, 2))
        ):
            return True
    return False


def connected_subsets(g: Graph) -> list[frozenset[int]]:

    verts = g.sorted_vertices()
    return [
        frozenset(c)
        for k in range(1, len(verts) + 1)
        for c in combinations(verts, k)
        if is_connected(g.subgraph(c))
    ]


def brute_force_k5_minor(g: Graph, size_guard: int = 9) -> bool:
    """Look for five disjoint, pairwise adjacent connected sets directly."""
    if len(g) > size_guard:
        raise OracleScaleExceeded(
            f"oracle scale exceeded: {len(g)} vertices > size guard {size_guard}"
        )
    sets = connected_subsets(g)
    reach = {s: frozenset().union(*(g.neighbors(v) for v in s)) - s for s in sets}

    def grow(chosen):
        if len(chosen) == 5:
            return True
        used = frozenset().union(*chosen) if chosen else frozenset()
        for s in sets:
            # Sets are chosen in increasing order of their smallest vertex.
            if chosen and min(s) < min(chosen[-1]):
                continue
            if s & used or not all(reach[t] & s for t in chosen):
                continue
            if grow(chosen + [s]):
                return True
        return False

    return grow([])


def brute_force_small_cut(g: Graph, s, max_order: int, require_member_of=None):
    """First cut of size <= max_order, in (size, sorted ids) order, splitting ``s``."""

    s = frozenset(s)
    for k in range(1, max_order + 1):
        for cut in combinations(g.sorted_vertices(), k):
            cut = frozenset(cut)
            if require_member_of is not None and not cut & frozenset(require_member_of):
                continue
            rest = s - cut
            comps = components(g.remove_vertices(cut))
            if sum(1 for c in comps if c & rest) >= 2:
                return cut
    return None
