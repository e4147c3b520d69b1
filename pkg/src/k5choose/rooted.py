"""Rooted K3-minors and contractible edges.

A K3-minor rooted at x, y, z is three disjoint connected vertex sets,
pairwise joined by an edge, containing x, y and z respectively.  One
exists exactly when no single vertex deletion leaves each remaining
root in its own component; ``extract_rooted_k3`` builds the three sets
by contracting edges until only a triangle is left.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    Graph,
    articulation_vertices,
    components,
    contract_edge,
    is_connected,
    is_two_connected,
)


@dataclass(frozen=True)
class RootedK3Witness:
    X: frozenset[int]
    Y: frozenset[int]
    Z: frozenset[int]
    roots: tuple[int, int, int]

    @property
    def sets(self) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
        return (self.X, self.Y, self.Z)


def validate_witness(g: Graph, w: RootedK3Witness) -> list[str]:
    """Problems with ``w`` as a rooted K3-minor of ``g``; empty when valid."""
    problems = []
    names = "XYZ"
    for name, part, root in zip(names, w.sets, w.roots):
        if root not in part:
            problems.append(f"root {root} not in {name}")
        if not part:
            problems.append(f"{name} is empty")
            continue
        if not part <= g.vertices:
            problems.append(f"{name} has vertices outside the graph")
            continue
        if not is_connected(g.subgraph(part)):
            problems.append(f"{name} does not induce a connected subgraph")
    for i in range(3):
        for j in range(i + 1, 3):
            a, b = w.sets[i], w.sets[j]
            if a & b:
                problems.append(f"{names[i]} and {names[j]} intersect")
            elif not any(g.neighbors(u) & b for u in a if u in g):
                problems.append(f"no edge between {names[i]} and {names[j]}")
    return problems


def _check_roots(g: Graph, roots) -> tuple[int, int, int]:
    roots = tuple(roots)
    if len(roots) != 3 or len(set(roots)) != 3:
        raise ValueError(f"roots must be three distinct vertices, got {roots}")
    for r in roots:
        if r not in g:
            raise ValueError(f"root {r} is not a vertex of the graph")
    return roots


def _root_groups(g: Graph, v: int, roots) -> list[list[int]]:
    """Remaining roots grouped by component of G - v."""
    left = [r for r in roots if r != v]
    groups = []
    for comp in components(g.remove_vertex(v)):
        hit = [r for r in left if r in comp]
        if hit:
            groups.append(hit)
    return groups


def is_good(g: Graph, v: int, roots) -> bool:
    roots = _check_roots(g, roots)
    if v not in g:
        raise ValueError(f"vertex {v} is not in the graph")
    return any(len(grp) >= 2 for grp in _root_groups(g, v, roots))


def bad_vertices(g: Graph, roots) -> list[int]:
    roots = _check_roots(g, roots)
    return [v for v in g if not is_good(g, v, roots)]


def has_rooted_k3(g: Graph, x: int, y: int, z: int) -> bool:
    roots = _check_roots(g, (x, y, z))
    return all(is_good(g, v, roots) for v in g)


def find_contractible_edge(g: Graph, v: int) -> tuple[int, int]:
    """An edge vw whose contraction leaves G 2-connected.

    A triangle contracts to K2, which is accepted here.
    """
    if v not in g:
        raise ValueError(f"vertex {v} is not in the graph")
    if not is_two_connected(g):
        raise ValueError("graph is not 2-connected")
    for w in sorted(g.neighbors(v)):
        if len(g) == 3 or is_two_connected(contract_edge(g, v, w)):
            return (v, w)
    raise RuntimeError(f"no contractible edge at {v}; 2-connectivity claim violated")


def _contract_and_lift(g: Graph, v: int, w: int, roots) -> RootedK3Witness | None:
    merged = min(v, w)
    h = contract_edge(g, v, w)
    new_roots = tuple(merged if r in (v, w) else r for r in roots)
    sub = _extract(h, new_roots)
    if sub is None:
        return None
    lifted = []
    for part in sub.sets:
        if merged in part:
            part = part | {v, w}
        lifted.append(part)
    return RootedK3Witness(*lifted, roots=tuple(roots))


def _extract(g: Graph, roots) -> RootedK3Witness | None:
    if not all(is_good(g, u, roots) for u in g):
        return None
    x, y, z = roots
    if len(g) == 3:
        if g.size() != 3:
            return None
        return RootedK3Witness(frozenset((x,)), frozenset((y,)), frozenset((z,)), roots)

    comps = components(g)
    if len(comps) > 1:
        home = next((c for c in comps if set(roots) <= c), None)
        if home is None:
            return None
        return _extract(g.subgraph(home), roots)

    cuts = articulation_vertices(g)
    if cuts:
        v = min(cuts)
        together = set(next(grp for grp in _root_groups(g, v, roots) if len(grp) >= 2))
        side = next(c for c in components(g.remove_vertex(v)) if not c & together)
        w = min(g.neighbors(v) & side)
        return _contract_and_lift(g, v, w, roots)

    v = min(g.vertices - set(roots))
    _, w = find_contractible_edge(g, v)
    return _contract_and_lift(g, v, w, roots)


def extract_rooted_k3(g: Graph, x: int, y: int, z: int) -> RootedK3Witness | None:
    """Build a K3-minor rooted at x, y, z, or return None if none exists."""
    roots = _check_roots(g, (x, y, z))
    return _extract(g, roots)
