"""Recursive list colouring of K5-minor-free graphs from 5-lists.

``color`` solves an instance (G, A, B, L) where A is a precoloured clique
inside a boundary B, vertices of B - A have at least 3 colours and all
other vertices at least 5.  It tries nine reductions in a fixed order and
applies the first that matches:

1. B empty: precolour the smallest vertex, making it both A and B.
2. A empty: precolour the smallest vertex of B.
3. G disconnected: colour the component holding A, then the rest.
4. a cut vertex in B: colour the side holding A, then the other side
   with the cut vertex pinned.
5. a cut vertex separating two vertices of B: as in 4, and the cut
   vertex joins the boundary of the second side.
6. a 2-cut {v, w} with v in B separating two vertices of B: add the edge
   vw if missing and start over; otherwise colour the side holding A,
   then the other side with v and w pinned.
7. a vertex of B with three neighbours x, y, z in B: G - v has no
   K3-minor rooted at x, y, z, so some vertex w splits them and {v, w}
   is a cut handled as in 5 or 6.
8. A is a whole component of G[B]: delete a vertex of A, strip its
   colour from its non-boundary neighbours, and add those to B.
9. otherwise some v in B - A touches p in A: reserve two colours of
   L(v) - L(p), strip them from the non-boundary neighbours of v, delete
   v, and colour it last with whichever reserved colour is free.

Every recursive call and every restart strictly decreases
(|V|, number of non-adjacent pairs, |V| - |A|) lexicographically.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .boundary import Instance, InvalidInstance, boundary_after_delete, check_instance
from .graph import (
    Graph,
    Separation,
    articulation_vertices,
    components,
    find_small_cut_separating,
)
from .minors import DEFAULT_SIZE_GUARD, is_boundary
from .rooted import extract_rooted_k3, is_good


class InternalContradiction(RuntimeError):
    """A step the induction guarantees failed: the input was not a valid boundary instance."""


Measure = tuple[int, int, int]


def measure(g: Graph, a) -> Measure:
    return (len(g), g.non_edges(), len(g) - len(a))


@dataclass
class Trace:
    """Optional instrumentation filled in by ``color``."""

    check_subinstances: bool = False
    steps: list[tuple[int, Measure, Measure]] = field(default_factory=list)
    cases: Counter = field(default_factory=Counter)
    case6_checks: list[bool] = field(default_factory=list)
    subinstance_violations: list[str] = field(default_factory=list)
    subinstances: list[Instance] = field(default_factory=list)


def verify_coloring(g: Graph, lists, col) -> bool:
    """True iff ``col`` colours exactly V(G), properly, from the lists."""
    if set(col) != set(g.vertices):
        return False
    for v in g:
        if v not in lists or col[v] not in lists[v]:
            return False
    return all(col[u] != col[v] for u, v in g.edges)


def _restrict(lists, keep) -> dict[int, frozenset[int]]:
    return {v: lists[v] for v in sorted(keep)}


def _orient(sep: Separation, a: frozenset[int]) -> tuple[frozenset[int], frozenset[int]]:
    """(G1 side, G2 side) with A inside G1."""
    lp, rp = sep.left - sep.right, sep.right - sep.left
    private_a = a - sep.separator
    if private_a:
        if private_a <= lp:
            return sep.left, sep.right
        if private_a <= rp:
            return sep.right, sep.left
        raise InternalContradiction("A straddles a separation, so it is not a clique")
    if min(lp) < min(rp):
        return sep.left, sep.right
    return sep.right, sep.left


def _separation_at(g: Graph, cut: frozenset[int], targets: frozenset[int]) -> Separation:
    """Cut plus the first component meeting ``targets`` versus the rest."""
    comps = components(g.remove_vertices(cut))
    first = next((c for c in comps if c & (targets - cut)), comps[0])
    return Separation(cut | first, g.vertices - first)


class _Solver:
    def __init__(self, deep: bool, trace: Trace | None, size_guard: int):
        self.deep = deep
        self.trace = trace
        self.size_guard = size_guard

    def recurse(self, case, parent: Measure, g, a, b, lists):
        a, b = frozenset(a), frozenset(b)
        if self.trace is not None:
            self.trace.steps.append((case, parent, measure(g, a)))
            if self.trace.check_subinstances:
                sub = Instance(g, a, b, lists)
                self.trace.subinstances.append(sub)
                self.trace.subinstance_violations += check_instance(sub)
        return self.solve(g, a, b, lists)

    def note(self, case):
        if self.trace is not None:
            self.trace.cases[case] += 1

    def solve(self, g: Graph, a: frozenset[int], b: frozenset[int], lists) -> dict[int, int]:
        while True:
            if len(g) == 0:
                return {}
            here = measure(g, a)

            if not b:
                self.note(1)
                v = min(g)
                pinned = dict(lists)
                pinned[v] = frozenset((min(lists[v]),))
                return self.recurse(1, here, g, {v}, {v}, pinned)

            if not a:
                self.note(2)
                v = min(b)
                pinned = dict(lists)
                pinned[v] = frozenset((min(lists[v]),))
                return self.recurse(2, here, g, {v}, b, pinned)

            comps = components(g)
            if len(comps) > 1:
                self.note(3)
                home = next(c for c in comps if min(a) in c)
                rest = g.vertices - home
                col = self.recurse(3, here, g.subgraph(home), a, b & home, _restrict(lists, home))
                col.update(
                    self.recurse(3, here, g.subgraph(rest), (), b & rest, _restrict(lists, rest))
                )
                return dict(sorted(col.items()))

            cut_b = sorted(articulation_vertices(g) & b)
            if cut_b:
                self.note(4)
                v = cut_b[0]
                sep = _separation_at(g, frozenset((v,)), g.vertices)
                return self.split(4, g, a, b, lists, sep, pins=(v,), joins=())

            hit = find_small_cut_separating(g, b, 1)
            origin = 5
            if hit is None:
                hit = find_small_cut_separating(g, b, 2, require_member_of=b)
                origin = 6
            if hit is None:
                hit = self.case7(g, b)
                origin = 7
            if hit is not None:
                self.note(origin)
                cut, sep = hit
                if len(cut) == 1:
                    (v,) = cut
                    return self.split(origin, g, a, b, lists, sep, pins=(v,), joins=(v,))
                v = min(cut & b)
                (w,) = cut - {v}
                if not g.has_edge(v, w):
                    g = self.add_safe_edge(origin, g, a, b, v, w, here)
                    continue
                return self.split(origin, g, a, b, lists, sep, pins=(v, w), joins=(w,))

            touching = [v for v in sorted(b - a) if g.neighbors(v) & a]
            if not touching:
                return self.case8(g, a, b, lists, here)
            return self.case9(g, a, b, lists, here, touching[0])

    def add_safe_edge(self, origin, g, a, b, v, w, here) -> Graph:
        g2 = g.add_edge(v, w)
        if self.trace is not None:
            self.trace.steps.append((origin, here, measure(g2, a)))
        if self.deep:
            ok = is_boundary(g2, b, self.size_guard)
            if self.trace is not None:
                self.trace.case6_checks.append(ok)
            if not ok:
                raise InternalContradiction(
                    f"adding edge {v}-{w} broke the boundary; "
                    "input was not a valid boundary instance"
                )
        return g2

    def split(self, case, g, a, b, lists, sep, pins, joins) -> dict[int, int]:
        here = measure(g, a)
        side1, side2 = _orient(sep, a)
        col = self.recurse(case, here, g.subgraph(side1), a, b & side1, _restrict(lists, side1))
        l2 = _restrict(lists, side2)
        for p in pins:
            l2[p] = frozenset((col[p],))
        b2 = (b & side2) | frozenset(joins)
        col2 = self.recurse(case, here, g.subgraph(side2), pins, b2, l2)
        for v, c in col2.items():
            if col.setdefault(v, c) != c:
                raise InternalContradiction(f"sides disagree on the colour of {v}")
        return dict(sorted(col.items()))

    def case7(self, g: Graph, b: frozenset[int]):
        for v in sorted(b):
            nb = sorted(g.neighbors(v) & b)
            if len(nb) < 3:
                continue
            x, y, z = nb[:3]
            h = g.remove_vertex(v)
            witness = extract_rooted_k3(h, x, y, z)
            if witness is not None:
                raise InternalContradiction(
                    f"G - {v} has a K3-minor rooted at {x}, {y}, {z}; with {v} and the "
                    "boundary vertex that is a K5 minor, so B is not a boundary"
                )
            w = next(u for u in h if not is_good(h, u, (x, y, z)))
            single = frozenset((w,))
            if _splits(g, single, b):
                return single, _separation_at(g, single, b)
            cut = frozenset((v, w))
            return cut, _separation_at(g, cut, b)
        return None

    def case8(self, g, a, b, lists, here) -> dict[int, int]:
        self.note(8)
        v = min(a)
        (c,) = lists[v]
        nbrs = g.neighbors(v)
        sub = dict(lists)
        del sub[v]
        for u in nbrs - b:
            sub[u] = lists[u] - {c}
        col = self.recurse(
            8, here, g.remove_vertex(v), a - {v}, boundary_after_delete(b, v, nbrs), sub
        )
        if any(col[u] == c for u in nbrs):
            raise InternalContradiction(f"colour {c} of {v} reappeared on a neighbour")
        col[v] = c
        return dict(sorted(col.items()))

    def case9(self, g, a, b, lists, here, v) -> dict[int, int]:
        self.note(9)
        nbrs = g.neighbors(v)
        p = min(nbrs & a)
        others = sorted((nbrs & b) - {p})
        if len(others) > 1:
            raise InternalContradiction(f"{v} has degree > 2 in G[B] after case 7")
        w = others[0] if others else None
        spare = sorted(lists[v] - lists[p])
        if len(spare) < 2:
            raise InternalContradiction(f"L({v}) - L({p}) has fewer than two colours")
        c, d = spare[:2]
        sub = dict(lists)
        del sub[v]
        for u in nbrs - b:
            sub[u] = lists[u] - {c, d}
        col = self.recurse(9, here, g.remove_vertex(v), a, boundary_after_delete(b, v, nbrs), sub)
        col[v] = c if w is None or col[w] != c else d
        return dict(sorted(col.items()))


def _splits(g: Graph, cut: frozenset[int], b: frozenset[int]) -> bool:
    rest = b - cut
    comps = components(g.remove_vertices(cut))
    return sum(1 for comp in comps if comp & rest) >= 2


def color(
    inst: Instance,
    deep: bool = False,
    trace: Trace | None = None,
    size_guard: int = DEFAULT_SIZE_GUARD,
) -> dict[int, int]:
    """A proper colouring from the lists in which each vertex of A keeps its colour.

    Raises ``InvalidInstance`` if a hypothesis is visibly broken and
    ``InternalContradiction`` if the graph turns out not to be
    K5-minor-free or B not a boundary.  ``deep`` runs the exponential
    minor oracle on the input and after every edge added in case 6.
    """
    problems = check_instance(inst, deep=deep, size_guard=size_guard)
    if problems:
        raise InvalidInstance(problems)
    solver = _Solver(deep, trace, size_guard)
    return solver.solve(inst.graph, inst.A, inst.B, inst.lists)


def five_choose(g: Graph, lists, **kwargs) -> dict[int, int]:
    """Colour a K5-minor-free graph from lists of at least five colours."""
    return color(Instance(g, frozenset(), frozenset(), lists), **kwargs)
