"""The (G, A, B, L) instance of the coloring induction and its validation."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .graph import Graph
from .minors import DEFAULT_SIZE_GUARD, has_k5_minor, is_boundary

ListAssignment = Mapping[int, frozenset[int]]


class InvalidInstance(ValueError):
    def __init__(self, violations: list[str]):
        self.violations = violations
        super().__init__("invalid instance: " + "; ".join(violations))


@dataclass(frozen=True, eq=True)
class Instance:
    """A graph, a precoloured clique A inside a boundary B, and colour lists.

    ``lists`` is normalised to a dict of frozensets sorted by vertex id.
    """

    graph: Graph
    A: frozenset[int] = frozenset()
    B: frozenset[int] = frozenset()
    lists: dict[int, frozenset[int]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "A", frozenset(self.A))
        object.__setattr__(self, "B", frozenset(self.B))
        object.__setattr__(
            self, "lists", {v: frozenset(c) for v, c in sorted(self.lists.items())}
        )

    __hash__ = None


def boundary_after_delete(b: Iterable[int], v: int, neighbors: Iterable[int]) -> frozenset[int]:
    """Boundary of G - v given boundary ``b`` of G containing v: (B - v) | N(v)."""
    b = frozenset(b)
    if v not in b:
        raise ValueError(f"vertex {v} is not in the boundary")
    return (b - {v}) | frozenset(neighbors)


def _valid_color(c: object) -> bool:
    return isinstance(c, int) and not isinstance(c, bool) and c >= 0


def check_instance(
    inst: Instance, deep: bool = False, size_guard: int = DEFAULT_SIZE_GUARD
) -> list[str]:
    """Every violated hypothesis of ``inst``; an empty list means valid.

    With ``deep`` the K5-minor oracle also confirms that G is K5-minor-free
    and B is a boundary.  That is exponential and raises
    ``OracleScaleExceeded`` past the size guard.
    """
    g, a, b, lists = inst.graph, inst.A, inst.B, inst.lists
    out = []
    if not a <= b:
        out.append(f"A is a subset of B: {sorted(a - b)} not in B")
    if not b <= g.vertices:
        out.append(f"B is a subset of V(G): {sorted(b - g.vertices)} not in G")
    missing = g.vertices - lists.keys()
    if missing:
        out.append(f"every vertex has a list: {sorted(missing)} have none")
    extra = lists.keys() - g.vertices
    if extra:
        out.append(f"lists only for vertices of G: {sorted(extra)} are not vertices")
    for v, cols in lists.items():
        if not cols:
            out.append(f"lists are non-empty: L({v}) is empty")
        elif not all(_valid_color(c) for c in cols):
            out.append(f"colours are non-negative integers: L({v}) = {sorted(cols, key=str)}")
    for x, y in combinations(sorted(a & g.vertices), 2):
        if not g.has_edge(x, y):
            out.append(f"A is a clique: {x} and {y} are not adjacent")
    for x in sorted(a):
        if x in lists and len(lists[x]) != 1:
            out.append(f"|L(x)| = 1 for x in A: |L({x})| = {len(lists[x])}")
    singles = [(x, lists[x]) for x in sorted(a) if x in lists and len(lists[x]) == 1]
    for (x, lx), (y, ly) in combinations(singles, 2):
        if lx == ly:
            out.append(f"L(x) != L(y) for distinct x, y in A: L({x}) = L({y}) = {sorted(lx)}")
    for x in sorted(b - a):
        if x in lists and len(lists[x]) < 3:
            out.append(f"|L(x)| >= 3 for x in B - A: |L({x})| = {len(lists[x])}")
    for x in sorted(g.vertices - b):
        if x in lists and len(lists[x]) < 5:
            out.append(f"|L(x)| >= 5 for x outside B: |L({x})| = {len(lists[x])}")
    if deep and not out:
        if has_k5_minor(g, size_guard):
            out.append("G is K5-minor-free: a K5 minor exists")
        elif not is_boundary(g, b, size_guard):
            out.append("B is a boundary: adding a vertex adjacent to B creates a K5 minor")
    return out
