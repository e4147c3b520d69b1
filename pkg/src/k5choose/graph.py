"""Immutable simple undirected graphs with stable integer vertex ids.

Every operation returns a new graph.  Vertex ids are never renumbered:
deleting a vertex leaves a hole, and contracting an edge keeps the
smaller of the two endpoint ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping


class Graph:
    __slots__ = ("_adj", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Iterable[int]] = ()):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            _check_id(v)
            adj.setdefault(v, set())
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            adj[u].add(v)
            adj[v].add(u)
        self._adj: dict[int, frozenset[int]] = {v: frozenset(adj[v]) for v in sorted(adj)}
        self._hash = None

    @classmethod
    def _from_adj(cls, adj: Mapping[int, frozenset[int]]) -> Graph:
        g = cls.__new__(cls)
        g._adj = {v: adj[v] for v in sorted(adj)}
        g._hash = None
        return g

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], vertices: Iterable[int] = ()) -> Graph:
        edges = [tuple(e) for e in edges]
        vs = set(vertices)
        for u, v in edges:
            vs.update((u, v))
        return cls(vs, edges)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._adj)

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v)

    def sorted_vertices(self) -> list[int]:
        return list(self._adj)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def order(self) -> int:
        return len(self._adj)

    def size(self) -> int:
        return sum(len(n) for n in self._adj.values()) // 2

    def non_edges(self) -> int:
        n = len(self._adj)
        return n * (n - 1) // 2 - self.size()

    def max_id(self) -> int:
        return max(self._adj) if self._adj else -1

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def __iter__(self):
        return iter(self._adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vertices, self.edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(vertices={self.sorted_vertices()}, edges={self.sorted_edges()})"

    # -- derived graphs -----------------------------------------------------

    def subgraph(self, keep: Iterable[int]) -> Graph:
        keep = set(keep)
        missing = keep - self._adj.keys()
        if missing:
            raise ValueError(f"vertices {sorted(missing)} not in graph")
        return Graph._from_adj({v: self._adj[v] & keep for v in keep})

    def remove_vertices(self, drop: Iterable[int]) -> Graph:
        drop = set(drop)
        return self.subgraph(self._adj.keys() - drop)

    def remove_vertex(self, v: int) -> Graph:
        return self.remove_vertices((v,))

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if u not in self._adj or v not in self._adj:
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
        adj = dict(self._adj)
        adj[u] = adj[u] | {v}
        adj[v] = adj[v] | {u}
        return Graph._from_adj(adj)

    def add_vertex(self, v: int, neighbors: Iterable[int] = ()) -> Graph:
        _check_id(v)
        if v in self._adj:
            raise ValueError(f"vertex {v} already present")
        nbrs = frozenset(neighbors)
        missing = nbrs - self._adj.keys()
        if missing:
            raise ValueError(f"vertices {sorted(missing)} not in graph")
        adj = dict(self._adj)
        adj[v] = nbrs
        for u in nbrs:
            adj[u] = adj[u] | {v}
        return Graph._from_adj(adj)

    def induces_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(self.has_edge(a, b) for a, b in combinations(vs, 2))


def _check_id(v: object) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise ValueError(f"vertex ids must be non-negative integers, got {v!r}")


@dataclass(frozen=True)
class Separation:
    """Two vertex sets covering G whose private parts are non-empty and non-adjacent."""

    left: frozenset[int]
    right: frozenset[int]

    @property
    def separator(self) -> frozenset[int]:
        return self.left & self.right

    @property
    def order(self) -> int:
        return len(self.separator)

    def swapped(self) -> Separation:
        return Separation(self.right, self.left)

    def is_valid_for(self, g: Graph) -> bool:
        if self.left | self.right != g.vertices:
            return False
        lp, rp = self.left - self.right, self.right - self.left
        if not lp or not rp:
            return False
        return not any(g.neighbors(u) & rp for u in lp)


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Return G/uv, the merged vertex keeping the id min(u, v)."""
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    keep, gone = min(u, v), max(u, v)
    adj = {w: nbrs for w, nbrs in g._adj.items() if w != gone}
    merged = (g._adj[u] | g._adj[v]) - {u, v}
    adj[keep] = merged
    for w in g._adj[gone]:
        if w != keep:
            adj[w] = (adj[w] - {gone}) | {keep}
    return Graph._from_adj(adj)


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by their smallest vertex id."""
    seen: set[int] = set()
    out = []
    for s in g:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def articulation_vertices(g: Graph) -> frozenset[int]:
    # Iterative Hopcroft-Tarjan lowpoint search.
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    cut: set[int] = set()
    t = 0
    for root in g:
        if root in disc:
            continue
        disc[root] = low[root] = t
        t += 1
        root_children = 0
        stack = [(root, -1, iter(sorted(g.neighbors(root))))]
        while stack:
            x, parent, it = stack[-1]
            advanced = False
            for y in it:
                if y not in disc:
                    disc[y] = low[y] = t
                    t += 1
                    if x == root:
                        root_children += 1
                    stack.append((y, x, iter(sorted(g.neighbors(y)))))
                    advanced = True
                    break
                if y != parent:
                    low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[x])
                if parent != root and low[x] >= disc[parent]:
                    cut.add(parent)
        if root_children > 1:
            cut.add(root)
    return frozenset(cut)


def is_two_connected(g: Graph) -> bool:
    return len(g) >= 3 and is_connected(g) and not articulation_vertices(g)


def _separates(g: Graph, cut: frozenset[int], targets: frozenset[int]):
    """Components of G - cut if they split ``targets - cut``, else None."""
    rest = targets - cut
    comps = components(g.remove_vertices(cut))
    hit = [c for c in comps if c & rest]
    return comps if len(hit) >= 2 else None


def find_small_cut_separating(
    g: Graph,
    s: Iterable[int],
    max_order: int,
    require_member_of: Iterable[int] | None = None,
) -> tuple[frozenset[int], Separation] | None:
    """Smallest vertex cut of size <= max_order splitting two vertices of ``s``.

    Among cuts of equal size the lexicographically smallest sorted tuple
    wins.  The separation returned puts the cut together with the first
    component (by smallest id) that meets ``s`` on the left and everything
    else on the right.
    """
    s = frozenset(s)
    if not s <= g.vertices:
        raise ValueError(f"vertices {sorted(s - g.vertices)} not in graph")
    if max_order not in (1, 2):
        raise ValueError("max_order must be 1 or 2")
    req = None if require_member_of is None else frozenset(require_member_of)

    def allowed(cut):
        return req is None or bool(cut & req)

    candidates: list[list[frozenset[int]]] = [[], []]
    for v in sorted(articulation_vertices(g)):
        candidates[0].append(frozenset((v,)))
    if max_order >= 2:
        pairs = set()
        for a in g:
            h = g.remove_vertex(a)
            rest = s - {a}
            split = sum(1 for c in components(h) if c & rest) >= 2
            others = h.vertices if split else articulation_vertices(h)
            for b in others:
                pairs.add((min(a, b), max(a, b)))
        candidates[1] = [frozenset(p) for p in sorted(pairs)]

    for size_group in candidates:
        for cut in size_group:
            if not allowed(cut):
                continue
            comps = _separates(g, cut, s)
            if comps is None:
                continue
            first = next(c for c in comps if c & (s - cut))
            left = cut | first
            right = g.vertices - first
            return cut, Separation(left, right)
    return None
