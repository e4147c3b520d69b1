"""Exhaustive K5-minor search for small graphs, plus boundary checks.

The search works on bitmask adjacency and explores, for one vertex at a
time, every role it can play in a K5 model: unused (delete it), sharing a
branch set with a neighbour (contract the edge), or being a whole branch
set on its own (pin it).  Pinned vertices must stay pairwise adjacent.
Between branching steps the following reductions are applied; each one
preserves the existence of a model consistent with the pins:

* an unpinned vertex of degree <= 1 is deleted;
* an unpinned vertex of degree 2 is contracted into an unpinned
  neighbour, or deleted when both neighbours are pinned;
* an unpinned simplicial vertex of degree 3 is deleted (degree >= 4
  simplicial means a K5 subgraph);
* without pins, separations of order <= 2 are split, gluing a virtual
  edge across order-2 separators (K5 is 4-connected, so a model lives on
  one side, with the other side standing in for the virtual edge).

Failed states are memoised.  Every positive answer carries a branch-set
model that ``validate_model`` can check independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, is_connected

DEFAULT_SIZE_GUARD = 14


class OracleScaleExceeded(ValueError):
    """Input is too large for the exponential minor search."""


@dataclass(frozen=True)
class BranchModel:
    sets: tuple[frozenset[int], ...]


def validate_model(g: Graph, model: BranchModel, k: int = 5) -> list[str]:
    problems = []
    if len(model.sets) != k:
        problems.append(f"expected {k} branch sets, got {len(model.sets)}")
    for i, s in enumerate(model.sets):
        if not s or not s <= g.vertices:
            problems.append(f"set {i} empty or outside the graph")
        elif not is_connected(g.subgraph(s)):
            problems.append(f"set {i} is not connected")
    for (i, s), (j, t) in combinations(enumerate(model.sets), 2):
        if s & t:
            problems.append(f"sets {i} and {j} intersect")
        elif not any(g.neighbors(u) & t for u in s if u in g):
            problems.append(f"sets {i} and {j} are not adjacent")
    return problems


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _lowest(m: int) -> int:
    return (m & -m).bit_length() - 1


def _reach(adj, start: int, within: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _components(adj, alive: int) -> list[int]:
    out = []
    rest = alive
    while rest:
        c = _reach(adj, _lowest(rest), alive)
        out.append(c)
        rest &= ~c
    return out


def _find_clique(adj, cand: int, need: int, chosen: list[int]):
    if need == 0:
        return chosen
    if cand.bit_count() < need:
        return None
    for v in _bits(cand):
        cand &= ~(1 << v)
        hit = _find_clique(adj, cand & adj[v], need - 1, chosen + [v])
        if hit is not None:
            return hit
        if cand.bit_count() < need:
            return None
    return None


class _Search:
    def __init__(self):
        self.failed: set = set()

    def run(self, adj, alive: int, pinned: int, bags) -> list[int] | None:
        adj = list(adj)
        bags = list(bags)

        def delete(v):
            nonlocal alive
            bit = 1 << v
            for u in _bits(adj[v]):
                adj[u] &= ~bit
            adj[v] = 0
            alive &= ~bit

        def contract(v, u):
            nonlocal alive
            vb, ub = 1 << v, 1 << u
            moved = adj[v] & ~ub
            for w in _bits(moved):
                adj[w] = (adj[w] & ~vb) | ub
            adj[u] = (adj[u] | moved) & ~vb
            adj[v] = 0
            alive &= ~vb
            bags[u] |= bags[v]
            bags[v] = 0

        if pinned.bit_count() == 5:
            return [bags[p] for p in _bits(pinned)]

        changed = True
        while changed:
            changed = False
            for v in _bits(alive & ~pinned):
                nb = adj[v]
                d = nb.bit_count()
                if d <= 1:
                    delete(v)
                    changed = True
                elif d == 2:
                    free = nb & ~pinned
                    if free:
                        contract(v, _lowest(free))
                    else:
                        delete(v)
                    changed = True
                elif all(nb & ~adj[u] == 1 << u for u in _bits(nb)):
                    if d >= 4:
                        four = list(_bits(nb))[:4]
                        return [bags[v]] + [bags[u] for u in four]
                    delete(v)
                    changed = True

        need = 5 - pinned.bit_count()
        for p in _bits(pinned):
            if (adj[p] & ~pinned).bit_count() < need:
                return None
        if alive.bit_count() < 5:
            return None
        if sum(adj[v].bit_count() for v in _bits(alive)) < 20:
            return None

        key = (alive, pinned, tuple(adj[v] for v in _bits(alive)))
        if key in self.failed:
            return None

        clique = _find_clique(adj, alive, 5, [])
        if clique is not None:
            return [bags[v] for v in clique]

        found = self._split(adj, alive, pinned, bags)
        if found is not NotImplemented:
            if found is None:
                self.failed.add(key)
            return found

        free = alive & ~pinned
        v = min(_bits(free), key=lambda x: (adj[x].bit_count(), x))
        d = adj[v].bit_count()
        vb = 1 << v

        for u in sorted(_bits(adj[v] & ~pinned), key=lambda x: (-adj[x].bit_count(), x)):
            a2 = list(adj)
            moved = a2[v] & ~(1 << u)
            for w in _bits(moved):
                a2[w] = (a2[w] & ~vb) | (1 << u)
            a2[u] = (a2[u] | moved) & ~vb
            a2[v] = 0
            b2 = list(bags)
            b2[u] |= b2[v]
            b2[v] = 0
            hit = self.run(a2, alive & ~vb, pinned, b2)
            if hit is not None:
                return hit

        if d >= 4 and (adj[v] & pinned) == pinned:
            hit = self.run(adj, alive, pinned | vb, bags)
            if hit is not None:
                return hit

        a2 = list(adj)
        for u in _bits(a2[v]):
            a2[u] &= ~vb
        a2[v] = 0
        hit = self.run(a2, alive & ~vb, pinned, bags)
        if hit is not None:
            return hit

        self.failed.add(key)
        return None

    def _split(self, adj, alive, pinned, bags):
        """Search the sides of a small separation; NotImplemented if none applies."""
        comps = _components(adj, alive)
        if len(comps) > 1:
            if pinned:
                home = next(c for c in comps if c & pinned)
                return self.run([a & home for a in adj], home, pinned, bags)
            for c in comps:
                if c.bit_count() >= 5:
                    hit = self.run([a & c for a in adj], c, 0, bags)
                    if hit is not None:
                        return hit
            return None
        if pinned:
            return NotImplemented

        verts = list(_bits(alive))
        cut = None
        for a in verts:
            rest = alive & ~(1 << a)
            if _reach(adj, _lowest(rest), rest) != rest:
                cut = (a,)
                break
        if cut is None:
            for a, b in combinations(verts, 2):
                rest = alive & ~(1 << a) & ~(1 << b)
                if _reach(adj, _lowest(rest), rest) != rest:
                    cut = (a, b)
                    break
        if cut is None:
            return NotImplemented

        cmask = sum(1 << c for c in cut)
        rest = alive & ~cmask
        first = _reach(adj, _lowest(rest), rest)
        sides = [first | cmask, (rest & ~first) | cmask]
        for i, side in enumerate(sides):
            sub = [a & side for a in adj]
            if len(cut) == 2:
                a, b = cut
                sub[a] |= 1 << b
                sub[b] |= 1 << a
            hit = self.run(sub, side, 0, bags)
            if hit is None:
                continue
            if len(cut) == 2 and not (adj[cut[0]] >> cut[1]) & 1:
                hit = self._lift_virtual_edge(adj, bags, hit, cut, sides[1 - i] & ~cmask)
            return hit
        return None

    @staticmethod
    def _lift_virtual_edge(adj, bags, model, cut, other: int):
        a, b = cut
        ia = next((i for i, s in enumerate(model) if s & bags[a]), None)
        ib = next((i for i, s in enumerate(model) if s & bags[b]), None)
        if ia is None or ib is None:
            return model
        # BFS from a to b through the private part of the other side.
        parent = {a: None}
        frontier = [a]
        while b not in parent:
            nxt = []
            for x in frontier:
                for y in _bits(adj[x] & (other | (1 << b))):
                    if y not in parent:
                        parent[y] = x
                        nxt.append(y)
            frontier = nxt
        extra = 0
        x = parent[b]
        while x != a:
            extra |= bags[x]
            x = parent[x]
        model = list(model)
        model[ia] |= extra
        return model


def _check_guard(g: Graph, size_guard: int) -> None:
    if len(g) > size_guard:
        raise OracleScaleExceeded(
            f"oracle scale exceeded: {len(g)} vertices > size guard {size_guard}"
        )


def find_k5_model(g: Graph, size_guard: int = DEFAULT_SIZE_GUARD) -> BranchModel | None:
    """A K5 branch-set model of ``g``, or None if ``g`` is K5-minor-free."""
    _check_guard(g, size_guard)
    verts = g.sorted_vertices()
    index = {v: i for i, v in enumerate(verts)}
    adj = [sum(1 << index[u] for u in g.neighbors(v)) for v in verts]
    bags = [1 << i for i in range(len(verts))]
    hit = _Search().run(adj, (1 << len(verts)) - 1, 0, bags)
    if hit is None:
        return None
    return BranchModel(tuple(frozenset(verts[i] for i in _bits(m)) for m in hit))


def has_k5_minor(g: Graph, size_guard: int = DEFAULT_SIZE_GUARD) -> bool:
    return find_k5_model(g, size_guard) is not None


def plus(g: Graph, b) -> Graph:
    """G with a new vertex (id max+1) adjacent to exactly the vertices of ``b``."""
    b = frozenset(b)
    if not b <= g.vertices:
        raise ValueError(f"vertices {sorted(b - g.vertices)} not in graph")
    return g.add_vertex(g.max_id() + 1, b)


def is_boundary(g: Graph, b, size_guard: int = DEFAULT_SIZE_GUARD) -> bool:
    """True iff adding a vertex adjacent to ``b`` keeps ``g`` K5-minor-free."""
    return not has_k5_minor(plus(g, b), size_guard)
