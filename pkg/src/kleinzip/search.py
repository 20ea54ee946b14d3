"""Isomorphism and automorphism search by refinement plus backtracking.

Vertices are first split into cells by (degree, distance profile).  The
backtracking then maps vertices in BFS order, so after the first vertex of
each component every new vertex has an already-mapped neighbour and only the
neighbours of its image are candidates.  Every candidate must reproduce the
hop distances to all vertices mapped so far.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .graph import Graph, bfs_distances

Perm = tuple[int, ...]

MAX_ORDER = 512


class SearchGuardError(ValueError):
    pass


def _distances(g: Graph) -> list[list[int]]:
    return [bfs_distances(g, v) for v in range(g.order)]


def _profiles(g: Graph, dist: list[list[int]]) -> list[tuple]:
    out = []
    for v in range(g.order):
        counts: dict[int, int] = {}
        for d in dist[v]:
            counts[d] = counts.get(d, 0) + 1
        out.append((g.degree(v), tuple(sorted(counts.items()))))
    return out


def _bfs_order(g: Graph, first: Sequence[int]) -> list[int]:
    order, seen = [], set()
    for root in list(first) + list(range(g.order)):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in g.neighbors[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def _search(g: Graph, h: Graph, partial: Mapping[int, int]) -> Iterator[Perm]:
    if g.order != h.order or g.size != h.size:
        return
    n = g.order
    if n > MAX_ORDER:
        raise SearchGuardError(f"order {n} exceeds search guard {MAX_ORDER}")
    dg, dh = _distances(g), _distances(h)
    pg, ph = _profiles(g, dg), _profiles(h, dh)
    if sorted(pg) != sorted(ph):
        return
    cells: dict[tuple, list[int]] = {}
    for v in range(n):
        cells.setdefault(ph[v], []).append(v)

    order = _bfs_order(g, sorted(partial))
    pos = {v: i for i, v in enumerate(order)}
    # an earlier-placed neighbour anchors the candidate list
    anchor = []
    for v in order:
        earlier = [w for w in g.neighbors[v] if pos[w] < pos[v]]
        anchor.append(min(earlier, key=pos.get) if earlier else None)

    image = [-1] * n
    used = [False] * n

    def consistent(v: int, c: int, depth: int) -> bool:
        if used[c] or pg[v] != ph[c]:
            return False
        rv, rc = dg[v], dh[c]
        for i in range(depth):
            x = order[i]
            if rv[x] != rc[image[x]]:
                return False
        return True

    def extend(depth: int) -> Iterator[Perm]:
        if depth == n:
            yield tuple(image)
            return
        v = order[depth]
        if v in partial:
            cands: Iterable[int] = (partial[v],)
        elif anchor[depth] is not None:
            cands = h.neighbors[image[anchor[depth]]]
        else:
            cands = cells[pg[v]]
        for c in cands:
            if consistent(v, c, depth):
                image[v] = c
                used[c] = True
                yield from extend(depth + 1)
                used[c] = False
                image[v] = -1

    yield from extend(0)


def _first(it: Iterator[Perm]) -> Perm | None:
    for p in it:
        return p
    return None


def find_isomorphism(g: Graph, h: Graph) -> Perm | None:
    """A bijection ``p`` with ``{p[u], p[v]}`` an edge of ``h`` iff ``{u, v}`` is one of ``g``."""
    return _first(_search(g, h, {}))


def is_automorphism(g: Graph, perm: Sequence[int]) -> bool:
    return sorted(perm) == list(range(g.order)) and all(
        g.has_edge(perm[u], perm[v]) for u, v in g.edges
    )


def check_partial(g: Graph, partial: Mapping[int, int]) -> None:
    """Raise ``ValueError`` unless ``partial`` is injective and preserves edges and non-edges."""
    if len(set(partial.values())) != len(partial):
        raise ValueError("partial map is not injective")
    for x in list(partial) + list(partial.values()):
        if not 0 <= x < g.order:
            raise ValueError(f"vertex {x} out of range")
    items = list(partial.items())
    for i, (a, fa) in enumerate(items):
        for b, fb in items[i + 1:]:
            if g.has_edge(a, b) != g.has_edge(fa, fb):
                raise ValueError(f"partial map breaks adjacency of {a},{b}")


def extend_partial(g: Graph, partial: Mapping[int, int]) -> Perm | None:
    """An automorphism of ``g`` agreeing with ``partial``, or ``None``."""
    check_partial(g, partial)
    return _first(_search(g, g, dict(partial)))


@dataclass(frozen=True)
class PermGroup:
    """A permutation group stored as the full list of its elements."""

    degree: int
    elements: tuple[Perm, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, perm):
        return tuple(perm) in self._index

    @cached_property
    def _index(self) -> frozenset:
        return frozenset(self.elements)

    def is_closed(self) -> bool:
        ident = tuple(range(self.degree))
        if ident not in self:
            return False
        for p in self.elements:
            inv = [0] * self.degree
            for i, x in enumerate(p):
                inv[x] = i
            if tuple(inv) not in self:
                return False
            for q in self.elements:
                if tuple(p[x] for x in q) not in self:
                    return False
        return True

    def orbit(self, tup: Sequence[int]) -> set[tuple[int, ...]]:
        return {tuple(p[x] for x in tup) for p in self.elements}

    def orbit_count(self, tuples: Iterable[Sequence[int]]) -> int:
        """Number of orbits of the componentwise action on ``tuples``.

        Images that fall outside the given list are ignored, so a list that
        is not closed under the group is still partitioned consistently.
        """
        remaining = {tuple(t) for t in tuples}
        count = 0
        for t in sorted(remaining):
            if t not in remaining:
                continue
            count += 1
            remaining -= self.orbit(t)
        return count

    def is_transitive_on(self, tuples: Iterable[Sequence[int]]) -> bool:
        tuples = [tuple(t) for t in tuples]
        return bool(tuples) and self.orbit(tuples[0]) >= set(tuples)


def automorphism_group(g: Graph) -> PermGroup:
    elements = sorted(_search(g, g, {}))
    return PermGroup(g.order, tuple(elements))


def orbit_count(group: PermGroup, tuples: Iterable[Sequence[int]]) -> int:
    return group.orbit_count(tuples)


def arc_transitivity_degree(g: Graph, group: PermGroup | None = None) -> int:
    """Largest ``s`` such that the automorphism group is transitive on ``s``-arcs.

    Returns 0 when the group is vertex- but not arc-transitive; raises
    ``ValueError`` if it is not even vertex-transitive.
    """
    from .graph import enumerate_s_arcs, is_connected

    if not is_connected(g):
        raise ValueError("graph is disconnected")
    group = group or automorphism_group(g)
    if not group.is_transitive_on([(v,) for v in range(g.order)]):
        raise ValueError("graph is not vertex-transitive")
    s = 0
    while True:
        arcs = enumerate_s_arcs(g, s + 1)
        # an s-arc orbit never exceeds the group order
        if len(arcs) > len(group) or not group.is_transitive_on(arcs):
            return s
        s += 1
