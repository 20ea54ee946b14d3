"""Simple undirected graphs and the basic invariants computed on them.

Vertices are the integers ``0..n-1``.  Cycles and paths are plain tuples of
vertices; the ``canonical_*`` helpers give them set semantics.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

Cycle = tuple[int, ...]
Path = tuple[int, ...]
Arc = tuple[int, int]


class DisconnectedGraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on ``range(order)``.

    ``edges`` is normalised to a frozenset of ``(u, v)`` pairs with ``u < v``.
    """

    order: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise ValueError(f"edge {e} out of range for order {self.order}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Sequence[int]]) -> "Graph":
        edges = [tuple(e) for e in edges]
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
        return cls(order, frozenset(edges))

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nbrs = [set() for _ in range(self.order)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbour lists, for deterministic traversal."""
        return tuple(tuple(sorted(s)) for s in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def size(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def arcs(self) -> list[Arc]:
        """Both oppositely oriented arcs of every edge, sorted."""
        return sorted([(u, v) for u, v in self.edges] + [(v, u) for u, v in self.edges])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        return Graph(self.order, frozenset((perm[u], perm[v]) for u, v in self.edges))

    def delete_vertex(self, x: int) -> "Graph":
        """Vertex-deleted subgraph, relabelled to stay dense."""
        new = [v if v < x else v - 1 for v in range(self.order)]
        return Graph(
            self.order - 1,
            frozenset((new[u], new[v]) for u, v in self.edges if x not in (u, v)),
        )

    def induced_edges(self, vertices: Iterable[int]) -> set[tuple[int, int]]:
        vs = set(vertices)
        return {(u, v) for u, v in self.edges if u in vs and v in vs}


def cycle_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def reverse_arc(a: Arc) -> Arc:
    return (a[1], a[0])


# -- canonical forms ---------------------------------------------------------

def canonical_path(path: Sequence[int]) -> Path:
    p = tuple(path)
    return p if p[0] < p[-1] else p[::-1]


def canonical_cycle(cycle: Sequence[int]) -> Cycle:
    """Rotate to start at the minimum vertex, heading to its smaller neighbour."""
    c = list(cycle)
    n = len(c)
    i = c.index(min(c))
    fwd = c[i:] + c[:i]
    if n > 2 and fwd[-1] < fwd[1]:
        fwd = [fwd[0]] + fwd[1:][::-1]
    return tuple(fwd)


def rotate_to(cycle: Sequence[int], start: int) -> Cycle:
    i = list(cycle).index(start)
    return tuple(cycle[i:]) + tuple(cycle[:i])


def cycle_edges(cycle: Sequence[int]) -> list[tuple[int, int]]:
    n = len(cycle)
    return [tuple(sorted((cycle[i], cycle[(i + 1) % n]))) for i in range(n)]


def cycle_arcs(cycle: Sequence[int]) -> list[Arc]:
    n = len(cycle)
    return [(cycle[i], cycle[(i + 1) % n]) for i in range(n)]


def cycle_subwalks(cycle: Sequence[int], m: int) -> list[tuple[int, ...]]:
    """The directed sub-walks on ``m`` vertices, one per starting position."""
    n = len(cycle)
    return [tuple(cycle[(i + j) % n] for j in range(m)) for i in range(n)]


def cycle_subpaths(cycle: Sequence[int], m: int) -> list[Path]:
    """Canonical undirected sub-paths on ``m`` vertices (m <= len(cycle))."""
    if m == len(cycle):
        raise ValueError("a sub-path must omit at least one vertex")
    return [canonical_path(w) for w in cycle_subwalks(cycle, m)]


def is_cycle_in(g: Graph, cycle: Sequence[int]) -> bool:
    return (
        len(cycle) >= 3
        and len(set(cycle)) == len(cycle)
        and all(g.has_edge(u, v) for u, v in cycle_arcs(cycle))
    )


# -- distances ---------------------------------------------------------------

def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; -1 marks unreachable vertices."""
    dist = [-1] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance_matrix(g: Graph) -> list[list[int]]:
    rows = [bfs_distances(g, v) for v in range(g.order)]
    if any(d < 0 for row in rows for d in row):
        raise DisconnectedGraphError("graph is disconnected")
    return rows


def is_connected(g: Graph) -> bool:
    return g.order == 0 or min(bfs_distances(g, 0)) >= 0


def diameter(g: Graph) -> int:
    return max(max(row) for row in distance_matrix(g))


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` for a forest."""
    best = None
    for s in range(g.order):
        dist = [-1] * g.order
        parent = [-1] * g.order
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in g.neighbors[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


# -- enumeration -------------------------------------------------------------

def enumerate_cycles(g: Graph, length: int) -> list[Cycle]:
    """All cycles of exactly ``length`` vertices, canonical and sorted."""
    if length < 3:
        raise ValueError("cycles have at least 3 vertices")
    found = set()
    nbrs = g.neighbors
    for s in range(g.order):
        # s is the smallest vertex of every cycle grown from it
        stack = [(s, (s,))]
        while stack:
            u, walk = stack.pop()
            if len(walk) == length:
                if g.has_edge(u, s):
                    found.add(canonical_cycle(walk))
                continue
            for w in nbrs[u]:
                if w > s and w not in walk:
                    stack.append((w, walk + (w,)))
    return sorted(found)


def enumerate_paths(g: Graph, m: int) -> list[Path]:
    """All paths on ``m`` vertices, canonical and sorted."""
    if m < 2:
        raise ValueError("paths have at least 2 vertices")
    found = set()
    for s in range(g.order):
        stack = [(s,)]
        while stack:
            walk = stack.pop()
            if len(walk) == m:
                if walk[0] < walk[-1]:
                    found.add(walk)
                continue
            for w in g.neighbors[walk[-1]]:
                if w not in walk:
                    stack.append(walk + (w,))
    return sorted(found)


def enumerate_s_arcs(g: Graph, s: int) -> list[tuple[int, ...]]:
    """Walks of ``s`` edges without immediate reversal (vertices may repeat)."""
    walks = [(v,) for v in range(g.order)]
    for _ in range(s):
        nxt = []
        for w in walks:
            for x in g.neighbors[w[-1]]:
                if len(w) >= 2 and x == w[-2]:
                    continue
                nxt.append(w + (x,))
        walks = nxt
    return sorted(walks)


# -- distance regularity -----------------------------------------------------

@dataclass(frozen=True)
class IntersectionArray:
    b: tuple[int, ...]
    c: tuple[int, ...]

    def __str__(self):
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"


@dataclass(frozen=True)
class WeaklyRegularParams:
    n: int
    degrees: tuple[int, ...]
    lambda_set: tuple[int, ...]
    mu_set: tuple[int, ...]

    def as_tuple(self):
        return (self.n, self.degrees, self.lambda_set, self.mu_set)

    def __str__(self):
        fmt = lambda xs: "(" + ",".join(map(str, xs)) + ")"
        return f"({self.n},{fmt(self.degrees)},{fmt(self.lambda_set)},{fmt(self.mu_set)})"


def intersection_array(g: Graph) -> IntersectionArray | None:
    """Intersection array if ``g`` is distance-regular, else ``None``."""
    dist = distance_matrix(g)
    d = max(max(row) for row in dist)
    b: list[set] = [set() for _ in range(d + 1)]
    c: list[set] = [set() for _ in range(d + 1)]
    for u in range(g.order):
        du = dist[u]
        for v in range(g.order):
            i = du[v]
            bi = ci = 0
            for w in g.neighbors[v]:
                if du[w] == i + 1:
                    bi += 1
                elif du[w] == i - 1:
                    ci += 1
            b[i].add(bi)
            c[i].add(ci)
    if any(len(s) != 1 for s in b + c):
        return None
    bs = [s.pop() for s in b]
    cs = [s.pop() for s in c]
    return IntersectionArray(tuple(bs[:d]), tuple(cs[1:]))


def weakly_regular_params(g: Graph) -> WeaklyRegularParams:
    lam, mu = set(), set()
    for u, v in combinations(range(g.order), 2):
        common = len(g.adj[u] & g.adj[v])
        (lam if g.has_edge(u, v) else mu).add(common)
    return WeaklyRegularParams(
        g.order, tuple(sorted(set(g.degrees()))), tuple(sorted(lam)), tuple(sorted(mu))
    )
