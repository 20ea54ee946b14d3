"""Oriented combinatorial maps on darts, and the zipper that builds them.

A :class:`DartMap` is a pair of permutations on ``range(n_darts)``:

* ``alpha``: fixed-point-free involution; its orbits are the edges.
* ``phi``: successor along the boundary of a face; its orbits are faces.

Vertices are the orbits of ``sigma = alpha . phi`` (``sigma[d] =
alpha[phi[d]]``).  A dart runs along its face into its *head* vertex, and
``sigma`` cycles the darts with a common head.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence

from .graph import Graph
from .ooa import OrientedCycleSet, square_cycle

Perm = tuple[int, ...]


class MapError(ValueError):
    pass


def perm_orbits(perm: Sequence[int]) -> list[tuple[int, ...]]:
    """Cycles of a permutation, each starting at its smallest element, sorted."""
    seen = [False] * len(perm)
    out = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        orbit = []
        d = s
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = perm[d]
        out.append(tuple(orbit))
    return out


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """``p . q``: apply ``q`` first."""
    return tuple(p[q[i]] for i in range(len(q)))


def inverse(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


@dataclass(frozen=True)
class MapSummary:
    V: int
    E: int
    F: int
    genus: int
    vertex_orbit_sizes: tuple[int, ...]
    face_sizes: tuple[int, ...]

    @property
    def euler_characteristic(self) -> int:
        return self.V - self.E + self.F


@dataclass(frozen=True)
class DartMap:
    alpha: Perm
    phi: Perm
    # dart -> the vertex of the source object it lands on; informational only
    heads: tuple | None = None

    def __post_init__(self):
        n = len(self.alpha)
        if len(self.phi) != n or sorted(self.alpha) != list(range(n)) or sorted(self.phi) != list(range(n)):
            raise MapError("alpha and phi must be permutations of the same darts")
        for d in range(n):
            if self.alpha[d] == d or self.alpha[self.alpha[d]] != d:
                raise MapError(f"alpha is not a fixed-point-free involution at dart {d}")

    @property
    def n_darts(self) -> int:
        return len(self.alpha)

    @cached_property
    def sigma(self) -> Perm:
        return compose(self.alpha, self.phi)

    @cached_property
    def vertices(self) -> list[tuple[int, ...]]:
        return perm_orbits(self.sigma)

    @cached_property
    def edges(self) -> list[tuple[int, ...]]:
        return perm_orbits(self.alpha)

    @cached_property
    def faces(self) -> list[tuple[int, ...]]:
        return perm_orbits(self.phi)

    def _index(self, orbits) -> list[int]:
        where = [0] * self.n_darts
        for i, orb in enumerate(orbits):
            for d in orb:
                where[d] = i
        return where

    @cached_property
    def vertex_of(self) -> list[int]:
        """Index of the head vertex of each dart."""
        return self._index(self.vertices)

    @cached_property
    def face_of(self) -> list[int]:
        return self._index(self.faces)

    def dual(self) -> "DartMap":
        """Same darts and edges; faces of the dual are the vertices of this map."""
        return DartMap(self.alpha, self.sigma)

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            d = stack.pop()
            for e in (self.alpha[d], self.phi[d]):
                if e not in seen:
                    seen.add(e)
                    stack.append(e)
        return len(seen) == self.n_darts


def map_summary(m: DartMap) -> MapSummary:
    V, E, F = len(m.vertices), len(m.edges), len(m.faces)
    twice_genus = 2 - V + E - F
    if twice_genus % 2 or twice_genus < 0:
        raise MapError(f"non-integral or negative genus from V={V} E={E} F={F}")
    return MapSummary(
        V, E, F, twice_genus // 2,
        tuple(sorted(len(v) for v in m.vertices)),
        tuple(sorted(len(f) for f in m.faces)),
    )


def _identity_square(cycle):
    n = len(cycle)
    return tuple(cycle), tuple(cycle[(p + 1) % n] for p in range(n))


def zip_cycles(ooa: OrientedCycleSet, squared: bool = True) -> DartMap:
    """Zip oppositely oriented arcs of the (squared) oriented cycles into a map.

    Dart ``7 * c + p`` is the arc leaving position ``p`` of the squared cycle
    ``c``.  It stands for the 2-arc ``(x, y, z)`` of the original cycle with
    ``y`` the skipped middle vertex; ``alpha`` pairs it with the dart standing
    for ``(z, y, x)``.  With ``squared=False`` darts are plain arcs ``(x, z)``
    and pair with ``(z, x)``.
    """
    square: Callable = square_cycle if squared else _identity_square
    offsets, marks, phi, heads = [], [], [], []
    for cycle in ooa.cycles:
        sq, mids = square(cycle)
        n = len(sq)
        base = len(phi)
        offsets.append(base)
        for p in range(n):
            x, z = sq[p], sq[(p + 1) % n]
            marks.append((x, mids[p], z) if squared else (x, z))
            phi.append(base + (p + 1) % n)
            heads.append(z)
    where: dict[tuple, int] = {}
    for d, mark in enumerate(marks):
        if mark in where:
            raise MapError(f"walk {mark} appears in two cycles")
        where[mark] = d
    alpha = []
    for d, mark in enumerate(marks):
        partner = where.get(mark[::-1])
        if partner is None:
            raise MapError(f"pairing failure: no reverse partner for {mark}")
        alpha.append(partner)
    return DartMap(tuple(alpha), tuple(phi), tuple(heads))


def zip_ooa(ooa: OrientedCycleSet) -> DartMap:
    return zip_cycles(ooa, squared=True)


def underlying_graph(m: DartMap) -> Graph:
    """Vertices are sigma-orbits, one edge per alpha-orbit."""
    edges = set()
    vof = m.vertex_of
    for d, e in m.edges:
        u, v = vof[d], vof[e]
        if u == v:
            raise MapError(f"loop at map vertex {u}")
        key = (min(u, v), max(u, v))
        if key in edges:
            raise MapError(f"parallel edges between map vertices {key}")
        edges.add(key)
    return Graph(len(m.vertices), frozenset(edges))


def dual_graph(m: DartMap, strict: bool = True) -> Graph:
    """Faces adjacent across each edge.  ``strict`` faults on loops or multi-edges."""
    return underlying_graph(m.dual()) if strict else _simple_part(m.dual())


def _simple_part(m: DartMap) -> Graph:
    vof = m.vertex_of
    edges = {tuple(sorted((vof[d], vof[e]))) for d, e in m.edges if vof[d] != vof[e]}
    return Graph(len(m.vertices), frozenset(edges))


def petrie_polygons(m: DartMap) -> list[tuple[int, ...]]:
    """Closed zigzag walks, as dart sequences.

    From a dart the walk turns one way (``phi``) and then the other
    (``alpha . phi^-1 . alpha``, the next dart of the face across the edge
    taken backwards), alternately.  A walk state is ``(dart, parity)``; the
    same polygon run backwards visits the states ``(alpha[dart], parity)``,
    so each polygon is reported once, from its smallest dart with a left
    turn first.
    """
    phi_inv = inverse(m.phi)
    right = compose(m.alpha, compose(phi_inv, m.alpha))
    steps = (m.phi, right)
    seen = set()
    polygons = []
    for start in range(m.n_darts):
        if (start, 0) in seen:
            continue
        walk = []
        d, parity = start, 0
        while (d, parity) not in seen:
            seen.add((d, parity))
            walk.append(d)
            d = steps[parity][d]
            parity ^= 1
        seen.update((m.alpha[x], i % 2) for i, x in enumerate(walk))
        polygons.append(tuple(walk))
    return polygons


def face_coloring(m: DartMap, ooa: OrientedCycleSet) -> list[int]:
    """Color of each dual vertex (face) = the ``i`` of its cycle label ``(i, j)``."""
    if ooa.labels is None:
        raise MapError("cycle labels are required")
    n = len(ooa.cycles[0])
    colors = []
    for face in m.faces:
        cyc = face[0] // n
        colors.append(ooa.labels[cyc][0])
    return colors


def vertex_color_dual(m: DartMap, ooa: OrientedCycleSet) -> list[int]:
    """Label coloring of the dual graph, checked to be proper."""
    colors = face_coloring(m, ooa)
    dual = dual_graph(m)
    for u, v in dual.edges:
        if colors[u] == colors[v]:
            raise MapError(f"adjacent faces {u}, {v} share color {colors[u]}")
    return colors
