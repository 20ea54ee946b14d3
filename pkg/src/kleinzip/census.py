"""Constructors for the Fano plane, Heawood graph and Coxeter graph.

Coxeter vertex numbering is fixed: ``u_x -> x``, ``z_x -> 7 + x``,
``v_x -> 14 + x``, ``t_x -> 21 + x`` for ``x`` in Z_7.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .graph import (
    Graph,
    IntersectionArray,
    WeaklyRegularParams,
    diameter,
    enumerate_cycles,
    girth,
    intersection_array,
    weakly_regular_params,
)
from .hamilton import is_hamiltonian
from .search import arc_transitivity_degree, automorphism_group

FANO_LINES = ((1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3))

POINTS = tuple(range(1, 8))

_OFFSET = {"u": 0, "z": 7, "v": 14, "t": 21}

# (prefix, cyclic order of indices) for the three heptagons
HEPTAGONS = (
    ("u", (1, 2, 3, 4, 5, 6, 0)),
    ("v", (4, 6, 1, 3, 5, 0, 2)),
    ("t", (3, 6, 2, 5, 1, 4, 0)),
)


def vertex(name: str) -> int:
    """Integer label of a Coxeter vertex written like ``"u3"`` or ``"z0"``."""
    return _OFFSET[name[0]] + int(name[1:])


def vertex_name(v: int) -> str:
    return "uzvt"[v // 7] + str(v % 7)


@dataclass(frozen=True)
class FanoPlane:
    points: tuple[int, ...]
    lines: tuple[frozenset, ...]

    def lines_through(self, p: int) -> list[frozenset]:
        return [ln for ln in self.lines if p in ln]

    def line_through(self, p: int, q: int) -> frozenset:
        if p == q:
            raise ValueError("two distinct points are needed")
        (ln,) = [ln for ln in self.lines if p in ln and q in ln]
        return ln

    def third_point(self, p: int, q: int) -> int:
        (r,) = self.line_through(p, q) - {p, q}
        return r

    def is_line(self, pts) -> bool:
        return frozenset(pts) in self.lines

    def collineations(self) -> list[tuple[int, ...]]:
        """All point permutations mapping lines to lines, as ``perm[p - 1]``."""
        lines = set(self.lines)
        out = []
        for perm in permutations(self.points):
            if all(frozenset(perm[p - 1] for p in ln) in lines for ln in self.lines):
                out.append(perm)
        return out


def build_fano() -> FanoPlane:
    return FanoPlane(POINTS, tuple(frozenset(ln) for ln in FANO_LINES))


def build_heawood() -> Graph:
    """Point-line incidence graph: points 1..7 -> 0..6, line i -> 7 + i."""
    fano = build_fano()
    edges = [(p - 1, 7 + i) for i, ln in enumerate(fano.lines) for p in ln]
    return Graph.from_edges(14, edges)


def coxeter_edges() -> list[tuple[int, int]]:
    edges = []
    for prefix, idx in HEPTAGONS:
        for a, b in zip(idx, idx[1:] + idx[:1]):
            edges.append((vertex(f"{prefix}{a}"), vertex(f"{prefix}{b}")))
    for x in range(7):
        z = vertex(f"z{x}")
        edges += [(z, vertex(f"u{x}")), (z, vertex(f"v{x}")), (z, vertex(f"t{x}"))]
    return edges


def build_coxeter() -> Graph:
    return Graph.from_edges(28, coxeter_edges())


@lru_cache(maxsize=None)
def heawood_hexagons() -> tuple[tuple[int, ...], ...]:
    return tuple(enumerate_cycles(build_heawood(), 6))


def build_coxeter_from_heawood() -> Graph:
    """Disjointness graph of the 28 hexagons of the Heawood graph."""
    hexes = heawood_hexagons()
    sets = [set(h) for h in hexes]
    edges = [(i, j) for i, j in combinations(range(len(hexes)), 2) if not sets[i] & sets[j]]
    g = Graph.from_edges(len(hexes), edges)
    if g.order != 28 or set(g.degrees()) != {3}:
        raise RuntimeError(f"hexagon disjointness graph is not cubic on 28 vertices: {g.degrees()}")
    return g


# -- Fano colorings -----------------------------------------------------------

class UnsatError(RuntimeError):
    pass


@dataclass(frozen=True)
class FanoColoring:
    vertex_color: dict
    edge_color: dict

    def violations(self, g: Graph, fano: FanoPlane | None = None) -> list[str]:
        """Broken conditions: incident edge colors form a line; edge color
        plus its end colors form a line; vertex color not among its edges'."""
        fano = fano or build_fano()
        bad = []
        for v in range(g.order):
            incident = {self.edge_color[tuple(sorted((v, w)))] for w in g.neighbors[v]}
            if not fano.is_line(incident):
                bad.append(f"(a) at vertex {v}: {sorted(incident)}")
            if len(incident | {self.vertex_color[v]}) != 4:
                bad.append(f"quadruple at vertex {v}")
        for u, v in g.sorted_edges():
            pts = {self.edge_color[(u, v)], self.vertex_color[u], self.vertex_color[v]}
            if not fano.is_line(pts):
                bad.append(f"(b) at edge {(u, v)}: {sorted(pts)}")
        return bad


def coloring_from_vertices(g: Graph, vertex_color: dict, fano: FanoPlane | None = None) -> FanoColoring:
    """Complete a vertex coloring by giving each edge the third point on the
    line through its end colors."""
    fano = fano or build_fano()
    edges = {}
    for u, v in g.sorted_edges():
        cu, cv = vertex_color[u], vertex_color[v]
        if cu == cv:
            raise ValueError(f"edge {(u, v)} has equal end colors")
        edges[(u, v)] = fano.third_point(cu, cv)
    return FanoColoring(dict(vertex_color), edges)


def find_fano_coloring(g: Graph, seed: dict | None = None) -> FanoColoring:
    """First Fano coloring found by backtracking over vertex colors.

    Edge colors are forced by the vertex colors, so only those are
    searched; a vertex is checked once all its neighbours are colored.  ``seed`` pins some vertex colors.
    """
    fano = build_fano()
    third = {(p, q): fano.third_point(p, q) for p in POINTS for q in POINTS if p != q}
    order = _bfs_from(g, sorted(seed) if seed else [0])
    color: dict[int, int] = dict(seed or {})

    def vertex_ok(v: int) -> bool:
        c = color.get(v)
        if c is None:
            return True
        xs = [third[(c, color[w])] for w in g.neighbors[v] if w in color]
        if len(set(xs)) != len(xs):
            return False
        return len(xs) < 3 or fano.is_line(xs)

    def ok(v: int) -> bool:
        c = color[v]
        if any(color.get(w) == c for w in g.neighbors[v]):
            return False
        return vertex_ok(v) and all(vertex_ok(w) for w in g.neighbors[v])

    for v in list(color):
        if not ok(v):
            raise UnsatError(f"seed color at vertex {v} is inconsistent")
    free = [v for v in order if v not in color]

    def search(i: int) -> bool:
        if i == len(free):
            return True
        v = free[i]
        for c in POINTS:
            color[v] = c
            if ok(v) and search(i + 1):
                return True
            del color[v]
        return False

    if not search(0):
        raise UnsatError("no Fano coloring exists")
    return coloring_from_vertices(g, color, fano)


def _bfs_from(g: Graph, roots) -> list[int]:
    order, seen = [], set()
    for r in list(roots) + list(range(g.order)):
        if r in seen:
            continue
        seen.add(r)
        queue = [r]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in g.neighbors[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def colorings_equivalent(a: dict, b: dict, fano: FanoPlane | None = None,
                          automorphisms=None) -> bool:
    """Whether vertex colorings ``a`` and ``b`` differ by a collineation,
    optionally composed with a graph automorphism."""
    fano = fano or build_fano()
    maps = automorphisms or [tuple(range(len(a)))]
    colls = fano.collineations()
    for p in maps:
        moved = {p[v]: c for v, c in a.items()}
        for col in colls:
            if all(col[moved[v] - 1] == b[v] for v in b):
                return True
    return False


# -- invariant reports ---------------------------------------------------------

@dataclass(frozen=True)
class InvariantReport:
    n: int
    edges: int
    degrees: tuple[int, ...]
    diameter: int
    girth: int | None
    arc_transitivity: int | None
    girth_cycles: int
    automorphisms: int
    intersection_array: IntersectionArray | None
    weakly_regular: WeaklyRegularParams
    hamiltonian: bool | None
    hypohamiltonian: bool | None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": self.edges,
            "degrees": list(self.degrees),
            "diameter": self.diameter,
            "girth": self.girth,
            "arc_transitivity": self.arc_transitivity,
            "girth_cycles": self.girth_cycles,
            "automorphisms": self.automorphisms,
            "intersection_array": str(self.intersection_array) if self.intersection_array else None,
            "weakly_regular": str(self.weakly_regular),
            "hamiltonian": self.hamiltonian,
            "hypohamiltonian": self.hypohamiltonian,
        }


def invariant_report(g: Graph, hamiltonicity: bool = True) -> InvariantReport:
    """Every field is computed here from ``g``; nothing is looked up."""
    grp = automorphism_group(g)
    try:
        k = arc_transitivity_degree(g, grp)
    except ValueError:
        k = None
    gi = girth(g)
    ham = hypo = None
    if hamiltonicity:
        ham = is_hamiltonian(g)
        hypo = False if ham else all(is_hamiltonian(g.delete_vertex(v)) for v in range(g.order))
    return InvariantReport(
        n=g.order,
        edges=g.size,
        degrees=tuple(sorted(set(g.degrees()))),
        diameter=diameter(g),
        girth=gi,
        arc_transitivity=k,
        girth_cycles=len(enumerate_cycles(g, gi)) if gi else 0,
        automorphisms=len(grp),
        intersection_array=intersection_array(g),
        weakly_regular=weakly_regular_params(g),
        hamiltonian=ham,
        hypohamiltonian=hypo,
    )
