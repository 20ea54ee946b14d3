"""Opposite-orientation assignments (OOA) of girth cycles.

An OOA picks one direction for every girth cycle so that the two cycles
through each shared path run along it in opposite directions.  The
reference assignment for the Coxeter graph is stored verbatim below; a
parity solver recovers assignments from scratch.
"""

from __future__ import annotations

import re
from collections import defaultdict, deque
from dataclasses import dataclass, field

from .census import vertex
from .graph import Graph, canonical_cycle, canonical_path, cycle_subwalks, is_cycle_in

Label = tuple[int, int]

# Oriented Coxeter heptagons keyed by label (i, j); vertices written as in
# the construction of the graph from three heptagons and seven claws.
_OOC = {
    (0, 1): "u1 u2 u3 u4 u5 u6 u0",
    (1, 1): "u1 z1 v1 v3 z3 u3 u2",
    (2, 1): "v5 z5 u5 u4 u3 z3 v3",
    (3, 1): "v5 v0 z0 u0 u6 u5 z5",
    (4, 1): "u1 u0 z0 v0 v2 z2 u2",
    (5, 1): "z4 u4 u3 u2 z2 v2 v4",
    (6, 1): "z4 v4 v6 z6 u6 u5 u4",
    (7, 1): "u1 u0 u6 z6 v6 v1 z1",
    (0, 2): "v1 v3 v5 v0 v2 v4 v6",
    (1, 2): "z4 v4 v2 v0 z0 t0 t4",
    (2, 2): "t6 z6 v6 v4 v2 z2 t2",
    (3, 2): "z4 t4 t1 z1 v1 v6 v4",
    (4, 2): "t6 t3 z3 v3 v1 v6 z6",
    (5, 2): "v5 v3 v1 z1 t1 t5 z5",
    (6, 2): "v5 v3 z3 t3 t0 z0 v0",
    (7, 2): "v5 z5 t5 t2 z2 v2 v0",
    (0, 3): "t1 t5 t2 t6 t3 t0 t4",
    (1, 3): "t6 t2 t5 z5 u5 u6 z6",
    (2, 3): "u1 z1 t1 t4 t0 z0 u0",
    (3, 3): "t6 t2 z2 u2 u3 z3 t3",
    (4, 3): "z4 u4 u5 z5 t5 t1 t4",
    (5, 3): "t6 z6 u6 u0 z0 t0 t3",
    (6, 3): "u1 u2 z2 t2 t5 t1 z1",
    (7, 3): "z4 t4 t0 t3 z3 u3 u4",
}

# Fano colors along each squared heptagon, written from the vertex of
# color 1: vertex color followed by "_" and the color of the skipped
# middle vertex.
_SQUARE_COLOURS = {
    (0, 1): "1_23_45_67_12_34_56_7", (1, 1): "1_54_67_32_15_46_73_2",
    (0, 2): "1_35_72_46_13_57_24_6", (1, 2): "1_75_34_26_17_53_42_6",
    (0, 3): "1_52_63_74_15_26_37_4", (1, 3): "1_47_25_63_14_72_56_3",
    (2, 1): "1_25_43_76_12_54_37_6", (3, 1): "1_34_76_52_13_47_65_2",
    (2, 2): "1_32_75_64_13_27_56_4", (3, 2): "1_63_54_27_16_35_42_7",
    (2, 3): "1_53_62_47_15_36_24_7", (3, 3): "1_46_23_75_14_62_37_5",
    (4, 1): "1_74_35_62_17_43_56_2", (5, 1): "1_43_26_57_14_32_65_7",
    (4, 2): "1_57_64_23_15_76_42_3", (5, 2): "1_64_53_72_16_45_37_2",
    (4, 3): "1_45_27_36_14_52_73_6", (5, 3): "1_36_74_25_13_67_42_5",
    (6, 1): "1_72_36_54_17_23_65_4", (7, 1): "1_76_32_45_17_63_24_5",
    (6, 2): "1_67_52_43_16_75_24_3", (7, 2): "1_27_46_53_12_74_65_3",
    (6, 3): "1_26_47_35_12_64_73_5", (7, 3): "1_62_57_34_16_25_73_4",
}

FIXTURE_LABELS: tuple[Label, ...] = tuple(sorted(_OOC, key=lambda ij: (ij[1], ij[0])))


class OOAError(ValueError):
    pass


@dataclass(frozen=True)
class OrientedCycleSet:
    """Directed cycles (vertex tuples, successor of the last is the first)."""

    cycles: tuple[tuple[int, ...], ...]
    labels: tuple[Label, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(tuple(c) for c in self.cycles))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(tuple(x) for x in self.labels))
            if len(self.labels) != len(self.cycles):
                raise ValueError("one label per cycle is required")

    def __len__(self):
        return len(self.cycles)

    def undirected(self) -> list[tuple[int, ...]]:
        return [canonical_cycle(c) for c in self.cycles]

    def reversed_at(self, index: int) -> "OrientedCycleSet":
        """Copy with one cycle traversed the other way."""
        cycles = list(self.cycles)
        c = cycles[index]
        cycles[index] = (c[0],) + tuple(reversed(c[1:]))
        return OrientedCycleSet(tuple(cycles), self.labels)

    def label_of(self, index: int) -> str:
        if self.labels is None:
            return str(index)
        i, j = self.labels[index]
        return f"{i}^{j}"


def paper_ooa_fixture() -> OrientedCycleSet:
    """The 24 oriented Coxeter heptagons, ordered by (j, i) of their labels."""
    cycles = [tuple(vertex(w) for w in _OOC[lab].split()) for lab in FIXTURE_LABELS]
    return OrientedCycleSet(tuple(cycles), FIXTURE_LABELS)


def square_color_table() -> dict[Label, list[tuple[int, int]]]:
    """Per label, the (vertex color, arc color) pairs of its squared cycle."""
    return {
        lab: [(int(a), int(b)) for a, b in re.findall(r"(\d)_(\d)", s)]
        for lab, s in _SQUARE_COLOURS.items()
    }


def paper_vertex_coloring() -> dict[int, int]:
    """Vertex colors of the Coxeter graph read off the squared-cycle color table.

    Each table entry fixes the colors along one squared cycle up to the
    rotation at which it was written; rotations are resolved by propagation
    from the cycle whose colors are pinned to ``u_i -> i`` (``u_0 -> 7``).
    Raises ``OOAError`` if the table is inconsistent with the fixture.
    """
    ooa = paper_ooa_fixture()
    table = square_color_table()
    color = {vertex(f"u{i}"): (i or 7) for i in range(7)}
    pending = list(range(len(ooa)))
    while pending:
        progress = False
        for idx in list(pending):
            sq, _ = square_cycle(ooa.cycles[idx])
            mids = [ooa.cycles[idx][(2 * p + 1) % 7] for p in range(7)]
            entry = table[ooa.labels[idx]]
            fits = []
            for r in range(7):
                ok = True
                for p in range(7):
                    vc, ac = entry[(p - r) % 7]
                    for w, c in ((sq[p], vc), (mids[p], ac)):
                        if color.get(w, c) != c:
                            ok = False
                if ok:
                    fits.append(r)
            if not fits:
                raise OOAError(f"color table entry {ooa.label_of(idx)} fits no rotation")
            known = sum(w in color for w in sq)
            if len(fits) == 1 and known:
                r = fits[0]
                for p in range(7):
                    vc, ac = entry[(p - r) % 7]
                    color[sq[p]] = vc
                    color[mids[p]] = ac
                pending.remove(idx)
                progress = True
        if not progress:
            raise OOAError("color table does not determine a vertex coloring")
    return color


# -- squaring ----------------------------------------------------------------

def square_cycle(cycle) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Square of an odd directed cycle.

    Returns ``(squared, middles)`` where ``squared[p] = cycle[2p mod n]`` and
    ``middles[p]`` is the vertex skipped by the arc leaving position ``p``.
    """
    n = len(cycle)
    if n % 2 == 0:
        raise ValueError("only odd cycles square to a single cycle")
    squared = tuple(cycle[(2 * p) % n] for p in range(n))
    middles = tuple(cycle[(2 * p + 1) % n] for p in range(n))
    return squared, middles


# -- the parity solver -------------------------------------------------------

@dataclass
class ParitySystem:
    """Constraints ``flip[a] ^ flip[b] == rhs`` between cycles sharing a path."""

    cycles: list[tuple[int, ...]]
    constraints: list[tuple[int, int, int, tuple[int, ...]]] = field(default_factory=list)

    def components(self) -> list[list[int]]:
        adj = defaultdict(set)
        for a, b, _, _ in self.constraints:
            adj[a].add(b)
            adj[b].add(a)
        seen, comps = set(), []
        for s in range(len(self.cycles)):
            if s in seen:
                continue
            comp, queue = [], deque([s])
            seen.add(s)
            while queue:
                u = queue.popleft()
                comp.append(u)
                for w in sorted(adj[u]):
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps


def _direction(cycle, path) -> int:
    """0 if ``cycle`` runs along ``path`` as written, 1 if against it."""
    for w in cycle_subwalks(cycle, len(path)):
        if w == path:
            return 0
        if w == path[::-1]:
            return 1
    raise KeyError(path)


def path_incidence(cycles, k: int) -> dict[tuple[int, ...], list[int]]:
    """Canonical paths on ``k`` vertices mapped to the indices of cycles containing them."""
    inc: dict[tuple[int, ...], list[int]] = defaultdict(list)
    for idx, c in enumerate(cycles):
        for p in sorted({canonical_path(w) for w in cycle_subwalks(c, k)}):
            inc[p].append(idx)
    return dict(inc)


def parity_system(cycles, k: int) -> ParitySystem:
    """Build the constraints for paths on ``k`` vertices.

    A path lying in a single cycle imposes nothing; a path in three or more
    cycles cannot be oppositely traversed by all of them and is rejected.
    """
    cycles = [tuple(c) for c in cycles]
    system = ParitySystem(cycles)
    for path, owners in sorted(path_incidence(cycles, k).items()):
        if len(owners) > 2:
            raise OOAError(f"path {path} lies in {len(owners)} cycles")
        if len(owners) == 2:
            a, b = owners
            rhs = 1 ^ _direction(cycles[a], path) ^ _direction(cycles[b], path)
            system.constraints.append((a, b, rhs, path))
    return system


def solve_ooa(g: Graph, cycles, k: int, labels=None) -> OrientedCycleSet | None:
    """Orient ``cycles`` so that shared paths on ``k`` vertices run oppositely.

    The first cycle of each constraint component keeps its given direction, so
    the answer is the lexicographically least one.  Returns ``None`` when the
    constraints contain an odd inconsistency.
    """
    for c in cycles:
        if not is_cycle_in(g, c):
            raise OOAError(f"{tuple(c)} is not a cycle of the graph")
    system = parity_system(cycles, k)
    adj = defaultdict(list)
    for a, b, rhs, _ in system.constraints:
        adj[a].append((b, rhs))
        adj[b].append((a, rhs))
    flip: dict[int, int] = {}
    for comp in system.components():
        root = comp[0]
        flip[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w, rhs in adj[u]:
                want = flip[u] ^ rhs
                if w not in flip:
                    flip[w] = want
                    queue.append(w)
                elif flip[w] != want:
                    return None
    oriented = []
    for idx, c in enumerate(system.cycles):
        oriented.append(c if not flip[idx] else (c[0],) + tuple(reversed(c[1:])))
    return OrientedCycleSet(tuple(oriented), labels)


def ooa_violations(ooa: OrientedCycleSet, k: int) -> list[tuple[int, ...]]:
    """Shared paths on ``k`` vertices that both owning cycles traverse the same way."""
    system = parity_system(ooa.cycles, k)
    return [path for a, b, rhs, path in system.constraints if rhs != 0]


def same_up_to_component_flips(a: OrientedCycleSet, b: OrientedCycleSet, k: int) -> bool:
    """True if ``b`` equals ``a`` after reversing whole constraint components of ``a``."""
    by_shape = {canonical_cycle(c): c for c in b.cycles}
    if set(by_shape) != set(a.undirected()):
        return False
    for comp in parity_system(a.cycles, k).components():
        kept = {_same_direction(a.cycles[i], by_shape[canonical_cycle(a.cycles[i])]) for i in comp}
        if len(kept) != 1:
            return False
    return True


def _same_direction(c, d) -> bool:
    c, d = tuple(c), tuple(d)
    return any(c[r:] + c[:r] == d for r in range(len(c)))
