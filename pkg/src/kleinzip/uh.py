"""Checks for fastening and ultrahomogeneity of cycle and path copies.

Copies are vertex tuples: a cycle in any rotation/direction, a path in
either direction.  "Sub-path on m vertices" always means the undirected
canonical form from :func:`kleinzip.graph.canonical_path`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .graph import (
    Graph,
    canonical_cycle,
    canonical_path,
    cycle_arcs,
    cycle_edges,
    cycle_subwalks,
    enumerate_s_arcs,
    is_cycle_in,
)
from .ooa import OrientedCycleSet
from .search import PermGroup, extend_partial


@dataclass(frozen=True)
class FasteningResult:
    subpath_size: int
    per_copy_counts: dict = field(repr=False)
    uniform_ell: int | None
    all_tight: bool

    @property
    def values(self) -> set[int]:
        return set(self.per_copy_counts.values())


@dataclass(frozen=True)
class UHVerdict:
    holds: bool
    witness_failure: tuple | None = None

    def __bool__(self):
        return self.holds


def _subpath_edges(path) -> set[tuple[int, int]]:
    return {tuple(sorted(e)) for e in zip(path, path[1:])}


def fastening_numbers(g: Graph, cycles: Sequence[Sequence[int]], m: int) -> FasteningResult:
    """For each cycle and each of its sub-paths on ``m`` vertices, how many
    other cycles contain that sub-path.

    ``all_tight`` records whether each such pair also has a partner cycle
    meeting the first exactly in the sub-path (vertices and edges).
    """
    cycles = [tuple(c) for c in cycles]
    for c in cycles:
        if not is_cycle_in(g, c):
            raise ValueError(f"{c} is not a cycle of the graph")
        if not 2 <= m < len(c):
            raise ValueError(f"sub-path size {m} out of range for a {len(c)}-cycle")
    paths = [{canonical_path(w) for w in cycle_subwalks(c, m)} for c in cycles]
    vsets = [set(c) for c in cycles]
    esets = [set(cycle_edges(c)) for c in cycles]
    owners: dict[tuple, list[int]] = {}
    for i, ps in enumerate(paths):
        for p in ps:
            owners.setdefault(p, []).append(i)
    counts, tight = {}, True
    for i, c in enumerate(cycles):
        key_c = canonical_cycle(c)
        for p in sorted(paths[i]):
            others = [j for j in owners[p] if j != i]
            counts[(key_c, p)] = len(others)
            pv, pe = set(p), _subpath_edges(p)
            if not any(vsets[i] & vsets[j] == pv and esets[i] & esets[j] == pe for j in others):
                tight = False
    values = set(counts.values())
    uniform = values.pop() if len(values) == 1 else None
    return FasteningResult(m, counts, uniform, tight)


def sf_uh_check(g: Graph, girth_cycles, chain: Sequence[int]) -> bool:
    """Strong fastening: step ``i`` (from 1) of ``chain`` has fastening number ``2**i - 1``.

    ``chain`` lists sub-path sizes, dropping one vertex per step down to an edge.
    """
    chain = list(chain)
    if not chain or chain[-1] != 2 or any(a - b != 1 for a, b in zip(chain, chain[1:])):
        raise ValueError(f"malformed chain {chain}: must descend by one to 2")
    for i, m in enumerate(chain, start=1):
        res = fastening_numbers(g, girth_cycles, m)
        if res.uniform_ell != 2**i - 1 or not res.all_tight:
            return False
    return True


def _self_correspondences(n: int, paths: bool) -> list[tuple[int, ...]]:
    """Index maps of the template onto itself: dihedral for cycles, flip for paths."""
    if paths:
        return [tuple(range(n)), tuple(range(n - 1, -1, -1))]
    rots = [tuple((i + r) % n for i in range(n)) for r in range(n)]
    return rots + [tuple((r - i) % n for i in range(n)) for r in range(n)]


def cuh_graph_check(g: Graph, copies, group: PermGroup | None = None, paths: bool = False) -> UHVerdict:
    """Does every isomorphism between two (induced) copies extend to an automorphism?

    Pairs include a copy with itself.  With ``group`` given, extension is a
    membership test against the full automorphism list; otherwise each map
    is handed to :func:`extend_partial`.  The first failure, in sorted pair
    order, is returned as ``(copy0, copy1, partial_map)``.
    """
    copies = sorted(tuple(c) for c in copies)
    for c in copies:
        induced = g.induced_edges(c)
        own = _subpath_edges(c) if paths else set(cycle_edges(c))
        if induced != own:
            raise ValueError(f"copy {tuple(c)} is not induced")
    images = None
    if group is not None:
        images = [{tuple(p[x] for x in c) for p in group} for c in copies]
    for a, c0 in enumerate(copies):
        for c1 in copies:
            for corr in _self_correspondences(len(c0), paths):
                target = tuple(c1[corr[i]] for i in range(len(c0)))
                if images is not None:
                    ok = target in images[a]
                else:
                    ok = extend_partial(g, dict(zip(c0, target))) is not None
                if not ok:
                    return UHVerdict(False, (tuple(c0), tuple(c1), dict(zip(c0, target))))
    return UHVerdict(True)


def arc_incidence(g: Graph, ooa: OrientedCycleSet, k: int) -> Counter:
    """How often each (k-1)-arc of ``g`` occurs along the oriented cycles."""
    seen: Counter = Counter()
    for c in ooa.cycles:
        for w in cycle_subwalks(c, k):
            seen[w] += 1
    for a in enumerate_s_arcs(g, k - 1):
        seen.setdefault(a, 0)
    return seen


def cuh_digraph_check(g: Graph, ooa: OrientedCycleSet, k: int) -> UHVerdict:
    """Tight fastening of oriented cycles along (k-1)-arcs.

    (1) every (k-1)-arc of ``g`` lies on exactly one oriented cycle;
    (2) for each oriented cycle H0 and each (k-1)-arc M0 on it there is
    exactly one other oriented cycle H1 running M0 backwards with
    V(H0) & V(H1) = V(M0), and the arcs of H0 whose reverses lie on H1 are
    exactly the arcs of M0.
    """
    for c in ooa.cycles:
        if not is_cycle_in(g, c):
            raise ValueError(f"{c} is not a cycle of the graph")
    if len(set(ooa.undirected())) != len(ooa):
        raise ValueError("oriented cycles repeat an underlying cycle")
    arcs = set(enumerate_s_arcs(g, k - 1))
    incidence = arc_incidence(g, ooa, k)
    for a in sorted(incidence):
        if a not in arcs:
            raise ValueError(f"{a} is not a {k - 1}-arc of the graph")
        if incidence[a] != 1:
            return UHVerdict(False, ("arc multiplicity", a, incidence[a]))
    arcsets = [set(cycle_arcs(c)) for c in ooa.cycles]
    vsets = [set(c) for c in ooa.cycles]
    for i, c in enumerate(ooa.cycles):
        for w in cycle_subwalks(c, k):
            rev = w[::-1]
            m_arcs = set(zip(w, w[1:]))
            partners = []
            for j, d in enumerate(ooa.cycles):
                if j == i or rev not in cycle_subwalks(d, k):
                    continue
                reversed_arcs = {(y, x) for x, y in arcsets[j]}
                if vsets[i] & vsets[j] == set(w) and arcsets[i] & reversed_arcs == m_arcs:
                    partners.append(j)
            if len(partners) != 1:
                return UHVerdict(False, ("partner count", i, w, len(partners)))
    return UHVerdict(True)
