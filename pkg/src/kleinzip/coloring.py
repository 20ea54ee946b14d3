"""Exact vertex coloring by DSATUR branch and bound."""

from __future__ import annotations

from .graph import Graph

MAX_ORDER = 64


def greedy_clique(g: Graph) -> list[int]:
    """A maximal clique grown greedily from each vertex; the largest is kept."""
    best: list[int] = []
    for s in range(g.order):
        clique = [s]
        cands = set(g.adj[s])
        while cands:
            v = max(sorted(cands), key=lambda x: len(g.adj[x] & cands))
            clique.append(v)
            cands &= g.adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def is_proper(g: Graph, colors) -> bool:
    return all(colors[u] != colors[v] for u, v in g.edges)


def k_coloring(g: Graph, k: int, seed: list[int] | None = None) -> list[int] | None:
    """A proper coloring with colors ``0..k-1``, or ``None`` after exhausting the search.

    ``seed`` vertices (a clique) are pre-colored ``0, 1, ...``; this only
    removes color-permutation symmetry.  New colors are opened one at a
    time, so each coloring is visited once up to renaming.
    """
    n = g.order
    color = [-1] * n
    # sat[v][c]: how many colored neighbours of v use color c
    sat = [[0] * k for _ in range(n)]
    nbrs = g.neighbors

    def assign(v, c, delta):
        for w in nbrs[v]:
            sat[w][c] += delta

    seed = seed or []
    if len(seed) > k:
        return None
    for c, v in enumerate(seed):
        color[v] = c
        assign(v, c, 1)
    used = len(seed)

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if color[v] >= 0:
                continue
            s = sum(1 for x in sat[v] if x)
            uncol = sum(1 for w in nbrs[v] if color[w] < 0)
            kv = (s, uncol, -v)
            if key is None or kv > key:
                best, key = v, kv
        return best

    def search(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        row = sat[v]
        for c in range(min(used + 1, k)):
            if row[c]:
                continue
            color[v] = c
            assign(v, c, 1)
            if search(done + 1, max(used, c + 1)):
                return True
            assign(v, c, -1)
            color[v] = -1
        return False

    return list(color) if search(len(seed), used) else None


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number: clique lower bound, then refute ``k`` colorings upward."""
    if g.order > MAX_ORDER:
        raise ValueError(f"exact coloring limited to {MAX_ORDER} vertices")
    if g.order == 0:
        return 0
    clique = greedy_clique(g)
    k = len(clique)
    while k_coloring(g, k, clique) is None:
        k += 1
    return k
