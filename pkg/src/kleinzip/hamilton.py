"""Exact Hamilton cycle search with connectivity and degree pruning."""

from __future__ import annotations

from .graph import Graph

DEFAULT_BUDGET = 10**9


class BudgetExceeded(RuntimeError):
    pass


def hamiltonian_cycle(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple[int, ...] | None:
    """A Hamilton cycle starting at vertex 0, or ``None`` if none exists.

    Raises :class:`BudgetExceeded` after ``budget`` search nodes instead of
    guessing.
    """
    n = g.order
    if n < 3:
        return None
    nbrs = g.neighbors
    if any(len(nb) < 2 for nb in nbrs):
        return None
    on_path = [False] * n
    path = [0]
    on_path[0] = True
    # free neighbours of each vertex (not on the path), maintained incrementally
    free_deg = [len(nb) for nb in nbrs]
    for w in nbrs[0]:
        free_deg[w] -= 1
    nodes = 0

    def remainder_ok(end: int) -> bool:
        # every off-path vertex needs two usable neighbours; off-path vertices
        # must be connected to each other and reachable from ``end``
        rest = [v for v in range(n) if not on_path[v]]
        if not rest:
            return True
        for v in rest:
            usable = free_deg[v] + (end in g.adj[v]) + (0 in g.adj[v])
            if usable < 2:
                return False
        seen = {rest[0]}
        stack = [rest[0]]
        while stack:
            u = stack.pop()
            for w in nbrs[u]:
                if not on_path[w] and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(rest):
            return False
        return any(not on_path[w] for w in nbrs[end]) and any(not on_path[w] for w in nbrs[0])

    def extend(u: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"Hamilton search exceeded {budget} nodes")
        if len(path) == n:
            return 0 in g.adj[u]
        for w in nbrs[u]:
            if on_path[w]:
                continue
            on_path[w] = True
            path.append(w)
            for x in nbrs[w]:
                free_deg[x] -= 1
            if remainder_ok(w) and extend(w):
                return True
            for x in nbrs[w]:
                free_deg[x] += 1
            path.pop()
            on_path[w] = False
        return False

    return tuple(path) if extend(0) else None


def is_hamiltonian(g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    return hamiltonian_cycle(g, budget) is not None


def is_hypohamiltonian(g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    """Not Hamiltonian, but every vertex-deleted subgraph is."""
    if is_hamiltonian(g, budget):
        return False
    return all(is_hamiltonian(g.delete_vertex(v), budget) for v in range(g.order))


def is_hamilton_cycle(g: Graph, cycle) -> bool:
    n = g.order
    return (
        len(cycle) == n
        and set(cycle) == set(range(n))
        and all(g.has_edge(cycle[i], cycle[(i + 1) % n]) for i in range(n))
    )
