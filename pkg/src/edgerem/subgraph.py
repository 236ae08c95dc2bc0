"""Subgraph containment (not necessarily induced) by bitset backtracking."""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, iter_bits


@lru_cache(maxsize=512)
def _plan(h: Graph) -> tuple[tuple[tuple[int, int, tuple[int, ...]], ...], tuple[int, ...]]:
    """Search order for the pattern.

    Returns ``(steps, isolated)``; each step is ``(h_vertex, degree, earlier)``
    where ``earlier`` lists positions of already-placed neighbours.
    """
    deg = h.degrees()
    remaining = [v for v in range(h.n) if deg[v] > 0]
    isolated = tuple(v for v in range(h.n) if deg[v] == 0)
    placed: list[int] = []
    pos_of: dict[int, int] = {}
    steps = []
    while remaining:
        # most already-placed neighbours first, then highest degree, then lowest label
        best = max(
            remaining,
            key=lambda v: (sum(1 for u in pos_of if h.adj[v] >> u & 1), deg[v], -v),
        )
        remaining.remove(best)
        earlier = tuple(pos_of[u] for u in iter_bits(h.adj[best]) if u in pos_of)
        pos_of[best] = len(placed)
        placed.append(best)
        steps.append((best, deg[best], earlier))
    return tuple(steps), isolated


def contains_subgraph(g: Graph, h: Graph) -> dict[int, int] | None:
    """Find an injective, edge-preserving map V(h) -> V(g).

    Returns the first such map in a fixed search order, or ``None`` when
    ``g`` is ``h``-free.
    """
    if h.n > g.n or h.m > g.m:
        return None
    steps, isolated = _plan(h)
    gdeg = g.degrees()
    if steps and max(s[1] for s in steps) > max(gdeg, default=0):
        return None
    at_least = [0] * (h.n + 1)
    for v, d in enumerate(gdeg):
        for k in range(min(d, h.n) + 1):
            at_least[k] |= 1 << v
    image = [0] * len(steps)
    adj = g.adj
    nsteps = len(steps)

    def extend(pos: int, used: int) -> bool:
        if pos == nsteps:
            return True
        _, d, earlier = steps[pos]
        cand = at_least[d] & ~used
        for j in earlier:
            cand &= adj[image[j]]
        while cand:
            low = cand & -cand
            image[pos] = low.bit_length() - 1
            if extend(pos + 1, used | low):
                return True
            cand ^= low
        return False

    if not extend(0, 0):
        return None
    mapping = {steps[i][0]: image[i] for i in range(nsteps)}
    free = iter_bits(((1 << g.n) - 1) & ~sum(1 << x for x in image))
    for v in isolated:
        mapping[v] = next(free)
    return mapping


def is_free(g: Graph, h: Graph) -> bool:
    return contains_subgraph(g, h) is None


def mapped_edges(h: Graph, mapping: dict[int, int]) -> list[tuple[int, int]]:
    """Edges of ``g`` used by a copy of ``h`` given by ``mapping``."""
    return sorted(
        (min(mapping[u], mapping[v]), max(mapping[u], mapping[v])) for u, v in h.edges()
    )
