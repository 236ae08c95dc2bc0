"""Canonical labelling by partition refinement and individualisation.

The search explores one branch per twin class at each level: swapping two
vertices with the same neighbourhood (apart from each other) is an
automorphism fixing the current partition, so their subtrees yield the same
best code. That keeps empty graphs, cliques and clique unions linear.
"""

from __future__ import annotations

from .graph import Graph, iter_bits


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Splitting is by neighbour counts into every cell, and the split order
    depends only on those counts, so the result is label-invariant.
    """
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((g.adj[v] & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) > 1:
                changed = True
                for key in sorted(groups):
                    out.append(groups[key])
            else:
                out.append(cell)
        cells = out
        if not changed:
            return cells


def _code(g: Graph, order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    return tuple(sum(1 << pos[u] for u in iter_bits(g.adj[v])) for v in order)


def canonical_order(g: Graph) -> list[int]:
    """Vertex order under which the relabelled graph is canonical."""
    if g.n == 0:
        return []
    deg = g.degrees()
    by_deg: dict[int, list[int]] = {}
    for v in range(g.n):
        by_deg.setdefault(deg[v], []).append(v)
    start = _refine(g, [by_deg[d] for d in sorted(by_deg)])
    best: list[tuple[tuple[int, ...], list[int]]] = []

    def search(cells: list[list[int]]) -> None:
        target = None
        for i, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = i
        if target is None:
            order = [c[0] for c in cells]
            code = _code(g, order)
            if not best or code > best[0][0]:
                best[:] = [(code, order)]
            return
        cell = cells[target]
        reps: list[int] = []
        for v in cell:
            if not any(
                (g.adj[v] & ~(1 << w)) == (g.adj[w] & ~(1 << v)) for w in reps
            ):
                reps.append(v)
        for v in reps:
            rest = [w for w in cell if w != v]
            search(_refine(g, cells[:target] + [[v], rest] + cells[target + 1:]))

    search(start)
    return best[0][1]


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Hashable isomorphism invariant that determines ``g`` up to isomorphism."""
    return g.n, _code(g, canonical_order(g))


def canonical_graph(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_form(a) == canonical_form(b)
