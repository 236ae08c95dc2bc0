"""Isomorph-free exhaustive generation of small graphs and trees.

Graphs on ``n`` vertices are grown one vertex at a time from canonical
representatives on ``n - 1`` vertices; every child is reduced to canonical
form and duplicates are rejected. An optional hereditary filter (closed under
vertex deletion, such as being T-free) is applied at every level, which is
complete because every graph is reachable from each of its one-vertex-deleted
induced subgraphs.
"""

from __future__ import annotations

from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor

from .canon import canonical_form
from .graph import Graph

Filter = Callable[[Graph], bool]


def _add_vertex(g: Graph, nbrs: int) -> Graph:
    rows = [row | ((nbrs >> v & 1) << g.n) for v, row in enumerate(g.adj)]
    rows.append(nbrs)
    return Graph(g.n + 1, rows)


def _extend(parents: list[Graph], keep: Filter | None) -> dict[tuple, Graph]:
    found: dict[tuple, Graph] = {}
    for g in parents:
        for nbrs in range(1 << g.n):
            child = _add_vertex(g, nbrs)
            if keep is not None and not keep(child):
                continue
            key = canonical_form(child)
            if key not in found:
                found[key] = _from_key(key)
    return found


def _from_key(key: tuple) -> Graph:
    n, rows = key
    return Graph(n, rows)


def _extend_chunk(args):
    parents, keep = args
    return _extend(parents, keep)


def generate_graphs(n: int, keep: Filter | None = None, jobs: int = 1) -> list[Graph]:
    """All graphs on ``n`` vertices up to isomorphism passing ``keep``.

    Results are canonically labelled and sorted by canonical code. With
    ``jobs > 1`` the last level is sharded by parent graph across processes
    (``keep`` must then be picklable).
    """
    level = [Graph.empty(0)]
    for size in range(1, n + 1):
        if jobs > 1 and size == n and len(level) > 1:
            chunks = [level[i::jobs] for i in range(jobs)]
            found: dict[tuple, Graph] = {}
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for part in pool.map(_extend_chunk, [(c, keep) for c in chunks if c]):
                    found.update(part)
        else:
            found = _extend(level, keep)
        level = [found[k] for k in sorted(found)]
    return level


def count_graphs(n: int) -> int:
    return len(generate_graphs(n))


def generate_trees(k: int) -> list[Graph]:
    """All trees on ``k`` vertices up to isomorphism (by leaf addition)."""
    if k <= 0:
        return []
    level = [Graph.empty(1)]
    for _ in range(k - 1):
        found: dict[tuple, Graph] = {}
        for t in level:
            for v in range(t.n):
                key = canonical_form(_add_vertex(t, 1 << v))
                found.setdefault(key, _from_key(key))
        level = [found[key] for key in sorted(found)]
    return level
