"""Exact rem_H(G) and ex(G, H) for arbitrary patterns by bounded search tree.

The search finds a copy of H, branches on deleting each of its edges and is
run with increasing depth (iterative deepening), so the first success is an
optimal deletion set. Exponential; meant for small instances.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph
from .subgraph import contains_subgraph, mapped_edges

DEFAULT_NODE_LIMIT = 5_000_000
NODE_LIMIT_ENV = "EDGEREM_NODE_LIMIT"


def default_node_limit() -> int:
    return int(os.environ.get(NODE_LIMIT_ENV, DEFAULT_NODE_LIMIT))


class BudgetExceeded(Exception):
    """rem exceeds the caller's budget (so rem >= budget + 1)."""

    def __init__(self, budget: int):
        super().__init__(f"rem > {budget}")
        self.budget = budget
        self.lower_bound = budget + 1


class SearchLimitExceeded(RuntimeError):
    """Node ceiling hit; every depth below ``lower_bound`` was refuted."""

    def __init__(self, lower_bound: int, nodes: int):
        super().__init__(f"node limit reached after {nodes} nodes; rem >= {lower_bound}")
        self.lower_bound = lower_bound
        self.nodes = nodes


@dataclass(frozen=True)
class DeletionResult:
    rem: int
    ex: int
    deleted_edges: tuple[tuple[int, int], ...]
    witness: Graph
    nodes: int = 0


def _check_pattern(g: Graph, h: Graph) -> None:
    if h.m == 0 and h.n <= g.n:
        raise ValueError("an edgeless pattern that fits in G can never be destroyed")


def rem_exact(
    g: Graph,
    h: Graph,
    budget: int | None = None,
    node_limit: int | None = None,
) -> DeletionResult:
    _check_pattern(g, h)
    limit = default_node_limit() if node_limit is None else node_limit
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    nodes = 0
    failed: dict[int, int] = {}
    cap = g.m if budget is None else min(budget, g.m)

    def search(adj: list[int], removed: int, depth: int) -> int | None:
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise _Abort
        if failed.get(removed, -1) >= depth:
            return None
        copy = contains_subgraph(Graph._unchecked(g.n, tuple(adj)), h)
        if copy is None:
            return removed
        if depth == 0:
            return None
        for u, v in mapped_edges(h, copy):
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u
            found = search(adj, removed | 1 << index[(u, v)], depth - 1)
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u
            if found is not None:
                return found
        failed[removed] = depth
        return None

    for depth in range(cap + 1):
        try:
            removed = search(list(g.adj), 0, depth)
        except _Abort:
            raise SearchLimitExceeded(depth, nodes) from None
        if removed is not None:
            deleted = tuple(e for i, e in enumerate(edges) if removed >> i & 1)
            witness = g.remove_edges(deleted)
            return DeletionResult(len(deleted), g.m - len(deleted), deleted, witness, nodes)
    raise BudgetExceeded(cap)


class _Abort(Exception):
    pass


def ex_exact(g: Graph, h: Graph, node_limit: int | None = None) -> int:
    return rem_exact(g, h, node_limit=node_limit).ex


def rem_by_enumeration(g: Graph, h: Graph) -> int:
    """rem by trying deletion sets in order of size; independent of the search tree."""
    _check_pattern(g, h)
    edges = g.edges()
    for k in range(g.m + 1):
        for deleted in combinations(edges, k):
            if contains_subgraph(g.remove_edges(deleted), h) is None:
                return k
    raise AssertionError("unreachable: the empty graph is H-free")
