"""Maximum cardinality matching in general graphs (Edmonds' blossom method)."""

from __future__ import annotations

from collections import deque

from .graph import Graph, iter_bits


def _greedy(g: Graph, mate: list[int]) -> None:
    for v in range(g.n):
        if mate[v] == -1:
            for u in iter_bits(g.adj[v]):
                if mate[u] == -1:
                    mate[v], mate[u] = u, v
                    break


def _augment_from(g: Graph, root: int, mate: list[int]) -> bool:
    n = g.n
    parent = [-1] * n
    base = list(range(n))
    in_tree = [False] * n
    in_tree[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in iter_bits(g.adj[v]):
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                b = lca(v, to)
                blossom = [False] * n
                mark(v, b, to, blossom)
                mark(to, b, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = b
                        if not in_tree[i]:
                            in_tree[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    # flip the alternating path ending at the free vertex ``to``
                    while to != -1:
                        pv = parent[to]
                        nxt = mate[pv]
                        mate[to], mate[pv] = pv, to
                        to = nxt
                    return True
                in_tree[mate[to]] = True
                queue.append(mate[to])
    return False


def max_matching(g: Graph) -> list[tuple[int, int]]:
    """A maximum matching of ``g`` as sorted ``(u, v)`` pairs with ``u < v``.

    Free vertices are processed lowest index first, so the result is
    deterministic for a given graph.
    """
    mate = [-1] * g.n
    _greedy(g, mate)
    for v in range(g.n):
        if mate[v] == -1:
            _augment_from(g, v, mate)
    return [(v, mate[v]) for v in range(g.n) if v < mate[v]]


def matching_number(g: Graph) -> int:
    return len(max_matching(g))


def is_matching(g: Graph, edges: list[tuple[int, int]]) -> bool:
    covered = 0
    for u, v in edges:
        if not g.has_edge(u, v):
            return False
        bits = 1 << u | 1 << v
        if covered & bits:
            return False
        covered |= bits
    return True


def mate_array(n: int, edges: list[tuple[int, int]]) -> list[int]:
    mate = [-1] * n
    for u, v in edges:
        mate[u], mate[v] = v, u
    return mate
