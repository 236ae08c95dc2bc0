"""Brute-force reference implementations used only by the tests.

Nothing here touches the search code under test: containment is by trying
every injection, optima by enumerating every edge subset.
"""

from itertools import combinations, permutations

import networkx as nx

from edgerem.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


def atlas(max_n: int = 7, min_n: int = 1) -> list[Graph]:
    """All graphs up to isomorphism with min_n..max_n vertices (networkx atlas)."""
    return [from_nx(h) for h in nx.graph_atlas_g() if min_n <= h.number_of_nodes() <= max_n]


def edge_sets(g: Graph):
    """(u, v) edge tuples as python sets, for membership tests."""
    return {frozenset(e) for e in g.edges()}


def contains_brute(g_edges: set, gn: int, h: Graph) -> bool:
    hedges = h.edges()
    for image in permutations(range(gn), h.n):
        if all(frozenset((image[u], image[v])) in g_edges for u, v in hedges):
            return True
    return False


def ex_brute(g: Graph, h: Graph) -> int:
    """Largest H-free edge subset, trying subsets from largest down."""
    edges = g.edges()
    for size in range(len(edges), -1, -1):
        for keep in combinations(edges, size):
            if not contains_brute({frozenset(e) for e in keep}, g.n, h):
                return size
    raise AssertionError("unreachable")


def max_matching_brute(g: Graph) -> int:
    def best(free: int) -> int:
        if not free:
            return 0
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        out = best(rest)
        nb = g.adj[v] & rest
        while nb:
            low = nb & -nb
            out = max(out, 1 + best(rest & ~low))
            nb ^= low
        return out

    return best((1 << g.n) - 1)


def degree_capped_table(g: Graph) -> dict[tuple[int, ...], int]:
    """Map each degree vector realised by an edge subset to its max edge count."""
    edges = g.edges()
    table: dict[tuple[int, ...], int] = {}

    def walk(j: int, deg: list[int], count: int) -> None:
        if j == len(edges):
            key = tuple(deg)
            if table.get(key, -1) < count:
                table[key] = count
            return
        walk(j + 1, deg, count)
        u, v = edges[j]
        deg[u] += 1
        deg[v] += 1
        walk(j + 1, deg, count + 1)
        deg[u] -= 1
        deg[v] -= 1

    walk(0, [0] * g.n, 0)
    return table


def degree_capped_brute(table: dict, f: list[int]) -> int:
    return max(c for deg, c in table.items() if all(d <= b for d, b in zip(deg, f)))


def balanced_biclique_brute(g: Graph) -> bool:
    n = g.n
    for side in combinations(range(n), n // 2):
        a = set(side)
        if all(g.has_edge(u, v) for u in a for v in range(n) if v not in a):
            return True
    return False


def double_star(a: int, b: int) -> Graph:
    """Adjacent centres 0 and 1 with ``a`` and ``b`` private leaves."""
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return Graph.from_edges(2 + a + b, edges)


def star_forest_patterns(max_order: int) -> list[tuple[tuple[int, ...], int]]:
    """(leaf counts, isolated) for every star forest with an edge and <= max_order vertices."""
    out = []

    def parts(left: int, top: int, acc: tuple[int, ...]):
        if acc:
            used = sum(t + 1 for t in acc)
            for iso in range(max_order - used + 1):
                out.append((acc, iso))
        for t in range(min(top, left - 1), 0, -1):
            parts(left - t - 1, t, acc + (t,))

    parts(max_order, max_order, ())
    return out
