"""Undirected simple graphs on vertices 0..n-1 with bitset adjacency."""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph.

    ``adj[v]`` is an integer whose bit ``u`` is set iff ``uv`` is an edge.
    Edges are reported as ``(u, v)`` tuples with ``u < v``.
    """

    __slots__ = ("n", "adj", "_edges")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = adj
        self._edges: tuple[tuple[int, int], ...] | None = None

    @classmethod
    def _unchecked(cls, n: int, adj: tuple[int, ...]) -> Graph:
        """Skip validation; ``adj`` must already be a valid symmetric tuple."""
        g = cls.__new__(cls)
        g.n = n
        g.adj = adj
        g._edges = None
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if rows[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [0] * n)

    def edges(self) -> tuple[tuple[int, int], ...]:
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
            )
        return self._edges

    @property
    def m(self) -> int:
        return len(self.edges())

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    # -- derived graphs -------------------------------------------------

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = list(self.adj)
        for u, v in edges:
            if not rows[u] >> v & 1:
                raise ValueError(f"({u}, {v}) is not an edge")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def edge_subgraph(self, edges: Iterable[tuple[int, int]]) -> Graph:
        """Spanning subgraph keeping only ``edges`` (all must be edges of self)."""
        rows = [0] * self.n
        for u, v in edges:
            if not self.adj[u] >> v & 1:
                raise ValueError(f"({u}, {v}) is not an edge")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.n, rows)

    def isolate(self, v: int) -> Graph:
        """Drop every edge at ``v``; the vertex itself stays (as an isolated vertex)."""
        keep = ~(1 << v)
        rows = [row & keep for row in self.adj]
        rows[v] = 0
        return Graph(self.n, rows)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled to 0..len(vertices)-1 in the given order."""
        vs = list(vertices)
        index = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            rows.append(sum(1 << index[u] for u in iter_bits(self.adj[v]) if u in index))
        return Graph(len(vs), rows)

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            rows[perm[v]] = sum(1 << perm[u] for u in iter_bits(row))
        return Graph(self.n, rows)

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, [full & ~row & ~(1 << v) for v, row in enumerate(self.adj)])

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(iter_bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def distances_from(self, s: int) -> list[int]:
        """BFS distances from ``s``; -1 for unreachable vertices."""
        dist = [-1] * self.n
        dist[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for u in iter_bits(self.adj[v]):
                    if dist[u] < 0:
                        dist[u] = dist[v] + 1
                        nxt.append(u)
            frontier = nxt
        return dist


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, rows)


def copies(g: Graph, k: int) -> Graph:
    """``kG``: the disjoint union of ``k`` copies of ``g``."""
    return disjoint_union(*([g] * k))


# -- standard families ---------------------------------------------------

def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices (so ``path(4)`` is P4)."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(t: int) -> Graph:
    """K_{1,t} with centre 0."""
    return Graph.from_edges(t + 1, [(0, i) for i in range(1, t + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_forest(*leaf_counts: int, isolated: int = 0) -> Graph:
    return disjoint_union(*(star(t) for t in leaf_counts), Graph.empty(isolated))


def spider(*legs: int) -> Graph:
    """Centre 0 with one path of each given length hanging off it."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
