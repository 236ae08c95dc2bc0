"""Maximum subgraph under per-vertex degree caps via a matching gadget.

For each edge ``e = xy`` the gadget has two vertices ``e_x, e_y`` joined by
an edge, and each vertex ``x`` gets ``d(x) - f(x)`` slack vertices adjacent to
every ``e_x`` with ``x`` in ``e``. A maximum matching of the gadget has size
``m + sum(d(x) - f(x))`` where ``m`` is the optimum; the edges ``e`` with
``e_x e_y`` matched form an optimal subgraph once every slack vertex is
covered.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .graph import Graph
from .matching import mate_array, max_matching

Budget = int | Sequence[int] | Mapping[int, int]


class IdentityViolation(AssertionError):
    """The gadget identity failed; indicates a bug, never bad input."""


def normalize_budget(g: Graph, f: Budget) -> list[int]:
    """Dense budget clamped to ``0..d(v)``. Unlisted mapping keys mean no cap."""
    deg = g.degrees()
    if isinstance(f, int):
        raw = [f] * g.n
    elif isinstance(f, Mapping):
        raw = [f.get(v, deg[v]) for v in range(g.n)]
    else:
        raw = list(f)
        if len(raw) != g.n:
            raise ValueError(f"budget has {len(raw)} entries for {g.n} vertices")
    if any(x < 0 for x in raw):
        raise ValueError("degree budgets must be nonnegative")
    return [min(x, d) for x, d in zip(raw, deg)]


@dataclass(frozen=True)
class GadgetMap:
    edges: tuple[tuple[int, int], ...]        # edges of G, index j
    ends: tuple[tuple[int, int], ...]          # (e_x, e_y) for edge j = (x, y)
    slack: tuple[tuple[int, ...], ...]         # slack vertices of each vertex x

    def owner(self, gadget_vertex: int) -> tuple[str, int, int]:
        """``('edge', j, x)`` for e_x of edge j, ``('slack', x, i)`` for x_i."""
        if gadget_vertex < 2 * len(self.edges):
            j, side = divmod(gadget_vertex, 2)
            return "edge", j, self.edges[j][side]
        for x, vs in enumerate(self.slack):
            if gadget_vertex in vs:
                return "slack", x, vs.index(gadget_vertex)
        raise KeyError(gadget_vertex)


def build_gadget(g: Graph, f: Sequence[int]) -> tuple[Graph, GadgetMap]:
    deg = g.degrees()
    if len(f) != g.n or any(not 0 <= f[v] <= deg[v] for v in range(g.n)):
        raise ValueError("budget must be normalized (0 <= f(v) <= d(v)) before building the gadget")
    edges = g.edges()
    ends = tuple((2 * j, 2 * j + 1) for j in range(len(edges)))
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for j, (x, y) in enumerate(edges):
        incident[x].append(2 * j)
        incident[y].append(2 * j + 1)
    nxt = 2 * len(edges)
    slack = []
    gadget_edges = list(ends)
    for x in range(g.n):
        vs = tuple(range(nxt, nxt + deg[x] - f[x]))
        nxt += len(vs)
        slack.append(vs)
        for s in vs:
            gadget_edges.extend((ex, s) for ex in incident[x])
    return Graph.from_edges(nxt, gadget_edges), GadgetMap(edges, ends, tuple(slack))


@dataclass(frozen=True)
class FactorResult:
    m: int
    edges: tuple[tuple[int, int], ...]
    budget: tuple[int, ...]
    matching_size: int
    total_slack: int

    def subgraph(self, g: Graph) -> Graph:
        return g.edge_subgraph(self.edges)


def max_degree_constrained_subgraph(g: Graph, f: Budget) -> FactorResult:
    """Largest spanning subgraph ``F`` with ``d_F(v) <= f(v)`` for all ``v``."""
    budget = normalize_budget(g, f)
    gadget, gmap = build_gadget(g, budget)
    matching = max_matching(gadget)
    mate = mate_array(gadget.n, matching)
    # Cover every slack vertex: swap e_x e_y for e_x x_i, scanning edges in index order.
    for x, vs in enumerate(gmap.slack):
        if not vs:
            continue
        sides = [ends[0] if gmap.edges[j][0] == x else ends[1] for j, ends in enumerate(gmap.ends)
                 if x in gmap.edges[j]]
        for s in vs:
            if mate[s] != -1:
                continue
            for ex in sides:
                ey = ex ^ 1
                if mate[ex] == ey:
                    mate[ey] = -1
                    mate[ex], mate[s] = s, ex
                    break
            else:
                raise IdentityViolation(f"slack vertex {s} of {x} cannot be covered")
    chosen = tuple(e for j, e in enumerate(gmap.edges) if mate[2 * j] == 2 * j + 1)
    total_slack = sum(len(vs) for vs in gmap.slack)
    nu = len(matching)
    if len(chosen) != nu - total_slack:
        raise IdentityViolation(
            f"matching size {nu} != {len(chosen)} + {total_slack}"
        )
    dF = [0] * g.n
    for u, v in chosen:
        dF[u] += 1
        dF[v] += 1
    if any(dF[v] > budget[v] for v in range(g.n)):
        raise IdentityViolation("recovered subgraph exceeds a degree budget")
    return FactorResult(len(chosen), chosen, tuple(budget), nu, total_slack)
