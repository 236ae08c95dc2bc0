"""Polynomial-time ex(G, H) for star-forest patterns H.

``H`` has stars with leaf counts ``t_1 >= ... >= t_r``; ``H_i`` denotes the
first ``i`` stars. Three regimes:

* ``r == 1``: a subgraph is ``K_{1,t}``-free iff its maximum degree is below
  ``t``, so this is one degree-capped subgraph computation.
* ``Delta(G) < D(H)``: enumerate a small vertex set ``U`` (the vertices that
  may keep high degree) and the edges kept at ``U``; the remaining vertices
  are then filled in optimally by a degree-capped subgraph computation.
* ``Delta(G) >= D(H)``: some optimum either has maximum degree below ``t_1``
  or loses all copies of ``H - S_1`` once one vertex is removed, giving
  ``max(M1, M2)`` with a recursion on ``r - 1`` stars.

The bounded-degree enumeration is polynomial only in theory (the exponent
grows like ``v(H)^4``); an enumeration guard keeps it from running away.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .factor import max_degree_constrained_subgraph
from .graph import Graph, iter_bits
from .structure import StarForestSpec, decompose_star_forest
from .subgraph import contains_subgraph

DEFAULT_ENUMERATION_LIMIT = 2_000_000


class EnumerationLimitExceeded(RuntimeError):
    pass


@dataclass
class StarForestResult:
    ex: int
    witness: Graph
    trace: list[str] = field(default_factory=list)
    candidates: int = 0


@dataclass(frozen=True)
class Candidate:
    """One ``(U, F')`` pair that passed the H-free and degree tests."""

    U: tuple[int, ...]
    kept: tuple[tuple[int, int], ...]
    prefix_index: int
    value: int


def threshold_D(h: StarForestSpec) -> int:
    """Maximum-degree threshold above which the recursive branch is valid."""
    v = h.order
    d = v - 1
    return d * (d + 1) * v + d


def _as_spec(h: Graph | StarForestSpec) -> StarForestSpec:
    return h if isinstance(h, StarForestSpec) else decompose_star_forest(h)


def _max_degree_below(g: Graph, t: int) -> StarForestResult:
    if t == 1:
        return StarForestResult(0, Graph.empty(g.n))
    fr = max_degree_constrained_subgraph(g, t - 1)
    return StarForestResult(fr.m, fr.subgraph(g))


def ex_bounded_degree(
    g: Graph,
    h: Graph | StarForestSpec,
    C: int,
    enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT,
    record: list[Candidate] | None = None,
) -> StarForestResult:
    """Exact ex(G, H) for ``Delta(G) <= C`` by enumerating ``(U, F')``.

    ``U`` ranges over vertex sets of size at most ``(C + 1) v(H)`` and ``F'``
    over subgraphs whose edges all touch ``U``. Pairs with ``F'`` containing
    ``H``, or with an outside vertex of degree at least ``t_{i+1}`` (``i`` the
    largest index with ``H_i`` in ``F'``), are rejected; otherwise the value is
    ``e(F') + m`` where ``m`` is the best fill-in on ``G - U`` with caps
    ``t_{i+1} - 1 - d_{F'}(w)``.
    """
    spec = _as_spec(h)
    if g.max_degree() > C:
        raise ValueError(f"maximum degree {g.max_degree()} exceeds C={C}")
    if spec.r == 0:
        raise ValueError("pattern has no edges")
    t = spec.leaf_counts
    r = spec.r
    n = g.n
    prefixes = [spec.prefix(i) for i in range(r + 1)]
    pattern = prefixes[r]
    size_cap = min((C + 1) * spec.order, n)
    n_sets = sum(comb(n, s) for s in range(size_cap + 1))
    if n_sets > enumeration_limit:
        raise EnumerationLimitExceeded(
            f"{n_sets} vertex sets U exceed the enumeration limit {enumeration_limit}"
        )
    full = (1 << n) - 1
    edges = g.edges()
    outer_cap = t[0] - 1
    fill_cache: dict[tuple[int, tuple[int, ...]], tuple[int, tuple]] = {}
    best_value = -1
    best_edges: tuple = ()
    examined = 0

    for size in range(size_cap + 1):
        for U in combinations(range(n), size):
            umask = sum(1 << u for u in U)
            outside = full & ~umask
            touching = [e for e in edges if umask >> e[0] & 1 or umask >> e[1] & 1]
            inner = Graph._unchecked(n, tuple(row & outside if outside >> v & 1 else 0
                                             for v, row in enumerate(g.adj)))
            rows = [0] * n
            deg = [0] * n
            kept: list[tuple[int, int]] = []

            def evaluate() -> None:
                nonlocal best_value, best_edges, examined
                examined += 1
                if examined > enumeration_limit:
                    raise EnumerationLimitExceeded(
                        f"more than {enumeration_limit} candidate subgraphs"
                    )
                fp = Graph._unchecked(n, tuple(rows))
                i = 0
                while i + 1 < r and contains_subgraph(fp, prefixes[i + 1]) is not None:
                    i += 1
                cap = t[i] - 1
                if any(deg[w] > cap for w in iter_bits(outside)):
                    return
                budget = tuple(cap - deg[w] if outside >> w & 1 else 0 for w in range(n))
                key = (umask, budget)
                if key not in fill_cache:
                    fr = max_degree_constrained_subgraph(inner, list(budget))
                    fill_cache[key] = (fr.m, fr.edges)
                m, fill = fill_cache[key]
                value = len(kept) + m
                if record is not None:
                    record.append(Candidate(U, tuple(kept), i, value))
                if value > best_value:
                    best_value = value
                    best_edges = tuple(kept) + fill

            def grow(j: int) -> None:
                if j == len(touching):
                    evaluate()
                    return
                a, b = touching[j]
                # outside vertices can never exceed t_1 - 1, whatever i turns out to be
                if not ((outside >> a & 1 and deg[a] >= outer_cap)
                        or (outside >> b & 1 and deg[b] >= outer_cap)):
                    rows[a] |= 1 << b
                    rows[b] |= 1 << a
                    if contains_subgraph(Graph._unchecked(n, tuple(rows)), pattern) is None:
                        deg[a] += 1
                        deg[b] += 1
                        kept.append((a, b))
                        grow(j + 1)
                        kept.pop()
                        deg[a] -= 1
                        deg[b] -= 1
                    rows[a] ^= 1 << b
                    rows[b] ^= 1 << a
                grow(j + 1)

            grow(0)

    witness = g.edge_subgraph(best_edges)
    return StarForestResult(best_value, witness, [f"bounded-degree C={C}"], examined)


def ex_star_forest(
    g: Graph,
    h: Graph | StarForestSpec,
    enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> StarForestResult:
    """Exact ex(G, H) for a star forest ``H`` (given as a graph or a spec).

    Isolated vertices of ``H`` are dropped only when ``G`` has at least
    ``v(H)`` vertices; on smaller hosts ``H`` cannot fit and ex is ``e(G)``.
    """
    spec = _as_spec(h)
    if g.n < spec.full_order:
        return StarForestResult(g.m, g, [f"host smaller than pattern (n={g.n})"])
    if spec.r == 0:
        raise ValueError("an edgeless pattern that fits in G can never be destroyed")
    t = spec.leaf_counts
    if spec.r == 1:
        res = _max_degree_below(g, t[0])
        res.trace.append(f"single star t={t[0]}: degree cap {t[0] - 1}")
        return res
    D = threshold_D(spec)
    delta = g.max_degree()
    if delta < D:
        res = ex_bounded_degree(g, spec, max(delta, 0), enumeration_limit)
        res.trace[-1] = f"r={spec.r} Delta={delta} < D={D}: " + res.trace[-1]
        return res

    m1 = _max_degree_below(g, t[0])
    best = StarForestResult(m1.ex, m1.witness, [], m1.candidates)
    best_u = None
    rest = spec.without_first()
    sub_traces = []
    for u in range(g.n):
        sub = ex_star_forest(g.isolate(u), rest, enumeration_limit)
        value = g.degree(u) + sub.ex
        if value > best.ex:
            rows = list(sub.witness.adj)
            for w in iter_bits(g.adj[u]):
                rows[u] |= 1 << w
                rows[w] |= 1 << u
            best = StarForestResult(value, Graph(g.n, rows))
            best_u = u
            sub_traces = sub.trace
    head = f"r={spec.r} Delta={delta} >= D={D}: M1={m1.ex}, "
    if best_u is None:
        best.trace = [head + "M=M1"]
    else:
        best.trace = [head + f"M=M2={best.ex} at u={best_u}"] + sub_traces
    return best
