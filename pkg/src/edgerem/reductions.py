"""Hardness-reduction constructions and the polynomial decision procedures.

Constructors are pure. Every instance carries the identity it is supposed to
satisfy; ``validate`` evaluates both sides with the exact oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .canon import canonical_form
from .graph import Graph, copies, disjoint_union, iter_bits
from .oracle import ex_exact, rem_exact
from .structure import TreeSpec, classify_tree, complement_components


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class ReductionInstance:
    source: Graph
    built: Graph
    kind: str                     # "pendant" | "pad" | "union"
    params: dict = field(default_factory=dict)

    def validate(self, node_limit: int | None = None) -> dict:
        if self.kind == "pendant":
            core, tree = self.params["core"], self.params["tree"]
            lhs = rem_exact(self.source, core, node_limit=node_limit).rem
            rhs = rem_exact(self.built, tree, node_limit=node_limit).rem
            return {"claim": "rem_core(G) == rem_tree(G')", "lhs": lhs, "rhs": rhs,
                    "holds": lhs == rhs}
        if self.kind == "pad":
            pattern, dominant = self.params["pattern"], self.params["dominant"]
            lhs = ex_exact(self.built, pattern, node_limit=node_limit)
            rhs = (self.built.m - self.source.m
                   + ex_exact(self.source, dominant, node_limit=node_limit))
            return {"claim": "ex(G',H) == e(G') - e(G) + ex(G, k T1)", "lhs": lhs,
                    "rhs": rhs, "holds": lhs == rhs}
        raise ReductionError(f"no identity attached to kind {self.kind!r}")


def _as_tree(t: Graph | TreeSpec) -> TreeSpec:
    return t if isinstance(t, TreeSpec) else classify_tree(t)


def strip_leaves(t: Graph | TreeSpec) -> TreeSpec:
    """The tree left after deleting every leaf."""
    spec = _as_tree(t)
    tree = spec.tree
    if tree.n <= 2:
        raise ReductionError("leaf stripping needs a tree with at least 3 vertices")
    inner = [v for v in range(tree.n) if tree.degree(v) >= 2]
    return classify_tree(tree.induced(inner))


def pendant_expand(g: Graph, t: Graph | TreeSpec) -> ReductionInstance:
    """Attach ``C(n, 2) + v(T)`` private leaves to every vertex of ``g``.

    Original vertices keep labels ``0..n-1``; the leaves of ``v`` follow in a
    contiguous block.
    """
    spec = _as_tree(t)
    if spec.diameter < 5:
        raise ReductionError(
            f"tree has diameter {spec.diameter}; the leaf reduction needs diameter >= 5"
        )
    core = strip_leaves(spec)
    if core.diameter < 3:
        raise ReductionError(f"stripped tree has diameter {core.diameter} < 3")
    n = g.n
    per_vertex = comb(n, 2) + spec.k
    edges = list(g.edges())
    nxt = n
    for v in range(n):
        edges.extend((v, nxt + i) for i in range(per_vertex))
        nxt += per_vertex
    built = Graph.from_edges(nxt, edges)
    return ReductionInstance(g, built, "pendant", {
        "tree": spec.tree, "core": core.tree, "leaves_per_vertex": per_vertex,
    })


def has_clique_factor(g: Graph, q: int) -> bool:
    """Whether V(g) splits into disjoint q-cliques (exact backtracking)."""
    if q <= 0 or g.n % q:
        raise ValueError(f"q={q} must be positive and divide n={g.n}")
    full = (1 << g.n) - 1

    def cover(left: int) -> bool:
        if not left:
            return True
        v = (left & -left).bit_length() - 1
        cand = g.adj[v] & left
        for rest in combinations(iter_bits(cand), q - 1):
            if all(g.adj[a] >> b & 1 for a, b in combinations(rest, 2)):
                used = 1 << v
                for w in rest:
                    used |= 1 << w
                if cover(left & ~used):
                    return True
        return False

    return cover(full)


def verify_union_identity(g: Graph, c: Graph, k: int, node_limit: int | None = None) -> dict:
    """Check ex(kG, kC) == ex((k-1)G, kC) + ex(G, C) with the exact oracle."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if not c.is_connected():
        raise ValueError("C must be connected")
    kc = copies(c, k)
    lhs = ex_exact(copies(g, k), kc, node_limit)
    first = ex_exact(copies(g, k - 1), kc, node_limit)
    second = ex_exact(g, c, node_limit)
    return {"lhs": lhs, "rhs": first + second, "ex_(k-1)G_kC": first, "ex_G_C": second,
            "holds": lhs == first + second}


def disjoint_pad(g: Graph, h: Graph) -> ReductionInstance:
    """Pad ``g`` with ``n^2`` copies of each non-dominant component of ``h``.

    The dominant component ``T1`` is a non-star tree with the most edges
    (ties broken by the smallest canonical form); the components isomorphic to
    it are kept, ``k`` of them, and all others are padded.
    """
    comps = [h.induced(c) for c in h.components()]
    if any(c.m != c.n - 1 for c in comps):
        raise ReductionError("pattern must be a forest")
    specs = [classify_tree(c) for c in comps]
    non_stars = [c for c, s in zip(comps, specs) if not s.is_star]
    if not non_stars:
        raise ReductionError("pattern is a star forest; there is nothing to reduce")
    dominant = min(non_stars, key=lambda c: (-c.m, canonical_form(c)))
    dkey = canonical_form(dominant)
    kept = [c for c in comps if canonical_form(c) == dkey]
    padding = [c for c in comps if canonical_form(c) != dkey]
    n = g.n
    built = disjoint_union(g, *(copies(c, n * n) for c in padding))
    return ReductionInstance(g, built, "pad", {
        "pattern": h, "dominant": copies(dominant, len(kept)), "k": len(kept),
        "T1": dominant, "padding": padding, "copies_each": n * n,
    })


def contains_balanced_biclique(g: Graph) -> bool:
    """Whether ``g`` contains K_{floor(n/2), ceil(n/2)} as a subgraph.

    Each side of such a biclique is a union of complement components, so this
    is subset-sum over the component sizes (bitset DP).
    """
    reachable = 1
    for a in complement_components(g):
        reachable |= reachable << a
    return bool(reachable >> (g.n // 2) & 1)
