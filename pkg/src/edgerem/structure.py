"""Structural classification: trees, star forests, complement components."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, disjoint_union, iter_bits, star


class NotATree(ValueError):
    pass


class NotStarForest(ValueError):
    def __init__(self, component: list[int]):
        super().__init__(f"component {component} is not a star")
        self.component = component


@dataclass(frozen=True)
class TreeSpec:
    """A tree together with its centre decomposition.

    For trees of diameter at most 4 the decomposition is filled in: ``center``
    is within distance 2 of every vertex, ``branches`` are its neighbours and
    ``leaf_sets[i]`` the other neighbours of ``branches[i]``. Branches are
    ordered so that ``gammas`` (the leaf-set sizes) is nondecreasing.
    Larger trees leave the decomposition empty.
    """

    tree: Graph
    diameter: int
    is_star: bool
    center: int | None = None
    branches: tuple[int, ...] = ()
    leaf_sets: tuple[tuple[int, ...], ...] = ()
    gammas: tuple[int, ...] = field(default=())

    @property
    def k(self) -> int:
        return self.tree.n

    @property
    def p(self) -> int:
        return len(self.branches)


def _farthest(g: Graph, s: int) -> tuple[int, list[int]]:
    dist = g.distances_from(s)
    far = max(range(g.n), key=lambda v: (dist[v], -v))
    return far, dist


def classify_tree(t: Graph) -> TreeSpec:
    if t.n == 0 or t.m != t.n - 1 or not t.is_connected():
        raise NotATree("graph is not a tree")
    if t.n == 1:
        return TreeSpec(t, 0, True, 0)
    x, _ = _farthest(t, 0)
    _, dist = _farthest(t, x)
    diameter = max(dist)
    if diameter > 4:
        return TreeSpec(t, diameter, False)
    deg = t.degrees()
    if diameter <= 2:
        center = max(range(t.n), key=lambda v: (deg[v], -v))
    else:
        # any vertex with eccentricity 2; for diameter 3 both middle vertices qualify
        ecc2 = [v for v in range(t.n) if max(t.distances_from(v)) <= 2]
        center = max(ecc2, key=lambda v: (deg[v], -v))
    parts = []
    for b in iter_bits(t.adj[center]):
        leaves = tuple(iter_bits(t.adj[b] & ~(1 << center)))
        parts.append((len(leaves), b, leaves))
    parts.sort()
    return TreeSpec(
        tree=t,
        diameter=diameter,
        is_star=diameter <= 2,
        center=center,
        branches=tuple(b for _, b, _ in parts),
        leaf_sets=tuple(ls for _, _, ls in parts),
        gammas=tuple(g for g, _, _ in parts),
    )


@dataclass(frozen=True)
class StarForestSpec:
    """Star forest as its nonincreasing leaf counts ``t_1 >= ... >= t_r``.

    ``isolated`` records how many isolated vertices were stripped from the
    original pattern, so callers can tell when the stripped form is not
    equivalent (host graphs with fewer than ``v(H)`` vertices).
    """

    leaf_counts: tuple[int, ...]
    isolated: int = 0

    def __post_init__(self):
        t = self.leaf_counts
        if any(x < 1 for x in t) or list(t) != sorted(t, reverse=True):
            raise ValueError(f"leaf counts must be positive and nonincreasing: {t}")

    @classmethod
    def of(cls, *leaf_counts: int, isolated: int = 0) -> StarForestSpec:
        return cls(tuple(sorted(leaf_counts, reverse=True)), isolated)

    @property
    def r(self) -> int:
        return len(self.leaf_counts)

    @property
    def order(self) -> int:
        """v(H) after stripping isolated vertices."""
        return self.r + sum(self.leaf_counts)

    @property
    def full_order(self) -> int:
        return self.order + self.isolated

    def prefix(self, i: int) -> Graph:
        """H_i: the first ``i`` stars (H_0 is the empty graph)."""
        return disjoint_union(Graph.empty(0), *(star(t) for t in self.leaf_counts[:i]))

    def graph(self) -> Graph:
        return self.prefix(self.r)

    def without_first(self) -> StarForestSpec:
        return StarForestSpec(self.leaf_counts[1:])


def decompose_star_forest(h: Graph) -> StarForestSpec:
    counts = []
    isolated = 0
    for comp in h.components():
        size = len(comp)
        if size == 1:
            isolated += 1
            continue
        edges = sum(h.degree(v) for v in comp) // 2
        if edges != size - 1 or max(h.degree(v) for v in comp) != size - 1:
            raise NotStarForest(comp)
        counts.append(size - 1)
    return StarForestSpec(tuple(sorted(counts, reverse=True)), isolated)


def is_star_forest(h: Graph) -> bool:
    try:
        decompose_star_forest(h)
    except NotStarForest:
        return False
    return True


def complement_components(g: Graph) -> tuple[int, ...]:
    """Sizes of the connected components of the complement, largest first."""
    return tuple(sorted((len(c) for c in g.complement().components()), reverse=True))
