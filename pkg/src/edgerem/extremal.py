"""Strong Erdős–Sós checks on small graphs, the heavy-vertex bound and the index partition.

``verify_sesc`` decides, for one tree ``T`` on ``k`` vertices and one vertex
count ``n``, whether every T-free graph on ``n`` vertices with at least
``(k - 2) n / 2`` edges is a disjoint union of ``K_{k-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .formats import to_graph6
from .generate import generate_graphs, generate_trees
from .graph import Graph, iter_bits
from .structure import TreeSpec, classify_tree
from .subgraph import contains_subgraph

DEFAULT_MAX_N = 10


class EnumerationTooLarge(RuntimeError):
    pass


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class SescVerdict:
    tree: Graph
    n: int
    holds: bool
    counterexamples: tuple[str, ...]
    extremal: tuple[str, ...] = ()
    t_free_count: int = 0

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"


class TreeFree:
    """Picklable hereditary filter: graph contains no copy of ``tree``."""

    def __init__(self, tree: Graph):
        self.tree = tree

    def __call__(self, g: Graph) -> bool:
        return contains_subgraph(g, self.tree) is None


def is_clique_union(g: Graph, size: int) -> bool:
    """Every component is a clique on exactly ``size`` vertices."""
    for comp in g.components():
        if len(comp) != size:
            return False
        if any(g.degree(v) != size - 1 for v in comp):
            return False
    return True


def es_bound(t: Graph | TreeSpec, n: int) -> Fraction:
    k = t.k if isinstance(t, TreeSpec) else t.n
    return Fraction((k - 2) * n, 2)


def verify_sesc(
    t: Graph | TreeSpec,
    n: int,
    jobs: int = 1,
    max_n: int = DEFAULT_MAX_N,
) -> SescVerdict:
    spec = t if isinstance(t, TreeSpec) else classify_tree(t)
    if n > max_n:
        raise EnumerationTooLarge(f"n={n} is above the enumeration ceiling {max_n}")
    k = spec.k
    tree = spec.tree
    counter, extremal = [], []
    t_free = generate_graphs(n, TreeFree(tree), jobs=jobs)
    for g in t_free:
        if 2 * g.m < (k - 2) * n:
            continue
        if is_clique_union(g, k - 1):
            extremal.append(to_graph6(g))
        else:
            counter.append(to_graph6(g))
    return SescVerdict(tree, n, not counter, tuple(counter), tuple(extremal), len(t_free))


def candidate_trees(k: int, max_diameter: int | None = 4, non_star: bool = True) -> list[TreeSpec]:
    out = []
    for t in generate_trees(k):
        spec = classify_tree(t)
        if max_diameter is not None and spec.diameter > max_diameter:
            continue
        if non_star and spec.is_star:
            continue
        out.append(spec)
    return out


def heavy_vertex(g: Graph, t: Fraction | int) -> tuple[int, Fraction]:
    """Vertex ``u`` maximising ``sum over v in N(u) of 1 - t d(G) / d(v)``.

    Exact rational arithmetic; the maximum is at least ``(1 - t) d(G)``
    because the sums over all ``u`` average to that value.
    """
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise ValueError("t must lie in [0, 1]")
    deg = g.degrees()
    if g.n == 0 or min(deg) == 0:
        raise ValueError("graph must be nonempty with no isolated vertices")
    avg = Fraction(2 * g.m, g.n)
    best_u, best = -1, None
    for u in range(g.n):
        total = sum((1 - t * avg / deg[v] for v in iter_bits(g.adj[u])), Fraction(0))
        if best is None or total > best:
            best_u, best = u, total
    bound = (1 - t) * avg
    if best < bound:
        raise AssertionError(f"averaging bound violated: {best} < {bound}")
    return best_u, best


def check_partition_preconditions(gammas: list[int], s: list[int]) -> None:
    p, ell = len(gammas), len(s)
    if p < 1:
        raise PreconditionError("need p >= 1")
    if ell < 2:
        raise PreconditionError("need at least two parts (l >= 2)")
    if any(g < 0 for g in gammas) or list(gammas) != sorted(gammas):
        raise PreconditionError("gammas must be nonnegative and nondecreasing")
    top = gammas[-1]
    for i, si in enumerate(s):
        if si < top + 1:
            raise PreconditionError(f"s[{i}] = {si} < gamma_p + 1 = {top + 1}")
    second = gammas[-2] if p >= 2 else 0
    need = sum(1 + g for g in gammas) + (ell - 1) * second
    if sum(s) < need:
        raise PreconditionError(f"sum(s) = {sum(s)} < {need}")


def partition_indices(gammas: list[int], s: list[int]) -> list[list[int]]:
    """Split indices ``0..p-1`` into ``len(s)`` parts with ``s[i] >= sum(1 + gammas[j])``.

    Peels the shortest suffix that fits into the last part, then recurses on
    the remaining prefix and parts. Indices are 0-based.
    """
    check_partition_preconditions(gammas, s)
    parts: list[list[int]] = [[] for _ in s]
    hi = len(gammas)                 # indices hi.. are assigned
    for last in range(len(s) - 1, -1, -1):
        if hi == 0:
            break
        if last == 0:
            parts[0] = list(range(hi))
            hi = 0
            break
        q = hi
        load = 0
        while q > 0 and load + 1 + gammas[q - 1] <= s[last]:
            q -= 1
            load += 1 + gammas[q]
        parts[last] = list(range(q, hi))
        hi = q
    for i, part in enumerate(parts):
        if sum(1 + gammas[j] for j in part) > s[i]:
            raise AssertionError(f"part {i} overflows: {part}")
    return parts


def partition_feasible(gammas: list[int], s: list[int]) -> bool:
    """Brute force over all assignments of indices to parts."""
    for assign in product(range(len(s)), repeat=len(gammas)):
        load = [0] * len(s)
        for j, part in enumerate(assign):
            load[part] += 1 + gammas[j]
        if all(load[i] <= s[i] for i in range(len(s))):
            return True
    return False
