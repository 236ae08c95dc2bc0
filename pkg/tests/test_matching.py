import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brute import max_matching_brute, to_nx
from edgerem.graph import Graph, complete, complete_bipartite, cycle, path, petersen
from edgerem.matching import is_matching, matching_number, max_matching


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )


@pytest.mark.parametrize("g,size", [
    (cycle(4), 2),
    (complete(4), 2),
    (petersen(), 5),
    (path(5), 2),
    (cycle(5), 2),
    (complete_bipartite(2, 5), 2),
    (Graph.empty(3), 0),
])
def test_known_sizes(g, size):
    m = max_matching(g)
    assert is_matching(g, m)
    assert len(m) == size


def test_exhaustive_small(small_graphs):
    for g in small_graphs:
        m = max_matching(g)
        assert is_matching(g, m)
        assert len(m) == max_matching_brute(g)


def test_random_graphs_against_networkx():
    rng = random.Random(11)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 40), rng.random())
        ref = len(nx.max_weight_matching(to_nx(g), maxcardinality=True))
        m = max_matching(g)
        assert is_matching(g, m)
        assert len(m) == ref


@settings(max_examples=80)
@given(st.integers(1, 12), st.floats(0, 1), st.randoms(use_true_random=False))
def test_relabel_invariance(n, p, rnd):
    g = random_graph(random.Random(rnd.random()), n, p)
    perm = list(range(n))
    rnd.shuffle(perm)
    assert matching_number(g) == matching_number(g.relabel(perm))


def test_deterministic():
    g = petersen()
    assert max_matching(g) == max_matching(g)


def test_blossom_needed():
    # two triangles joined by a path: greedy choices must be repaired through odd cycles
    g = Graph.from_edges(8, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 5)])
    assert matching_number(g) == 4


def test_is_matching_rejects():
    g = path(3)
    assert not is_matching(g, [(0, 1), (1, 2)])
    assert not is_matching(g, [(0, 2)])
