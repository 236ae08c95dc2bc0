import random

import pytest

from brute import double_star, ex_brute, star_forest_patterns
from edgerem.graph import Graph, complete, copies, cycle, disjoint_union, path, star, star_forest
from edgerem.oracle import ex_exact, rem_exact
from edgerem.structure import StarForestSpec
from edgerem.starforest import (
    Candidate,
    EnumerationLimitExceeded,
    ex_bounded_degree,
    ex_star_forest,
    threshold_D,
)
from edgerem.subgraph import contains_subgraph

TWO_K2 = star_forest(1, 1)
CHERRY = star(2)


def assert_valid(g: Graph, h: Graph, res) -> None:
    assert res.witness.m == res.ex
    assert all(g.has_edge(u, v) for u, v in res.witness.edges())
    assert contains_subgraph(res.witness, h) is None


@pytest.mark.parametrize("counts,D", [((1, 1), 51), ((2,), 20), ((1,), 5), ((2, 1), 104)])
def test_threshold(counts, D):
    assert threshold_D(StarForestSpec.of(*counts)) == D


@pytest.mark.parametrize("g,h,C,value", [
    (cycle(5), CHERRY, 2, 2),
    (cycle(5), TWO_K2, 2, 2),
    (complete(3), TWO_K2, 2, 3),
    (path(4), TWO_K2, 2, 2),
])
def test_bounded_degree_examples(g, h, C, value):
    res = ex_bounded_degree(g, h, C)
    assert res.ex == value
    assert_valid(g, h, res)


@pytest.mark.parametrize("h,value", [(TWO_K2, 3), (CHERRY, 2), (star(3), 4)])
def test_k4_examples(h, value):
    res = ex_star_forest(complete(4), h)
    assert res.ex == value
    assert_valid(complete(4), h, res)


def test_bounded_degree_rejects_large_degree():
    with pytest.raises(ValueError):
        ex_bounded_degree(star(3), TWO_K2, 2)


def test_enumeration_guard():
    with pytest.raises(EnumerationLimitExceeded):
        ex_star_forest(star(30), TWO_K2)


def test_single_star_is_degree_cap():
    g = star(30)
    res = ex_star_forest(g, star(4))
    assert res.ex == 3
    assert res.trace == ["single star t=4: degree cap 3"]


def test_candidates_are_sound():
    g, h = cycle(5), TWO_K2
    record: list[Candidate] = []
    res = ex_bounded_degree(g, h, 2, record=record)
    assert record
    assert max(c.value for c in record) == res.ex
    for c in record:
        assert contains_subgraph(g.edge_subgraph(c.kept), h) is None
        assert c.value <= res.ex


def test_agrees_with_exact_oracle_small(small_graphs):
    patterns = [(c, 0) for c, iso in star_forest_patterns(5) if iso == 0]
    for counts, _ in patterns:
        h = star_forest(*counts)
        for g in small_graphs:
            if g.n > 5:
                continue
            res = ex_star_forest(g, h)
            assert res.ex == ex_brute(g, h), (g, counts)
            assert_valid(g, h, res)


def test_random_seven_vertex_hosts():
    rng = random.Random(31)
    for _ in range(25):
        g = Graph.from_edges(7, [(u, v) for u in range(7) for v in range(u + 1, 7)
                                 if rng.random() < 0.35])
        counts = rng.choice([(1, 1), (2,), (2, 1), (3,)])
        h = star_forest(*counts)
        res = ex_star_forest(g, h)
        assert res.ex == ex_exact(g, h)
        assert_valid(g, h, res)


def test_isolated_pattern_vertices():
    # K2 plus two isolated vertices cannot fit in a 3-vertex host
    assert ex_star_forest(complete(3), star_forest(1, isolated=2)).ex == 3
    assert ex_star_forest(complete(4), star_forest(1, isolated=2)).ex == 0


def test_scaled_two_stars():
    g = copies(star(4), 2)
    res = ex_star_forest(g, TWO_K2)
    assert res.ex == 4 == ex_exact(g, TWO_K2)
    assert_valid(g, TWO_K2, res)


@pytest.mark.parametrize("g,h,value,branch", [
    (disjoint_union(star(51), path(2)), TWO_K2, 51, "M=M2"),
    (double_star(51, 3), TWO_K2, 52, "M=M2"),
    (star(60), TWO_K2, 60, "M=M2"),
])
def test_high_degree_branch(g, h, value, branch):
    res = ex_star_forest(g, h)
    assert branch in res.trace[0]
    assert "Delta=" in res.trace[0] and ">= D=" in res.trace[0]
    assert res.ex == value
    assert_valid(g, h, res)
    assert g.m - rem_exact(g, h, budget=4).rem == value


def test_high_degree_prefers_degree_cap():
    # a perfect matching beats any single star once the matching is large
    g = disjoint_union(star(51), copies(path(2), 60))
    res = ex_star_forest(g, CHERRY)
    assert res.ex == 61
    g = disjoint_union(star(104), copies(path(2), 105))
    res = ex_star_forest(g, star_forest(2, 1))
    assert "M=M1" in res.trace[0]
    assert res.ex == 106
    assert_valid(g, star_forest(2, 1), res)


@pytest.mark.slow
def test_second_level_recursion():
    g = disjoint_union(star(185), star(185), path(2))
    res = ex_star_forest(g, star_forest(1, 1, 1))
    assert res.ex == 370
    assert len(res.trace) >= 2
    assert "M=M2" in res.trace[0] and "M=M2" in res.trace[1]
