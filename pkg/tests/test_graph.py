import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brute import atlas, contains_brute, edge_sets, from_nx, to_nx
from edgerem.canon import canonical_form, is_isomorphic
from edgerem.formats import (
    GraphFormatError,
    from_edge_list,
    from_graph6,
    parse_graph,
    serialize_graph,
    to_graph6,
)
from edgerem.generate import generate_graphs, generate_trees
from edgerem.graph import (
    Graph,
    complete,
    complete_bipartite,
    copies,
    cycle,
    path,
    spider,
    star,
    star_forest,
)
from edgerem.structure import (
    NotATree,
    NotStarForest,
    StarForestSpec,
    classify_tree,
    complement_components,
    decompose_star_forest,
)
from edgerem.subgraph import contains_subgraph


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@given(graphs())
def test_adjacency_invariants(g):
    for v in range(g.n):
        assert not g.has_edge(v, v)
        for u in g.neighbors(v):
            assert g.has_edge(u, v)
    assert 2 * g.m == sum(g.degrees())


def test_constructor_rejects_bad_rows():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])
    with pytest.raises(ValueError):
        Graph(1, [0b1])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


# -- formats ---------------------------------------------------------------

def test_graph6_smallest():
    g = from_graph6("@")
    assert (g.n, g.m) == (1, 0)


def test_graph6_k2_matches_networkx():
    ref = nx.to_graph6_bytes(nx.complete_graph(2), header=False).decode().strip()
    assert to_graph6(complete(2)) == ref
    g = from_graph6(ref)
    assert (g.n, g.m) == (2, 1)


def test_edge_list_path():
    g = parse_graph("3\n0 1\n1 2", "edge-list")
    assert g == path(3)


@pytest.mark.parametrize("g", atlas(7, 0), ids=lambda g: to_graph6(g))
def test_graph6_agrees_with_networkx(g):
    ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert to_graph6(g) == ref
    assert from_graph6(ref) == g


def test_roundtrip_whole_corpus():
    for g in atlas(6, 0):
        assert from_graph6(to_graph6(g)) == g
        assert from_edge_list(serialize_graph(g, "edge-list")) == g


def test_graph6_large_n_roundtrip():
    g = cycle(70)
    text = to_graph6(g)
    assert text.startswith("~")
    assert from_graph6(text) == g
    assert from_graph6(">>graph6<<" + text) == g


@pytest.mark.parametrize("text,offset", [
    ("A_ x", 2),      # space is not a graph6 character
    ("C~~", 2),       # first surplus body byte
    ("B", 1),         # truncated body
    ("A`", 1),        # nonzero padding bit
])
def test_graph6_errors(text, offset):
    with pytest.raises(GraphFormatError) as err:
        from_graph6(text)
    assert err.value.offset == offset


@pytest.mark.parametrize("text,offset", [
    ("3\n0 1\n1 3\n", 6),
    ("3\n0 1\n1 0\n", 6),
    ("3\n0 1 2\n", 2),
    ("", 0),
    ("3\n1 1\n", 2),
])
def test_edge_list_errors(text, offset):
    with pytest.raises(GraphFormatError) as err:
        from_edge_list(text)
    assert err.value.offset == offset


# -- containment -----------------------------------------------------------

def test_containment_examples():
    assert contains_subgraph(complete(3), path(4)) is None
    assert contains_subgraph(complete(4), path(4)) is not None
    assert contains_subgraph(cycle(6), star(3)) is None


def test_c6_k13_brute():
    assert not contains_brute(edge_sets(cycle(6)), 6, star(3))


def _check_mapping(g, h, mapping):
    assert sorted(mapping) == list(range(h.n))
    assert len(set(mapping.values())) == h.n
    for u, v in h.edges():
        assert g.has_edge(mapping[u], mapping[v])


def test_containment_matches_injection_enumeration():
    hosts = atlas(8, 1)
    rng = random.Random(7)
    hosts = [g for g in hosts if g.n <= 6] + rng.sample([g for g in hosts if g.n > 6], 60)
    patterns = atlas(5, 1)
    pattern_sample = rng.sample(patterns, 20) + [path(4), star(3), star_forest(1, 1)]
    for h in pattern_sample:
        for g in hosts:
            if g.n < h.n:
                continue
            found = contains_subgraph(g, h)
            expected = contains_brute(edge_sets(g), g.n, h)
            assert (found is not None) == expected, (g, h)
            if found is not None:
                _check_mapping(g, h, found)


def test_containment_deterministic():
    g = complete(5)
    assert contains_subgraph(g, path(4)) == contains_subgraph(g, path(4))


def test_isolated_pattern_vertices_need_room():
    assert contains_subgraph(complete(3), star_forest(1, isolated=1)) is not None
    assert contains_subgraph(complete(3), star_forest(1, isolated=2)) is None


# -- trees and star forests -------------------------------------------------

def test_classify_p5():
    spec = classify_tree(path(5))
    assert (spec.diameter, spec.is_star, spec.p, spec.gammas) == (4, False, 2, (1, 1))
    assert spec.center == 2


def test_classify_star():
    spec = classify_tree(star(4))
    assert spec.diameter == 2 and spec.is_star


def test_classify_spider():
    spec = classify_tree(spider(2, 2, 2))
    assert (spec.diameter, spec.p, spec.gammas) == (4, 3, (1, 1, 1))


def test_classify_rejects_non_trees():
    with pytest.raises(NotATree):
        classify_tree(cycle(4))
    with pytest.raises(NotATree):
        classify_tree(copies(path(2), 2))


@pytest.mark.parametrize("k", range(1, 10))
def test_decomposition_identity(k):
    for t in generate_trees(k):
        spec = classify_tree(t)
        lengths = [max(d for d in t.distances_from(v)) for v in range(t.n)]
        assert spec.diameter == max(lengths)
        assert spec.is_star == (spec.diameter <= 2)
        if spec.diameter <= 4 and not spec.is_star:
            dist = t.distances_from(spec.center)
            assert max(dist) <= 2
            assert spec.p >= 2
            assert sum(spec.gammas) == k - spec.p - 1
            assert list(spec.gammas) == sorted(spec.gammas)
            assert spec.gammas[-1] >= 1


def test_star_forest_decomposition():
    assert decompose_star_forest(copies(path(2), 2)).leaf_counts == (1, 1)
    assert decompose_star_forest(star_forest(2, 3)).leaf_counts == (3, 2)
    spec = decompose_star_forest(star_forest(1, isolated=2))
    assert spec.leaf_counts == (1,) and spec.isolated == 2 and spec.full_order == 4
    with pytest.raises(NotStarForest):
        decompose_star_forest(path(4))


def test_star_forest_prefixes():
    spec = StarForestSpec.of(1, 3, 2)
    assert spec.leaf_counts == (3, 2, 1)
    assert spec.order == 9
    assert spec.prefix(0).n == 0
    assert spec.prefix(2).m == 5
    assert spec.without_first().leaf_counts == (2, 1)


def test_complement_components():
    assert complement_components(complete(6)) == (1,) * 6
    k6_minus_pm = complete(6).remove_edges([(0, 1), (2, 3), (4, 5)])
    assert complement_components(k6_minus_pm) == (2, 2, 2)
    assert complement_components(cycle(5)) == (5,)


@given(graphs())
def test_complement_sizes_sum_to_n(g):
    assert sum(complement_components(g)) == g.n


# -- canonical forms and generation -----------------------------------------

@settings(max_examples=60)
@given(graphs(max_n=7), st.randoms())
def test_canonical_form_is_relabelling_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(g) == canonical_form(g.relabel(perm))


def test_canonical_form_separates_atlas():
    forms = {canonical_form(g) for g in atlas(7)}
    assert len(forms) == len(atlas(7))


def test_generation_counts():
    assert [len(generate_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_generation_matches_labelled_enumeration():
    # independent pass: every labelled graph on n <= 5 reduced with networkx isomorphism
    for n in range(1, 6):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        reps: list[nx.Graph] = []
        for mask in range(1 << len(pairs)):
            h = nx.Graph()
            h.add_nodes_from(range(n))
            h.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
            if not any(nx.is_isomorphic(h, r) for r in reps):
                reps.append(h)
        ours = generate_graphs(n)
        assert len(ours) == len(reps)
        for r in reps:
            assert any(is_isomorphic(from_nx(r), g) for g in ours)


def test_tree_counts():
    assert [len(generate_trees(k)) for k in range(1, 10)] == [1, 1, 1, 2, 3, 6, 11, 23, 47]


def test_complete_bipartite_shape():
    g = complete_bipartite(3, 3)
    assert g.m == 9 and set(g.degrees()) == {3}
