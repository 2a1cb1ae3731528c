import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dclabel.generators import caterpillar_graph, path_graph, random_dcl, random_gnm, star_graph, triangle_chain
from dclabel.graph import Graph, remove_edges
from dclabel.qian import (
    LabeledWitness,
    find_forbidden_configuration,
    find_forbidden_configuration_scan,
    is_degree_complete,
)
from oracles import all_graphs, degree_complete_by_definition, has_forbidden_4subset
from test_graph import graphs


def test_examples(g1, g2, triangle):
    assert find_forbidden_configuration(g1) is None
    w = find_forbidden_configuration(g2)
    assert str(w) == "H1 1 2 3 4"
    assert w.edges == ((1, 3), (2, 4))
    assert is_degree_complete(triangle)
    assert not is_degree_complete(g2)


def test_nested_pair():
    g = Graph(4, [(1, 4), (2, 3)])
    w = find_forbidden_configuration(g)
    assert w == LabeledWitness((1, 2, 3, 4), "H2", ((1, 4), (2, 3)))
    assert str(w) == "H2 1 2 3 4"


def test_shared_endpoint_pairs_are_allowed():
    # edges sharing a vertex never form a forbidden pair
    assert is_degree_complete(Graph(4, [(1, 4), (2, 4), (3, 4)]))
    assert is_degree_complete(Graph(4, [(1, 2), (1, 3), (1, 4)]))
    assert is_degree_complete(Graph(3, [(1, 3), (1, 2), (2, 3)]))


def test_empty_and_tiny():
    for n in range(0, 4):
        assert is_degree_complete(Graph(n))
        assert find_forbidden_configuration(Graph(n)) is None


def test_identity_labelings_of_simple_families():
    assert is_degree_complete(path_graph(50))
    assert is_degree_complete(star_graph(30))
    # spine 1..s with leaves numbered after the spine is not in insertion order
    assert not is_degree_complete(caterpillar_graph(3, 2))


def test_all_small_graphs_match_definition():
    for n in range(1, 6):
        for g in all_graphs(n):
            assert is_degree_complete(g) == degree_complete_by_definition(g), g.edges


def test_all_small_graphs_match_4subset_check():
    for n in range(1, 7):
        for g in all_graphs(n):
            assert is_degree_complete(g) == (not has_forbidden_4subset(g))


@settings(max_examples=400, deadline=None)
@given(graphs(max_n=14))
def test_fast_matches_scan(g):
    assert find_forbidden_configuration(g) == find_forbidden_configuration_scan(g)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=14))
def test_witness_is_valid(g):
    w = find_forbidden_configuration(g)
    if w is None:
        return
    k1, k2, k3, k4 = w.labels
    assert k1 < k2 < k3 < k4
    assert set(w.edges) <= g.edge_set
    if w.kind == "H1":
        assert w.edges == ((k1, k3), (k2, k4))
    else:
        assert w.kind == "H2" and w.edges == ((k1, k4), (k2, k3))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12), st.data())
def test_edge_deletion_preserves_completeness(g, data):
    if not is_degree_complete(g) or g.m == 0:
        return
    drop = data.draw(st.lists(st.sampled_from(g.edges), unique=True))
    assert is_degree_complete(remove_edges(g, drop))


def test_fast_matches_scan_on_larger_graphs():
    rng = random.Random(5)
    for i in range(40):
        n = rng.randint(50, 400)
        if i % 2:
            g = random_gnm(n, rng.randint(0, 3 * n), seed=i)
        else:
            # a sorted caterpillar-like graph with one perturbation is almost complete
            g = random_dcl(n, seed=i)
        assert find_forbidden_configuration(g) == find_forbidden_configuration_scan(g)


def test_large_complete_labeled_graph():
    g = triangle_chain(1000)
    n, edges = g.n, list(g.edges)
    assert find_forbidden_configuration(g) is None
    h = Graph(n, edges + [(2, 5)])
    assert find_forbidden_configuration(h) == find_forbidden_configuration_scan(h)
