import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dclabel.errors import GraphInputError
from dclabel.graph import (
    Graph,
    Labeling,
    components,
    degree,
    export_dot,
    is_disjoint_union_of_paths,
    parse_graph,
    parse_labeling,
    remove_edges,
    remove_vertices,
    serialize_graph,
    serialize_labeling,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def test_degree(worked):
    assert degree(Graph(4, [(1, 2), (2, 3), (3, 4)]), 2) == 2
    assert degree(Graph(1), 1) == 0
    assert degree(worked, 5) == 4


@pytest.mark.parametrize("v", [0, 5, -1, "2"])
def test_degree_rejects_unknown_vertex(g1, v):
    with pytest.raises(GraphInputError):
        degree(g1, v)


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphInputError):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphInputError):
        Graph(3, [(1, 2), (2, 1)])
    with pytest.raises(GraphInputError):
        Graph(3, [(1, 4)])


def test_remove_vertices(triangle, worked):
    h, remap = remove_vertices(triangle, {3})
    assert h == Graph(2, [(1, 2)])
    assert remap == (0, 1, 2)

    h, remap = remove_vertices(worked, {2, 3, 8, 9, 11, 1, 10})
    assert remap[1:] == (4, 5, 6, 7)
    assert {(remap[u], remap[v]) for u, v in h.edges} == {(4, 5), (5, 6), (6, 7)}

    assert remove_vertices(worked, set())[0] == worked
    with pytest.raises(GraphInputError):
        remove_vertices(triangle, {4})


def test_remove_edges(triangle, worked):
    assert remove_edges(triangle, [(1, 2)]) == Graph(3, [(1, 3), (2, 3)])
    h, remap = remove_vertices(worked, {2, 3, 8, 9, 11})
    back = {v: i for i, v in enumerate(remap) if i}
    h = remove_edges(h, [(back[4], back[5]), (back[6], back[7])])
    ok, paths = is_disjoint_union_of_paths(h)
    assert ok
    assert [remap[v] for v in paths[0]] == [4, 1, 5, 6, 10, 7]
    assert remove_edges(worked, []) == worked
    with pytest.raises(GraphInputError):
        remove_edges(triangle, [(1, 4)])


def test_components(worked):
    assert components(Graph(4, [(1, 2), (3, 4)])) == [[1, 2], [3, 4]]
    assert components(worked) == [list(range(1, 12))]
    assert components(Graph(3)) == [[1], [2], [3]]


def test_path_union():
    assert is_disjoint_union_of_paths(Graph(4, [(1, 2), (2, 3)])) == (True, [[1, 2, 3], [4]])
    assert is_disjoint_union_of_paths(Graph(3, [(1, 2), (1, 3), (2, 3)]))[0] is False
    # star is not a path
    assert is_disjoint_union_of_paths(Graph(4, [(1, 2), (1, 3), (1, 4)]))[0] is False
    # path starts at its lowest-id end
    assert is_disjoint_union_of_paths(Graph(4, [(3, 1), (1, 4), (4, 2)]))[1] == [[2, 4, 1, 3]]


@settings(max_examples=200, deadline=None)
@given(graphs(), st.data())
def test_remove_vertices_edge_count(g, data):
    x = data.draw(st.sets(st.integers(1, g.n))) if g.n else set()
    h, _ = remove_vertices(g, x)
    assert h.m == sum(1 for u, v in g.edges if u not in x and v not in x)


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_components_partition_connected(g):
    comps = components(g)
    flat = sorted(v for c in comps for v in c)
    assert flat == list(g.vertices)
    for comp in comps:
        others = [v for v in g.vertices if v not in comp]
        h, _ = remove_vertices(g, others)
        assert len(components(h)) == 1


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_path_union_length_matches_edges(g):
    ok, paths = is_disjoint_union_of_paths(g)
    if ok:
        assert sum(len(p) - 1 for p in paths) == g.m
        for p in paths:
            assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_round_trip(g):
    text = serialize_graph(g)
    assert parse_graph(text) == g
    assert serialize_graph(parse_graph(text)) == text


def test_parse_examples(g1, triangle):
    assert parse_graph("4 3\n1 2\n2 3\n3 4\n") == g1
    assert parse_graph("1 0\n") == Graph(1)
    assert parse_graph("3 3\n1 2\n2 3\n1 3\n") == triangle


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 2\n1 2\n2 2\n", 3),
        ("3 2\n1 2\n2 1\n", 3),
        ("3 1\n1 4\n", 2),
        ("3 1\n1 x\n", 2),
        ("3 1\n1 2 3\n", 2),
        ("x\n", 1),
        ("3 1\n1 2\n2 3\n", 3),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(GraphInputError) as exc:
        parse_graph(text)
    assert exc.value.line == line


def test_parse_edge_count_mismatch():
    with pytest.raises(GraphInputError):
        parse_graph("3 2\n1 2\n")
    with pytest.raises(GraphInputError):
        parse_graph("")


def test_labeling_round_trip_and_apply(g1):
    f = Labeling([2, 1, 4, 3])
    assert parse_labeling(serialize_labeling(f), 4) == f
    assert f.apply(g1) == Graph(4, [(1, 2), (1, 4), (3, 4)])
    assert f.inverse() == (2, 1, 4, 3)
    with pytest.raises(GraphInputError):
        Labeling([1, 1, 2])
    with pytest.raises(GraphInputError):
        parse_labeling("1 1\n1 2\n")


def test_export_dot(g1, g2):
    text = export_dot(g1, Labeling.identity(4))
    assert text.count(" -- ") - text.count("style=invis") == 3
    assert all(f"  {v} [label=" in text for v in range(1, 5))
    assert "rank=same" in text
    text = export_dot(g2)
    for e in ("1 -- 3;", "2 -- 3;", "2 -- 4;"):
        assert e in text
    assert " -- " not in export_dot(Graph(3))
