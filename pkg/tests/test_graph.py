from __future__ import annotations

import pytest

from bexpand.errors import GraphError, ParseError
from bexpand.generators import complete, cycle, disjoint_union, empty, path, random_graph, star
from bexpand.graph import (
    Coloring,
    Digraph,
    Graph,
    RootedForest,
    closure,
    connected_components,
    lex_product,
    radius_and_center,
)
from bexpand.io import coloring_from_json, parse_digraph, parse_graph, serialize_graph


def test_graph_normalises_and_sorts():
    g = Graph(4, [(2, 1), (1, 2), (3, 0), (0, 1)])
    assert g.edges == {(1, 2), (0, 3), (0, 1)}
    assert g.adj == ((1, 3), (0, 2), (1,), (0,))
    assert g.masks[0] == 0b1010


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(-1, 0)]])
def test_graph_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        Graph(3, edges)


def test_graph_is_immutable():
    g = path(3)
    with pytest.raises(AttributeError):
        g.n = 5


def test_digraph_allows_both_directions_but_no_loops():
    d = Digraph(2, [(0, 1), (1, 0), (0, 1)])
    assert len(d.arcs) == 2 and d.md == 1
    with pytest.raises(GraphError):
        Digraph(2, [(1, 1)])


def test_parse_edge_list():
    g = parse_graph(b"0 1\n1 2")
    assert g == path(3)


def test_parse_edge_list_header_comments_and_duplicates():
    g = parse_graph("# comment\nn 5\n0 1  # trailing\n1 0\n\n2 3\n")
    assert g.n == 5 and g.edges == {(0, 1), (2, 3)}


def test_parse_dimacs_shifts_to_zero_based():
    g = parse_graph("c hello\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n", "dimacs")
    assert g == path(4)


@pytest.mark.parametrize(
    "text,fmt,line",
    [
        ("0 0", "edge-list", 1),
        ("0 1\n1 x", "edge-list", 2),
        ("0 1 2", "edge-list", 1),
        ("n 2\n0 5", "edge-list", 2),
        ("p edge 3 1\ne 1 4", "dimacs", 2),
        ("e 1 2", "dimacs", 1),
    ],
)
def test_parse_errors_report_line(text, fmt, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text, fmt)
    assert info.value.line == line


def test_parse_loop_message():
    with pytest.raises(ParseError, match="loop"):
        parse_graph("0 0")


def test_serialize_round_trip(rng):
    for _ in range(30):
        g = random_graph(1 + rng.below(9), 0.4, rng)
        assert parse_graph(serialize_graph(g)) == g


def test_parse_digraph_round_trip():
    d = parse_digraph("0 1\n1 0\n2 1\n")
    assert d.arcs == {(0, 1), (1, 0), (2, 1)}
    assert parse_digraph(serialize_graph(d)) == d


def test_coloring_json():
    c = coloring_from_json('{"n": 3, "colors": [0, 2, 1]}', n=3)
    assert c.colors == (0, 2, 1) and c.palette == 3
    with pytest.raises(GraphError):
        coloring_from_json('{"n": 3, "colors": [0, 2, 1]}', n=4)
    with pytest.raises(ParseError):
        coloring_from_json('{"n": 2, "colors": [0, 2, 1]}')


def test_lex_product_examples():
    assert lex_product(complete(2), 2) == complete(4)
    assert lex_product(path(5), 1) == path(5)
    g = lex_product(path(3), 2)
    assert g.n == 6 and g.m == 11
    with pytest.raises(GraphError):
        lex_product(path(3), 0)


def test_lex_product_edge_count(rng):
    for _ in range(40):
        g = random_graph(1 + rng.below(8), 0.5, rng)
        c = 1 + rng.below(4)
        h = lex_product(g, c)
        assert h.m == c * c * g.m + g.n * c * (c - 1) // 2


def test_closure_examples():
    chain = RootedForest((None, 0, 1))
    assert closure(chain) == complete(3)
    s = RootedForest((None, 0, 0, 0))
    assert closure(s) == star(3)
    assert closure(RootedForest((None, None, None))) == empty(3)


def test_closure_edge_count_and_path_clique():
    f = RootedForest((None, 0, 1, 1, None, 4))
    assert closure(f).m == sum(f.vertex_height(v) - 1 for v in range(f.n))
    chain = RootedForest((None, 0, 1, 2, 3))
    assert closure(chain) == complete(5)
    assert f.height() == 3 and f.roots == {0, 4}


def test_forest_rejects_cycles():
    with pytest.raises(GraphError):
        RootedForest((1, 0))


def test_radius_and_center():
    assert radius_and_center(cycle(4), range(4))[0] == 2
    assert radius_and_center(path(5), range(5)) == (2, 2)
    assert radius_and_center(complete(4), [3]) == (0, 3)
    with pytest.raises(GraphError):
        radius_and_center(path(5), [0, 2])
    with pytest.raises(GraphError):
        radius_and_center(path(5), [])


def test_radius_bounded_by_ball_size(rng):
    for _ in range(30):
        g = random_graph(2 + rng.below(7), 0.5, rng)
        for comp in connected_components(g):
            assert radius_and_center(g, comp)[0] <= len(comp) - 1


def test_connected_components():
    assert connected_components(empty(3)) == [[0], [1], [2]]
    assert connected_components(path(3)) == [[0, 1, 2]]
    comps = connected_components(disjoint_union(complete(3), complete(2)))
    assert sorted(map(len, comps)) == [2, 3]


def test_coloring_validation():
    with pytest.raises(GraphError):
        Coloring.of([0, -1])
    assert Coloring.of([0, 1, 0]).classes() == {0: [0, 2], 1: [1]}
