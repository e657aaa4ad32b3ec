"""Unit tests for base graphs and strip product adjacency."""

import pytest

from stripparts.graphs import (
    BaseGraph,
    GraphSpecError,
    load_edge_list,
    parse_graph_spec,
    product_adjacent,
    product_edges,
    product_vertex_count,
)


# === constructors and parsing ===


def test_standard_constructors():
    p3 = BaseGraph.path(3)
    assert p3.vertex_count == 3
    assert p3.edges == frozenset({(0, 1), (1, 2)})
    assert BaseGraph.path(1).edges == frozenset()
    c4 = BaseGraph.cycle(4)
    assert c4.edges == frozenset({(0, 1), (1, 2), (2, 3), (0, 3)})
    k4 = BaseGraph.complete(4)
    assert len(k4.edges) == 6


def test_cycle3_equals_complete3():
    assert BaseGraph.cycle(3) == BaseGraph.complete(3)
    assert hash(BaseGraph.cycle(3)) == hash(BaseGraph.complete(3))


@pytest.mark.parametrize(
    "spec,expected",
    [
        ("path:2", BaseGraph.path(2)),
        ("cycle:5", BaseGraph.cycle(5)),
        ("complete:3", BaseGraph.complete(3)),
    ],
)
def test_parse_graph_spec(spec, expected):
    assert parse_graph_spec(spec) == expected


@pytest.mark.parametrize(
    "bad",
    ["path:0", "cycle:2", "complete:0", "nope:3", "path", "path:x", "path:", ""],
)
def test_parse_graph_spec_errors(bad):
    with pytest.raises(GraphSpecError):
        parse_graph_spec(bad)


def test_constructor_validation():
    with pytest.raises(GraphSpecError):
        BaseGraph(2, frozenset({(0, 0)}))  # loop
    with pytest.raises(GraphSpecError):
        BaseGraph(2, frozenset({(1, 0)}))  # wrong orientation
    with pytest.raises(GraphSpecError):
        BaseGraph(2, frozenset({(0, 5)}))  # out of range
    with pytest.raises(GraphSpecError):
        BaseGraph(0, frozenset())


# === edge list files ===


def test_load_edge_list(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("3\n0 1\n1 2\n")
    g = load_edge_list(str(f))
    assert g == BaseGraph.path(3)
    assert parse_graph_spec(f"file:{f}") == g


def test_load_edge_list_no_edges(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("2\n")
    assert load_edge_list(str(f)).edges == frozenset()


@pytest.mark.parametrize(
    "content",
    [
        "",  # empty
        "x\n0 1\n",  # bad vertex count
        "0\n",  # nonpositive count
        "3\n0 1\n0 1\n",  # duplicate
        "3\n1 0\n0 1\n",  # duplicate after normalization
        "3\n2 2\n",  # loop
        "3\n0 9\n",  # out of range
        "3\n0 1 2\n",  # not a pair
        "3\na b\n",  # not integers
    ],
)
def test_load_edge_list_errors(tmp_path, content):
    f = tmp_path / "bad.txt"
    f.write_text(content)
    with pytest.raises(GraphSpecError):
        load_edge_list(str(f))


def test_load_edge_list_missing_file():
    with pytest.raises(GraphSpecError):
        load_edge_list("/nonexistent/graph.txt")


# === product adjacency ===


def test_product_adjacent_examples():
    k3 = BaseGraph.complete(3)
    assert product_adjacent(k3, 2, (0, 0), (0, 1)) is True  # same column, base edge
    assert product_adjacent(k3, 2, (0, 0), (1, 0)) is True  # same row, next column
    assert product_adjacent(k3, 2, (0, 0), (1, 1)) is False  # diagonal
    assert product_adjacent(k3, 2, (0, 0), (0, 0)) is False


def test_product_adjacent_path_base():
    p3 = BaseGraph.path(3)
    assert product_adjacent(p3, 4, (2, 0), (2, 1)) is True
    assert product_adjacent(p3, 4, (2, 0), (2, 2)) is False  # rows 0,2 not adjacent in P_3
    assert product_adjacent(p3, 4, (1, 2), (2, 2)) is True
    assert product_adjacent(p3, 4, (0, 2), (2, 2)) is False  # columns two apart


def test_product_adjacent_range_checks():
    k3 = BaseGraph.complete(3)
    with pytest.raises(ValueError):
        product_adjacent(k3, 2, (2, 0), (0, 0))
    with pytest.raises(ValueError):
        product_adjacent(k3, 2, (0, 3), (0, 0))
    with pytest.raises(ValueError):
        product_adjacent(k3, 0, (0, 0), (0, 0))


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_grid_edge_count(m, n):
    """Strips over a path base are grids: m(n-1) + n(m-1) edges."""
    g = BaseGraph.path(m)
    assert len(product_edges(g, n)) == m * (n - 1) + n * (m - 1)


def test_product_edge_count_general():
    for g in (BaseGraph.complete(4), BaseGraph.cycle(5)):
        for n in (1, 2, 3):
            expected = n * len(g.edges) + (n - 1) * g.vertex_count
            assert len(product_edges(g, n)) == expected
            assert product_vertex_count(g, n) == g.vertex_count * n


def test_product_edges_match_adjacency():
    """The edge list and the pairwise predicate agree exhaustively."""
    g = BaseGraph.complete(3)
    n = 3
    m = g.vertex_count
    edge_set = {tuple(sorted(e)) for e in product_edges(g, n)}
    for ca in range(n):
        for ra in range(m):
            for cb in range(n):
                for rb in range(m):
                    if (ca, ra) == (cb, rb):
                        continue
                    a, b = ca * m + ra, cb * m + rb
                    expected = tuple(sorted((a, b))) in edge_set
                    assert product_adjacent(g, n, (ca, ra), (cb, rb)) is expected
