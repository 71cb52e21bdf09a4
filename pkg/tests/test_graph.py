import pickle

import pytest

from core.errors import (DisconnectedGraphError, GraphError, InvalidColoringError,
                         NotAnEdgeError, NotBipartiteError, VertexRangeError)
from core.graph import (Coloring, Graph, bipartition, components, elc, elc_classes, elc_via_lc,
                        is_connected, local_complement, pivot_bipartite, require_coloring, toggle_pivot)
from core.models import ElcMethod, Side
from tests.helpers import all_labeled_graphs, random_connected_bipartite, random_connected_graph, random_graph


def test_graph_rejects_bad_adjacency():
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0b00])  # 不对称
    with pytest.raises(GraphError):
        Graph(1, [0b1])
    with pytest.raises(GraphError):
        Graph(0, [])
    with pytest.raises(VertexRangeError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_graph_is_an_immutable_value():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert g == Graph.from_rows(3, [0b010, 0b101, 0b010])
    assert hash(g) == hash(Graph.from_edges(3, [(1, 2), (0, 1)]))
    with pytest.raises(AttributeError):
        g.n = 4
    assert pickle.loads(pickle.dumps(g)) == g


def test_edges_listed_once_with_smaller_endpoint_first(hamming_graph):
    edges = hamming_graph.edges()
    assert len(edges) == hamming_graph.edge_count == 9
    assert all(e.u < e.v for e in edges)


def test_relabel_and_swap_labels(path4):
    # 0-1-2-3 -> 3-2-1-0
    assert path4.relabel([3, 2, 1, 0]) == path4
    swapped = path4.swap_labels(0, 3)
    assert swapped.has_edge(3, 1) and swapped.has_edge(0, 2) and swapped.has_edge(1, 2)
    with pytest.raises(GraphError):
        path4.relabel([0, 0, 1, 2])


def test_local_complement_of_star_is_complete():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    k4 = local_complement(star, 0)
    assert k4.edge_count == 6
    assert local_complement(k4, 0) == star
    # 叶子的邻域只有一个点，LC 不变
    assert local_complement(star, 1) == star


def test_elc_on_middle_edge_of_path_gives_cycle(path4, cycle4):
    h = elc_classes(path4, (1, 2))
    assert sorted(h.edges()) == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert sorted(h.degree(v) for v in range(4)) == [2, 2, 2, 2]
    assert elc_classes(cycle4, (0, 1)).edge_count == 3


def test_elc_toggles_between_common_and_private_neighbours():
    # 三角形 0,1,2 加挂在 0 上的 3：C = {2}，A = {3}，B 为空
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
    toggled = toggle_pivot(g, (0, 1))
    assert toggled.has_edge(2, 3)
    assert toggled.edge_count == 5
    assert elc_classes(g, (0, 1)) == toggled.swap_labels(0, 1)
    assert elc_via_lc(g, (0, 1)) == elc_classes(g, (0, 1))


def test_pivot_on_hamming_graph_matches_worked_example(hamming_graph, hamming_pivoted):
    from core.linear_code import code_to_graph
    expected, _ = code_to_graph(hamming_pivoted)
    assert toggle_pivot(hamming_graph, (1, 6)) == expected
    assert pivot_bipartite(hamming_graph, (1, 6)) == expected.swap_labels(1, 6)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_elc_methods_agree_on_all_small_labeled_graphs(n):
    for g in all_labeled_graphs(n):
        for e in g.edges():
            via_lc = elc_via_lc(g, e)
            assert elc_classes(g, e) == via_lc
            # 对合
            assert elc_via_lc(via_lc, e) == g
            assert local_complement(local_complement(g, e.u), e.u) == g
            if bipartition(g) is not None:
                assert pivot_bipartite(g, e) == via_lc


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_lc_and_elc_keep_the_component_partition(n):
    for g in all_labeled_graphs(n):
        parts = components(g)
        for v in range(n):
            assert components(local_complement(g, v)) == parts
        for e in g.edges():
            assert components(elc_classes(g, e)) == parts


def test_lc_and_elc_keep_random_graphs_connected(rng):
    for _ in range(50):
        g = random_connected_graph(rng, int(rng.integers(2, 12)), float(rng.uniform(0.15, 0.6)))
        for v in range(g.n):
            assert is_connected(local_complement(g, v))
        for e in g.edges():
            assert is_connected(elc_classes(g, e))


def test_elc_preserves_bipartiteness_with_transported_sides(rng):
    for _ in range(20):
        g, c = random_connected_bipartite(rng, int(rng.integers(1, 5)), int(rng.integers(1, 5)))
        for e in g.edges():
            h = pivot_bipartite(g, e)
            require_coloring(h, c.swap(e.u, e.v))


def test_elc_dispatch_and_errors(path4, k2):
    for method in ElcMethod:
        assert elc(path4, (1, 2), method) == elc_via_lc(path4, (1, 2))
    with pytest.raises(NotAnEdgeError) as info:
        elc(path4, (0, 2))
    assert "{1,3}" in str(info.value)
    with pytest.raises(VertexRangeError):
        elc(path4, (0, 7))
    triangle = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(NotBipartiteError):
        pivot_bipartite(triangle, (0, 1))
    # K2 上的 ELC 只交换两个端点
    assert elc(k2, (0, 1)) == k2


def test_components_and_bipartition(rng):
    g = Graph.from_edges(5, [(0, 1), (3, 4)])
    assert components(g) == [[0, 1], [2], [3, 4]]
    assert not is_connected(g)
    c = bipartition(g)
    assert [c.side(v) for v in range(5)] == [Side.LEFT, Side.RIGHT, Side.LEFT, Side.LEFT, Side.RIGHT]
    assert bipartition(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])) is None
    for _ in range(30):
        h = random_graph(rng, 7, 0.3)
        coloring = bipartition(h)
        if coloring is not None:
            assert coloring.is_proper_for(h)


def test_coloring_helpers():
    c = Coloring.from_sides([Side.LEFT, Side.RIGHT, Side.RIGHT])
    assert c.sizes() == (1, 2)
    assert c.swapped().sizes() == (2, 1)
    assert c.swap(0, 1) == Coloring.from_sides([Side.RIGHT, Side.LEFT, Side.RIGHT])
    assert c.relabel([2, 0, 1]).vertices(Side.LEFT) == [2]
    assert c.restrict([0, 2]) == Coloring.from_sides([Side.LEFT, Side.RIGHT])
    with pytest.raises(InvalidColoringError):
        require_coloring(Graph.from_edges(3, [(1, 2)]), c)


def test_disconnected_error_lists_components():
    err = DisconnectedGraphError([[0, 1], [2]])
    assert str(err) == "graph has 2 components: 1,2 | 3"
    assert err.code == "disconnected"


@pytest.mark.slow
def test_local_complement_identities_sweep(rng):
    for _ in range(10_000):
        g = random_graph(rng, int(rng.integers(2, 13)), float(rng.uniform(0.1, 0.9)))
        v = int(rng.integers(g.n))
        assert local_complement(local_complement(g, v), v) == g
        edges = g.edges()
        if not edges:
            continue
        u, w = edges[int(rng.integers(len(edges)))]
        uwu = local_complement(local_complement(local_complement(g, u), w), u)
        wuw = local_complement(local_complement(local_complement(g, w), u), w)
        assert uwu == wuw


@pytest.mark.slow
def test_elc_involution_sweep(rng):
    for _ in range(10_000):
        g = random_graph(rng, int(rng.integers(2, 13)), float(rng.uniform(0.1, 0.9)))
        edges = g.edges()
        if not edges:
            continue
        e = edges[int(rng.integers(len(edges)))]
        h = elc_classes(g, e)
        assert h.has_edge(e.u, e.v)
        assert elc_classes(h, e) == g
        assert elc_via_lc(g, e) == h


@pytest.mark.slow
def test_pivot_keeps_bipartiteness_sweep(rng):
    for _ in range(10_000):
        g, c = random_connected_bipartite(rng, int(rng.integers(1, 7)), int(rng.integers(1, 7)),
                                          float(rng.uniform(0.2, 0.8)))
        edges = g.edges()
        e = edges[int(rng.integers(len(edges)))]
        h = pivot_bipartite(g, e)
        assert bipartition(h) is not None
        assert c.swap(e.u, e.v).is_proper_for(h)
        assert h == elc_classes(g, e)
