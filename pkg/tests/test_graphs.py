"""Multigraph structure: incidence, genus, forests, derived graphs."""

import pytest

from weilgraph import (
    MultiGraph,
    bouquet_graph,
    cycle_graph,
    dumbbell_graph,
    path_graph,
    theta_graph,
)


def test_stock_graph_shapes():
    assert theta_graph().edges == ((0, 1), (0, 1), (0, 1))
    assert dumbbell_graph().edges == ((0, 0), (0, 1), (1, 1))
    assert cycle_graph(1).edges == ((0, 0),)
    assert cycle_graph(2).edges == ((0, 1), (1, 0))
    assert cycle_graph(4).edges == ((0, 1), (1, 2), (2, 3), (3, 0))
    assert path_graph(3).edges == ((0, 1), (1, 2))
    assert bouquet_graph(3).edges == ((0, 0), (0, 0), (0, 0))


def test_validation():
    with pytest.raises(ValueError):
        MultiGraph(2, ((0, 2),))
    with pytest.raises(ValueError):
        MultiGraph(-1, ())
    with pytest.raises(ValueError):
        cycle_graph(0)
    with pytest.raises(ValueError):
        bouquet_graph(-1)


def test_degree_counts_loops_twice():
    g = dumbbell_graph()
    assert g.degree(0) == 3
    assert g.degree(1) == 3
    assert bouquet_graph(2).degree(0) == 4
    assert path_graph(3).degree(1) == 2


def test_incidence_lists_loops_once():
    g = dumbbell_graph()
    assert g.incident_edges(0) == (0, 1)
    assert g.incident_edges(1) == (1, 2)


def test_edge_other_end():
    g = theta_graph()
    assert g.edge_other_end(0, 0) == 1
    assert g.edge_other_end(0, 1) == 0
    loop = bouquet_graph(1)
    assert loop.edge_other_end(0, 0) == 0
    with pytest.raises(ValueError):
        g.edge_other_end(0, 5)


def test_components_and_genus():
    assert theta_graph().genus() == 2
    assert dumbbell_graph().genus() == 2
    assert cycle_graph(5).genus() == 1
    assert path_graph(4).genus() == 0
    assert bouquet_graph(3).genus() == 3

    two_triangles = MultiGraph(
        6, ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3))
    )
    assert two_triangles.component_count == 2
    assert not two_triangles.is_connected()
    assert two_triangles.genus() == 2
    assert two_triangles.connected_components == (
        frozenset({0, 1, 2}),
        frozenset({3, 4, 5}),
    )

    isolated = MultiGraph(3, ((0, 1),))
    assert isolated.component_count == 2
    assert isolated.genus() == 0


def test_spanning_forest_greedy_lowest_index():
    assert theta_graph().spanning_forest() == frozenset({0})
    assert dumbbell_graph().spanning_forest() == frozenset({1})
    assert cycle_graph(4).spanning_forest() == frozenset({0, 1, 2})
    assert bouquet_graph(2).spanning_forest() == frozenset()
    # forest spans each component separately
    g = MultiGraph(4, ((0, 1), (2, 3), (0, 1)))
    assert g.spanning_forest() == frozenset({0, 1})


def test_path_in_forest():
    g = cycle_graph(4)
    forest = g.spanning_forest()
    assert g.path_in_forest(forest, 3, 0) == (2, 1, 0)
    assert g.path_in_forest(forest, 0, 3) == (0, 1, 2)
    assert g.path_in_forest(forest, 1, 1) == ()
    split = MultiGraph(4, ((0, 1), (2, 3)))
    with pytest.raises(ValueError):
        split.path_in_forest(split.spanning_forest(), 0, 3)


def test_non_separating_edges():
    assert dumbbell_graph().non_separating_edges() == frozenset({0, 2})
    assert theta_graph().non_separating_edges() == frozenset({0, 1, 2})
    assert path_graph(3).non_separating_edges() == frozenset()
    k4 = MultiGraph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
    assert k4.non_separating_edges() == frozenset(range(6))


def test_delete_edges():
    child, kept = dumbbell_graph().delete_edges({1})
    assert child.edges == ((0, 0), (1, 1))
    assert kept == (0, 2)
    assert child.component_count == 2
    with pytest.raises(ValueError):
        theta_graph().delete_edges({7})


def test_subdivide_all_edges():
    sub = theta_graph().subdivide(2)
    assert sub.child.vertex_count == 5
    assert sub.child.edges == ((0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1))
    assert sub.edge_paths == ((0, 1), (2, 3), (4, 5))
    assert sub.interior_vertices() == frozenset({2, 3, 4})
    assert sub.subdivided_edges() == frozenset({0, 1, 2})
    # subdivision never changes the genus
    assert sub.child.genus() == 2


def test_subdivide_loop():
    sub = bouquet_graph(1).subdivide(3)
    assert sub.child.edges == ((0, 1), (1, 2), (2, 0))
    assert sub.child.genus() == 1


def test_subdivide_selected_edges():
    sub = dumbbell_graph().subdivide(3, which={1})
    assert sub.child.edges == ((0, 0), (0, 2), (2, 3), (3, 1), (1, 1))
    assert sub.edge_paths == ((0,), (1, 2, 3), (4,))
    assert sub.subdivided_edges() == frozenset({1})


def test_subdivide_identity():
    g = theta_graph()
    sub = g.subdivide(1)
    assert sub.child == g
    assert sub.interior_vertices() == frozenset()
    assert sub.subdivided_edges() == frozenset()
    with pytest.raises(ValueError):
        g.subdivide(0)
    with pytest.raises(ValueError):
        g.subdivide(2, which={9})


def test_graphs_hash_and_compare():
    assert theta_graph() == theta_graph()
    assert hash(theta_graph()) == hash(theta_graph())
    assert theta_graph() != dumbbell_graph()
    assert len({theta_graph(), theta_graph(), dumbbell_graph()}) == 2
