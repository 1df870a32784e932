"""Component statistics, exact diameters, typical distances, path bounds."""

import math

import numpy as np
import pytest

from mstsim import (
    component_stats,
    diam_growth_bound,
    excess_height_bound,
    graph_diameter,
    kruskal,
    make_constant,
    poissonized_source,
    tree_diameter,
    typical_distance,
    write_component_stats,
)
from mstsim.weights import WeightVector
from conftest import snapshot_from_edges
from oracles import (
    bfs_dists,
    adjacency,
    bfs_tree,
    exact_diameter,
    longest_path,
    random_connected_graph,
)


def path_graph(n):
    return snapshot_from_edges(n, [(i, i + 1, 0.1 * (i + 1)) for i in range(n - 1)])


class TestComponentStats:
    def test_triangle_surplus(self):
        g = snapshot_from_edges(3, [(0, 1, 0.1), (0, 2, 0.2), (1, 2, 0.3)])
        (c,) = component_stats(g, make_constant(3))
        assert c.surplus == 1
        assert c.size == 3

    def test_tree_surplus_zero(self):
        (c,) = component_stats(path_graph(6), make_constant(6))
        assert c.surplus == 0

    def test_two_disjoint_edges(self):
        v = WeightVector(np.array([4.0, 3.0, 2.0, 1.0]))
        g = snapshot_from_edges(4, [(0, 2, 0.1), (1, 3, 0.2)])
        a, b = component_stats(g, v)
        assert {a.size, b.size} == {2}
        assert {a.weight, b.weight} == {6.0, 4.0}

    def test_sizes_sum_and_surplus_sum(self):
        for s in range(10):
            g = poissonized_source(make_constant(100), 0.015, seed=s).snapshot(0.015)
            recs = component_stats(g, make_constant(100))
            assert sum(r.size for r in recs) == 100
            assert sum(r.surplus for r in recs) == g.m - 100 + len(recs)
            assert all(x.size >= y.size for x, y in zip(recs, recs[1:]))

    def test_optional_diameters(self):
        g = snapshot_from_edges(4, [(0, 1, 0.1), (1, 2, 0.2), (2, 3, 0.3)])
        (c,) = component_stats(g, make_constant(4), diameters=True)
        assert c.diameter == 3
        (c,) = component_stats(g, make_constant(4))
        assert c.diameter is None

    def test_forest_tree_diameters(self):
        g = snapshot_from_edges(3, [(0, 1, 0.1), (0, 2, 0.2), (1, 2, 0.3)])
        f = kruskal(g)
        (c,) = component_stats(g, make_constant(3), diameters=True, forest=f)
        assert c.diameter == 1
        assert c.tree_diameter == 2

    def test_csv_export(self, tmp_path):
        g = snapshot_from_edges(3, [(0, 1, 0.1)])
        recs = component_stats(g, make_constant(3), diameters=True)
        path = tmp_path / "stats.csv"
        write_component_stats(recs, path)
        lines = path.read_text().splitlines()
        assert lines[0] == "rank,size,weight,surplus,diameter"
        assert len(lines) == 3


class TestTreeDiameter:
    def test_path_four(self):
        f = kruskal(path_graph(4))
        assert tree_diameter(f) == 3

    def test_star(self):
        star = snapshot_from_edges(6, [(0, k, 0.1 * k) for k in range(1, 6)])
        assert tree_diameter(kruskal(star)) == 2

    def test_forest_requires_component(self):
        g = snapshot_from_edges(4, [(0, 1, 0.1)])
        f = kruskal(g)
        with pytest.raises(ValueError):
            tree_diameter(f)
        lbl = int(f.labels[0])
        assert tree_diameter(f, component=lbl) == 1

    def test_against_all_pairs_oracle(self, rng):
        for _ in range(500):
            n = int(rng.integers(2, 200))
            edges = random_connected_graph(rng, n, 0)
            g = snapshot_from_edges(n, [(i, j, float(rng.random())) for i, j in edges])
            f = kruskal(g)
            assert tree_diameter(f) == exact_diameter(n, edges)


class TestGraphDiameter:
    def test_four_cycle(self):
        g = snapshot_from_edges(4, [(0, 1, 0.1), (1, 2, 0.2), (2, 3, 0.3), (0, 3, 0.4)])
        assert graph_diameter(g) == 2

    def test_disjoint_path_and_triangle(self):
        g = snapshot_from_edges(
            7,
            [(0, 1, 0.1), (1, 2, 0.2), (2, 3, 0.3)]
            + [(4, 5, 0.4), (5, 6, 0.5), (4, 6, 0.6)],
        )
        assert graph_diameter(g) == 3

    def test_agrees_with_tree_diameter_on_trees(self, rng):
        for _ in range(30):
            n = int(rng.integers(2, 60))
            edges = random_connected_graph(rng, n, 0)
            g = snapshot_from_edges(n, [(i, j, float(rng.random())) for i, j in edges])
            assert graph_diameter(g) == tree_diameter(kruskal(g))

    def test_never_exceeds_spanning_tree_diameter(self, rng):
        # extra edges can only shrink distances
        for _ in range(50):
            n = int(rng.integers(4, 50))
            edges = random_connected_graph(rng, n, int(rng.integers(0, 4)))
            g = snapshot_from_edges(n, [(i, j, float(rng.random())) for i, j in edges])
            assert graph_diameter(g) <= tree_diameter(kruskal(g))


class TestTypicalDistance:
    def test_path_three_mean(self):
        f = kruskal(path_graph(3))
        d = typical_distance(f, pairs=100_000, seed=1)
        # unordered pairs: distances 1, 1, 2 -> mean 4/3
        se = math.sqrt((2 - 16 / 9) / d.size)
        assert abs(d.mean() - 4 / 3) < 3 * se

    def test_star_distances(self):
        star = snapshot_from_edges(10, [(0, k, 0.1 * k) for k in range(1, 10)])
        d = typical_distance(kruskal(star), pairs=5000, seed=2)
        assert set(np.unique(d)) <= {1, 2}

    def test_bounded_by_diameter(self, rng):
        for _ in range(20):
            n = int(rng.integers(3, 80))
            edges = random_connected_graph(rng, n, 0)
            g = snapshot_from_edges(n, [(i, j, float(rng.random())) for i, j in edges])
            f = kruskal(g)
            assert typical_distance(f, pairs=50, seed=3).max() <= tree_diameter(f)

    def test_single_node_rejected(self):
        f = kruskal(snapshot_from_edges(1, []))
        with pytest.raises(ValueError):
            typical_distance(f, pairs=10, seed=0)

    def test_deterministic(self):
        f = kruskal(path_graph(20))
        a = typical_distance(f, pairs=100, seed=9)
        b = typical_distance(f, pairs=100, seed=9)
        np.testing.assert_array_equal(a, b)


class TestPathBounds:
    def test_excess_height_values(self):
        assert excess_height_bound(3, 2) == 20
        assert excess_height_bound(3, 0) == 6
        with pytest.raises(ValueError):
            excess_height_bound(-1, 0)

    def test_diam_growth_values(self):
        assert diam_growth_bound(5, 2) == 11
        assert diam_growth_bound(0, 0) == 2

    def test_excess_height_is_a_true_bound(self, rng):
        for _ in range(300):
            n = int(rng.integers(5, 40))
            q = int(rng.integers(0, 4))
            edges = random_connected_graph(rng, n, q)
            q_real = len(edges) - n + 1
            tree, h = bfs_tree(n, edges, 0)
            assert longest_path(n, edges) <= excess_height_bound(h, q_real)

    def test_diam_growth_is_a_true_bound(self, rng):
        for _ in range(300):
            n = int(rng.integers(6, 30))
            edges = random_connected_graph(rng, n, int(rng.integers(0, 4)))
            adj = adjacency(n, edges)
            center = int(rng.integers(n))
            radius = int(rng.integers(1, 4))
            dist = bfs_dists(adj, center)
            inside = {u for u in range(n) if 0 <= dist[u] <= radius}
            sub = [(i, j) for i, j in edges if i in inside and j in inside]
            rest = [(i, j) for i, j in edges if i not in inside and j not in inside]
            outside_nodes = [u for u in range(n) if u not in inside]
            lp = longest_path(n, rest) if outside_nodes else 0
            assert exact_diameter(n, edges) <= diam_growth_bound(
                exact_diameter(n, sub), lp
            )
