import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import as_tree, tree_distances, trees
from kordered.graph import Tree, path_graph
from kordered.hampath import ham_path_cube, ham_path_minus_root


def check_path(t: Tree, path, p=3, cover=None):
    d = tree_distances(t)
    cover = set(t.nodes) if cover is None else cover
    assert sorted(path) == sorted(cover)
    for a, b in zip(path, path[1:]):
        assert d[a][b] <= p, (a, b, d[a][b])


class TestCube:
    def test_two_vertices(self):
        assert ham_path_cube(as_tree(path_graph(2)), 0, 1) == [0, 1]

    def test_three_vertex_line(self):
        assert ham_path_cube(as_tree(path_graph(3)), 0, 1) == [0, 2, 1]

    def test_same_endpoint_rejected(self):
        with pytest.raises(ValueError):
            ham_path_cube(as_tree(path_graph(4)), 2, 2)

    def test_single_vertex_rejected(self):
        with pytest.raises(ValueError):
            ham_path_cube(Tree({0: ()}, 0), 0, 0)

    def test_all_small_trees_all_pairs(self):
        for n in range(2, 10):
            for nt in nx.nonisomorphic_trees(n):
                t = Tree({v: list(nt[v]) for v in nt}, 0)
                for v1, v2 in itertools.permutations(range(n), 2):
                    path = ham_path_cube(t, v1, v2)
                    assert path[0] == v1 and path[-1] == v2
                    check_path(t, path)

    @given(trees(min_n=2, max_n=40), st.data())
    def test_random(self, t, data):
        v1, v2 = data.draw(st.lists(st.sampled_from(sorted(t.nodes)), min_size=2, max_size=2,
                                    unique=True))
        path = ham_path_cube(t, v1, v2)
        assert (path[0], path[-1]) == (v1, v2)
        check_path(t, path)

    def test_non_contiguous_labels(self):
        t = Tree.from_edges([(10, 20), (20, 30), (20, 40), (40, 50)], 10)
        path = ham_path_cube(t, 50, 30)
        assert (path[0], path[-1]) == (50, 30)
        check_path(t, path)


class TestMinusRoot:
    def test_edge(self):
        assert ham_path_minus_root(as_tree(path_graph(2)), 0) == ([1], 1, 1)

    def test_star(self):
        t = Tree.from_edges([(0, 1), (0, 2), (0, 3)], 0)
        path, w1, w2 = ham_path_minus_root(t, 0)
        assert sorted(path) == [1, 2, 3]
        assert t.dist(0, w1) == 1 and t.dist(0, w2) == 1

    def test_single_vertex_rejected(self):
        with pytest.raises(ValueError):
            ham_path_minus_root(Tree({0: ()}, 0), 0)

    @given(trees(min_n=2, max_n=14), st.data())
    def test_every_removed_vertex(self, t, data):
        removed = data.draw(st.sampled_from(sorted(t.nodes)))
        path, w1, w2 = ham_path_minus_root(t, removed)
        assert path[0] == w1 and path[-1] == w2
        check_path(t, path, cover=set(t.nodes) - {removed})
        assert t.dist(removed, w1) == 1
        assert t.dist(removed, w2) <= 2

    def test_exhaustive_small(self):
        for n in range(2, 10):
            for nt in nx.nonisomorphic_trees(n):
                t = Tree({v: list(nt[v]) for v in nt}, 0)
                for r in range(n):
                    path, w1, w2 = ham_path_minus_root(t, r)
                    check_path(t, path, cover=set(t.nodes) - {r})
                    assert t.dist(r, w1) == 1 and t.dist(r, w2) <= 2
