import itertools
import random

import networkx as nx
import pytest
from hypothesis import given

from helpers import (all_distances, graphs_with_anchors, is_ordered_cycle, leaf_condition_ok,
                     tree_distances)
from kordered.certificate import verify
from kordered.extension import leaf_violations
from kordered.four import (FOUR_31, FOUR_32, THREE_21, THREE_22, TWO_LEAVES, classify_shape,
                           four_ordered_hamiltonian, path_parameters, square_path, tbar_cycle)
from kordered.graph import Graph, Tree, complete_graph, leaves, path_graph, steiner_subtree


def check_tbar(tree, anchors):
    shape = classify_shape(tree, anchors)
    out = tbar_cycle(shape)
    d = tree_distances(tree)
    assert is_ordered_cycle(d, out.cycle, anchors, 4)
    assert sorted(out.cycle) == sorted(tree.nodes)
    assert leaf_condition_ok(tree, out.cycle)
    assert leaf_violations(tree, out.cycle, 4) == []
    return shape


def spider(legs):
    edges, nxt, ends = [], 1, []
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
        ends.append(prev)
    return Tree.from_edges(edges, 0), ends


class TestParameters:
    @pytest.mark.parametrize("gap", range(4))
    def test_feasible_for_every_class(self, gap):
        a, b, c, d = path_parameters(gap)
        assert {a, b, c, d} <= {1, 2, 3}
        assert (a + b - gap) % 4 == 0 and c != a and d != b and (c + d - gap) % 4 != 0

    def test_lexicographically_smallest(self):
        assert path_parameters(0) == (1, 3, 2, 1)

    def test_square_path(self):
        assert square_path([0, 1, 2, 3, 4]) == [0, 2, 4, 3, 1]
        assert square_path([7]) == [7]


class TestClassify:
    def test_path(self):
        t = Tree.from_edges([(i, i + 1) for i in range(5)], 0)
        assert classify_shape(t, [0, 2, 5, 3]).kind == TWO_LEAVES

    def test_three_leaves_case_21(self):
        t, (v1, v2, v3) = spider([3, 1, 1])
        shape = classify_shape(t, [v1, v2, v3, 1])
        assert shape.kind == THREE_21

    def test_three_leaves_mirror(self):
        t, (v1, v2, v3) = spider([1, 1, 3])
        shape = classify_shape(t, [v1, v2, v3, 4])
        assert shape.kind == THREE_21 and shape.order[0] == v3

    def test_three_leaves_case_22(self):
        t, (v1, v2, v3) = spider([1, 3, 1])
        assert classify_shape(t, [v1, v2, v3, 2]).kind == THREE_22

    def test_four_leg_spider(self):
        t, ends = spider([1, 2, 1, 2])
        shape = classify_shape(t, ends)
        assert shape.kind == FOUR_31 and shape.landmarks["m"] == 0

    def test_four_leaves_sides(self):
        # centers 0 and 1, legs 2,3 on 0 and 4,5 on 1
        t = Tree.from_edges([(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)], 0)
        assert classify_shape(t, [2, 3, 4, 5]).kind == FOUR_31
        assert classify_shape(t, [2, 4, 5, 3]).kind == FOUR_31
        shape = classify_shape(t, [2, 4, 3, 5])
        assert shape.kind == FOUR_32 and shape.landmarks["m"] == 1
        P = shape.landmarks["P"]
        assert t.dist(P[0], P[-1]) == shape.landmarks["m"]

    def test_too_many_leaves(self):
        t, ends = spider([1, 1, 1, 1, 1])
        with pytest.raises(ValueError):
            classify_shape(t, ends[:4])

    def test_leaf_not_anchor(self):
        t, ends = spider([1, 1, 1])
        with pytest.raises(ValueError):
            classify_shape(t, [ends[0], ends[1], 0, 99])
        with pytest.raises(ValueError):
            classify_shape(Tree.from_edges([(0, 1), (1, 2), (2, 3), (3, 4)], 0), [0, 1, 2, 3])


class TestTbarCycle:
    def test_path_on_four(self):
        t = Tree.from_edges([(0, 1), (1, 2), (2, 3)], 0)
        out = tbar_cycle(classify_shape(t, [0, 1, 2, 3]))
        assert list(out.cycle) == [0, 1, 2, 3]

    def test_exhaustive_small_trees(self):
        """Every tree on <= 9 vertices with <= 4 leaves, every anchor set and order."""
        seen = set()
        for n in range(4, 10):
            for nt in nx.nonisomorphic_trees(n):
                t = Tree({v: list(nt[v]) for v in nt}, 0)
                lv = leaves(t)
                if len(lv) > 4:
                    continue
                inner = [v for v in t.nodes if v not in lv]
                for extra in itertools.combinations(inner, 4 - len(lv)):
                    base = sorted(lv) + list(extra)
                    for perm in itertools.permutations(base):
                        seen.add(check_tbar(t, perm).kind)
        assert seen == {TWO_LEAVES, THREE_21, THREE_22, FOUR_31, FOUR_32}

    def test_long_legs(self):
        rng = random.Random(2)
        for _ in range(400):
            m = rng.randint(0, 12)
            legs = [rng.randint(1, 9) for _ in range(4)]
            edges = [(i, i + 1) for i in range(m)]
            nxt, ends = m + 1, []
            for j, length in enumerate(legs):
                prev = 0 if j < 2 else m
                for _ in range(length):
                    edges.append((prev, nxt))
                    prev, nxt = nxt, nxt + 1
                ends.append(prev)
            t = Tree.from_edges(edges, 0)
            if rng.random() < 0.5:
                anchors = ends[:3] + [rng.choice([v for v in t.nodes if v not in ends])]
            else:
                anchors = list(ends)
            rng.shuffle(anchors)
            check_tbar(steiner_subtree(t, anchors), anchors)


class TestFourOrdered:
    def test_complete_graph(self):
        g = complete_graph(4)
        for perm in itertools.permutations(range(4)):
            cert = four_ordered_hamiltonian(g, perm)
            assert cert.power == 4 and verify(g, cert).ok

    def test_path_seven_lower_bound_instance(self):
        g = path_graph(7)
        cert = four_ordered_hamiltonian(g, [0, 5, 1, 6])
        assert cert.power == 4 and verify(g, cert).ok

    @given(graphs_with_anchors(4, 4, max_n=30))
    def test_random_graphs(self, inst):
        g, anchors = inst
        cert = four_ordered_hamiltonian(g, anchors)
        assert cert.construction == "four"
        assert is_ordered_cycle(all_distances(g), cert.cycle, anchors, 4, n=g.n)

    def test_wrong_anchor_count(self):
        with pytest.raises(ValueError):
            four_ordered_hamiltonian(complete_graph(5), [0, 1, 2, 3, 4])
        with pytest.raises(ValueError):
            four_ordered_hamiltonian(Graph(4, [(0, 1), (1, 2), (2, 3)]), [0, 1, 2])
