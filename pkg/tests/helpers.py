"""Reference checks used by the tests.

These recompute everything from first principles (networkx distances, plain
permutation search) so they share no code with the package under test.
"""
from __future__ import annotations

import itertools
import random

import networkx as nx
from hypothesis import strategies as st

from kordered.graph import Graph, Tree


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def all_distances(g: Graph) -> dict[int, dict[int, int]]:
    return dict(nx.all_pairs_shortest_path_length(to_nx(g)))


def tree_distances(t: Tree) -> dict[int, dict[int, int]]:
    h = nx.Graph()
    h.add_nodes_from(t.nodes)
    h.add_edges_from(t.edges())
    return dict(nx.all_pairs_shortest_path_length(h))


def in_order(cycle, anchors) -> bool:
    """Anchors appear along the cycle in the given order, in one of the two directions."""
    cyc = list(cycle)
    for seq in (cyc, cyc[::-1]):
        i = seq.index(anchors[0])
        rot = seq[i:] + seq[:i]
        pos = [rot.index(a) for a in anchors]
        if pos == sorted(pos):
            return True
    return False


def is_ordered_cycle(dist, cycle, anchors, p, n=None) -> bool:
    cyc = list(cycle)
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        return False
    if n is not None and sorted(cyc) != list(range(n)):
        return False
    if any(dist[cyc[i]].get(cyc[(i + 1) % len(cyc)], 10**9) > p for i in range(len(cyc))):
        return False
    return all(a in cyc for a in anchors) and in_order(cyc, anchors)


def leaf_condition_ok(tree, cycle) -> bool:
    """Each leaf has a cycle neighbor at distance <= 2, or at distance 3 that is not a leaf."""
    d = tree_distances(tree)
    lv = {v for v in tree.nodes if len(tree.adj[v]) <= 1}
    n = len(cycle)
    for i, v in enumerate(cycle):
        if v not in lv:
            continue
        nbrs = (cycle[i - 1], cycle[(i + 1) % n])
        if not any(d[v][w] <= 2 or (d[v][w] == 3 and w not in lv) for w in nbrs):
            return False
    return True


def brute_ordered_cycle(g: Graph, anchors, hamiltonian: bool) -> bool:
    """Plain enumeration of vertex orders; only usable for n <= 8."""
    others = [v for v in range(g.n) if v not in anchors]
    sizes = [len(others)] if hamiltonian else range(len(others) + 1)
    for s in sizes:
        for extra in itertools.combinations(others, s):
            for perm in itertools.permutations(list(anchors[1:]) + list(extra)):
                cyc = [anchors[0], *perm]
                if len(cyc) < 3:
                    continue
                if all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))) \
                        and in_order(cyc, anchors):
                    return True
    return False


def random_graph(rng: random.Random, n: int, extra: int | None = None) -> Graph:
    """Connected graph: a random labelled tree plus random extra edges."""
    perm = list(range(n))
    rng.shuffle(perm)
    edges = {tuple(sorted((perm[i], perm[rng.randrange(i)]))) for i in range(1, n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    extra = rng.randint(0, n) if extra is None else extra
    edges |= set(rng.sample(pairs, min(extra, len(pairs))))
    return Graph(n, sorted(edges))


def random_tree_graph(rng: random.Random, n: int) -> Graph:
    return random_graph(rng, n, extra=0)


def as_tree(g: Graph, root: int = 0) -> Tree:
    return Tree({v: g.adj[v] for v in range(g.n)}, root)


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 20, max_extra: int | None = None):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    extra = draw(st.integers(0, max_extra if max_extra is not None else n))
    return random_graph(rng, n, extra)


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 20):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return as_tree(random_tree_graph(random.Random(seed), n))


@st.composite
def graphs_with_anchors(draw, k_min: int, k_max: int, max_n: int = 30, max_extra=None):
    k = draw(st.integers(k_min, k_max))
    g = draw(connected_graphs(min_n=k, max_n=max(k, max_n), max_extra=max_extra))
    anchors = draw(st.permutations(range(g.n)).map(lambda p: list(p[:k])))
    return g, anchors
