"""Simple undirected graphs, trees, distances and graph powers."""
from __future__ import annotations

import random
import threading
from collections import deque
from typing import Iterable, Mapping, Sequence

UNREACHABLE = -1


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Immutable after construction; BFS distance arrays are cached per source.
    """

    __slots__ = ("n", "adj", "_dist", "_lock")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self._dist: dict[int, tuple[int, ...]] = {}
        self._lock = threading.Lock()

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> Graph:
        return cls(len(adj), ((u, v) for u, vs in enumerate(adj) for v in vs if u < v))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def distances_from(self, source: int) -> tuple[int, ...]:
        cached = self._dist.get(source)
        if cached is None:
            cached = tuple(bfs_distances(self, source))
            with self._lock:
                self._dist.setdefault(source, cached)
        return cached

    def dist(self, u: int, v: int) -> int:
        return self.distances_from(u)[v]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return UNREACHABLE not in self.distances_from(0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def bfs_distances(g: Graph, source: int, limit: int | None = None) -> list[int]:
    """Hop distances from ``source``; ``UNREACHABLE`` (-1) where there is no path.

    With ``limit`` the search stops expanding at that depth, so farther vertices
    also read as ``UNREACHABLE``.
    """
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range for n={g.n}")
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if limit is not None and dist[u] >= limit:
            continue
        for v in g.adj[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def power(g: Graph, p: int) -> Graph:
    """The graph on the same vertices joining every pair at distance 1..p."""
    if p < 1:
        raise ValueError("power must be at least 1")
    if p == 1:
        return g
    edges = []
    for u in range(g.n):
        d = bfs_distances(g, u, limit=p)
        edges.extend((u, v) for v in range(u + 1, g.n) if d[v] > 0)
    return Graph(g.n, edges)


class Tree:
    """A tree on an arbitrary set of integer vertex labels.

    Subtrees of a spanning tree keep the labels of the host graph, which is why
    this is not a :class:`Graph` (whose vertices are always ``0..n-1``).
    """

    __slots__ = ("nodes", "adj", "root", "parent", "_dist", "_lock")

    def __init__(self, adj: Mapping[int, Iterable[int]], root: int):
        self.adj: dict[int, tuple[int, ...]] = {v: tuple(sorted(ns)) for v, ns in adj.items()}
        self.nodes: tuple[int, ...] = tuple(sorted(self.adj))
        if root not in self.adj:
            raise ValueError(f"root {root} is not a vertex of the tree")
        self.root = root
        parent = {root: root}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in self.adj[u]:
                if v not in self.adj:
                    raise ValueError(f"neighbor {v} of {u} is not a vertex")
                if u not in self.adj[v]:
                    raise ValueError(f"edge ({u}, {v}) is not symmetric")
                if v not in parent:
                    parent[v] = u
                    queue.append(v)
        n_edges = sum(len(ns) for ns in self.adj.values()) // 2
        if len(parent) != len(self.nodes) or n_edges != len(self.nodes) - 1:
            raise ValueError("adjacency does not describe a tree")
        self.parent: dict[int, int] = parent
        self._dist: dict[int, dict[int, int]] = {}
        self._lock = threading.Lock()

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], root: int,
                   nodes: Iterable[int] = ()) -> Tree:
        adj: dict[int, set[int]] = {v: set() for v in nodes}
        adj.setdefault(root, set())
        for u, v in edges:
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        return cls(adj, root)

    def __len__(self) -> int:
        return len(self.nodes)

    def __contains__(self, v: object) -> bool:
        return v in self.adj

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self.nodes for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def distances_from(self, source: int) -> dict[int, int]:
        cached = self._dist.get(source)
        if cached is None:
            if source not in self.adj:
                raise ValueError(f"{source} is not a vertex of the tree")
            cached = {source: 0}
            queue = deque([source])
            while queue:
                u = queue.popleft()
                for v in self.adj[u]:
                    if v not in cached:
                        cached[v] = cached[u] + 1
                        queue.append(v)
            with self._lock:
                self._dist.setdefault(source, cached)
        return cached

    def dist(self, u: int, v: int) -> int:
        return self.distances_from(u)[v]

    def bfs_order(self) -> list[int]:
        order = [self.root]
        seen = {self.root}
        i = 0
        while i < len(order):
            for v in self.adj[order[i]]:
                if v not in seen:
                    seen.add(v)
                    order.append(v)
            i += 1
        return order

    def induced(self, vertices: Iterable[int], root: int | None = None) -> Tree:
        """Subtree spanned by ``vertices`` (which must induce a connected subgraph)."""
        keep = set(vertices)
        if root is None:
            root = next(v for v in self.bfs_order() if v in keep)
        return Tree({v: [w for w in self.adj[v] if w in keep] for v in keep}, root)

    def __repr__(self) -> str:
        return f"Tree(n={len(self.nodes)}, root={self.root})"


def spanning_tree(g: Graph) -> Tree:
    """BFS tree from vertex 0 with neighbors taken in ascending order."""
    if g.n == 0:
        raise ValueError("empty graph has no spanning tree")
    parent = {0: 0}
    queue = deque([0])
    edges = []
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if v not in parent:
                parent[v] = u
                edges.append((u, v))
                queue.append(v)
    if len(parent) != g.n:
        raise ValueError("graph is disconnected")
    return Tree.from_edges(edges, 0, nodes=range(g.n))


def steiner_subtree(t: Tree, s: Iterable[int]) -> Tree:
    """Smallest subtree of ``t`` containing every vertex of ``s``."""
    terminals = set(s)
    if not terminals:
        raise ValueError("terminal set must be non-empty")
    missing = terminals.difference(t.adj)
    if missing:
        raise ValueError(f"vertices {sorted(missing)} are not in the tree")
    keep = set(t.nodes)
    deg = {v: len(t.adj[v]) for v in keep}
    stack = [v for v in keep if deg[v] <= 1 and v not in terminals]
    while stack:
        v = stack.pop()
        if v not in keep:
            continue
        keep.discard(v)
        for w in t.adj[v]:
            if w in keep:
                deg[w] -= 1
                if deg[w] <= 1 and w not in terminals:
                    stack.append(w)
    return t.induced(keep)


def tree_path(t: Tree, u: int, v: int) -> list[int]:
    """The unique path from ``u`` to ``v`` in ``t``, endpoints included."""
    if u not in t or v not in t:
        raise ValueError(f"({u}, {v}) not both in tree")
    du = t.distances_from(u)
    path = [v]
    while path[-1] != u:
        x = path[-1]
        path.append(next(w for w in t.adj[x] if du[w] == du[x] - 1))
    path.reverse()
    return path


def leaves(t: Tree) -> set[int]:
    """Degree-1 vertices; a one-vertex tree counts its vertex as a leaf."""
    if len(t) == 1:
        return {t.root}
    return {v for v in t.nodes if len(t.adj[v]) == 1}


# ---- generators -----------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def prufer_to_edges(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return edges


def random_tree(n: int, seed: int | random.Random) -> Graph:
    """Uniform random labelled tree via a Pruefer sequence."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if n <= 0:
        raise ValueError("tree needs at least one vertex")
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    return Graph(n, prufer_to_edges([rng.randrange(n) for _ in range(n - 2)], n))


def random_connected(n: int, m: int, seed: int | random.Random) -> Graph:
    """Random tree on ``n`` vertices plus random extra edges up to ``m`` in total."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    max_m = n * (n - 1) // 2
    if not n - 1 <= m <= max_m:
        raise ValueError(f"edge count {m} outside [{n - 1}, {max_m}]")
    edges = set(tuple(sorted(e)) for e in random_tree(n, rng).edges())
    others = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    edges.update(rng.sample(others, m - len(edges)))
    return Graph(n, sorted(edges))
