"""Hamiltonian paths in cubes of trees."""
from __future__ import annotations

from typing import Mapping, Sequence

from .errors import InvariantViolation
from .graph import Tree


def _component(adj: Mapping[int, Sequence[int]], nodes: set[int], start: int,
               blocked: int) -> set[int]:
    comp = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v in nodes and v != blocked and v not in comp:
                comp.add(v)
                stack.append(v)
    return comp


def _first_step(adj: Mapping[int, Sequence[int]], nodes: set[int], src: int, dst: int) -> int:
    """Neighbor of ``src`` on the path to ``dst`` inside the subtree ``nodes``."""
    prev = {dst: dst}
    stack = [dst]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v in nodes and v not in prev:
                prev[v] = u
                if v == src:
                    return u
                stack.append(v)
    raise ValueError(f"{src} and {dst} are not connected")


def ham_path_in_cube(adj: Mapping[int, Sequence[int]], nodes: set[int],
                     v1: int, v2: int) -> list[int]:
    """Hamiltonian path of (subtree on ``nodes``)^3 from ``v1`` to ``v2``.

    Splits along the first edge (v1, w2) of the v1-v2 path and recurses on both
    sides; an explicit work stack keeps deep paths clear of the recursion limit.
    """
    out: list[int] = []
    work = [(nodes, v1, v2)]
    while work:
        part, a, b = work.pop()
        if len(part) == 1:
            out.append(a)
            continue
        w1, w2 = a, _first_step(adj, part, a, b)
        side1 = _component(adj, part, w1, w2)
        side2 = part - side1
        u1 = w1 if len(side1) == 1 else min(x for x in adj[w1] if x in side1)
        if w2 != b or len(side2) == 1:
            u2 = w2
        else:
            u2 = min(x for x in adj[w2] if x in side2)
        # stack order: side 1 is emitted before side 2
        work.append((side2, u2, b))
        work.append((side1, a, u1))
    return out


def ham_path_cube(t: Tree, v1: int, v2: int) -> list[int]:
    """Hamiltonian path of ``t``^3 from ``v1`` to ``v2``."""
    if len(t) < 2:
        raise ValueError("tree must have at least 2 vertices")
    if v1 == v2:
        raise ValueError("endpoints must be distinct")
    if v1 not in t or v2 not in t:
        raise ValueError("endpoints must be tree vertices")
    return ham_path_in_cube(t.adj, set(t.nodes), v1, v2)


def path_minus_vertex(adj: Mapping[int, Sequence[int]], nodes: set[int],
                      removed: int) -> tuple[list[int], int, int]:
    rest = nodes - {removed}
    if not rest:
        raise ValueError("tree must have at least 2 vertices")
    roots = sorted(x for x in adj[removed] if x in rest)
    comps = [_component(adj, rest, r, removed) for r in roots]
    comps.sort(key=min)
    path: list[int] = []
    ends = []
    for comp in comps:
        a = next(x for x in adj[removed] if x in comp)
        b = a if len(comp) == 1 else min(x for x in adj[a] if x in comp)
        path.extend([a] if len(comp) == 1 else ham_path_in_cube(adj, comp, a, b))
        ends.append((a, b))
    return path, ends[0][0], ends[-1][1]


def ham_path_minus_root(w: Tree, removed: int) -> tuple[list[int], int, int]:
    """Hamiltonian path of ``w``^3 - ``removed`` with endpoints (w1, w2).

    ``w1`` is a tree neighbor of ``removed`` and ``w2`` lies within distance 2 of it.
    Components of ``w - removed`` are visited in ascending order of their
    smallest vertex.
    """
    if len(w) < 2:
        raise ValueError("tree must have at least 2 vertices")
    if removed not in w:
        raise ValueError(f"{removed} is not a vertex of the tree")
    path, w1, w2 = path_minus_vertex(w.adj, set(w.nodes), removed)
    if w.dist(removed, w1) != 1 or w.dist(removed, w2) > 2:
        raise InvariantViolation("endpoint distance bound broken in punctured path")
    return path, w1, w2
