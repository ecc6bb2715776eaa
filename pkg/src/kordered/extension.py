"""Growing an ordered cycle in a subtree power into a Hamiltonian one.

Given a subtree U of a tree T and a cycle in U^p that passes through the anchors
in order, contains every leaf of U and keeps each leaf close to one of its cycle
neighbors, missing vertices of U are spliced into cycle edges that jump over
them, then every component hanging off U is attached as one punctured cube path.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvariantViolation
from .graph import Tree, leaves
from .hampath import path_minus_vertex


@dataclass(frozen=True)
class OrderedCycle:
    cycle: tuple[int, ...]
    anchors: tuple[int, ...]

    def __post_init__(self):
        if len(self.cycle) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(self.cycle)) != len(self.cycle):
            raise ValueError("cycle repeats a vertex")
        if not in_cyclic_order(self.cycle, self.anchors):
            raise ValueError("anchors are not in cyclic order along the cycle")


def in_cyclic_order(cycle: Sequence[int], anchors: Sequence[int]) -> bool:
    """True if ``anchors`` occur along ``cycle`` in order, in either direction."""
    pos = {v: i for i, v in enumerate(cycle)}
    if any(a not in pos for a in anchors):
        return False
    if len(anchors) <= 2:
        return True
    n = len(cycle)
    start = pos[anchors[0]]
    fwd = [(pos[a] - start) % n for a in anchors]
    bwd = [(start - pos[a]) % n for a in anchors]
    return all(x < y for x, y in zip(fwd, fwd[1:])) or all(x < y for x, y in zip(bwd, bwd[1:]))


def orient(cycle: Sequence[int], anchors: Sequence[int]) -> list[int]:
    """Rotate/reflect ``cycle`` so it starts at anchors[0] and meets them in order."""
    cycle = list(cycle)
    i = cycle.index(anchors[0])
    cycle = cycle[i:] + cycle[:i]
    if len(anchors) >= 2 and len(cycle) > 2:
        pos = {v: j for j, v in enumerate(cycle)}
        seq = [pos[a] for a in anchors]
        if any(x > y for x, y in zip(seq, seq[1:])):
            cycle = [cycle[0]] + cycle[:0:-1]
    return cycle


def leaf_violations(tree: Tree, cycle: Sequence[int], p: int,
                    leaf_set: set[int] | None = None) -> list[int]:
    """Leaves of ``tree`` on ``cycle`` lacking a close enough cycle neighbor.

    A leaf x is fine if a cycle neighbor y has d(x, y) <= p - 2, or d(x, y) = p - 1
    and y is not itself a leaf.
    """
    leaf_set = leaves(tree) if leaf_set is None else leaf_set
    n = len(cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    bad = []
    for x in sorted(leaf_set):
        if x not in pos:
            continue
        i = pos[x]
        ok = False
        for y in (cycle[i - 1], cycle[(i + 1) % n]):
            d = tree.dist(x, y)
            if d <= p - 2 or (d == p - 1 and y not in leaf_set):
                ok = True
        if not ok:
            bad.append(x)
    return bad


def _check_hops(tree: Tree, cycle: Sequence[int], p: int, what: str) -> None:
    n = len(cycle)
    for i in range(n):
        u, v = cycle[i], cycle[(i + 1) % n]
        if tree.dist(u, v) > p:
            raise InvariantViolation(f"{what}: hop {u}-{v} has distance {tree.dist(u, v)} > {p}")


def _labels_without(tree: Tree, nodes: set[int], cut: int) -> dict[int, int]:
    """Component label of every vertex of ``nodes`` once ``cut`` is removed."""
    label: dict[int, int] = {}
    for r in tree.adj[cut]:
        if r not in nodes or r in label:
            continue
        label[r] = r
        stack = [r]
        while stack:
            u = stack.pop()
            for v in tree.adj[u]:
                if v in nodes and v != cut and v not in label:
                    label[v] = r
                    stack.append(v)
    return label


def _crossing_edge(tree: Tree, nodes: set[int], cycle: list[int], cut: int) -> int:
    """Index i such that cycle[i], cycle[i+1] avoid ``cut`` and sit on opposite sides."""
    label = _labels_without(tree, nodes, cut)
    n = len(cycle)
    for i in range(n):
        x, z = cycle[i], cycle[(i + 1) % n]
        if x != cut and z != cut and label[x] != label[z]:
            return i
    raise InvariantViolation(f"no cycle edge jumps over vertex {cut}")


def insert_missing(tree: Tree, cycle: Sequence[int], p: int) -> list[int]:
    """Splice every vertex of ``tree`` not on ``cycle`` into an edge jumping over it."""
    cycle = list(cycle)
    nodes = set(tree.nodes)
    on_cycle = set(cycle)
    for y in sorted(nodes - on_cycle):
        if tree.degree(y) < 2:
            raise InvariantViolation(f"leaf {y} is missing from the cycle")
        i = _crossing_edge(tree, nodes, cycle, y)
        cycle.insert(i + 1, y)
    _check_hops(tree, cycle, p, "saturation")
    return cycle


def saturate_subtree(u: Tree, p: int, c: OrderedCycle) -> OrderedCycle:
    """Hamiltonian cycle of ``u``^p extending ``c`` with the anchor order kept."""
    if p < 3:
        raise ValueError("power must be at least 3")
    cyc = list(c.cycle)
    stray = [v for v in cyc if v not in u]
    if stray:
        raise ValueError(f"(hops) cycle uses vertices {stray} outside the subtree")
    for i in range(len(cyc)):
        a, b = cyc[i], cyc[(i + 1) % len(cyc)]
        if u.dist(a, b) > p:
            raise ValueError(f"(hops) edge {a}-{b} is not in the subtree power")
    missing_leaves = leaves(u) - set(cyc)
    if missing_leaves:
        raise ValueError(f"(ii) leaves {sorted(missing_leaves)} not on the cycle")
    bad = leaf_violations(u, cyc, p)
    if bad:
        raise ValueError(f"(iii) leaves {bad} have no close cycle neighbor")
    if len(cyc) == len(u):
        return c
    full = insert_missing(u, cyc, p)
    bad = leaf_violations(u, full, p)
    if bad:
        raise InvariantViolation(f"saturation broke the leaf condition at {bad}")
    return OrderedCycle(tuple(full), c.anchors)


def _hanging_components(t: Tree, u: Tree) -> list[tuple[int, set[int]]]:
    in_u = set(u.nodes)
    comps = []
    for a in u.nodes:
        outside = [x for x in t.adj[a] if x not in in_u]
        if not outside:
            continue
        comp = {a}
        stack = outside[:]
        comp.update(outside)
        while stack:
            x = stack.pop()
            for y in t.adj[x]:
                if y not in comp and y not in in_u:
                    comp.add(y)
                    stack.append(y)
        comps.append((a, comp))
    return comps


def attach_components(t: Tree, u: Tree, p: int, c: OrderedCycle) -> OrderedCycle:
    """Hamiltonian cycle of ``t``^p from a Hamiltonian ordered cycle of ``u``^p.

    Each component of T - E(U) with attachment vertex a is inserted as a punctured
    cube path w1 ... w2: across a cycle edge jumping over a when a is not a leaf of
    the current tree, otherwise next to the cycle neighbor witnessing a's leaf
    condition.
    """
    if p < 3:
        raise ValueError("power must be at least 3")
    if any(v not in t for v in u.nodes):
        raise ValueError("subtree is not contained in the tree")
    if set(c.cycle) != set(u.nodes):
        raise ValueError("cycle is not Hamiltonian on the subtree")
    u_leaves = leaves(u)
    cycle = list(c.cycle)
    current = set(u.nodes)

    for a, comp in _hanging_components(t, u):
        path, w1, w2 = path_minus_vertex(t.adj, comp, a)
        if t.dist(a, w1) != 1 or t.dist(a, w2) > 2:
            raise InvariantViolation(f"punctured path at {a} has bad endpoints")
        n = len(cycle)
        # each attachment vertex carries one component, so its degree in the
        # current tree is still its degree in U
        if len(u.adj[a]) >= 2:
            i = _crossing_edge(t, current, cycle, a)
            x, z = cycle[i], cycle[(i + 1) % n]
            if t.dist(x, a) >= t.dist(z, a):
                piece = path
            else:
                x, z = z, x
                piece = path[::-1]
            if t.dist(x, w1) > p or t.dist(z, w2) > p:
                raise InvariantViolation(
                    f"splice at {a} across ({x},{z}) needs hops "
                    f"{t.dist(x, w1)}, {t.dist(z, w2)} > {p}")
            cycle[i + 1:i + 1] = piece
        else:
            i = cycle.index(a)
            chosen = None
            for j in (i - 1, (i + 1) % n):
                y = cycle[j]
                d = t.dist(a, y)
                if d <= p - 2 or (d == p - 1 and y not in u_leaves):
                    chosen = j
                    break
            if chosen is None:
                raise InvariantViolation(f"leaf {a} has no neighbor meeting the leaf condition")
            y = cycle[chosen]
            if t.dist(y, w1) > p or t.dist(w2, a) > 2:
                raise InvariantViolation(f"leaf splice at {a} next to {y} exceeds bounds")
            # insert y w1 .. w2 a
            if chosen == (i + 1) % n:
                cycle[i + 1:i + 1] = path[::-1]
            else:
                cycle[i:i] = path
        current |= comp

    _check_hops(t, cycle, p, "attachment")
    if set(cycle) != set(t.nodes) or len(cycle) != len(t):
        raise InvariantViolation("attached cycle is not Hamiltonian on the tree")
    if not in_cyclic_order(cycle, c.anchors):
        raise InvariantViolation("attachment changed the anchor order")
    return OrderedCycle(tuple(cycle), c.anchors)
