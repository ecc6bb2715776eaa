"""Ordered Hamiltonian cycles through 4 anchors in the fourth power of a tree.

The Steiner tree of four anchors has 2, 3 or 4 leaves.  Each shape gets its own
explicit cycle in the fourth power of the Steiner tree, built so that every leaf
anchor keeps a cycle neighbor at distance <= 2 (or a non-leaf at distance 3);
the remaining vertices of the host tree are then attached component by component.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Sequence

from .certificate import CycleCertificate
from .errors import InvariantViolation
from .extension import (OrderedCycle, attach_components, in_cyclic_order, insert_missing,
                        leaf_violations, orient)
from .general import check_anchors
from .graph import Graph, Tree, leaves, spanning_tree, steiner_subtree, tree_path

TWO_LEAVES = "TwoLeaves"
THREE_21 = "ThreeLeaves-2.1"
THREE_22 = "ThreeLeaves-2.2"
FOUR_31 = "FourLeaves-3.1"
FOUR_32 = "FourLeaves-3.2"


@dataclass(frozen=True)
class TreeShape:
    kind: str
    tree: Tree
    anchors: tuple[int, ...]      # as requested
    order: tuple[int, ...]        # rotated/reflected so the canonical case applies
    landmarks: dict[str, Any] = field(default_factory=dict)


def square_path(seq: Sequence[int]) -> list[int]:
    """Hamiltonian path of (path ``seq``)^2 from seq[0] to seq[1]: evens out, odds back."""
    seq = list(seq)
    return seq[0::2] + seq[1::2][::-1]


def path_parameters(gap: int) -> tuple[int, int, int, int]:
    """Smallest (a, b, c, d) in {1,2,3}^4 with a+b = gap, c != a, d != b, c+d != gap (mod 4)."""
    for a, b, c, d in product((1, 2, 3), repeat=4):
        if (a + b - gap) % 4 == 0 and c != a and d != b and (c + d - gap) % 4:
            return a, b, c, d
    raise InvariantViolation(f"no path parameters for middle gap {gap}")


def classify_shape(tbar: Tree, anchors: Sequence[int]) -> TreeShape:
    anchors = tuple(anchors)
    if len(anchors) != 4 or len(set(anchors)) != 4:
        raise ValueError("need 4 distinct anchors")
    if any(a not in tbar for a in anchors):
        raise ValueError("anchors must be vertices of the tree")
    lv = leaves(tbar)
    if len(lv) > 4:
        raise ValueError(f"tree has {len(lv)} leaves, more than 4")
    if not lv <= set(anchors):
        raise ValueError(f"leaves {sorted(lv - set(anchors))} are not anchors")

    if len(lv) == 2:
        a, b = sorted(lv)
        path = tree_path(tbar, a, b)
        return TreeShape(TWO_LEAVES, tbar, anchors, anchors, {"path": path})

    if len(lv) == 3:
        j = next(i for i, v in enumerate(anchors) if v not in lv)
        order = anchors[j + 1:] + anchors[:j + 1]
        v0 = next(v for v in tbar.nodes if tbar.degree(v) == 3)
        v1, v2, v3, v4 = order
        if v4 == v0 or v4 in tree_path(tbar, v0, v1):
            kind = THREE_21
        elif v4 in tree_path(tbar, v0, v3):
            kind = THREE_21
            order = (v3, v2, v1, v4)
        else:
            kind = THREE_22
        return TreeShape(kind, tbar, anchors, order, {"v0": v0})

    branch = [v for v in tbar.nodes if tbar.degree(v) >= 3]
    v1 = anchors[0]
    if len(branch) == 1:
        u0 = um = branch[0]
    else:
        b1, b2 = branch
        u0, um = (b1, b2) if tbar.dist(v1, b1) < tbar.dist(v1, b2) else (b2, b1)
    P = tree_path(tbar, u0, um)
    m = len(P) - 1

    def side(v: int) -> int:
        return u0 if tbar.dist(v, u0) < tbar.dist(v, um) or m == 0 else um

    _, v2, v3, v4 = anchors
    if m == 0 or side(v2) == u0:
        kind, order = FOUR_31, anchors
    elif side(v4) == u0:
        kind, order = FOUR_31, (v1, v4, v3, v2)
    else:
        kind, order = FOUR_32, anchors
    ends = [u0, um, u0, um] if kind == FOUR_32 else [u0, u0, um, um]
    legs = [tree_path(tbar, e, v) for e, v in zip(ends, order)]
    return TreeShape(kind, tbar, anchors, order, {"P": P, "m": m, "legs": legs})


class _Walk:
    """Cycle under construction; every appended vertex is checked on the spot."""

    def __init__(self, tree: Tree, case: str):
        self.tree = tree
        self.case = case
        self.seq: list[int] = []
        self.used: set[int] = set()
        self.step = "?"

    def fail(self, msg: str) -> InvariantViolation:
        return InvariantViolation(f"case {self.case}, step {self.step}: {msg}")

    def go(self, v: int) -> None:
        if v in self.used:
            raise self.fail(f"vertex {v} already used")
        if self.seq and self.tree.dist(self.seq[-1], v) > 4:
            raise self.fail(f"hop {self.seq[-1]}-{v} has distance "
                            f"{self.tree.dist(self.seq[-1], v)} > 4")
        self.seq.append(v)
        self.used.add(v)

    def extend(self, vs: Sequence[int]) -> None:
        for v in vs:
            self.go(v)

    def last(self) -> int:
        return self.seq[-1]

    def first_unused(self, options: Sequence[int]) -> int:
        for v in options:
            if v not in self.used:
                return v
        raise self.fail(f"all of {list(options)} already used")


def _case_path(shape: TreeShape) -> list[int]:
    path = shape.landmarks["path"]
    pos = {v: i for i, v in enumerate(path)}
    p1, p2, p3, p4 = sorted(pos[v] for v in shape.order)
    w = [path[p] for p in (p1, p2, p3, p4)]
    a, b, c, d = path_parameters(p3 - p2)
    shape.landmarks["params"] = (a, b, c, d)

    def cls(lo: int, hi: int, rho: int, skip: Sequence[int] = ()) -> list[int]:
        return [path[q] for q in range(lo + 1, hi) if q % 4 == rho and q not in skip]

    R = {
        (0, 3): [w[0]] + cls(p1, p4, (p2 + a) % 4, (p2, p3)) + [w[3]],
        (0, 2): [w[0]] + cls(p1, p3, (p2 + c) % 4, (p2,)) + [w[2]],
        (1, 3): [w[1]] + cls(p2, p4, (p3 - d) % 4, (p3,)) + [w[3]],
    }
    taken = {v for r in R.values() for v in r[1:-1]}
    for i, (lo, hi) in enumerate(((p1, p2), (p2, p3), (p3, p4))):
        R[(i, i + 1)] = [w[i]] + [path[q] for q in range(lo + 1, hi) if path[q] not in taken] + [w[i + 1]]

    idx = [w.index(v) for v in shape.order]
    cycle: list[int] = []
    for s in range(4):
        i, j = idx[s], idx[(s + 1) % 4]
        seg = R[(i, j)] if i < j else R[(j, i)][::-1]
        cycle.extend(seg[:-1])
    for i in range(len(cycle)):
        x, y = cycle[i], cycle[(i + 1) % len(cycle)]
        if shape.tree.dist(x, y) > 4:
            raise InvariantViolation(f"case {TWO_LEAVES}: hop {x}-{y} exceeds 4")
    if len(set(cycle)) != len(cycle):
        raise InvariantViolation(f"case {TWO_LEAVES}: skip paths intersect")
    return insert_missing(shape.tree, cycle, 4)


def _case_21(shape: TreeShape) -> list[int]:
    tr = shape.tree
    v1, v2, v3, v4 = shape.order
    v0 = shape.landmarks["v0"]
    q = tree_path(tr, v1, v2)
    h = q.index(v0)
    H = q[0::2] + q[1::2][::-1]
    if H.index(v2) > H.index(v4):
        H = [H[0]] + H[:0:-1]
    rest = tree_path(tr, v0, v3)[1:]
    R = square_path(rest)
    u, w = q[h + 1], q[h - 1]
    i2, i4 = H.index(v2), H.index(v4)
    for i in range(i2, i4):
        cur, nxt = H[i], H[i + 1]
        if nxt == v0 or (cur == u and nxt == w):
            cycle = H[:i + 1] + R + H[i + 1:]
            break
    else:
        raise InvariantViolation(f"case {THREE_21}: no splice point between v2 and v4")
    walk = _Walk(tr, THREE_21)
    walk.step = "splice"
    walk.extend(cycle)
    return walk.seq


def _chain(walk: _Walk, P: Sequence[int], start: int, step: int, stop) -> int:
    """Follow P[start], P[start+step], ... until ``stop(index)``; returns the last index."""
    j = start
    while True:
        if not 0 <= j < len(P):
            raise walk.fail(f"chain ran off the path at index {j}")
        walk.go(P[j])
        if stop(j):
            return j
        j += step


def _split_at(R: list[int], v: int) -> tuple[list[int], list[int]]:
    """(R from v to its end, R's start up to just before v)."""
    i = R.index(v)
    return R[i:], R[:i]


def _case_22(shape: TreeShape) -> list[int]:
    tr = shape.tree
    v1, v2, v3, v4 = shape.order
    v0 = shape.landmarks["v0"]
    T = tree_path(tr, v0, v1)
    U = tree_path(tr, v0, v2)
    W = tree_path(tr, v0, v3)
    D = U.index(v4)
    m = D - 1
    shape.landmarks.update(D=D, m=m)
    R1 = square_path(T)          # v0 ... v1 ... t1
    R2 = square_path(U[D + 1:])  # x1 ... v2 ... x2
    R3 = square_path(W[1:])      # w1 ... v3 ... w2
    walk = _Walk(tr, THREE_22)
    reserve_v0 = D % 4 == 0

    walk.step = "1"
    i = R1.index(v1)
    if reserve_v0:
        walk.extend(R1[i:])                # v1 -> t1
        tail = R1[:i]                      # v0 ... (back to v1)
    else:
        walk.extend(R1[:i + 1][::-1])      # v1 -> v0
        tail = R1[i + 1:][::-1]            # t1 ... (back to v1)

    walk.step = "2"
    if D >= 4:
        if reserve_v0:
            _chain(walk, U, 3, 4, lambda j: D - j <= 3)
        else:
            _chain(walk, U, 4, 4, lambda j: D - j <= 3)

    walk.step = "3"
    walk.extend(R2)

    walk.step = "4"
    if D >= 2:
        top = walk.first_unused([U[m], U[m - 1]])
        _chain(walk, U, U.index(top), -4, lambda j: j <= 3)

    walk.step = "5"
    walk.extend(R3)

    walk.step = "6"
    # the ascending chain is needed from D = 3 on, or u_1 would be stranded
    if D >= 3:
        opts = [U[j] for j in (0, 1, 2) if j <= m and not (j == 0 and reserve_v0)]
        start = walk.first_unused(opts)
        _chain(walk, U, U.index(start), 4, lambda j: D - j <= 4)

    walk.step = "7"
    walk.go(v4)

    if D >= 4:
        walk.step = "8"
        start = walk.first_unused([U[m - j] for j in range(4)])
        _chain(walk, U, U.index(start), -4, lambda j: j <= 3)

    walk.step = "9"
    if tail:
        if tail[0] == walk.last():
            tail = tail[1:]
        walk.extend(tail)
    return walk.seq


def _case_31(shape: TreeShape) -> list[int]:
    tr = shape.tree
    v1 = shape.order[0]
    P, m, legs = shape.landmarks["P"], shape.landmarks["m"], shape.landmarks["legs"]
    R1 = square_path(legs[0][1:])           # x1 ... v1 ... x2 (u0 left to R2)
    R2 = square_path(legs[1])[::-1]         # x1 ... v2 ... u0
    R3 = square_path(legs[2][1:])
    R4 = square_path(legs[3][1:])
    walk = _Walk(tr, FOUR_31)

    walk.step = "1"
    head, tail = _split_at(R1, v1)
    walk.extend(head)
    walk.step = "2"
    walk.extend(R2)
    walk.step = "3"
    if m >= 2:
        _chain(walk, P, 2, 2, lambda j: m - j <= 1)
    walk.step = "4"
    walk.extend(R3)
    walk.step = "5"
    walk.extend(R4)
    walk.step = "6"
    if m >= 1:
        start = walk.first_unused([P[m], P[m - 1]])
        _chain(walk, P, P.index(start), -2, lambda j: j <= 1)
    walk.step = "7"
    walk.extend(tail)
    return walk.seq


def _case_32(shape: TreeShape) -> list[int]:
    tr = shape.tree
    v1 = shape.order[0]
    P, m, legs = shape.landmarks["P"], shape.landmarks["m"], shape.landmarks["legs"]
    R1 = square_path(legs[0])[::-1]         # x1 ... v1 ... u0
    R2 = square_path(legs[1][1:])
    R3 = square_path(legs[2][1:])
    R4 = square_path(legs[3][1:])
    walk = _Walk(tr, FOUR_32)

    walk.step = "1"
    head, tail = _split_at(R1, v1)
    walk.extend(head)
    walk.step = "2"
    if m >= 4:
        _chain(walk, P, 4, 4, lambda j: m - j <= 3)
    walk.step = "3"
    walk.extend(R2)
    walk.step = "4"
    if m >= 2:
        start = walk.first_unused([P[m], P[m - 1]])
        _chain(walk, P, P.index(start), -4, lambda j: j <= 3)
    walk.step = "5"
    walk.extend(R3)
    walk.step = "6"
    end6 = None
    if m >= 2:
        start = walk.first_unused([P[1], P[2]])
        end6 = _chain(walk, P, P.index(start), 4, lambda j: m - j <= 3)
    elif m == 1:
        walk.go(P[1])
    walk.step = "7"
    if (m >= 3 and end6 == m - 3) or m == 0:
        walk.extend(R4)
    else:
        walk.extend(R4[::-1] if len(R4) > 1 else R4)
    walk.step = "8"
    if m >= 3:
        start = walk.first_unused([P[m - j] for j in range(4)])
        _chain(walk, P, P.index(start), -4, lambda j: j <= 3)
    walk.step = "9"
    walk.extend(tail)
    return walk.seq


_CASES = {TWO_LEAVES: _case_path, THREE_21: _case_21, THREE_22: _case_22,
          FOUR_31: _case_31, FOUR_32: _case_32}


def tbar_cycle(shape: TreeShape) -> OrderedCycle:
    """Hamiltonian cycle of T̄^4 through the anchors in order, leaves kept close."""
    tr = shape.tree
    cycle = _CASES[shape.kind](shape)
    n = len(cycle)
    if n != len(tr) or set(cycle) != set(tr.nodes):
        missing = sorted(set(tr.nodes) - set(cycle))
        raise InvariantViolation(f"case {shape.kind}: cycle misses vertices {missing}")
    if tr.dist(cycle[-1], cycle[0]) > 4:
        raise InvariantViolation(f"case {shape.kind}: closing hop {cycle[-1]}-{cycle[0]} exceeds 4")
    if not in_cyclic_order(cycle, shape.anchors):
        raise InvariantViolation(f"case {shape.kind}: anchors out of order")
    bad = leaf_violations(tr, cycle, 4)
    if bad:
        raise InvariantViolation(f"case {shape.kind}: leaves {bad} have no close cycle neighbor")
    return OrderedCycle(tuple(orient(cycle, shape.anchors)), shape.anchors)


def four_ordered_hamiltonian(g: Graph, anchors: Sequence[int]) -> CycleCertificate:
    """Hamiltonian cycle of g^4 through 4 anchors in order."""
    anchors = check_anchors(g, anchors, k_min=4)
    if len(anchors) != 4:
        raise ValueError("exactly 4 anchors required")
    tree = spanning_tree(g)
    tbar = steiner_subtree(tree, anchors)
    shape = classify_shape(tbar, anchors)
    inner = tbar_cycle(shape)
    ham = attach_components(tree, tbar, 4, inner)
    return CycleCertificate(n=g.n, power=4, cycle=tuple(orient(ham.cycle, anchors)),
                            anchors=tuple(anchors), construction="four")
