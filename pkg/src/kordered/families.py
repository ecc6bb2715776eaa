"""Closed-form ordered Hamiltonian cycles in powers of paths and cycles."""
from __future__ import annotations

import heapq
from typing import Callable, Sequence

from .certificate import CycleCertificate
from .errors import InvariantViolation
from .extension import in_cyclic_order, orient
from .graph import Graph
from .marking import mark_anchors


def _greedy_insert(n: int, cycle: list[int], p: int, dist: Callable[[int, int], int],
                   line_nbrs: Callable[[int], Sequence[int]]) -> list[int]:
    """Insert every missing vertex z next to a cycle vertex x it neighbors in the base.

    z goes between x and whichever cycle neighbor of x (predecessor first) lies
    within ``p`` of it.  Missing vertices are taken smallest label first among
    those currently adjacent to the cycle.
    """
    succ = {cycle[i]: cycle[(i + 1) % len(cycle)] for i in range(len(cycle))}
    pred = {v: u for u, v in succ.items()}
    ready: list[int] = []
    queued = set()

    def offer(x: int) -> None:
        for z in line_nbrs(x):
            if z not in succ and z not in queued:
                queued.add(z)
                heapq.heappush(ready, z)

    for x in cycle:
        offer(x)
    while ready:
        z = heapq.heappop(ready)
        x = next(y for y in line_nbrs(z) if y in succ)
        w, y = pred[x], succ[x]
        if dist(z, w) <= p:
            succ[w], succ[z] = z, x
            pred[z], pred[x] = w, z
        elif dist(z, y) <= p:
            succ[x], succ[z] = z, y
            pred[z], pred[y] = x, z
        else:
            raise InvariantViolation(f"cannot insert {z} next to {x}: both cycle neighbors too far")
        offer(z)
    if len(succ) != n:
        raise InvariantViolation("greedy insertion did not reach every vertex")
    out = [cycle[0]]
    while len(out) < n:
        out.append(succ[out[-1]])
    return out


def path_ordered_hamiltonian(n: int, anchors: Sequence[int]) -> CycleCertificate:
    """Ordered Hamiltonian cycle of (P_n)^t, t = floor(3k/2) - 1.

    ``anchors`` are path labels 1..n; the certificate uses vertex = label - 1.
    """
    labels = list(anchors)
    k = len(labels)
    if k < 3:
        raise ValueError("need at least 3 anchors")
    if n < k:
        raise ValueError(f"path has {n} vertices, fewer than k={k}")
    if any(not 1 <= v <= n for v in labels):
        raise ValueError(f"path labels must lie in 1..{n}")
    if len(set(labels)) != k:
        raise ValueError("anchors must be distinct")
    t = 3 * k // 2 - 1
    marking = mark_anchors(labels, "path", t)

    anchor_set = set(labels)
    owner: dict[int, int] = {}
    cycle: list[int] = []
    for i in range(k):
        a, b = labels[i], labels[(i + 1) % k]
        r = marking.labels[i]
        step = 1 if b > a else -1
        inner = [x for x in range(a + step, b, step) if x % t == r]
        for x in inner:
            if x in anchor_set:
                raise InvariantViolation(f"segment {i} passes through anchor {x}")
            if x in owner:
                raise InvariantViolation(f"segments {owner[x]} and {i} share vertex {x}")
            owner[x] = i
        cycle.append(a)
        cycle.extend(inner)

    full = _greedy_insert(n, [x - 1 for x in cycle], t, lambda u, v: abs(u - v),
                          lambda v: [w for w in (v - 1, v + 1) if 0 <= w < n])
    zero = [x - 1 for x in labels]
    if not in_cyclic_order(full, zero):
        raise InvariantViolation("insertion changed the anchor order")
    return CycleCertificate(n=n, power=t, cycle=tuple(orient(full, zero)),
                            anchors=tuple(zero), construction="path")


def _arc_offsets(length: int, a: int) -> tuple[list[int], list[int]]:
    """Offsets (from the arc start) of the long-jump vertices on one arc.

    Returns (t_offsets, u_offsets): the vertices the skip path starting at this
    arc's first anchor uses here (ending ``a`` before the arc end), and the ones
    the skip path arriving from the previous arc uses (1, 4, 7, ... from the start).
    """
    ts = sorted(length - a - 3 * j for j in range(length) if length - a - 3 * j > 0)
    us = list(range(1, length, 3))
    return ts, us


def arc_parameter(length: int) -> int:
    """Offset in {1, 2} so that offset + 1 differs from the arc length mod 3."""
    return 1 if (1 + 1 - length) % 3 else 2


def cycle5_ordered_hamiltonian(n: int, anchors: Sequence[int]) -> CycleCertificate:
    """Ordered Hamiltonian cycle of (C_n)^3 through 5 anchors (vertices 0..n-1)."""
    anchors = list(anchors)
    if len(anchors) != 5:
        raise ValueError("exactly 5 anchors required")
    if n < 5:
        raise ValueError("cycle needs at least 5 vertices")
    if any(not 0 <= v < n for v in anchors):
        raise ValueError(f"anchors must be vertices in 0..{n - 1}")
    if len(set(anchors)) != 5:
        raise ValueError("anchors must be distinct")

    w = sorted(anchors)
    length = [(w[(i + 1) % 5] - w[i]) % n for i in range(5)]
    arc = lambda i, off: (w[i % 5] + off) % n  # noqa: E731
    # the two skip paths sharing an arc interleave only when their offsets differ mod 3
    a = [arc_parameter(length[i]) for i in range(5)]
    offs = [_arc_offsets(length[i], a[i]) for i in range(5)]
    for i in range(5):
        if set(offs[i][0]) & set(offs[i][1]):
            raise InvariantViolation(f"skip paths collide on arc {i}")

    paths: dict[frozenset[int], list[int]] = {}
    for i in range(5):
        j = (i + 1) % 5
        skip = ([w[i]] + [arc(i, o) for o in offs[i][0]]
                + [arc(j, o) for o in offs[j][1]] + [w[(i + 2) % 5]])
        paths[frozenset((i, (i + 2) % 5))] = skip
        used = set(offs[i][0]) | set(offs[i][1])
        paths[frozenset((i, j))] = ([w[i]] + [arc(i, o) for o in range(1, length[i]) if o not in used]
                                    + [w[j]])

    owner: dict[int, frozenset[int]] = {}
    for key, pth in paths.items():
        for x, y in zip(pth, pth[1:]):
            d = (y - x) % n
            if min(d, n - d) > 3:
                raise InvariantViolation(f"path {sorted(key)} hop {x}-{y} too long")
        for x in pth[1:-1]:
            if x in owner:
                raise InvariantViolation(f"paths {sorted(owner[x])} and {sorted(key)} share {x}")
            owner[x] = key

    idx = [w.index(v) for v in anchors]
    cycle: list[int] = []
    for s in range(5):
        i, j = idx[s], idx[(s + 1) % 5]
        pth = paths[frozenset((i, j))]
        if pth[0] != w[i]:
            pth = pth[::-1]
        cycle.extend(pth[:-1])

    cdist = lambda x, y: min((x - y) % n, (y - x) % n)  # noqa: E731
    full = _greedy_insert(n, cycle, 3, cdist, lambda v: [(v - 1) % n, (v + 1) % n])
    if not in_cyclic_order(full, anchors):
        raise InvariantViolation("insertion changed the anchor order")
    return CycleCertificate(n=n, power=3, cycle=tuple(orient(full, anchors)),
                            anchors=tuple(anchors), construction="cycle5")


def host_five_ordered(g: Graph, ham: Sequence[int], anchors: Sequence[int]) -> CycleCertificate:
    """Ordered Hamiltonian cycle of g^3 through 5 anchors, given a Hamiltonian cycle of g."""
    ham = list(ham)
    if sorted(ham) != list(range(g.n)):
        raise ValueError("Hamiltonian cycle must visit every vertex exactly once")
    for i in range(len(ham)):
        if not g.has_edge(ham[i], ham[(i + 1) % len(ham)]):
            raise ValueError(f"({ham[i]}, {ham[(i + 1) % len(ham)]}) is not an edge")
    anchors = list(anchors)
    if any(not 0 <= v < g.n for v in anchors):
        raise ValueError(f"anchors must be vertices in 0..{g.n - 1}")
    pos = {v: i for i, v in enumerate(ham)}
    inner = cycle5_ordered_hamiltonian(g.n, [pos[v] for v in anchors])
    return CycleCertificate(n=g.n, power=3, cycle=tuple(ham[i] for i in inner.cycle),
                            anchors=tuple(anchors), construction="host5")
