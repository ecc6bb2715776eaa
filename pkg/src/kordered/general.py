"""Ordered cycles in G^(3k/2) and ordered Hamiltonian cycles in G^(3k/2 + 1)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .certificate import CycleCertificate
from .coloring import ColorMap, build_color_map, colored_walk
from .errors import InvariantViolation
from .extension import (OrderedCycle, attach_components, leaf_violations, orient,
                        saturate_subtree)
from .graph import Graph, Tree, leaves, spanning_tree, steiner_subtree
from .marking import Marking, mark_anchors


@dataclass(frozen=True)
class OrderedBuild:
    """Intermediate products of the construction, kept for inspection and tests."""
    tree: Tree
    subtree: Tree
    colors: ColorMap
    marking: Marking
    segments: tuple[tuple[int, ...], ...]
    cycle: OrderedCycle
    power: int


def check_anchors(g: Graph, anchors: Sequence[int], k_min: int = 3) -> list[int]:
    anchors = list(anchors)
    if len(anchors) < k_min:
        raise ValueError(f"need at least {k_min} anchors, got {len(anchors)}")
    if any(not isinstance(a, int) or not 0 <= a < g.n for a in anchors):
        raise ValueError(f"anchors must be vertices in 0..{g.n - 1}")
    if len(set(anchors)) != len(anchors):
        raise ValueError("anchors must be distinct")
    if g.n < len(anchors):
        raise ValueError(f"graph has {g.n} vertices, fewer than k={len(anchors)}")
    if not g.is_connected():
        raise ValueError("graph is disconnected")
    return anchors


def _build(g: Graph, anchors: Sequence[int]) -> OrderedBuild:
    anchors = check_anchors(g, anchors)
    k = len(anchors)
    t = 3 * k // 2
    tree = spanning_tree(g)
    sub = steiner_subtree(tree, anchors)
    # a Steiner tree smaller than t is colored injectively; every walk is then a
    # single hop of length <= |U| - 1 <= t - 1
    cm = build_color_map(sub, min(t, len(sub)))
    marking = mark_anchors([cm.color[a] for a in anchors], "color", t)

    segments = []
    for i in range(k):
        x, z = anchors[i], anchors[(i + 1) % k]
        segments.append(tuple(colored_walk(sub, cm, x, z, marking.labels[i])))

    anchor_set = set(anchors)
    owner: dict[int, int] = {}
    for i, seg in enumerate(segments):
        for y in seg[1:-1]:
            if y in anchor_set:
                raise InvariantViolation(f"segment {i} passes through anchor {y}")
            if y in owner:
                raise InvariantViolation(f"segments {owner[y]} and {i} share vertex {y}")
            owner[y] = i
    cycle = [v for seg in segments for v in seg[:-1]]
    return OrderedBuild(tree=tree, subtree=sub, colors=cm, marking=marking,
                        segments=tuple(segments),
                        cycle=OrderedCycle(tuple(cycle), tuple(anchors)), power=t)


def build_ordered_cycle(g: Graph, anchors: Sequence[int]) -> tuple[OrderedCycle, int]:
    """Cycle of g^t, t = floor(3k/2), through ``anchors`` in order."""
    b = _build(g, anchors)
    return b.cycle, b.power


def ordered_hamiltonian(g: Graph, anchors: Sequence[int]) -> CycleCertificate:
    """Hamiltonian cycle of g^(t+1) through ``anchors`` in order."""
    b = _build(g, anchors)
    p = b.power + 1
    bad = leaf_violations(b.subtree, b.cycle.cycle, p, leaves(b.subtree))
    if bad:
        raise InvariantViolation(f"leaf anchors {bad} have no cycle neighbor within {p - 2}")
    full = saturate_subtree(b.subtree, p, b.cycle)
    ham = attach_components(b.tree, b.subtree, p, full)
    return CycleCertificate(n=g.n, power=p, cycle=tuple(orient(ham.cycle, ham.anchors)),
                            anchors=tuple(anchors), construction="general")
