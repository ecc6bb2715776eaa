"""Colorings of trees with short colored walks between any two vertices.

A color map with ``t`` colors guarantees, for any two vertices x, z and any color
c, a walk x = y0, y1, ..., yl = z of distinct vertices in which every hop has
tree distance <= t, every interior vertex has color c, and the first (last) hop
has distance <= t - 1 whenever x (z) itself is not colored c.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation
from .graph import Tree


@dataclass(frozen=True)
class ColorMap:
    t: int
    color: dict[int, int]
    # witness[x] = (b_1(x), ..., b_{t-1}(x)[, b_t(x)])
    witness: dict[int, tuple[int, ...]]
    # growth index of each vertex; the first t vertices form the seed subtree
    order: dict[int, int]


def build_color_map(tree: Tree, t: int) -> ColorMap:
    if t < 1:
        raise ValueError("color count must be positive")
    if len(tree) < t:
        raise ValueError(f"tree has {len(tree)} vertices, fewer than t={t}")
    order = tree.bfs_order()
    index = {v: i for i, v in enumerate(order)}
    color: dict[int, int] = {}
    witness: dict[int, tuple[int, ...]] = {}

    seed = order[:t]
    for c, v in enumerate(seed, start=1):
        color[v] = c
    for v in seed:
        others = sorted((w for w in seed if w != v), key=lambda w: (tree.dist(v, w), w))
        witness[v] = tuple(others)

    holders = {c: [v] for v, c in color.items()}
    for x in order[t:]:
        y = tree.parent[x]
        by = witness[y]
        # b_1(x) = y, b_{i+1}(x) = b_i(y); b_t(x) = b_{t-1}(y) carries x's color
        if t == 1:
            bx = (y,)
            cx = 1
        else:
            bx = (y,) + by[: t - 1]
            cx = color[by[t - 2]]
        color[x] = cx
        witness[x] = bx
        group = holders.setdefault(cx, [])
        if len(group) == 1:
            lone = group[0]
            if len(witness[lone]) < t:
                witness[lone] = witness[lone] + (x,)
        group.append(x)
    return ColorMap(t=t, color=color, witness=witness, order=index)


def check_color_map(tree: Tree, cm: ColorMap) -> list[str]:
    """Violations of the two witness conditions, checked from the map alone."""
    problems = []
    t = cm.t
    counts: dict[int, int] = {}
    for c in cm.color.values():
        counts[c] = counts.get(c, 0) + 1
    for x in tree.nodes:
        cx = cm.color.get(x)
        if cx is None or not 1 <= cx <= t:
            problems.append(f"vertex {x} has color {cx} outside 1..{t}")
            continue
        b = cm.witness[x]
        if len(b) < t - 1:
            problems.append(f"vertex {x} has only {len(b)} witnesses")
            continue
        for i, w in enumerate(b[: t - 1], start=1):
            if tree.dist(x, w) > i:
                problems.append(f"witness b_{i}({x})={w} at distance {tree.dist(x, w)} > {i}")
        seen = {cm.color[w] for w in b[: t - 1]}
        if seen != set(range(1, t + 1)) - {cx}:
            problems.append(f"witness colors of {x} do not cover the other colors")
        if counts[cx] > 1:
            if len(b) < t:
                problems.append(f"vertex {x} shares color {cx} but has no b_t witness")
            else:
                bt = b[t - 1]
                if bt == x or cm.color[bt] != cx or tree.dist(x, bt) > t:
                    problems.append(f"b_t({x})={bt} is not a same-colored vertex within {t}")
    return problems


def _step_toward(cm: ColorMap, x: int, c: int) -> int:
    for w in cm.witness[x]:
        if cm.color[w] == c:
            return w
    raise InvariantViolation(f"vertex {x} has no witness of color {c}")


def colored_walk(tree: Tree, cm: ColorMap, x: int, z: int, c: int) -> list[int]:
    """Walk from ``x`` to ``z`` whose interior vertices all carry color ``c``.

    Follows the growth induction: whichever end was added to the tree later is
    replaced by its nearest witness of color ``c``, until both ends lie in the
    seed subtree (which has diameter <= t - 1) or the two ends meet.
    """
    if x == z:
        raise ValueError("walk endpoints must differ")
    if not 1 <= c <= cm.t:
        raise ValueError(f"color {c} outside 1..{cm.t}")
    t = cm.t
    head = [x]
    tail = [z]
    a, b = x, z
    while True:
        if a == b:
            walk = head + tail[-2::-1]
            break
        if cm.order[a] < t and cm.order[b] < t:
            walk = head + tail[::-1]
            break
        if cm.order[a] > cm.order[b]:
            a = _step_toward(cm, a, c)
            head.append(a)
        else:
            b = _step_toward(cm, b, c)
            tail.append(b)
    problem = walk_violation(tree, cm, walk, c)
    if problem:
        raise InvariantViolation(f"colored walk {x}->{z} (color {c}): {problem}")
    return walk


def walk_violation(tree: Tree, cm: ColorMap, walk: list[int], c: int) -> str | None:
    """First reason ``walk`` is not a valid colored walk, or None."""
    t = cm.t
    if len(walk) < 2:
        return "walk has fewer than two vertices"
    if len(set(walk)) != len(walk):
        return "walk repeats a vertex"
    for u, v in zip(walk, walk[1:]):
        if tree.dist(u, v) > t:
            return f"hop {u}-{v} has distance {tree.dist(u, v)} > {t}"
    for y in walk[1:-1]:
        if cm.color[y] != c:
            return f"interior vertex {y} has color {cm.color[y]} != {c}"
    if cm.color[walk[0]] != c and tree.dist(walk[0], walk[1]) > t - 1:
        return "first hop too long for an off-color start"
    if cm.color[walk[-1]] != c and tree.dist(walk[-2], walk[-1]) > t - 1:
        return "last hop too long for an off-color end"
    return None
