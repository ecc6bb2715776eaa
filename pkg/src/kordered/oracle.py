"""Exhaustive search for ordered cycles, lower-bound instances and p_k sweeps.

Nothing here shares code with the constructions; the search works from the
definitions alone so it can be used to cross-check them.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import SearchBoundExceeded
from .graph import Graph, cycle_graph, power

DEFAULT_MAX_N = 24
SWEEP_MAX_N = 12


def _masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


def _reaches(nbr: list[int], src: int, allowed: int, goal: int) -> int:
    """Bitmask of ``goal`` vertices reachable from src through ``allowed``."""
    seen = 1 << src
    frontier = seen
    hit = 0
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            f ^= b
            nxt |= nbr[b.bit_length() - 1]
        hit |= nxt & goal
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return hit


def _hamiltonian(nbr: list[int], n: int, anchors: Sequence[int]) -> list[int] | None:
    full = (1 << n) - 1
    start = anchors[0]
    k = len(anchors)
    amask = sum(1 << a for a in anchors)
    dead: set[tuple[int, int, int]] = set()
    path = [start]

    def connected(v: int, rest: int) -> bool:
        # every unvisited vertex must stay reachable from v, and start must have
        # an unvisited neighbor to close the cycle through
        if not nbr[start] & rest:
            return False
        return _reaches(nbr, v, rest, rest) == rest

    def rec(v: int, used: int, nxt: int) -> bool:
        if used == full:
            return nxt == k and bool(nbr[v] >> start & 1)
        key = (v, used, nxt)
        if key in dead:
            return False
        rest = full & ~used
        if connected(v, rest):
            cand = nbr[v] & rest & ~amask
            if nxt < k:
                cand |= nbr[v] & rest & (1 << anchors[nxt])
            while cand:
                b = cand & -cand
                cand ^= b
                w = b.bit_length() - 1
                path.append(w)
                step = 1 if nxt < k and w == anchors[nxt] else 0
                if rec(w, used | b, nxt + step):
                    return True
                path.pop()
        dead.add(key)
        return False

    return path if rec(start, 1 << start, 1) else None


def _ordered(nbr: list[int], n: int, anchors: Sequence[int]) -> list[int] | None:
    # Any cycle through the anchors in order can be shortcut, segment by segment,
    # to one whose anchor-to-anchor segments are induced paths, so only those are
    # enumerated: no vertex may touch an earlier vertex of its own segment except
    # its predecessor, and a segment ends as soon as the target is adjacent.
    k = len(anchors)
    amask = sum(1 << a for a in anchors)
    free_all = ((1 << n) - 1) & ~amask
    dead: set[tuple[int, int]] = set()
    segs: list[list[int]] = []

    def later_ok(i: int, used: int) -> bool:
        free = free_all & ~used
        for j in range(i, k):
            a, b = anchors[j], anchors[(j + 1) % k]
            if not _reaches(nbr, a, free, 1 << b):
                return False
        return True

    def segment(i: int, used: int) -> bool:
        if i == k:
            return True
        if (i, used) in dead:
            return False
        a, b = anchors[i], anchors[(i + 1) % k]
        seg = [a]
        if later_ok(i, used) and walk(i, a, 0, used, seg):
            return True
        dead.add((i, used))
        return False

    def walk(i: int, x: int, near: int, used: int, seg: list[int]) -> bool:
        b = anchors[(i + 1) % k]
        if nbr[x] >> b & 1:
            segs.append(seg + [b])
            if segment(i + 1, used):
                return True
            segs.pop()
            return False
        free = free_all & ~used
        if not _reaches(nbr, x, free & ~near, 1 << b):
            return False
        cand = nbr[x] & free & ~near
        while cand:
            bit = cand & -cand
            cand ^= bit
            w = bit.bit_length() - 1
            seg.append(w)
            if walk(i, w, near | nbr[x] | (1 << x), used | bit, seg):
                return True
            seg.pop()
        return False

    if not segment(0, 0):
        return None
    return [v for s in segs for v in s[:-1]]


def oracle_cycle(g: Graph, anchors: Sequence[int], require_hamiltonian: bool = True,
                 max_n: int = DEFAULT_MAX_N) -> tuple[bool, tuple[int, ...] | None]:
    """Decide whether g has a (Hamiltonian) cycle through ``anchors`` in order.

    The answer is exact: ``(False, None)`` means no such cycle exists.
    The witness is the first one found in ascending-label search order.
    """
    anchors = list(anchors)
    if len(set(anchors)) != len(anchors):
        raise ValueError("anchors must be distinct")
    if any(not 0 <= a < g.n for a in anchors):
        raise ValueError(f"anchors must be vertices in 0..{g.n - 1}")
    if g.n > max_n:
        raise SearchBoundExceeded(f"graph has {g.n} vertices; oracle bound is {max_n}")
    if not anchors:
        raise ValueError("need at least one anchor")
    nbr = _masks(g)
    if require_hamiltonian:
        if g.n < 3:
            return False, None
        found = _hamiltonian(nbr, g.n, anchors)
    else:
        if len(anchors) < 3:
            raise ValueError("ordered cycle queries need at least 3 anchors")
        found = _ordered(nbr, g.n, anchors)
    return (True, tuple(found)) if found is not None else (False, None)


def witness_path_lower(k: int) -> tuple[int, tuple[int, ...], int]:
    """(n, anchors as path labels 1..n, power) with no ordered cycle in (P_n)^power.

    Anchors with odd index sit at the front of the path, the block of 2m-1
    fillers in the middle, anchors with even index at the back.  Odd k puts
    2m+1 anchors in front and one spare vertex after the back block so that
    n = 2k-1 in both cases.
    """
    if k < 4:
        raise ValueError("k must be at least 4")
    m = k // 2
    front = list(range(1, k, 2)) if k % 2 == 0 else list(range(1, k + 1, 2))
    back = list(range(2, k + 1, 2))
    pos: dict[int, int] = {}
    for i, v in enumerate(front):
        pos[v] = i + 1
    gap = 2 * m - 1
    for i, v in enumerate(back):
        pos[v] = len(front) + gap + i + 1
    n = 2 * k - 1
    anchors = tuple(pos[i] for i in range(1, k + 1))
    return n, anchors, 3 * k // 2 - 3


def witness_cycle_lower(m: int, n: int) -> tuple[tuple[int, ...], int]:
    """(anchors on C_n as vertices 0..n-1, power m) for the 2m-anchor layout.

    Odd-index anchors first, a filler block of n-3m+1 vertices, the even-index
    anchors with the last two swapped, then m-1 fillers before wrapping around.
    """
    if m < 3:
        raise ValueError("m must be at least 3")
    if n < 3 * m + 2:
        raise ValueError(f"n must be at least {3 * m + 2}")
    pos: dict[int, int] = {}
    for i, v in enumerate(range(1, 2 * m, 2)):
        pos[v] = i
    evens = list(range(2, 2 * m - 3, 2)) + [2 * m, 2 * m - 2]
    base = m + (n - 3 * m + 1)
    for i, v in enumerate(evens):
        pos[v] = base + i
    return tuple(pos[i] for i in range(1, 2 * m + 1)), m


@dataclass
class CycleWitnessSearch:
    m: int
    rows: list[tuple[int, bool]] = field(default_factory=list)   # (n, ordered cycle exists)
    smallest_n: int | None = None


def search_cycle_witness(m: int, max_n: int = DEFAULT_MAX_N) -> CycleWitnessSearch:
    """Try n = 3m+2, 3m+3, ... up to max_n; stop at the first n with no ordered cycle."""
    out = CycleWitnessSearch(m)
    for n in range(3 * m + 2, max_n + 1):
        anchors, p = witness_cycle_lower(m, n)
        found, _ = oracle_cycle(power(cycle_graph(n), p), anchors, require_hamiltonian=False,
                                max_n=max_n)
        out.rows.append((n, found))
        if not found:
            out.smallest_n = n
            break
    return out


def anchor_sequences(n: int, k: int):
    """One representative per rotation/reflection class of ordered k-tuples of 0..n-1.

    The smallest anchor goes first; reversal is removed by requiring the second
    anchor to be smaller than the last.
    """
    for subset in itertools.combinations(range(n), k):
        first, rest = subset[0], subset[1:]
        for perm in itertools.permutations(rest):
            if k < 3 or perm[0] < perm[-1]:
                yield (first, *perm)


@dataclass
class SweepResult:
    k: int
    pk: int
    rows: list[tuple[int, bool, tuple[int, ...] | None]]   # (p, all pass, first failing sequence)


def sweep_pk(g: Graph, k: int, max_n: int = SWEEP_MAX_N) -> SweepResult:
    """Smallest p such that g^p has an ordered Hamiltonian cycle for every k-sequence."""
    if k < 1:
        raise ValueError("k must be positive")
    if g.n < max(k, 3):
        raise ValueError(f"graph needs at least {max(k, 3)} vertices")
    if g.n > max_n:
        raise SearchBoundExceeded(f"graph has {g.n} vertices; sweep bound is {max_n}")
    if not g.is_connected():
        raise ValueError("graph is disconnected")
    rows: list[tuple[int, bool, tuple[int, ...] | None]] = []
    p = 1
    while True:
        gp = power(g, p)
        bad = None
        for seq in anchor_sequences(g.n, k):
            if not oracle_cycle(gp, seq, True, max_n)[0]:
                bad = seq
                break
        rows.append((p, bad is None, bad))
        if bad is None:
            return SweepResult(k=k, pk=p, rows=rows)
        p += 1
