"""Anchor marking: distinct segment labels for k anchors out of t keys."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .errors import InvariantViolation

Mode = Literal["path", "color"]


@dataclass(frozen=True)
class Marking:
    values: tuple[int, ...]   # per-anchor key: residue mod t (path) or color
    marked: tuple[bool, ...]
    S: frozenset[int]
    u: int
    labels: tuple[int, ...]   # r(v_i), pairwise distinct


def required_t(k: int, mode: Mode) -> int:
    return 3 * k // 2 - (1 if mode == "path" else 0)


def mark_anchors(keys: Sequence[int], mode: Mode, t: int) -> Marking:
    """Mark anchors whose key is unshared and hand the rest unused labels.

    Path mode takes the anchors' path labels and works with residues mod t,
    marking interior anchors first, then the smallest, then the largest.
    Color mode takes colors and marks every color occurring exactly once.
    Unmarked anchors receive the smallest labels outside S in anchor order.
    """
    k = len(keys)
    if k < 3:
        raise ValueError("need at least 3 anchors")
    if mode not in ("path", "color"):
        raise ValueError(f"unknown marking mode {mode!r}")
    if t != required_t(k, mode):
        raise ValueError(f"{mode} mode with k={k} needs t={required_t(k, mode)}, got {t}")

    if mode == "path":
        if len(set(keys)) != k:
            raise ValueError("path labels must be distinct")
        values = tuple(v % t for v in keys)
        lo = min(range(k), key=lambda i: keys[i])
        hi = max(range(k), key=lambda i: keys[i])
        members = [i for i in range(k) if i not in (lo, hi)]
        marked = [False] * k
        for i in members:
            marked[i] = sum(values[j] == values[i] for j in members) == 1
        for extra in (lo, hi):
            marked[extra] = all(values[j] != values[extra] for j in members)
            members.append(extra)
        pool = list(range(t))
    else:
        values = tuple(keys)
        marked = [values.count(v) == 1 for v in values]
        pool = list(range(1, t + 1))

    S = frozenset(values)
    u = marked.count(False)
    if len(S) + u > t:
        raise InvariantViolation(f"|S|+u = {len(S)}+{u} exceeds t={t}")
    free = iter(x for x in pool if x not in S)
    labels = tuple(values[i] if marked[i] else next(free) for i in range(k))
    if len(set(labels)) != k:
        raise InvariantViolation("segment labels are not distinct")
    return Marking(values=values, marked=tuple(marked), S=S, u=u, labels=labels)
