"""Cycle certificates and their independent verification."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .graph import UNREACHABLE, Graph

CONSTRUCTIONS = ("general", "path", "cycle5", "four", "host5", "oracle")


@dataclass(frozen=True)
class CycleCertificate:
    n: int
    power: int
    cycle: tuple[int, ...]
    anchors: tuple[int, ...]
    construction: str = "general"

    def to_json(self) -> str:
        doc = {
            "n": self.n,
            "power": self.power,
            "cycle": list(self.cycle),
            "anchors": list(self.anchors),
            "construction": self.construction,
        }
        return json.dumps(doc, indent=None) + "\n"

    @classmethod
    def from_json(cls, text: str) -> CycleCertificate:
        doc = json.loads(text)
        try:
            n, power = doc["n"], doc["power"]
            cycle, anchors = doc["cycle"], doc["anchors"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"certificate is missing field {exc}") from None
        ints = [n, power, *cycle, *anchors]
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in ints):
            raise ValueError("certificate fields must be integers")
        return cls(n=n, power=power, cycle=tuple(cycle), anchors=tuple(anchors),
                   construction=str(doc.get("construction", "general")))


@dataclass
class VerifyReport:
    edges_ok: bool = True
    hamiltonian_ok: bool = True
    order_ok: bool = True
    first_violation: str | None = None
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.edges_ok and self.hamiltonian_ok and self.order_ok

    def _fail(self, flag: str, message: str) -> None:
        setattr(self, flag, False)
        self.violations.append(message)
        if self.first_violation is None:
            self.first_violation = message


def cyclic_order_ok(cycle: Sequence[int], anchors: Sequence[int]) -> bool:
    pos: dict[int, int] = {}
    for i, v in enumerate(cycle):
        pos.setdefault(v, i)
    if any(a not in pos for a in anchors):
        return False
    if len(set(anchors)) != len(anchors):
        return False
    if len(anchors) < 3:
        return True
    n = len(cycle)
    s = pos[anchors[0]]
    fwd = [(pos[a] - s) % n for a in anchors]
    bwd = [(s - pos[a]) % n for a in anchors]
    increasing = lambda xs: all(a < b for a, b in zip(xs, xs[1:]))  # noqa: E731
    return increasing(fwd) or increasing(bwd)


def verify(g: Graph, cert: CycleCertificate) -> VerifyReport:
    """Check a certificate against ``g`` directly from the definitions."""
    if cert.n != g.n:
        raise ValueError(f"certificate is for n={cert.n} but graph has n={g.n}")
    report = VerifyReport()
    cyc = cert.cycle
    if any(not 0 <= v < g.n for v in cyc):
        report._fail("edges_ok", "edge violation: cycle names a vertex outside 0..n-1")
        report._fail("hamiltonian_ok", "cycle is not a permutation of the vertices")
        return report
    if len(cyc) < 3:
        report._fail("edges_ok", "edge violation: cycle has fewer than 3 vertices")
    else:
        for i in range(len(cyc)):
            u, v = cyc[i], cyc[(i + 1) % len(cyc)]
            d = g.dist(u, v)
            if u == v or d == UNREACHABLE or d > cert.power:
                shown = "inf" if d == UNREACHABLE else d
                report._fail("edges_ok",
                             f"edge violation: {u}-{v} at distance {shown} > power {cert.power}")
                break
    if sorted(cyc) != list(range(g.n)):
        dup = len(set(cyc)) != len(cyc)
        why = "repeats a vertex" if dup else f"covers {len(set(cyc))} of {g.n} vertices"
        report._fail("hamiltonian_ok", f"cycle is not Hamiltonian: it {why}")
    if not cyclic_order_ok(cyc, cert.anchors):
        report._fail("order_ok", "anchors do not appear in the claimed cyclic order")
    return report
