"""Command-line interface.

Exit codes: 0 success / valid / yes, 1 usage, IO or search-bound errors,
2 invalid certificate / no, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import re
import sys
from typing import Sequence, TextIO

from .certificate import CycleCertificate, verify
from .errors import InvariantViolation, SearchBoundExceeded
from .families import cycle5_ordered_hamiltonian, host_five_ordered, path_ordered_hamiltonian
from .four import four_ordered_hamiltonian
from .general import ordered_hamiltonian
from .graph import Graph, cycle_graph, path_graph, power, random_connected, random_tree
from .oracle import (DEFAULT_MAX_N, SWEEP_MAX_N, oracle_cycle, search_cycle_witness, sweep_pk,
                     witness_path_lower)

EXIT_OK, EXIT_USAGE, EXIT_NO, EXIT_INTERNAL = 0, 1, 2, 3
FAMILIES = ("auto", "general", "path", "cycle5", "four", "host5")


class UsageError(Exception):
    pass


def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise UsageError("edge list is empty")
    try:
        head = [int(x) for x in lines[0].split()]
        rows = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
    except ValueError:
        raise UsageError("edge list must contain integers only") from None
    if len(head) != 2:
        raise UsageError("header must be 'n m'")
    n, m = head
    if any(len(r) != 2 for r in rows):
        raise UsageError("each edge line must be 'u v'")
    if len(rows) != m:
        raise UsageError(f"header announces {m} edges, found {len(rows)}")
    seen = set()
    for u, v in rows:
        if not (0 <= u < n and 0 <= v < n):
            raise UsageError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise UsageError(f"self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise UsageError(f"duplicate edge {key}")
        seen.add(key)
    return Graph(n, rows)


def format_edge_list(g: Graph) -> str:
    return "".join([f"{g.n} {g.m}\n"] + [f"{u} {v}\n" for u, v in g.edges()])


def generate(text: str) -> Graph:
    kind, _, rest = text.partition(":")
    try:
        args = [int(x) for x in rest.split(":")] if rest else []
    except ValueError:
        raise UsageError(f"bad generator {text!r}") from None
    arity = {"path": 1, "cycle": 1, "rand-tree": 2, "rand-conn": 3}
    if kind not in arity or len(args) != arity[kind]:
        raise UsageError(f"bad generator {text!r}; expected path:N, cycle:N, "
                         "rand-tree:N:SEED or rand-conn:N:M:SEED")
    try:
        if kind == "path":
            return path_graph(args[0])
        if kind == "cycle":
            return cycle_graph(args[0])
        if kind == "rand-tree":
            return random_tree(args[0], args[1])
        return random_connected(args[0], args[1], args[2])
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(args: argparse.Namespace) -> Graph:
    if args.gen is not None:
        return generate(args.gen)
    return parse_edge_list(_read(args.input))


def parse_seq(text: str) -> list[int]:
    try:
        return [int(x) for x in re.split(r"[,\s]+", text.strip()) if x]
    except ValueError:
        raise UsageError(f"bad vertex list {text!r}") from None


def line_order(g: Graph) -> list[int] | None:
    """Vertices in path order if g is a path, else None."""
    if g.n < 2 or g.m != g.n - 1 or any(g.degree(v) > 2 for v in range(g.n)):
        return None
    if not g.is_connected():
        return None
    return _walk(g, min(v for v in range(g.n) if g.degree(v) == 1))


def ring_order(g: Graph) -> list[int] | None:
    """Vertices in cyclic order if g is a cycle, else None."""
    if g.n < 3 or any(g.degree(v) != 2 for v in range(g.n)) or not g.is_connected():
        return None
    return _walk(g, 0)


def _walk(g: Graph, start: int) -> list[int]:
    order, seen = [start], {start}
    while len(order) < g.n:
        nxt = min(w for w in g.adj[order[-1]] if w not in seen)
        order.append(nxt)
        seen.add(nxt)
    return order


def _relabel(cert: CycleCertificate, order: Sequence[int], anchors: Sequence[int],
             construction: str) -> CycleCertificate:
    return CycleCertificate(n=cert.n, power=cert.power, cycle=tuple(order[i] for i in cert.cycle),
                            anchors=tuple(anchors), construction=construction)


def build_certificate(g: Graph, anchors: list[int], family: str,
                      ham: list[int] | None = None) -> CycleCertificate:
    k = len(anchors)
    if len(set(anchors)) != k:
        raise UsageError("anchors must be distinct")
    if any(not 0 <= a < g.n for a in anchors):
        raise UsageError(f"anchors must be vertices in 0..{g.n - 1}")
    line, ring = line_order(g), ring_order(g)
    if family == "auto":
        if k == 4:
            family = "four"
        elif k == 5 and ham is not None:
            family = "host5"
        elif k == 5 and ring is not None:
            family = "cycle5"
        elif line is not None and k >= 3:
            family = "path"
        else:
            family = "general"

    if family == "general":
        return ordered_hamiltonian(g, anchors)
    if family == "four":
        return four_ordered_hamiltonian(g, anchors)
    if family == "path":
        if line is None:
            raise UsageError("family path needs a path graph")
        pos = {v: i for i, v in enumerate(line)}
        cert = path_ordered_hamiltonian(g.n, [pos[a] + 1 for a in anchors])
        return _relabel(cert, line, anchors, "path")
    if family == "cycle5":
        if ring is None:
            raise UsageError("family cycle5 needs a cycle graph")
        pos = {v: i for i, v in enumerate(ring)}
        cert = cycle5_ordered_hamiltonian(g.n, [pos[a] for a in anchors])
        return _relabel(cert, ring, anchors, "cycle5")
    if family == "host5":
        if ham is None:
            raise UsageError("family host5 needs --ham FILE")
        return host_five_ordered(g, ham, anchors)
    raise UsageError(f"unknown family {family!r}")


def cmd_power(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    g = load_graph(args)
    if args.p < 1:
        raise UsageError("--p must be at least 1")
    text = format_edge_list(power(g, args.p))
    if args.output in (None, "-"):
        out.write(text)
    else:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc.strerror}") from None
    return EXIT_OK


def cmd_order(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    g = load_graph(args)
    anchors = parse_seq(args.seq)
    ham = parse_seq(_read(args.ham)) if args.ham else None
    cert = build_certificate(g, anchors, args.family, ham)
    err.write(f"family={cert.construction} power={cert.power}\n")
    out.write(cert.to_json())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    g = load_graph(args)
    try:
        cert = CycleCertificate.from_json(_read(args.cert))
    except ValueError as exc:
        raise UsageError(f"cannot parse certificate: {exc}") from None
    report = verify(g, cert)
    if report.ok:
        out.write("valid\n")
        return EXIT_OK
    for msg in report.violations:
        err.write(msg + "\n")
    out.write("invalid\n")
    return EXIT_NO


def cmd_oracle(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    g = load_graph(args)
    found, witness = oracle_cycle(g, parse_seq(args.seq), args.hamiltonian, args.max_n)
    if found:
        out.write("yes\n" + " ".join(map(str, witness)) + "\n")
        return EXIT_OK
    out.write("no\n")
    return EXIT_NO


def cmd_witness(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    if args.kind == "path-lower":
        if args.k is None:
            raise UsageError("path-lower needs --k")
        n, labels, p = witness_path_lower(args.k)
        anchors = [x - 1 for x in labels]
        out.write(f"n={n} power={p} anchors={','.join(map(str, anchors))}\n")
        if n > args.max_n:
            out.write(f"unconfirmed: n={n} exceeds the oracle bound {args.max_n}\n")
            return EXIT_NO
        found, _ = oracle_cycle(power(path_graph(n), p), anchors, False, args.max_n)
        out.write("refuted\n" if found else "confirmed\n")
        return EXIT_NO if found else EXIT_OK
    if args.m is None:
        raise UsageError("cycle-lower needs --m")
    res = search_cycle_witness(args.m, args.max_n)
    for n, found in res.rows:
        out.write(f"n={n} power={args.m} ordered-cycle={'yes' if found else 'no'}\n")
    if res.smallest_n is None:
        out.write(f"unconfirmed up to n={args.max_n}\n")
        return EXIT_NO
    out.write(f"confirmed smallest_n={res.smallest_n}\n")
    return EXIT_OK


def cmd_bench(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    g = load_graph(args)
    res = sweep_pk(g, args.k, args.max_n)
    if args.csv:
        out.write("p,all_pass,first_failure\n")
        for p, ok, bad in res.rows:
            out.write(f"{p},{int(ok)},{'' if bad is None else ' '.join(map(str, bad))}\n")
    else:
        for p, ok, bad in res.rows:
            note = "all sequences pass" if ok else f"fails on {','.join(map(str, bad))}"
            out.write(f"p={p} {note}\n")
        out.write(f"p_k={res.pk}\n")
    err.write(f"k={args.k} p_k={res.pk}\n")
    return EXIT_OK


def _graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="edge-list file, '-' for stdin")
    src.add_argument("--gen", help="path:N, cycle:N, rand-tree:N:SEED or rand-conn:N:M:SEED")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kordered",
                                 description="Ordered Hamiltonian cycles in graph powers.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("power", help="write the p-th power of a graph")
    _graph_source(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("order", help="build an ordered Hamiltonian cycle certificate")
    _graph_source(p)
    p.add_argument("--seq", required=True, help="comma-separated anchors")
    p.add_argument("--family", choices=FAMILIES, default="auto")
    p.add_argument("--ham", help="file with a Hamiltonian cycle of the graph (host5)")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    _graph_source(p)
    p.add_argument("--cert", required=True, help="certificate file, '-' for stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive ordered-cycle search on the graph as given")
    _graph_source(p)
    p.add_argument("--seq", required=True)
    p.add_argument("--hamiltonian", action="store_true")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("witness", help="lower-bound instances, checked by the oracle")
    p.add_argument("kind", choices=("path-lower", "cycle-lower"))
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("bench", help="exact p_k by oracle sweep")
    p.add_argument("what", choices=("pk",))
    _graph_source(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-n", type=int, default=SWEEP_MAX_N)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: Sequence[str] | None = None, out: TextIO | None = None,
         err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out, err)
    except (UsageError, ValueError, SearchBoundExceeded) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except InvariantViolation as exc:
        err.write(f"internal invariant violated: {exc}\n")
        return EXIT_INTERNAL


def main_entry() -> None:
    sys.exit(main())
