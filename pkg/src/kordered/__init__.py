"""Ordered Hamiltonian cycles in powers of connected graphs."""
from .certificate import CycleCertificate, VerifyReport, verify
from .errors import InvariantViolation, SearchBoundExceeded
from .families import cycle5_ordered_hamiltonian, host_five_ordered, path_ordered_hamiltonian
from .four import four_ordered_hamiltonian
from .general import build_ordered_cycle, ordered_hamiltonian
from .graph import (Graph, Tree, cycle_graph, path_graph, power, random_connected, random_tree,
                    spanning_tree, steiner_subtree)
from .oracle import oracle_cycle, sweep_pk, witness_cycle_lower, witness_path_lower

__all__ = [
    "CycleCertificate", "VerifyReport", "verify",
    "InvariantViolation", "SearchBoundExceeded",
    "cycle5_ordered_hamiltonian", "host_five_ordered", "path_ordered_hamiltonian",
    "four_ordered_hamiltonian", "build_ordered_cycle", "ordered_hamiltonian",
    "Graph", "Tree", "cycle_graph", "path_graph", "power", "random_connected", "random_tree",
    "spanning_tree", "steiner_subtree",
    "oracle_cycle", "sweep_pk", "witness_cycle_lower", "witness_path_lower",
]
