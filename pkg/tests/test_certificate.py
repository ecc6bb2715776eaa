import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import graphs_with_anchors
from kordered.certificate import CycleCertificate, cyclic_order_ok, verify
from kordered.families import path_ordered_hamiltonian
from kordered.general import ordered_hamiltonian
from kordered.graph import complete_graph, path_graph


def flags(report):
    return report.edges_ok, report.hamiltonian_ok, report.order_ok


class TestVerify:
    def test_triangle(self):
        r = verify(complete_graph(3), CycleCertificate(3, 1, (0, 1, 2), (0, 1, 2)))
        assert r.ok and r.first_violation is None

    def test_repeated_vertex(self):
        r = verify(complete_graph(4), CycleCertificate(4, 1, (0, 1, 2, 1), (0, 2)))
        assert not r.hamiltonian_ok

    def test_reversed_anchors_accepted(self):
        r = verify(complete_graph(5), CycleCertificate(5, 1, (0, 1, 2, 3, 4), (0, 4, 3, 1)))
        assert r.ok

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            verify(complete_graph(4), CycleCertificate(5, 1, (0, 1, 2, 3, 4), (0, 1, 2)))

    def test_too_short(self):
        r = verify(complete_graph(2), CycleCertificate(2, 1, (0, 1), (0, 1)))
        assert not r.edges_ok

    def test_out_of_range_vertex(self):
        r = verify(complete_graph(3), CycleCertificate(3, 1, (0, 1, 5), (0, 1)))
        assert not r.edges_ok and not r.hamiltonian_ok

    def test_swapped_pair_trips_edges_only(self):
        g = path_graph(12)
        cert = path_ordered_hamiltonian(12, [1, 12, 6])
        cyc = list(cert.cycle)
        anchors = set(cert.anchors)
        free = [i for i, v in enumerate(cyc) if v not in anchors]
        # swap the two free vertices whose labels are farthest apart
        i, j = min(free, key=lambda i: cyc[i]), max(free, key=lambda i: cyc[i])
        cyc[i], cyc[j] = cyc[j], cyc[i]
        r = verify(g, CycleCertificate(12, cert.power, tuple(cyc), cert.anchors))
        assert flags(r) == (False, True, True)
        assert r.first_violation.startswith("edge violation")

    def test_deleted_vertex_trips_hamiltonian_only(self):
        g = complete_graph(7)
        cert = ordered_hamiltonian(g, [0, 3, 5])
        cyc = tuple(v for v in cert.cycle if v != 6)
        r = verify(g, CycleCertificate(7, cert.power, cyc, cert.anchors))
        assert flags(r) == (True, False, True)

    def test_anchor_transposition_trips_order_only(self):
        g = complete_graph(6)
        cert = CycleCertificate(6, 1, (0, 1, 2, 3, 4, 5), (0, 2, 1, 4))
        assert flags(verify(g, cert)) == (True, True, False)

    @given(graphs_with_anchors(3, 6, max_n=25))
    def test_constructions_verify(self, inst):
        g, anchors = inst
        assert verify(g, ordered_hamiltonian(g, anchors)).ok


class TestCyclicOrder:
    def test_rotation_and_reflection(self):
        cyc = [3, 1, 4, 0, 2]
        assert cyclic_order_ok(cyc, [1, 4, 0])
        assert cyclic_order_ok(cyc, [0, 4, 1])
        assert cyclic_order_ok(cyc, [4, 0, 2, 3])
        assert not cyclic_order_ok(cyc, [1, 0, 4, 2])

    @given(st.permutations(range(8)), st.integers(3, 8), st.integers(0, 7))
    def test_dihedral_invariance(self, cyc, k, shift):
        anchors = [v for v in cyc if v < k]
        rot = anchors[shift % k:] + anchors[:shift % k]
        assert cyclic_order_ok(cyc, rot)
        assert cyclic_order_ok(cyc, rot[::-1])


class TestJson:
    def test_round_trip(self):
        cert = CycleCertificate(4, 2, (0, 1, 3, 2), (0, 3, 2), "four")
        text = cert.to_json()
        assert list(json.loads(text)) == ["n", "power", "cycle", "anchors", "construction"]
        assert text.endswith("\n")
        assert CycleCertificate.from_json(text) == cert

    def test_rejects_bad_fields(self):
        with pytest.raises(ValueError):
            CycleCertificate.from_json('{"n": 3, "power": 1, "cycle": [0, 1]}')
        with pytest.raises(ValueError):
            CycleCertificate.from_json('{"n": 3, "power": 1, "cycle": [0, 1, "x"], "anchors": []}')
        with pytest.raises(ValueError):
            CycleCertificate.from_json('{"n": true, "power": 1, "cycle": [], "anchors": []}')
