import random
from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from skeleton_lab import constructors as cons
from skeleton_lab.connectivity import (
    CertificateError,
    ConnectivityCertificate,
    PreconditionError,
    balinski_affine_check,
    brute_force_connectivity,
    delete_and_check,
    is_m_connected,
    local_connectivity,
    verify_certificate,
    vertex_connectivity,
)
from skeleton_lab.complexes import complex_skeleton_graph, glued_simplices
from skeleton_lab.lattice import polar_dual
from skeleton_lab.skeletons import SkeletonGraph, edge_adjacency_graph, skeleton_graph

from conftest import min_cut_by_enumeration, random_graph, to_networkx


def complete(n):
    return SkeletonGraph(range(n), combinations(range(n), 2))


def cycle(n):
    return SkeletonGraph(range(n), [(i, (i + 1) % n) for i in range(n)])


def test_complete_graph_convention():
    cert = vertex_connectivity(complete(5))
    assert cert.kappa == 4 and cert.min_cut is None and cert.pair is None


def test_single_node_and_empty():
    assert vertex_connectivity(SkeletonGraph([0], [])).kappa == 0
    assert vertex_connectivity(SkeletonGraph([], [])).kappa == 0


def test_cycle():
    cert = vertex_connectivity(cycle(6))
    assert cert.kappa == 2
    assert len(cert.min_cut) == 2 and len(cert.paths) == 2


def test_octahedron_graph():
    G = skeleton_graph(cons.simplex(3).lattice, 1)
    assert min_cut_by_enumeration(G) == 4
    assert vertex_connectivity(G).kappa == 4


def test_disconnected_graph():
    G = SkeletonGraph(range(4), [(0, 1), (2, 3)])
    cert = vertex_connectivity(G)
    assert cert.kappa == 0 and cert.min_cut == () and cert.paths == ()


def test_local_connectivity_rejects_adjacent_pair():
    with pytest.raises(ValueError):
        local_connectivity(cycle(5), 0, 1)


def test_local_connectivity_matches_networkx():
    rng = random.Random(3)
    for _ in range(40):
        G = random_graph(rng, 10, 0.45)
        H = to_networkx(G)
        for s, t in combinations(G.nodes, 2):
            if not G.has_edge(s, t):
                value, cut, paths = local_connectivity(G, s, t)
                assert value == nx.node_connectivity(H, s, t)
                assert len(cut) == len(paths) == value


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 10).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))))
def test_kappa_equals_brute_force(data):
    n, pairs = data
    G = SkeletonGraph(range(n), {tuple(sorted(p)) for p in pairs if p[0] != p[1]})
    cert = vertex_connectivity(G)
    assert cert.kappa == min_cut_by_enumeration(G) == brute_force_connectivity(G)
    verify_certificate(G, cert)
    if not G.is_complete():
        assert cert.kappa <= G.min_degree()


def test_kappa_matches_networkx_on_larger_graphs():
    rng = random.Random(11)
    for _ in range(30):
        G = random_graph(rng, 25, rng.uniform(0.15, 0.6))
        assert vertex_connectivity(G).kappa == nx.node_connectivity(to_networkx(G))


def test_certificate_is_reproducible():
    G = skeleton_graph(cons.hypercube(4).lattice, 1)
    assert vertex_connectivity(G) == vertex_connectivity(G)


def test_tampered_certificates_are_rejected():
    G = cycle(6)
    cert = vertex_connectivity(G)
    with pytest.raises(CertificateError):
        verify_certificate(G, ConnectivityCertificate(3, cert.min_cut, cert.paths, cert.pair))
    with pytest.raises(CertificateError):
        verify_certificate(G, ConnectivityCertificate(2, (1, 2), cert.paths, cert.pair))
    s, t = cert.pair
    bad_paths = (cert.paths[0], cert.paths[0])
    with pytest.raises(CertificateError):
        verify_certificate(G, ConnectivityCertificate(2, cert.min_cut, bad_paths, cert.pair))


def test_is_m_connected_examples():
    K4 = complete(4)
    assert is_m_connected(K4, 3)
    assert not is_m_connected(K4, 4)
    Q = cons.prism(cons.simplex(2)).lattice
    gamma = edge_adjacency_graph(Q)
    assert is_m_connected(gamma, 3)
    assert not is_m_connected(gamma, 4)


def test_is_m_connected_monotone():
    rng = random.Random(5)
    for _ in range(30):
        G = random_graph(rng, 9, 0.6)
        flags = [is_m_connected(G, m) for m in range(1, 9)]
        assert flags == sorted(flags, reverse=True)


def test_delete_vertical_edges_of_prism_gamma():
    for d in range(2, 7):
        Q = cons.prism(cons.simplex(d - 1)).lattice
        gamma = edge_adjacency_graph(Q)
        vertical = [e for e in gamma.nodes if len({v // 2 for v in Q.vertex_set(e)}) == 1]
        assert len(vertical) == d
        result = delete_and_check(gamma, vertical)
        assert not result.connected and len(result.components) == 2


def test_delete_nothing_and_unknown_node():
    G = cycle(5)
    assert delete_and_check(G, []).connected
    with pytest.raises(KeyError):
        delete_and_check(G, [99])


def test_glued_simplices_shared_facet_is_a_cut_vertex():
    C = glued_simplices(3)
    G = complex_skeleton_graph(C, 2)
    shared = C.index[sum(1 << v for v in (1, 2, 3))]
    result = delete_and_check(G, [shared])
    assert not result.connected and len(result.components) == 2


def test_balinski_examples():
    cube = cons.hypercube(3)
    for pair in combinations(range(8), 2):
        assert balinski_affine_check(cube, pair).passed
    with pytest.raises(PreconditionError):
        balinski_affine_check(cube, (0, 1, 2, 3))
    cross = cons.cross_polytope(4)
    # {+-e1, +-e2, +-e3} spans a 3-flat, one more than allowed in dimension 4
    with pytest.raises(PreconditionError, match="affine dimension 3"):
        balinski_affine_check(cross, range(6))
    result = balinski_affine_check(cross, range(4))
    assert result.affine_dim == 2 and result.passed


def test_balinski_needs_coordinates():
    with pytest.raises(PreconditionError):
        balinski_affine_check(cons.CoordinatizedPolytope(cons.cyclic(6, 3)), [0])


def test_balinski_affine_dimension_uses_exact_rank():
    P = cons.cross_polytope(3)
    coords = P.coords
    # +e1, -e1 and +e2: affine dim 2 > 1
    assert coords[0] == (Fraction(1), Fraction(0), Fraction(0))
    with pytest.raises(PreconditionError):
        balinski_affine_check(P, (0, 1, 2))
    assert balinski_affine_check(P, (0, 1)).passed


def test_gamma_of_dual_is_ridge_graph_connectivity():
    P = cons.hypercube(3).lattice
    D, _ = polar_dual(P)
    assert vertex_connectivity(skeleton_graph(P, 1)).kappa == vertex_connectivity(edge_adjacency_graph(D)).kappa
