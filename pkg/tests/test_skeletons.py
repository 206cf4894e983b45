from itertools import combinations

import pytest

from skeleton_lab import constructors as cons
from skeleton_lab.harness import default_polytopes
from skeleton_lab.lattice import face_figure
from skeleton_lab.skeletons import (
    SkeletonGraph,
    Walk,
    edge_adjacency_graph,
    incidence_graph,
    lift_walk,
    skeleton_graph,
    verify_duality_iso,
)


def brute_force_skeleton(L, r, s):
    """r-faces adjacent iff some s-face contains both, by checking every pair."""
    nodes = L.faces_of_dim(r)
    upper = L.faces_of_dim(s)
    edges = [
        (a, b) for a, b in combinations(nodes, 2)
        if any(L.contains(u, a) and L.contains(u, b) for u in upper)
    ]
    return SkeletonGraph(nodes, edges)


def test_tetrahedron_edge_graph_is_octahedron():
    L = cons.simplex(3).lattice
    G = skeleton_graph(L, 1)
    assert len(G) == 6
    assert all(G.degree(v) == 4 for v in G.nodes)
    for a, b in combinations(G.nodes, 2):
        disjoint = not set(L.vertex_set(a)) & set(L.vertex_set(b))
        assert G.has_edge(a, b) != disjoint
    assert G.same_as(brute_force_skeleton(L, 1, 2))


@pytest.mark.parametrize("P", [cons.simplex(4), cons.hypercube(3), cons.cross_polytope(4), cons.prism(cons.simplex(2))],
                         ids=lambda P: P.name)
def test_top_skeleton_is_complete(P):
    G = skeleton_graph(P.lattice, P.dim - 1)
    assert G.is_complete() and len(G) == P.lattice.fvector()[-1]


def test_cube_graph():
    G = skeleton_graph(cons.hypercube(3).lattice, 0)
    assert len(G) == 8 and all(G.degree(v) == 3 for v in G.nodes)


def test_skeleton_rejects_bad_k():
    with pytest.raises(ValueError):
        skeleton_graph(cons.simplex(3).lattice, 3)


def test_incidence_graph_examples():
    L = cons.simplex(3).lattice
    assert incidence_graph(L, 0, 2).is_complete()
    cube = cons.hypercube(3).lattice
    G = incidence_graph(cube, 0, 2)
    non_edges = [(a, b) for a, b in combinations(G.nodes, 2) if not G.has_edge(a, b)]
    antipodal = [(a, b) for a, b in combinations(G.nodes, 2)
                 if cube.vertex_set(a)[0] ^ cube.vertex_set(b)[0] == 7]
    assert non_edges == antipodal and len(non_edges) == 4
    assert G.n_edges == 24
    with pytest.raises(ValueError):
        incidence_graph(L, 1, 1)


@pytest.mark.parametrize("P", [cons.simplex(4), cons.hypercube(4), cons.cyclic(7, 4)],
                         ids=lambda P: getattr(P, "name", None))
def test_incidence_graph_matches_brute_force(P):
    L = getattr(P, "lattice", P)
    for r in range(L.dim - 1):
        for s in range(r + 1, L.dim):
            assert incidence_graph(L, r, s).same_as(brute_force_skeleton(L, r, s))
        assert incidence_graph(L, r, r + 1).same_as(skeleton_graph(L, r))


def test_edge_adjacency_examples():
    tri = cons.simplex(2).lattice
    assert edge_adjacency_graph(tri).is_complete()
    prism = cons.prism(cons.simplex(2)).lattice
    G = edge_adjacency_graph(prism)
    assert len(G) == 9
    vertical = [e for e in G.nodes if {v // 2 for v in prism.vertex_set(e)} == {prism.vertex_set(e)[0] // 2}]
    assert len(vertical) == 3
    assert not any(G.has_edge(a, b) for a, b in combinations(vertical, 2))
    tet = cons.simplex(3).lattice
    assert edge_adjacency_graph(tet).same_as(skeleton_graph(tet, 1))


@pytest.mark.parametrize("P", [cons.hypercube(3), *(cons.simplex(d) for d in range(2, 6)), cons.cross_polytope(4)],
                         ids=lambda P: P.name)
def test_duality_isomorphism(P):
    result = verify_duality_iso(P.lattice)
    assert result.passed, result.reason
    assert len(result.bijection) == len(P.lattice.faces_of_dim(P.dim - 2))


def test_walk_lifting_cube_vertex():
    L = cons.hypercube(3).lattice
    F = L.faces_of_dim(0)[0]
    fig, fmap = face_figure(L, F)
    a, b, c = fig.faces_of_dim(0)
    lifted = lift_walk(L, F, Walk((a, b, c)))
    assert lifted.length == 2
    assert all(L.dim_of(x) == 1 and L.contains(x, F) for x in lifted.nodes)
    assert tuple(fmap[x] for x in lifted.nodes) == (a, b, c)
    assert lifted.is_valid(skeleton_graph(L, 1))


def test_walk_lifting_single_node():
    L = cons.simplex(3).lattice
    F = L.faces_of_dim(1)[0]
    fig, fmap = face_figure(L, F)
    v = fig.faces_of_dim(0)[0]
    lifted = lift_walk(L, F, Walk((v,)))
    assert lifted.length == 0 and fmap[lifted.nodes[0]] == v


def test_walk_lifting_closed_walk_simplex4_edge():
    L = cons.simplex(4).lattice
    F = L.faces_of_dim(1)[0]
    fig, fmap = face_figure(L, F)
    a, b, c = fig.faces_of_dim(0)
    lifted = lift_walk(L, F, Walk((a, b, c, a)))
    assert lifted.nodes[0] == lifted.nodes[-1]
    assert len(set(lifted.nodes)) == 3
    assert all(L.dim_of(x) == 2 and L.contains(x, F) for x in lifted.nodes)
    G2 = skeleton_graph(L, 2)
    assert all(G2.has_edge(x, y) for x, y in combinations(set(lifted.nodes), 2))


def test_walk_lifting_rejects_invalid_walk():
    L = cons.hypercube(3).lattice
    F = L.faces_of_dim(1)[0]
    fig, _ = face_figure(L, F)
    a, b = fig.faces_of_dim(0)
    with pytest.raises(ValueError):
        lift_walk(L, F, Walk((a, a)))


def test_figure_walks_correspond_to_ambient_walks():
    """Every edge of G_k(figure) lifts to an edge of G_{k+r+1} and conversely."""
    L = cons.cross_polytope(4).lattice
    for F in (L.faces_of_dim(0)[0], L.faces_of_dim(1)[0]):
        fig, fmap = face_figure(L, F)
        inv = fmap.inverse()
        r = L.dim_of(F)
        for k in range(fig.dim):
            small = skeleton_graph(fig, k)
            big = skeleton_graph(L, k + r + 1)
            above = [x for x in big.nodes if L.contains(x, F)]
            lifted = {tuple(sorted((inv[a], inv[b]))) for a, b in small.edges()}
            induced = {(a, b) for a, b in big.edges() if a in above and b in above}
            assert lifted == induced


def test_degree_bounds_and_connectedness_on_corpus():
    from skeleton_lab.connectivity import components

    for P in default_polytopes():
        L, d = P.lattice, P.dim
        for k in range(d):
            G = skeleton_graph(L, k)
            assert G.min_degree() >= (k + 1) * (d - k)
            assert len(components(G)) == 1
            for f in L.faces_of_dim(k):
                assert len(L.covers_up[f]) >= d - k
            for f in L.faces_of_dim(k + 1):
                assert len(L.covers_down[f]) >= k + 2


@pytest.mark.parametrize("d", range(2, 7))
def test_simplex_degrees_are_exact(d):
    L = cons.simplex(d).lattice
    for k in range(d):
        G = skeleton_graph(L, k)
        assert {G.degree(v) for v in G.nodes} == {(k + 1) * (d - k)}


def test_exports_are_deterministic():
    G = skeleton_graph(cons.simplex(2).lattice, 0)
    assert G.to_dot() == (
        "graph G {\n"
        '  1 [label="0:{0}"];\n  2 [label="0:{1}"];\n  3 [label="0:{2}"];\n'
        "  1 -- 2;\n  1 -- 3;\n  2 -- 3;\n}\n"
    )
    again = SkeletonGraph.from_json(G.to_json())
    assert again.same_as(G) and again.labels == G.labels
