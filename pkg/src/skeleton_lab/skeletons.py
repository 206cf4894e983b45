"""Skeleton graphs of face lattices: G_k, incidence graphs, and the
edge-adjacency graph, plus the duality and face-figure correspondences."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .lattice import FaceLattice, FaceMap, face_figure, polar_dual


class SkeletonGraph:
    """Simple undirected graph with integer node ids kept in sorted order.

    ``labels`` maps node ids to (dimension, vertex tuple) when the nodes are
    faces; plain graphs leave it empty.
    """

    def __init__(self, nodes, edges, kind="custom", labels=None, lattice=None):
        self.nodes: tuple[int, ...] = tuple(sorted(nodes))
        adj: dict[int, set[int]] = {v: set() for v in self.nodes}
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at node {a}")
            adj[a].add(b)
            adj[b].add(a)
        self.adj: dict[int, tuple[int, ...]] = {v: tuple(sorted(adj[v])) for v in self.nodes}
        self.kind = kind
        self.labels = labels or {}
        self.lattice = lattice

    def __len__(self) -> int:
        return len(self.nodes)

    def __repr__(self) -> str:
        return f"SkeletonGraph(kind={self.kind!r}, nodes={len(self.nodes)}, edges={self.n_edges})"

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj.values()), default=0)

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adj.get(a, ())

    @property
    def n_edges(self) -> int:
        return sum(len(a) for a in self.adj.values()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in self.nodes for b in self.adj[a] if a < b]

    def is_complete(self) -> bool:
        n = len(self.nodes)
        return all(len(a) == n - 1 for a in self.adj.values())

    def same_as(self, other: "SkeletonGraph") -> bool:
        return self.nodes == other.nodes and self.adj == other.adj

    def to_json(self) -> dict:
        nodes = []
        for v in self.nodes:
            entry = {"id": v}
            if v in self.labels:
                dim, verts = self.labels[v]
                entry["dim"] = dim
                entry["vertices"] = list(verts)
            nodes.append(entry)
        return {"kind": self.kind, "nodes": nodes, "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json(cls, data: dict) -> "SkeletonGraph":
        nodes = [n["id"] if isinstance(n, dict) else n for n in data["nodes"]]
        labels = {
            n["id"]: (n["dim"], tuple(n["vertices"]))
            for n in data["nodes"]
            if isinstance(n, dict) and "vertices" in n
        }
        return cls(nodes, [tuple(e) for e in data["edges"]], data.get("kind", "custom"), labels)

    def to_dot(self) -> str:
        lines = ["graph G {"]
        for v in self.nodes:
            if v in self.labels:
                dim, verts = self.labels[v]
                label = f"{dim}:{{{','.join(map(str, verts))}}}"
            else:
                label = str(v)
            lines.append(f'  {v} [label="{label}"];')
        for a, b in self.edges():
            lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _labels(L: FaceLattice, ids) -> dict:
    return {f: (L.dim_of(f), L.vertex_set(f)) for f in ids}


def skeleton_graph(L: FaceLattice, k: int) -> SkeletonGraph:
    """G_k: k-faces, adjacent when some (k+1)-face contains both."""
    if not 0 <= k <= L.dim - 1:
        raise ValueError(f"k={k} outside [0, {L.dim - 1}]")
    nodes = L.faces_of_dim(k)
    edges = set()
    for upper in L.faces_of_dim(k + 1):
        edges.update(combinations(L.covers_down[upper], 2))
    return SkeletonGraph(nodes, edges, f"G_{k}", _labels(L, nodes), L)


def incidence_graph(L: FaceLattice, r: int, s: int) -> SkeletonGraph:
    """r-faces, adjacent when some s-face contains both."""
    if not 0 <= r < s <= L.dim - 1:
        raise ValueError(f"need 0 <= r < s <= {L.dim - 1}, got r={r}, s={s}")
    nodes = L.faces_of_dim(r)
    edges = set()
    for upper in L.faces_of_dim(s):
        inside = [f for f in nodes if L.contains(upper, f)]
        edges.update(combinations(inside, 2))
    kind = f"G_{r}" if s == r + 1 else f"incidence({r},{s})"
    return SkeletonGraph(nodes, edges, kind, _labels(L, nodes), L)


def edge_adjacency_graph(L: FaceLattice) -> SkeletonGraph:
    """Edges of the polytope, adjacent when they share an endpoint."""
    if L.dim < 1:
        raise ValueError("polytope has no edges")
    nodes = L.faces_of_dim(1)
    edges = set()
    for v in L.faces_of_dim(0):
        edges.update(combinations(L.covers_up[v], 2))
    return SkeletonGraph(nodes, edges, "gamma", _labels(L, nodes), L)


@dataclass(frozen=True)
class DualityCheck:
    passed: bool
    bijection: dict[int, int]
    reason: str = ""


def verify_duality_iso(L: FaceLattice) -> DualityCheck:
    """Check that the polar map carries G_{d-2}(L) isomorphically onto the edge graph of the dual."""
    if L.dim < 2:
        raise ValueError("duality check needs dimension >= 2")
    Q, fmap = polar_dual(L)
    G = skeleton_graph(L, L.dim - 2)
    H = edge_adjacency_graph(Q)
    bijection = {f: fmap[f] for f in G.nodes}
    if sorted(bijection.values()) != list(H.nodes):
        return DualityCheck(False, bijection, "ridges do not map onto dual edges")
    for a in G.nodes:
        image = tuple(sorted(bijection[b] for b in G.adj[a]))
        if image != H.adj[bijection[a]]:
            return DualityCheck(False, bijection, f"adjacency of node {a} is not preserved")
    return DualityCheck(True, bijection)


@dataclass(frozen=True)
class Walk:
    """Walk given by its node sequence; the edges are the consecutive pairs."""

    nodes: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.nodes) - 1

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.nodes, self.nodes[1:]))

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.nodes[0], self.nodes[-1]

    def is_valid(self, G: SkeletonGraph) -> bool:
        if not self.nodes or any(v not in G.adj for v in self.nodes):
            return False
        return all(G.has_edge(a, b) for a, b in self.edges)


def lift_walk(L: FaceLattice, F: int, w: Walk, figure: tuple[FaceLattice, FaceMap] | None = None) -> Walk:
    """Carry a walk in G_k of the face figure at F to G_{k+r+1}(L), r = dim F."""
    fig, fmap = figure or face_figure(L, F)
    if not w.nodes:
        raise ValueError("empty walk")
    k = fig.dim_of(w.nodes[0])
    if not 0 <= k <= fig.dim - 1 or not w.is_valid(skeleton_graph(fig, k)):
        raise ValueError("walk is not valid in the figure's skeleton graph")
    inverse = fmap.inverse()
    lifted = Walk(tuple(inverse[v] for v in w.nodes))
    target = skeleton_graph(L, k + L.dim_of(F) + 1)
    if not lifted.is_valid(target):
        raise AssertionError("lifted walk is not a walk in the ambient skeleton graph")
    return lifted
