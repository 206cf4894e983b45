"""Polyhedral complexes with the intersection property.

Cells are identified by their vertex sets, which is sound exactly when the
complex has the intersection property.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

from .lattice import (
    FaceLattice,
    IncidenceMatrix,
    bits,
    build_lattice,
    validate_polytopal,
)
from .skeletons import SkeletonGraph


class ComplexError(ValueError):
    pass


class CellComplex:
    def __init__(self, n_vertices, maximal, cell_lattices, name=None):
        self.n_vertices: int = n_vertices
        self.name = name
        dims: dict[int, int] = {}
        down: dict[int, set[int]] = defaultdict(set)
        for L in cell_lattices:
            for i, m in enumerate(L.masks):
                dims[m] = L.ranks[i] - 1
                down[m].update(L.masks[j] for j in L.covers_down[i])
        order = sorted(dims, key=lambda m: (dims[m], bits(m)))
        self.masks: tuple[int, ...] = tuple(order)
        self.dims: tuple[int, ...] = tuple(dims[m] for m in order)
        self.index = {m: i for i, m in enumerate(order)}
        self.covers_down = tuple(
            tuple(sorted(self.index[c] for c in down[m])) for m in order
        )
        self.maximal: tuple[int, ...] = tuple(sorted(self.index[m] for m in maximal))
        self.cell_lattices = {self.index[L.universe]: L for L in cell_lattices}
        self.dim: int = max(self.dims[c] for c in self.maximal)

    def __len__(self) -> int:
        return len(self.masks)

    def __repr__(self) -> str:
        return f"CellComplex(name={self.name!r}, dim={self.dim}, fvector={self.fvector()})"

    def vertex_set(self, cell: int) -> tuple[int, ...]:
        return bits(self.masks[cell])

    def cells_of_dim(self, k: int) -> tuple[int, ...]:
        return tuple(i for i, d in enumerate(self.dims) if d == k)

    def fvector(self) -> tuple[int, ...]:
        return tuple(len(self.cells_of_dim(i)) for i in range(self.dim + 1))

    def to_json(self) -> dict:
        cells = []
        for c in self.maximal:
            L = self.cell_lattices[c]
            cells.append(L.incidence().to_json() | {"vertices": list(L.vertices)})
        return {"name": self.name, "n_vertices": self.n_vertices, "cells": cells}

    @classmethod
    def from_json(cls, data: dict) -> "CellComplex":
        n = int(data["n_vertices"])
        cells = []
        for cell in data["cells"]:
            facets = tuple(tuple(f) for f in cell["facets"])
            vertices = cell.get("vertices")
            if vertices is None:
                vertices = sorted({v for f in facets for v in f})
            cells.append(IncidenceMatrix(n, facets, cell.get("name"), tuple(vertices)))
        return build_complex(cells, n, data.get("name"))


def _cell_vertices(inc: IncidenceMatrix) -> tuple[int, ...]:
    used = sorted({v for f in inc.facets for v in f})
    if inc.vertices != tuple(range(inc.n_vertices)):
        return inc.vertices
    return tuple(used) if used else inc.vertices


def build_complex(cells, n_vertices: int | None = None, name=None) -> CellComplex:
    """Materialize all faces of the given cells over a shared vertex universe."""
    lattices: dict[int, FaceLattice] = {}
    universe_size = 0
    for i, cell in enumerate(cells):
        verts = _cell_vertices(cell)
        inc = IncidenceMatrix(cell.n_vertices, cell.facets, cell.name, verts)
        L = build_lattice(inc)
        report = validate_polytopal(L)
        if not report.passed:
            raise ComplexError(f"cell {i} is not a polytope: failed {report.failures()}")
        lattices.setdefault(L.universe, L)
        universe_size = max(universe_size, cell.n_vertices, max(verts) + 1)
    n = n_vertices if n_vertices is not None else universe_size
    masks = sorted(lattices, key=lambda m: bits(m))
    for a, b in combinations(masks, 2):
        if a & b in (a, b):
            raise ComplexError(f"cell {bits(a)} and cell {bits(b)} are nested")
        meet_ = a & b
        if meet_ not in lattices[a].index or meet_ not in lattices[b].index:
            raise ComplexError(
                f"cells {bits(a)} and {bits(b)} meet in {bits(meet_)}, which is not a common face"
            )
    return CellComplex(n, masks, [lattices[m] for m in masks], name)


def glued_simplices(d: int) -> CellComplex:
    """Two d-simplices {0..d} and {1..d+1} sharing a codimension-one face."""
    if d < 1:
        raise ValueError("d must be at least 1")
    cells = []
    for verts in (range(0, d + 1), range(1, d + 2)):
        facets = tuple(combinations(verts, d))
        cells.append(IncidenceMatrix(d + 2, facets, None, tuple(verts)))
    return build_complex(cells, d + 2, f"glued_simplices({d})")


def boundary_complex(P: FaceLattice) -> CellComplex:
    if P.dim < 1:
        raise ValueError("boundary complex needs dimension >= 1")
    n = P.vertices[-1] + 1
    cells = []
    for f in P.facets():
        below = P.covers_down[f]
        if P.dim_of(f) == 0:
            facets = ((),)
        else:
            facets = tuple(P.vertex_set(g) for g in below)
        cells.append(IncidenceMatrix(n, facets, None, P.vertex_set(f)))
    return build_complex(cells, n, f"boundary({P.name})")


def single_cell_complex(P: FaceLattice) -> CellComplex:
    n = P.vertices[-1] + 1
    return build_complex([P.incidence()], n, P.name)


@dataclass(frozen=True)
class ComplexReport:
    dimension: int
    pure: bool
    strongly_connected: bool
    deviant_facets: tuple[int, ...]
    dual_components: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "pure": self.pure,
            "strongly_connected": self.strongly_connected,
            "deviant_facets": list(self.deviant_facets),
            "dual_components": [list(c) for c in self.dual_components],
        }


def complex_checks(C: CellComplex) -> ComplexReport:
    deviant = tuple(c for c in C.maximal if C.dims[c] != C.dim)
    adj: dict[int, list[int]] = {c: [] for c in C.maximal}
    for a, b in combinations(C.maximal, 2):
        da, db = C.dims[a], C.dims[b]
        meet_ = C.index[C.masks[a] & C.masks[b]]
        if da == db and C.dims[meet_] == da - 1:
            adj[a].append(b)
            adj[b].append(a)
    seen: set[int] = set()
    comps = []
    for c in C.maximal:
        if c in seen:
            continue
        seen.add(c)
        stack, comp = [c], [c]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comps.append(tuple(sorted(comp)))
    return ComplexReport(C.dim, not deviant, len(comps) == 1, deviant, tuple(comps))


def complex_skeleton_graph(C: CellComplex, k: int) -> SkeletonGraph:
    """G_k(C): k-cells, adjacent when some (k+1)-cell contains both."""
    if not 0 <= k <= C.dim - 1:
        raise ValueError(f"k={k} outside [0, {C.dim - 1}]")
    nodes = C.cells_of_dim(k)
    edges = set()
    for upper in C.cells_of_dim(k + 1):
        edges.update(combinations(C.covers_down[upper], 2))
    labels = {c: (k, C.vertex_set(c)) for c in nodes}
    return SkeletonGraph(nodes, edges, f"G_{k}", labels)

