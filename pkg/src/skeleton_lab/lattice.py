"""Face lattices of convex polytopes built from vertex-facet incidences.

Faces are stored as vertex bitmasks (Python ints) over the vertex universe of
the incidence.  Every face id is assigned in (rank, lexicographic vertex list)
order, so all derived objects are deterministic.
"""

from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass, field
from math import comb
from typing import Iterable

MAX_VERTICES = 4096
DEFAULT_MAX_FACES = 2_000_000


class InvalidIncidenceError(ValueError):
    pass


class ResourceLimitError(RuntimeError):
    pass


def max_faces() -> int:
    value = os.environ.get("SKELETON_LAB_MAX_FACES")
    return int(value) if value else DEFAULT_MAX_FACES


def check_vertex_budget(n: int) -> None:
    if n > MAX_VERTICES:
        raise ResourceLimitError(f"{n} vertices exceeds the guard of {MAX_VERTICES}")


def bits(mask: int) -> tuple[int, ...]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class IncidenceMatrix:
    """Vertex-facet incidence of a polytope.

    ``vertices`` defaults to ``range(n_vertices)``; a proper subset is used for
    cells of a complex that live in a larger shared universe.  A point is
    encoded as a single vertex with one empty facet.
    """

    n_vertices: int
    facets: tuple[tuple[int, ...], ...]
    name: str | None = None
    vertices: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "facets", tuple(tuple(sorted(f)) for f in self.facets))
        if self.vertices is None:
            object.__setattr__(self, "vertices", tuple(range(self.n_vertices)))
        else:
            object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1 and self.facets == ((),)

    @property
    def universe(self) -> int:
        return to_mask(self.vertices)

    def validate(self) -> None:
        check_vertex_budget(len(self.vertices))
        if self.is_point:
            return
        allowed = set(self.vertices)
        for i, facet in enumerate(self.facets):
            stray = [v for v in facet if v not in allowed]
            if stray:
                raise InvalidIncidenceError(f"facet {i} uses unknown vertices {stray}")
            if len(set(facet)) != len(facet):
                raise InvalidIncidenceError(f"facet {i} repeats a vertex")
        if len(self.facets) < 2:
            raise InvalidIncidenceError("a polytope needs at least 2 facets")
        masks = [to_mask(f) for f in self.facets]
        covered = 0
        for m in masks:
            covered |= m
        orphans = bits(self.universe & ~covered)
        if orphans:
            raise InvalidIncidenceError(f"vertices {list(orphans)} lie in no facet")
        for i, a in enumerate(masks):
            for j, b in enumerate(masks):
                if i < j and a == b:
                    raise InvalidIncidenceError(f"facets {i} and {j} are duplicates")
                if i != j and a & b == a and a != b:
                    raise InvalidIncidenceError(f"facet {i} is contained in facet {j}")

    def to_json(self) -> dict:
        out = {"name": self.name, "n_vertices": self.n_vertices, "facets": [list(f) for f in self.facets]}
        if self.vertices != tuple(range(self.n_vertices)):
            out["vertices"] = list(self.vertices)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "IncidenceMatrix":
        vertices = data.get("vertices")
        return cls(
            n_vertices=int(data["n_vertices"]),
            facets=tuple(tuple(int(v) for v in f) for f in data["facets"]),
            name=data.get("name"),
            vertices=tuple(vertices) if vertices is not None else None,
        )


@dataclass(frozen=True)
class FaceMap:
    """Face-id correspondence between two lattices."""

    mapping: dict[int, int]
    order: str  # "preserving" or "reversing"

    def __getitem__(self, face: int) -> int:
        return self.mapping[face]

    def __len__(self) -> int:
        return len(self.mapping)

    def inverse(self) -> "FaceMap":
        inv = {v: k for k, v in self.mapping.items()}
        if len(inv) != len(self.mapping):
            raise ValueError("face map is not injective")
        return FaceMap(inv, self.order)

    def compose(self, other: "FaceMap") -> "FaceMap":
        """Apply ``self`` first, then ``other``."""
        order = "preserving" if self.order == other.order else "reversing"
        return FaceMap({k: other.mapping[v] for k, v in self.mapping.items()}, order)


class FaceLattice:
    """Immutable face lattice; ranks are dimension + 1 (empty face has rank 0)."""

    def __init__(self, masks, ranks, covers_down, universe, facet_masks, name=None):
        self.masks: tuple[int, ...] = tuple(masks)
        self.ranks: tuple[int, ...] = tuple(ranks)
        self.covers_down: tuple[tuple[int, ...], ...] = tuple(covers_down)
        up = defaultdict(list)
        for f, below in enumerate(self.covers_down):
            for g in below:
                up[g].append(f)
        self.covers_up = tuple(tuple(sorted(up[f])) for f in range(len(self.masks)))
        self.universe: int = universe
        self.facet_masks: tuple[int, ...] = tuple(facet_masks)
        self.name = name
        self.index = {m: i for i, m in enumerate(self.masks)}
        by_rank = defaultdict(list)
        for i, r in enumerate(self.ranks):
            by_rank[r].append(i)
        self.by_rank = {r: tuple(ids) for r, ids in by_rank.items()}
        self.dim: int = self.ranks[-1] - 1

    def __len__(self) -> int:
        return len(self.masks)

    def __repr__(self) -> str:
        return f"FaceLattice(name={self.name!r}, dim={self.dim}, fvector={self.fvector()})"

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.masks) - 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return bits(self.universe)

    def dim_of(self, face: int) -> int:
        return self.ranks[face] - 1

    def vertex_set(self, face: int) -> tuple[int, ...]:
        return bits(self.masks[face])

    def faces_of_dim(self, k: int) -> tuple[int, ...]:
        return self.by_rank.get(k + 1, ())

    def face_of(self, vertices: Iterable[int]) -> int:
        return self.index[to_mask(vertices)]

    def vertex_face(self, v: int) -> int:
        return self.index[1 << v]

    def facets(self) -> tuple[int, ...]:
        return self.covers_down[self.top]

    def fvector(self) -> tuple[int, ...]:
        return tuple(len(self.faces_of_dim(i)) for i in range(self.dim))

    def contains(self, big: int, small: int) -> bool:
        return self.masks[big] & self.masks[small] == self.masks[small]

    def faces_above(self, face: int) -> list[int]:
        m = self.masks[face]
        return [i for i, x in enumerate(self.masks) if x & m == m]

    def coatom_sets(self) -> list[tuple[int, ...]]:
        return sorted(self.vertex_set(f) for f in self.facets())

    def incidence(self) -> IncidenceMatrix:
        """Recover an incidence description from the coatoms."""
        vertices = self.vertices
        n = vertices[-1] + 1 if vertices else 0
        if self.dim == 0:
            facets = ((),)
        else:
            facets = tuple(self.vertex_set(f) for f in self.facets())
        universe = None if vertices == tuple(range(n)) else vertices
        return IncidenceMatrix(n, facets, self.name, universe)

    def dump(self) -> str:
        """One face per line: rank followed by the sorted vertex list."""
        lines = []
        for i, m in enumerate(self.masks):
            lines.append(" ".join(str(x) for x in (self.ranks[i], *bits(m))))
        return "\n".join(lines) + "\n"


def _maximal(cands: set[int]) -> list[int]:
    ordered = sorted(cands, key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in ordered:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


def build_lattice(inc: IncidenceMatrix) -> FaceLattice:
    """All intersections of facets, plus the empty face and the whole polytope."""
    inc.validate()
    universe = inc.universe
    limit = max_faces()
    if inc.is_point:
        facet_masks = [0]
        faces = {0, universe}
    else:
        facet_masks = [to_mask(f) for f in inc.facets]
        faces = {universe}
        stack = [universe]
        while stack:
            face = stack.pop()
            for g in facet_masks:
                h = face & g
                if h not in faces:
                    faces.add(h)
                    stack.append(h)
                    if len(faces) > limit:
                        raise ResourceLimitError(f"more than {limit} faces")
        faces.add(0)

    lower: dict[int, list[int]] = {}
    for face in faces:
        if face == 0:
            lower[face] = []
            continue
        cands = {face & g for g in facet_masks if face & g != face}
        cands.add(0)
        lower[face] = _maximal(cands)

    rank: dict[int, int] = {}
    for face in sorted(faces, key=int.bit_count):
        below = lower[face]
        rank[face] = 1 + max(rank[c] for c in below) if below else 0

    ordered = sorted(faces, key=lambda m: (rank[m], bits(m)))
    if ordered[-1] != universe:
        raise InvalidIncidenceError("vertex universe is not the unique top face")
    pos = {m: i for i, m in enumerate(ordered)}
    covers_down = [tuple(sorted(pos[c] for c in lower[m])) for m in ordered]
    return FaceLattice(ordered, [rank[m] for m in ordered], covers_down, universe, facet_masks, inc.name)


@dataclass
class ValidationReport:
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, ok in self.checks.items() if not ok]


@dataclass(frozen=True)
class FaceCountRow:
    dim: int
    count: int
    bound: int

    @property
    def passed(self) -> bool:
        return self.count >= self.bound

    @property
    def equal(self) -> bool:
        return self.count == self.bound


def check_face_count_bound(L: FaceLattice) -> list[FaceCountRow]:
    """Compare f_i with the lower bound C(d+1, i+1) for each proper dimension."""
    d = L.dim
    return [FaceCountRow(i, f, comb(d + 1, i + 1)) for i, f in enumerate(L.fvector())]


def _intersection_closed(L: FaceLattice) -> tuple[bool, str]:
    masks = L.masks
    if len(masks) <= 2000:
        for i, a in enumerate(masks):
            for b in masks[i + 1 :]:
                if a & b not in L.index:
                    return False, f"{bits(a)} & {bits(b)} is not a face"
        return True, ""
    # every face other than the atoms is an intersection of facets here
    for a in masks:
        for g in L.facet_masks:
            if a & g not in L.index:
                return False, f"{bits(a)} & {bits(g)} is not a face"
    return True, ""


def validate_polytopal(L: FaceLattice) -> ValidationReport:
    report = ValidationReport()
    ranks = L.ranks

    bad_cover = [
        (g, f) for f, below in enumerate(L.covers_down) for g in below if ranks[f] != ranks[g] + 1
    ]
    report.checks["graded"] = not bad_cover
    if bad_cover:
        g, f = bad_cover[0]
        report.details["graded"] = f"cover {L.vertex_set(g)} < {L.vertex_set(f)} skips a rank"

    atoms = {L.masks[i] for i in L.by_rank.get(1, ())}
    singletons = {1 << v for v in L.vertices}
    if L.dim == 0:
        atoms = {L.masks[L.top]}
    report.checks["atoms"] = atoms == singletons
    if atoms != singletons:
        report.details["atoms"] = "rank-1 faces are not exactly the vertices"

    coatoms = {L.masks[f] for f in L.facets()}
    report.checks["coatoms"] = coatoms == set(L.facet_masks)
    if coatoms != set(L.facet_masks):
        report.details["coatoms"] = "faces covered by the top differ from the input facets"

    ok, why = _intersection_closed(L)
    report.checks["intersection_closed"] = ok
    if why:
        report.details["intersection_closed"] = why

    counts: dict[tuple[int, int], int] = defaultdict(int)
    for f in range(len(L)):
        for h in L.covers_up[f]:
            for g in L.covers_up[h]:
                counts[(f, g)] += 1
    bad = [(f, g) for (f, g), c in counts.items() if c != 2]
    report.checks["diamond"] = not bad
    if bad:
        f, g = bad[0]
        report.details["diamond"] = (
            f"interval [{L.vertex_set(f)}, {L.vertex_set(g)}] has {counts[bad[0]] + 2} elements"
        )

    d = L.dim
    euler = sum((-1) ** i * f for i, f in enumerate(L.fvector()))
    report.checks["euler"] = euler == 1 - (-1) ** d
    if euler != 1 - (-1) ** d:
        report.details["euler"] = f"alternating sum {euler} != {1 - (-1) ** d}"

    rows = check_face_count_bound(L)
    report.checks["face_count_bound"] = all(r.passed for r in rows)
    return report


def meet(L: FaceLattice, F: int, G: int) -> int:
    return L.index[L.masks[F] & L.masks[G]]


def polar_dual(L: FaceLattice) -> tuple[FaceLattice, FaceMap]:
    """Dual lattice whose vertices are the facets of ``L``; the map reverses inclusion."""
    facets = L.facets()
    if L.dim == 0:
        dual = build_lattice(IncidenceMatrix(1, ((),), _dual_name(L.name)))
        return dual, FaceMap({L.bottom: dual.top, L.top: dual.bottom}, "reversing")
    columns = [L.masks[f] for f in facets]
    dual_facets = tuple(
        tuple(j for j, c in enumerate(columns) if c >> v & 1) for v in L.vertices
    )
    dual = build_lattice(IncidenceMatrix(len(facets), dual_facets, _dual_name(L.name)))
    mapping = {}
    for i, m in enumerate(L.masks):
        image = to_mask(j for j, c in enumerate(columns) if c & m == m)
        if image not in dual.index:
            raise ValueError(f"face {bits(m)} has no dual face; lattice is not polytopal")
        mapping[i] = dual.index[image]
    return dual, FaceMap(mapping, "reversing")


def _dual_name(name):
    return f"dual({name})" if name else None


def face_figure(L: FaceLattice, F: int) -> tuple[FaceLattice, FaceMap]:
    """Lattice of the interval [F, top], relabelled as a polytope of dimension d - dim F - 1.

    The figure's vertices are the faces covering ``F`` in order of face id.
    """
    if F in (L.bottom, L.top):
        raise ValueError("face figure needs a proper nonempty face")
    covers = L.covers_up[F]
    cover_masks = [L.masks[c] for c in covers]

    def image(m):
        return to_mask(i for i, c in enumerate(cover_masks) if c & m == c)

    base = L.masks[F]
    if covers == (L.top,):
        inc = IncidenceMatrix(1, ((),))
    else:
        figure_facets = tuple(
            bits(image(L.masks[g])) for g in L.facets() if L.masks[g] & base == base
        )
        inc = IncidenceMatrix(len(covers), figure_facets)
    name = f"figure({L.name}, {list(L.vertex_set(F))})" if L.name else None
    fig = build_lattice(IncidenceMatrix(inc.n_vertices, inc.facets, name))
    mapping = {}
    for i, m in enumerate(L.masks):
        if m & base == base:
            mapping[i] = fig.index[image(m)]
    return fig, FaceMap(mapping, "preserving")
