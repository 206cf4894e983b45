"""Polytope families: simplices, cubes, cross-polytopes, cyclic polytopes,
products and pyramids.  Coordinates, when present, are exact fractions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product as cartesian

from .lattice import (
    FaceLattice,
    IncidenceMatrix,
    ResourceLimitError,
    build_lattice,
    check_vertex_budget,
)
from .linalg import affine_dimension

MAX_FAMILY_DIM = 12

Coords = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class CoordinatizedPolytope:
    lattice: FaceLattice
    coords: Coords | None = None

    def __post_init__(self):
        if self.coords is None:
            return
        if len(self.coords) != len(self.lattice.vertices):
            raise ValueError("one coordinate row per vertex is required")
        if affine_dimension(self.coords) != self.lattice.dim:
            raise ValueError("coordinates do not span the polytope's dimension")

    @property
    def dim(self) -> int:
        return self.lattice.dim

    @property
    def name(self):
        return self.lattice.name

    def to_json(self) -> dict:
        out = self.lattice.incidence().to_json()
        if self.coords is not None:
            out["coords"] = [[str(x) for x in row] for row in self.coords]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "CoordinatizedPolytope":
        lattice = build_lattice(IncidenceMatrix.from_json(data))
        coords = data.get("coords")
        if coords is not None:
            coords = tuple(tuple(Fraction(x) for x in row) for row in coords)
        return cls(lattice, coords)


def _unit(d: int, i: int, value=1) -> tuple[Fraction, ...]:
    return tuple(Fraction(value) if j == i else Fraction(0) for j in range(d))


def simplex(d: int) -> CoordinatizedPolytope:
    _check_dim(d, 0)
    if d == 0:
        inc = IncidenceMatrix(1, ((),), "simplex(0)")
        return CoordinatizedPolytope(build_lattice(inc), ((),))
    facets = tuple(combinations(range(d + 1), d))
    coords = (tuple(Fraction(0) for _ in range(d)),) + tuple(_unit(d, i) for i in range(d))
    return CoordinatizedPolytope(build_lattice(IncidenceMatrix(d + 1, facets, f"simplex({d})")), coords)


def hypercube(d: int) -> CoordinatizedPolytope:
    """Vertex i has coordinate j equal to bit j of i."""
    _check_dim(d, 1)
    n = 1 << d
    facets = []
    for j in range(d):
        for value in (0, 1):
            facets.append(tuple(i for i in range(n) if (i >> j & 1) == value))
    coords = tuple(tuple(Fraction(i >> j & 1) for j in range(d)) for i in range(n))
    return CoordinatizedPolytope(build_lattice(IncidenceMatrix(n, tuple(facets), f"hypercube({d})")), coords)


def cross_polytope(d: int) -> CoordinatizedPolytope:
    """Vertex 2i is +e_i and vertex 2i+1 is -e_i."""
    _check_dim(d, 1)
    facets = tuple(
        tuple(2 * i + s for i, s in enumerate(signs)) for signs in cartesian((0, 1), repeat=d)
    )
    coords = tuple(_unit(d, i, 1 - 2 * s) for i in range(d) for s in (0, 1))
    return CoordinatizedPolytope(
        build_lattice(IncidenceMatrix(2 * d, facets, f"cross_polytope({d})")), coords
    )


FAMILIES = {"simplex": simplex, "hypercube": hypercube, "cross_polytope": cross_polytope}


def standard_family(family: str, d: int) -> CoordinatizedPolytope:
    try:
        maker = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    return maker(d)


def _check_dim(d: int, low: int) -> None:
    if not low <= d <= MAX_FAMILY_DIM:
        raise ValueError(f"dimension {d} outside [{low}, {MAX_FAMILY_DIM}]")


def gale_evenness(subset, n: int) -> bool:
    """True when any two non-members are separated by an even number of members."""
    members = set(subset)
    parity = 0
    seen_gap = False
    for i in range(n):
        if i in members:
            parity ^= 1
        else:
            if seen_gap and parity:
                return False
            seen_gap = True
            parity = 0
    return True


def cyclic(n: int, d: int) -> FaceLattice:
    if d < 2 or n < d + 1:
        raise ValueError(f"cyclic polytope needs n >= d+1 >= 3, got n={n}, d={d}")
    check_vertex_budget(n)
    facets = tuple(s for s in combinations(range(n), d) if gale_evenness(s, n))
    return build_lattice(IncidenceMatrix(n, facets, f"cyclic({n},{d})"))


def polygon(n: int) -> FaceLattice:
    return cyclic(n, 2)


def _as_polytope(P) -> CoordinatizedPolytope:
    return P if isinstance(P, CoordinatizedPolytope) else CoordinatizedPolytope(P)


def _facet_lists(L: FaceLattice) -> list[tuple[int, ...]]:
    if L.dim == 0:
        return [()]
    return [L.vertex_set(f) for f in L.facets()]


def product(P, Q) -> CoordinatizedPolytope:
    """Cartesian product; vertex (i, j) becomes i * n_Q + j."""
    P, Q = _as_polytope(P), _as_polytope(Q)
    pv, qv = P.lattice.vertices, Q.lattice.vertices
    if P.dim < 1 or Q.dim < 1:
        raise ValueError("product factors must have dimension at least 1")
    n = len(pv) * len(qv)
    check_vertex_budget(n)
    p_pos = {v: i for i, v in enumerate(pv)}
    q_pos = {v: j for j, v in enumerate(qv)}
    nq = len(qv)
    facets = []
    for f in _facet_lists(P.lattice):
        facets.append(tuple(p_pos[a] * nq + j for a in f for j in range(nq)))
    for g in _facet_lists(Q.lattice):
        facets.append(tuple(i * nq + q_pos[b] for i in range(len(pv)) for b in g))
    name = f"product({P.name}, {Q.name})"
    lattice = build_lattice(IncidenceMatrix(n, tuple(facets), name))
    coords = None
    if P.coords is not None and Q.coords is not None:
        coords = tuple(a + b for a in P.coords for b in Q.coords)
    return CoordinatizedPolytope(lattice, coords)


def prism(P) -> CoordinatizedPolytope:
    return product(P, simplex(1))


def pyramid(P) -> CoordinatizedPolytope:
    P = _as_polytope(P)
    pv = P.lattice.vertices
    n = len(pv) + 1
    check_vertex_budget(n)
    pos = {v: i for i, v in enumerate(pv)}
    apex = n - 1
    facets = [tuple(range(len(pv)))]
    facets += [tuple(pos[v] for v in f) + (apex,) for f in _facet_lists(P.lattice)]
    lattice = build_lattice(IncidenceMatrix(n, tuple(facets), f"pyramid({P.name})"))
    coords = None
    if P.coords is not None:
        m = len(P.coords)
        dim = len(P.coords[0])
        centre = tuple(sum(row[j] for row in P.coords) / m for j in range(dim))
        coords = tuple(row + (Fraction(0),) for row in P.coords) + (centre + (Fraction(1),),)
    return CoordinatizedPolytope(lattice, coords)


def dual(P) -> CoordinatizedPolytope:
    from .lattice import polar_dual

    P = _as_polytope(P)
    return CoordinatizedPolytope(polar_dual(P.lattice)[0])


__all__ = [
    "CoordinatizedPolytope",
    "ResourceLimitError",
    "cross_polytope",
    "cyclic",
    "dual",
    "gale_evenness",
    "hypercube",
    "polygon",
    "prism",
    "product",
    "pyramid",
    "simplex",
    "standard_family",
]
