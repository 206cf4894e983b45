"""Connectivity bounds, corpus definitions, and verification reports."""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field

from . import constructors as cons
from .complexes import (
    CellComplex,
    boundary_complex,
    complex_checks,
    complex_skeleton_graph,
    glued_simplices,
)
from .connectivity import vertex_connectivity
from .lattice import FaceLattice, check_face_count_bound, validate_polytopal
from .skeletons import skeleton_graph, verify_duality_iso


class HypothesisError(ValueError):
    pass


@dataclass(frozen=True)
class TheoremValues:
    k: int
    d: int
    m_k_d: int
    sallee_lower: int
    sallee_upper: int
    n_k_d: int
    note: str = ""

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "d": self.d,
            "m_k_d": self.m_k_d,
            "sallee_lower": self.sallee_lower,
            "sallee_upper": self.sallee_upper,
            "n_k_d": self.n_k_d,
            "note": self.note,
        }


def tight_value(k: int, d: int) -> int:
    """(k+1)(d-k): the G_k degree of every k-face of a d-simplex."""
    return (k + 1) * (d - k)


def connectivity_bound(k: int, d: int) -> int:
    """Largest m with G_k(P) m-connected for every d-polytope P."""
    if not 0 <= k <= d - 1:
        raise ValueError(f"need 0 <= k <= d-1, got k={k}, d={d}")
    return d if k == d - 2 else tight_value(k, d)


def theorem_values(k: int, d: int) -> TheoremValues:
    m = connectivity_bound(k, d)
    n = tight_value(k, d)
    notes = []
    if k == 0:
        notes.append("Balinski")
    if k == d - 2:
        notes.append("ridge case")
    if k == d - 1:
        notes.append("trivial: complete graph on facets")
    return TheoremValues(k, d, m, n - k, n, n, ", ".join(notes))


@dataclass
class Row:
    subject: str
    check: str
    passed: bool
    k: int | None = None
    nodes: int | None = None
    kappa: int | None = None
    bound: int | None = None
    min_degree: int | None = None
    tight: bool | None = None
    detail: str = ""
    certificate: dict | None = None

    def to_json(self) -> dict:
        out = {"subject": self.subject, "check": self.check, "passed": self.passed}
        for key in ("k", "nodes", "kappa", "bound", "min_degree", "tight", "certificate"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class VerificationReport:
    rows: list[Row] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def extend(self, other: "VerificationReport") -> None:
        self.rows.extend(other.rows)

    def to_json(self) -> dict:
        return {"passed": self.passed, "meta": self.meta, "rows": [r.to_json() for r in self.rows]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=1) + "\n"

    def table(self) -> str:
        lines = [f"{'subject':34} {'check':26} {'k':>2} {'nodes':>5} {'kappa':>5} {'bound':>5}  result"]
        for r in self.rows:
            cells = [
                f"{r.subject:34}",
                f"{r.check:26}",
                f"{'' if r.k is None else r.k:>2}",
                f"{'' if r.nodes is None else r.nodes:>5}",
                f"{'' if r.kappa is None else r.kappa:>5}",
                f"{'' if r.bound is None else r.bound:>5}",
                " PASS" if r.passed else " FAIL",
            ]
            line = " ".join(cells)
            if r.detail:
                line += f"  {r.detail}"
            lines.append(line)
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'} ({len(self.rows)} rows)")
        return "\n".join(lines) + "\n"


def _cert_summary(cert) -> dict:
    return {
        "pair": list(cert.pair) if cert.pair else None,
        "cut": list(cert.min_cut) if cert.min_cut is not None else None,
        "paths": len(cert.paths),
    }


def verify_polytope(P: FaceLattice, name: str | None = None) -> VerificationReport:
    name = name or P.name or "polytope"
    report = VerificationReport()
    d = P.dim
    validation = validate_polytopal(P)
    report.rows.append(
        Row(name, "polytopal_lattice", validation.passed, detail=",".join(validation.failures()))
    )
    counts = check_face_count_bound(P)
    equal = [r.dim for r in counts if r.equal]
    report.rows.append(
        Row(
            name,
            "face_count_lower_bound",
            all(r.passed for r in counts),
            detail=f"f={P.fvector()} equality in dims {equal}",
        )
    )
    for k in range(d):
        G = skeleton_graph(P, k)
        cert = vertex_connectivity(G)
        bound = connectivity_bound(k, d)
        degree_bound = tight_value(k, d)
        mindeg = G.min_degree()
        report.rows.append(
            Row(
                name,
                "skeleton_connectivity",
                cert.kappa >= bound and mindeg >= degree_bound,
                k=k,
                nodes=len(G),
                kappa=cert.kappa,
                bound=bound,
                min_degree=mindeg,
                tight=cert.kappa == degree_bound,
                detail=f"min degree {mindeg} >= {degree_bound}" if mindeg >= degree_bound
                else f"min degree {mindeg} < {degree_bound}",
                certificate=_cert_summary(cert),
            )
        )
    if d >= 2:
        dual = verify_duality_iso(P)
        report.rows.append(Row(name, "ridge_dual_isomorphism", dual.passed, detail=dual.reason))
    return report


def verify_complex(C: CellComplex, name: str | None = None) -> VerificationReport:
    name = name or C.name or "complex"
    checks = complex_checks(C)
    if not (checks.pure and checks.strongly_connected):
        raise HypothesisError(f"{name} is not pure and strongly connected")
    d = C.dim
    report = VerificationReport()
    for k in range(d):
        G = complex_skeleton_graph(C, k)
        cert = vertex_connectivity(G)
        if k == 0:
            check, bound = "graph_connectivity", d
        elif k <= d - 3:
            check, bound = "cell_skeleton_connectivity", tight_value(k, d)
        elif k == d - 2:
            check, bound = "ridge_connectivity", d
        else:
            check, bound = "top_informational", None
        passed = True if bound is None else cert.kappa >= bound
        report.rows.append(
            Row(
                name,
                check,
                passed,
                k=k,
                nodes=len(G),
                kappa=cert.kappa,
                bound=bound,
                min_degree=G.min_degree(),
                certificate=_cert_summary(cert),
            )
        )
    return report


def probe_complex_conjecture(C: CellComplex) -> list[tuple[int, int, int]]:
    """(k, kappa, expected) for every 0 <= k <= d-2 where G_k(C) falls short.

    The expectation is only meaningful for Cohen-Macaulay inputs, which is not
    checked here.
    """
    d = C.dim
    out = []
    for k in range(max(d - 1, 0)):
        expected = d if k == d - 2 else tight_value(k, d)
        kappa = vertex_connectivity(complex_skeleton_graph(C, k)).kappa
        if kappa < expected:
            out.append((k, kappa, expected))
    return out


def default_polytopes() -> list[cons.CoordinatizedPolytope]:
    base = []
    base += [cons.simplex(d) for d in range(2, 7)]
    base += [cons.hypercube(d) for d in range(2, 6)]
    base += [cons.cross_polytope(d) for d in range(2, 6)]
    base += [cons.CoordinatizedPolytope(cons.cyclic(n, d)) for d in (3, 4) for n in range(6, 9)]
    base += [cons.prism(cons.simplex(d)) for d in range(1, 6)]
    base += [
        cons.pyramid(cons.hypercube(2)),
        cons.pyramid(cons.hypercube(3)),
        cons.pyramid(cons.CoordinatizedPolytope(cons.polygon(5))),
        cons.prism(cons.hypercube(3)),
        cons.prism(cons.CoordinatizedPolytope(cons.polygon(5))),
        cons.product(cons.simplex(2), cons.simplex(2)),
        cons.product(cons.simplex(2), cons.simplex(3)),
        cons.product(cons.CoordinatizedPolytope(cons.polygon(5)), cons.simplex(2)),
        cons.pyramid(cons.prism(cons.simplex(2))),
    ]
    return base + [cons.dual(P) for P in base]


def default_complexes() -> list[CellComplex]:
    out = [glued_simplices(d) for d in range(2, 6)]
    out += [boundary_complex(cons.simplex(d).lattice) for d in range(3, 6)]
    out += [boundary_complex(cons.hypercube(d).lattice) for d in (3, 4)]
    out.append(boundary_complex(cons.cross_polytope(3).lattice))
    return out


def corpus_hash(polytopes, complexes) -> str:
    blob = json.dumps(
        {
            "polytopes": [P.lattice.incidence().to_json() for P in polytopes],
            "complexes": [C.to_json() for C in complexes],
        },
        sort_keys=True,
    )
    return hashlib.sha256(blob.encode()).hexdigest()


def verify_all(polytopes=None, complexes=None, timings: bool = False) -> VerificationReport:
    polytopes = default_polytopes() if polytopes is None else polytopes
    complexes = default_complexes() if complexes is None else complexes
    report = VerificationReport(
        meta={
            "corpus_hash": corpus_hash(polytopes, complexes),
            "polytopes": len(polytopes),
            "complexes": len(complexes),
        }
    )
    started = time.perf_counter()
    for P in polytopes:
        report.extend(verify_polytope(P.lattice))
    for C in complexes:
        report.extend(verify_complex(C))
    if timings:
        report.meta["seconds"] = round(time.perf_counter() - started, 3)
    return report


