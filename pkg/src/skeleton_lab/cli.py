"""Command-line front end.

Exit status: 0 when everything passes, 1 when a bound or check fails,
2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import constructors as cons
from .complexes import (
    CellComplex,
    ComplexError,
    boundary_complex,
    complex_checks,
    complex_skeleton_graph,
    glued_simplices,
)
from .connectivity import (
    PreconditionError,
    balinski_affine_check,
    delete_and_check,
    vertex_connectivity,
)
from .harness import HypothesisError, theorem_values, verify_all, verify_complex, verify_polytope
from .lattice import (
    InvalidIncidenceError,
    ResourceLimitError,
    check_face_count_bound,
    face_figure,
    polar_dual,
    validate_polytopal,
)
from .skeletons import SkeletonGraph, edge_adjacency_graph, incidence_graph, skeleton_graph

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load(path):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _load_polytope(path) -> cons.CoordinatizedPolytope:
    return cons.CoordinatizedPolytope.from_json(_load(path))


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _emit(args, payload) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, sort_keys=True, indent=1) + "\n"
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_build(args) -> int:
    family = args.family
    if family in cons.FAMILIES:
        if args.d is None:
            raise UsageError("--d is required")
        P = cons.standard_family(family, args.d)
    elif family == "cyclic":
        if args.d is None or args.n is None:
            raise UsageError("--n and --d are required")
        P = cons.CoordinatizedPolytope(cons.cyclic(args.n, args.d))
    elif family == "product":
        if len(args.of) != 2:
            raise UsageError("product needs two --of files")
        P = cons.product(_load_polytope(args.of[0]), _load_polytope(args.of[1]))
    elif family in ("pyramid", "prism", "dual"):
        if len(args.of) != 1:
            raise UsageError(f"{family} needs one --of file")
        P = getattr(cons, family)(_load_polytope(args.of[0]))
    else:
        raise UsageError(f"unknown family {family}")
    _emit(args, P.to_json())
    return EXIT_OK


def cmd_lattice(args) -> int:
    L = _load_polytope(args.file).lattice
    if args.action == "validate":
        report = validate_polytopal(L)
        _emit(args, {"dim": L.dim, "checks": report.checks, "details": report.details, "passed": report.passed})
        return EXIT_OK if report.passed else EXIT_FAIL
    if args.action == "fvector":
        rows = check_face_count_bound(L)
        _emit(args, {
            "dim": L.dim,
            "fvector": list(L.fvector()),
            "lower_bounds": [r.bound for r in rows],
            "equal": [r.equal for r in rows],
        })
        return EXIT_OK if all(r.passed for r in rows) else EXIT_FAIL
    if args.action == "dual":
        dual, _ = polar_dual(L)
        _emit(args, cons.CoordinatizedPolytope(dual).to_json())
        return EXIT_OK
    if args.action == "figure":
        if args.face is None:
            raise UsageError("--face is required")
        face = L.face_of(_int_list(args.face))
        fig, _ = face_figure(L, face)
        _emit(args, cons.CoordinatizedPolytope(fig).to_json())
        return EXIT_OK
    _emit(args, L.dump())
    return EXIT_OK


def _graph_out(args, G: SkeletonGraph) -> int:
    _emit(args, G.to_dot() if args.format == "dot" else G.to_json())
    return EXIT_OK


def cmd_graph(args) -> int:
    if args.action == "export":
        return _graph_out(args, SkeletonGraph.from_json(_load(args.file)))
    L = _load_polytope(args.file).lattice
    if args.action == "skeleton":
        if args.k is None:
            raise UsageError("-k is required")
        return _graph_out(args, skeleton_graph(L, args.k))
    if args.action == "incidence":
        if args.r is None or args.s is None:
            raise UsageError("--r and --s are required")
        return _graph_out(args, incidence_graph(L, args.r, args.s))
    return _graph_out(args, edge_adjacency_graph(L))


def cmd_connectivity(args) -> int:
    G = SkeletonGraph.from_json(_load(args.graph))
    cert = vertex_connectivity(G)
    if args.certify:
        _emit(args, cert.to_json())
    else:
        _emit(args, f"{cert.kappa}\n")
    return EXIT_OK


def cmd_delete(args) -> int:
    G = SkeletonGraph.from_json(_load(args.graph))
    result = delete_and_check(G, _int_list(args.nodes))
    _emit(args, {"connected": result.connected, "components": [list(c) for c in result.components]})
    return EXIT_OK


def cmd_balinski(args) -> int:
    P = _load_polytope(args.file)
    result = balinski_affine_check(P, _int_list(args.vertices))
    _emit(args, {
        "passed": result.passed,
        "affine_dim": result.affine_dim,
        "deleted": list(result.deleted),
        "components": [list(c) for c in result.components],
    })
    return EXIT_OK if result.passed else EXIT_FAIL


def _load_complex(args) -> CellComplex:
    if args.glued is not None:
        return glued_simplices(args.glued)
    if args.boundary is not None:
        return boundary_complex(_load_polytope(args.boundary).lattice)
    if args.file is None:
        raise UsageError("give a complex file, --glued D or --boundary FILE")
    return CellComplex.from_json(_load(args.file))


def cmd_complex(args) -> int:
    C = _load_complex(args)
    if args.action == "build":
        _emit(args, C.to_json() | {"fvector": list(C.fvector()), "dim": C.dim})
        return EXIT_OK
    if args.action == "check":
        report = complex_checks(C)
        _emit(args, report.to_json())
        return EXIT_OK if report.pure and report.strongly_connected else EXIT_FAIL
    if args.k is None:
        raise UsageError("-k is required")
    return _graph_out(args, complex_skeleton_graph(C, args.k))


def cmd_verify(args) -> int:
    if args.target == "all":
        report = verify_all(timings=args.timings)
    elif args.target == "polytope":
        if args.file is None:
            raise UsageError("a polytope file is required")
        report = verify_polytope(_load_polytope(args.file).lattice)
    else:
        if args.file is None:
            raise UsageError("a complex file is required")
        report = verify_complex(CellComplex.from_json(_load(args.file)))
    _emit(args, report.dumps() if args.json else report.table())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_values(args) -> int:
    values = theorem_values(args.k, args.d)
    if args.json:
        _emit(args, values.to_json())
    else:
        _emit(args, (
            f"k={values.k} d={values.d} m={values.m_k_d} "
            f"lower={values.sallee_lower} upper={values.sallee_upper} "
            f"(k+1)(d-k)={values.n_k_d} {values.note}\n"
        ))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write output to this file")
    common.add_argument("-v", "--verbose", action="store_true")
    parser = argparse.ArgumentParser(prog="skeleton-lab", description="Polytope skeleton graphs and their connectivity.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="generate a polytope as incidence JSON")
    p.add_argument("--family", required=True,
                   choices=[*cons.FAMILIES, "cyclic", "product", "pyramid", "prism", "dual"])
    p.add_argument("--d", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--of", nargs="+", default=[])
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("lattice", parents=[common], help="face lattice operations")
    p.add_argument("action", choices=["validate", "fvector", "dual", "figure", "dump"])
    p.add_argument("file")
    p.add_argument("--face", help="comma-separated vertex set of the face")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("graph", parents=[common], help="skeleton graphs")
    p.add_argument("action", choices=["skeleton", "incidence", "gamma", "export"])
    p.add_argument("file")
    p.add_argument("-k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("connectivity", parents=[common], help="vertex connectivity of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--certify", action="store_true")
    p.set_defaults(func=cmd_connectivity)

    p = sub.add_parser("delete", parents=[common], help="delete nodes and report components")
    p.add_argument("--graph", required=True)
    p.add_argument("--nodes", required=True)
    p.set_defaults(func=cmd_delete)

    p = sub.add_parser("balinski", parents=[common], help="delete a low-dimensional vertex set from the graph")
    p.add_argument("file")
    p.add_argument("--vertices", required=True)
    p.set_defaults(func=cmd_balinski)

    p = sub.add_parser("complex", parents=[common], help="polyhedral complexes")
    p.add_argument("action", choices=["build", "check", "skeleton"])
    p.add_argument("file", nargs="?")
    p.add_argument("--glued", type=int)
    p.add_argument("--boundary")
    p.add_argument("-k", type=int)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("verify", parents=[common], help="run the connectivity checks")
    p.add_argument("target", choices=["polytope", "complex", "all"])
    p.add_argument("file", nargs="?")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("values", parents=[common], help="connectivity bounds for given k and d")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_values)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, InvalidIncidenceError, ComplexError, PreconditionError, HypothesisError,
            ResourceLimitError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
