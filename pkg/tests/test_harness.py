import pytest

from skeleton_lab import constructors as cons
from skeleton_lab.complexes import boundary_complex, build_complex, glued_simplices
from skeleton_lab.harness import (
    HypothesisError,
    connectivity_bound,
    probe_complex_conjecture,
    theorem_values,
    verify_all,
    verify_complex,
    verify_polytope,
)
from skeleton_lab.lattice import IncidenceMatrix


def test_theorem_values_examples():
    v = theorem_values(1, 4)
    assert (v.m_k_d, v.sallee_lower, v.sallee_upper) == (6, 5, 6)
    assert theorem_values(2, 4).m_k_d == 4
    assert theorem_values(0, 5).m_k_d == 5
    assert "Balinski" in theorem_values(0, 5).note
    assert "trivial" in theorem_values(3, 4).note


def test_theorem_values_rejects_out_of_range():
    with pytest.raises(ValueError):
        theorem_values(4, 4)
    with pytest.raises(ValueError):
        theorem_values(-1, 3)


def test_theorem_values_consistency():
    for d in range(1, 51):
        for k in range(d):
            v = theorem_values(k, d)
            assert v.sallee_lower <= v.m_k_d <= v.sallee_upper
            assert v.n_k_d == (k + 1) * (d - k)


def rows_by_k(report):
    return {r.k: r for r in report.rows if r.check == "skeleton_connectivity"}


@pytest.mark.parametrize("d", range(2, 6))
def test_simplex_is_tight(d):
    report = verify_polytope(cons.simplex(d).lattice)
    assert report.passed
    rows = rows_by_k(report)
    for k in range(d):
        if k <= d - 3 or k == d - 1:
            assert rows[k].kappa == (k + 1) * (d - k)


@pytest.mark.parametrize("d", range(3, 6))
def test_prism_dual_is_tight_in_ridge_case(d):
    dual = cons.dual(cons.prism(cons.simplex(d - 1)))
    rows = rows_by_k(verify_polytope(dual.lattice))
    assert rows[d - 2].kappa == d == connectivity_bound(d - 2, d)


def test_hypercube4_rows_pass():
    report = verify_polytope(cons.hypercube(4).lattice)
    assert report.passed
    assert {r.check for r in report.rows} == {
        "polytopal_lattice", "face_count_lower_bound", "skeleton_connectivity", "ridge_dual_isomorphism",
    }


def test_verify_complex_glued4():
    rows = {r.k: r for r in verify_complex(glued_simplices(4)).rows}
    assert rows[0].kappa >= 4 and rows[0].passed
    assert rows[1].kappa >= 6 and rows[1].bound == 6
    assert rows[3].kappa == 1 and rows[3].bound is None and rows[3].check == "top_informational"


@pytest.mark.parametrize("P", [cons.simplex(5), cons.hypercube(4)], ids=lambda P: P.name)
def test_verify_boundary_complexes(P):
    report = verify_complex(boundary_complex(P.lattice))
    assert report.passed
    d = P.dim - 1
    assert any(r.check == "ridge_connectivity" and r.k == d - 2 for r in report.rows)


def test_verify_complex_rejects_impure():
    tri = IncidenceMatrix(5, ((0, 1), (1, 2), (0, 2)), None, (0, 1, 2))
    seg = IncidenceMatrix(5, ((3,), (4,)), None, (3, 4))
    with pytest.raises(HypothesisError):
        verify_complex(build_complex([tri, seg], 5))


def test_conjecture_probe_reports_no_violations_on_known_inputs():
    for C in (glued_simplices(4), boundary_complex(cons.cross_polytope(4).lattice)):
        assert probe_complex_conjecture(C) == []


def test_reports_are_byte_deterministic():
    polys = [cons.simplex(3), cons.hypercube(3)]
    comps = [glued_simplices(3)]
    a = verify_all(polys, comps).dumps()
    b = verify_all(polys, comps).dumps()
    assert a == b
    assert "seconds" not in a
