"""Acceptance criteria, one test per criterion at exact tolerance.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import pytest

import properties as pr
from innergalois import catalog, gk
from innergalois.elliptic import (
    automorphism_search,
    build_case_iv,
    fixed_points,
    iso_order,
    verify_case_iv,
)
from innergalois.galois import build_omega, pencil_perspectivities, sharp_reformulation, verify_pair
from innergalois.genus_tools import hurwitz_solve
from innergalois.group_engine import (
    action_on,
    center_indices,
    conjugation_action_on_conjugates,
    generate,
    intersection,
    sylow_indices,
)
from innergalois.group_id import classify, involution_count, is_quaternion, lie_type_order
from innergalois.plane_curve import is_simple, preserves, rational_points, singular_points
from oracles import count_affine, weierstrass_points

criterion = pytest.mark.criterion


@criterion(1, "Hermitian q=2: 9 points, pencil order 2 with certificate, AGL(1,3) on a chord")
def test_criterion_01_hermitian_q2():
    e = catalog.entry("hermitian-q2")
    C = e.curve
    pts = rational_points(C)
    assert len(pts) == 9
    assert all(is_simple(C, P) for P in pts)
    searches = {P: pencil_perspectivities(C, P) for P in pts}
    for r in searches.values():
        assert r.order == 2 == C.degree - 1
        assert r.certificate is True
    P1, P2 = pts[0], pts[1]
    rep = verify_pair(C, P1, P2, searches[P1].group, searches[P2].group)
    assert len(rep.omega) == 3
    assert rep.group_order == 6
    assert rep.action.image_order() == 6  # the full symmetric group on Omega
    assert classify(rep.action).label == "AGL(1,3)"


@criterion(2, "Hermitian q=3: 28 points, pencil order 3, chord pair with cyclic kernel dividing 4")
def test_criterion_02_hermitian_q3():
    C = catalog.entry("hermitian-q3").curve
    pts = rational_points(C)
    assert len(pts) == 28
    P1, P2 = pts[0], pts[1]
    r1, r2 = pencil_perspectivities(C, P1), pencil_perspectivities(C, P2)
    assert r1.order == 3 and r1.certificate
    rep = verify_pair(C, P1, P2, r1.group, r2.group, strict=True)
    assert rep.cond_II is True and rep.cond_III is True
    assert rep.kernel_cyclic is True and 4 % rep.kernel_order == 0
    # both formulations of the divisor condition hold on the clean chord
    inter, clean = build_omega(C, P1, P2)
    line = [Q for Q, _ in inter.points]
    assert clean
    assert sharp_reformulation(r1.group, P1, line) and sharp_reformulation(r2.group, P2, line)
    assert rep.cond_III_sharp is True
    assert rep.g1_normal_in_stabilizer and rep.g2_normal_in_stabilizer


@criterion(3, "rational-agl-4: |G| = 12, sharply 2-transitive on 4 points, AGL(1,4), G1 and G2 meet trivially")
def test_criterion_03_rational_agl4():
    e = catalog.entry("rational-agl-4")
    G1, G2 = pr.pair_groups(e)
    rep = verify_pair(e.curve, e.P1, e.P2, G1, G2)
    assert rep.group_order == 12
    assert len(rep.omega) == 4
    assert rep.transitivity == "sharply-2-transitive"
    assert classify(rep.action).label == "AGL(1,4)"
    assert len(intersection(G1, G2)) == 1


@criterion(4, "quartic-iiic: order-3 generators preserve C, |G| = 12, |Omega| = 4, (II),(III), singular vertices")
def test_criterion_04_quartic_iiic():
    e = catalog.entry("quartic-iiic")
    C = e.curve
    (a1,), (a2,) = e.generators
    assert a1.order() == 3 and a2.order() == 3
    assert preserves(a1, C) and preserves(a2, C)
    rep = verify_pair(C, e.P1, e.P2, generate([a1]), generate([a2]))
    assert rep.group_order == 12
    assert len(rep.omega) == 4
    assert rep.cond_II is True and rep.cond_III is True
    assert [P.coords for P in singular_points(C)] == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


@criterion(5, "quartic-vb: pencil order 3 at both points, |G| = 24 with one involution, SL(2,3), genus 3")
def test_criterion_05_quartic_vb():
    e = catalog.entry("quartic-vb")
    C = e.curve
    assert e.P1.coords == (0, 0, 1) and e.P2.coords == (0, 12, 1)
    r1, r2 = pencil_perspectivities(C, e.P1), pencil_perspectivities(C, e.P2)
    assert r1.order == 3 and r2.order == 3
    rep = verify_pair(C, e.P1, e.P2, r1.group, r2.group)
    assert rep.group_order == 24
    assert involution_count(rep.group) == 1
    assert classify(rep.action).label == "SL(2,3)"
    assert e.expected["genus"].value == 3


@criterion(6, "va-gk2: quaternion groups of order 8, |G| = 216, center 3 fixing the line support, order-72 image, genus 10")
def test_criterion_06_va_gk2():
    e = catalog.entry("va-gk2")
    # collineations of the plane model alone give no witness at P1
    lin = pencil_perspectivities(e.curve, e.P1)
    assert lin.order == 2 and lin.certificate is False
    groups = gk.gk_groups()
    assert [gk.plane_image(groups.curve.ctx, P) for P in (groups.P1, groups.P2)] == [(0, 1, 0), (1, 0, 0)]
    assert groups.G1.order == 8 and is_quaternion(groups.G1)
    assert groups.G2.order == 8 and is_quaternion(groups.G2)
    G = groups.G
    assert G.order == 216
    Z = center_indices(G)
    assert len(Z) == 3
    support = gk.line_support(groups.curve)
    A = action_on(G, support, gk.space_act)
    assert all(A.perms[z] == tuple(range(len(support))) for z in Z)
    conj = conjugation_action_on_conjugates(G, sylow_indices(G, 2))
    assert conj.degree == 9
    assert conj.image_order() == 72
    assert conj.transitivity_grade() == "sharply-2-transitive"
    assert hurwitz_solve(3, 1, 18) == 10


@criterion(7, "elliptic iva p=7: AGL(1,4) on E[2], order-3 stabilizer with exactly 3 fixed points")
def test_criterion_07_elliptic_iva():
    E = catalog.entry("elliptic-iva").elliptic
    case = build_case_iv(E, 2)
    rep = verify_case_iv(case)
    assert len(case.omega) == 4
    assert classify(rep.action).label == "AGL(1,4)"
    assert case.G1.order == 3
    for iso in case.g1_isos[1:]:
        assert len(fixed_points(case.E, iso)) == 3


@criterion(8, "elliptic ivc p=2: 9 points, 24 automorphisms with one involution, Q8 stabilizer, AΓL(1,9)≅PSU(3,2)")
def test_criterion_08_elliptic_ivc():
    E = catalog.entry("elliptic-ivc").elliptic
    assert len(E.points) == 9 == 1 + len(weierstrass_points(E.ctx, E.a))
    autos = automorphism_search(E)
    assert len(autos) == 24
    assert sum(1 for a in autos if iso_order(E, a) == 2) == 1
    case = build_case_iv(E, 3)
    assert is_quaternion(case.G1)
    rep = verify_case_iv(case)
    assert rep.group_order == 72
    assert rep.transitivity == "sharply-2-transitive"
    assert classify(rep.action).label == "AΓL(1,9)≅PSU(3,2)"


@criterion(9, "elliptic ive p=2: 25 points, |G| = 600, stabilizer 24 without a subgroup of order 12, N(5)")
def test_criterion_09_elliptic_ive():
    E = catalog.entry("elliptic-ive").elliptic
    assert 1 + len(weierstrass_points(E.ctx, E.a)) == 25 == len(E.points)
    rep = verify_case_iv(build_case_iv(E, 5))
    c = classify(rep.action)
    assert rep.group_order == 600
    assert c.stabilizer_order == 24
    assert c.stabilizer_has_order_12 is False
    assert c.label == "N(5)"


@criterion(10, "order formulas: PSU(3,2) 72, Sz(8) 29120, PSL(2,7) 168, Ree(3) 1512")
def test_criterion_10_order_formulas():
    assert lie_type_order("PSU3", 2) == 72
    assert lie_type_order("Sz", 8) == 29120
    assert lie_type_order("PSL2", 7) == 168
    assert lie_type_order("Ree", 3) == 28 * 27 * 2 == 1512


@criterion(11, "Suzuki q=8: affine GF(8) count of x^4 (x^8 + x) = y^8 + y plus one is 65")
def test_criterion_11_suzuki():
    e = catalog.entry("suzuki-q8")
    F = e.curve.ctx

    def f(x, y):
        x4 = F.pow(x, 4)
        return F.add(F.mul(x4, F.add(F.pow(x, 8), x)), F.add(F.pow(y, 8), y))

    assert count_affine(F, f) + 1 == 65 == 8 * 8 + 1
    rep = catalog.verify(e)
    assert rep["measured"]["rational_points"] == 65
    assert any("q^2" in n for n in rep["notes"])
    assert "rational_points_over_q2" in rep["measured"]


@criterion(12, "property suites: field axioms, Lagrange, Bezout, cond_III vs sharp form, Hurwitz")
@pytest.mark.parametrize(
    "check",
    [
        lambda: pr.field_axiom_failures(1000),
        lambda: pr.lagrange_failures(),
        lambda: pr.bezout_failures(50),
        lambda: pr.cond_III_equivalence_failures(),
        lambda: pr.hurwitz_failures(1000),
    ],
    ids=["field-axioms", "lagrange", "bezout", "cond-III-sharp", "hurwitz"],
)
def test_criterion_12_property_suites(check):
    assert check() == []

