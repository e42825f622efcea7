import pytest

from innergalois.ffield import make_field
from innergalois.group_engine import Collineation
from innergalois.plane_curve import (
    CurveError,
    CurvePoly,
    EqualPoints,
    FundamentalLineComponent,
    LineIsComponent,
    NotHomogeneous,
    PointNotOnCurve,
    ProjPoint,
    apply_map_to_curve,
    curve_from_json,
    intersect_line,
    is_simple,
    line_through,
    parse_point,
    point_multiplicity,
    points_on_line,
    preserves,
    quadratic_transform,
    rational_points,
    singular_points,
    tangent_line,
)
from innergalois.polys import HPoly
from oracles import count_affine

F4 = make_field(2, 2)
F7 = make_field(7)
F9 = make_field(3, 2)


def fermat(F, d):
    return CurvePoly.from_terms(F, {(d, 0, 0): 1, (0, d, 0): 1, (0, 0, d): 1})


def brute_projective_count(C):
    """Affine count at z = 1, then the line z = 0 by hand."""
    F = C.ctx
    n = count_affine(F, lambda x, y: C.evaluate((x, y, 1)))
    n += sum(1 for x in range(F.q) if C.evaluate((x, 1, 0)) == 0)
    n += C.evaluate((1, 0, 0)) == 0
    return n


def test_fermat_cubic_gf4_has_9_points():
    C = fermat(F4, 3)
    assert len(rational_points(C)) == 9 == brute_projective_count(C)


def test_fermat_quartic_gf9_has_28_points():
    C = fermat(F9, 4)
    assert len(rational_points(C)) == 28 == brute_projective_count(C)


def test_line_over_gf2_has_3_points():
    C = CurvePoly.from_terms(make_field(2), {(1, 0, 0): 1})
    assert len(rational_points(C)) == 3


@pytest.mark.parametrize("ext", [1, 2])
def test_points_agree_with_brute_force_over_extensions(ext):
    C = CurvePoly.from_terms(make_field(2), {(3, 0, 0): 1, (0, 2, 1): 1, (0, 1, 2): 1})
    pts = rational_points(C, ext)
    assert len(pts) == brute_projective_count(C.over(make_field(2, ext)))
    assert all(P.coords[max(i for i in range(3) if P.coords[i])] == 1 for P in pts)


def test_hermitian_points_are_simple():
    C = fermat(F4, 3)
    assert all(is_simple(C, P) for P in rational_points(C))
    assert singular_points(C) == []


def test_iiic_vertices_are_singular():
    C = CurvePoly.from_terms(F7, {(2, 2, 0): 1, (0, 2, 2): 1, (2, 0, 2): 1})
    assert [P.text() for P in singular_points(C)] == ["(0:0:1)", "(0:1:0)", "(1:0:0)"]
    assert all(point_multiplicity(C, P) == 2 for P in singular_points(C))


def test_tangent_of_rational_quartic_at_origin():
    # y z^3 - x^4 + x z^3 has gradient (z^3, z^3, 0) at (0:0:1)
    C = CurvePoly.from_terms(F4, {(0, 1, 3): 1, (4, 0, 0): 1, (1, 0, 3): 1})
    assert tangent_line(C, ProjPoint.make(F4, (0, 0, 1))) == (1, 1, 0)


def test_tangent_is_none_at_singular_point():
    C = CurvePoly.from_terms(F7, {(2, 2, 0): 1, (0, 2, 2): 1, (2, 0, 2): 1})
    assert tangent_line(C, ProjPoint.make(F7, (0, 0, 1))) is None


def test_point_off_curve_raises():
    with pytest.raises(PointNotOnCurve):
        is_simple(fermat(F4, 3), ProjPoint.make(F4, (1, 1, 1)))
    assert point_multiplicity(fermat(F4, 3), ProjPoint.make(F4, (1, 1, 1))) == 0


def test_line_through_examples():
    a, b, c = (ProjPoint.make(F7, v) for v in [(1, 0, 0), (0, 1, 0), (1, 1, 1)])
    assert line_through(a, b) == (0, 0, 1)
    L = line_through(a, c)
    assert all(sum(x * y for x, y in zip(L, P.coords)) % 7 == 0 for P in (a, c))
    with pytest.raises(EqualPoints):
        line_through(a, a)


def test_points_on_line_count():
    assert len(points_on_line(F9, (1, 2, 0))) == 10


def test_fermat_cubic_meets_z0_transversally():
    inter = intersect_line(fermat(F4, 3), (0, 0, 1))
    assert inter.multiplicities() == [1, 1, 1]
    assert inter.residual_degree == 0
    assert inter.simple == [True, True, True]


def test_va_curve_on_z0():
    from innergalois.gk import va_plane_curve

    inter = intersect_line(va_plane_curve(), (0, 0, 1))
    assert inter.multiplicities() == [1, 1, 1, 3, 3]
    assert inter.total == 9


def test_conic_tangent_line():
    C = CurvePoly.from_terms(F7, {(1, 0, 1): 1, (0, 2, 0): 6})  # xz - y^2
    inter = intersect_line(C, (1, 0, 0))
    assert inter.multiplicities() == [2]
    assert inter.points[0][0].coords == (0, 0, 1)


def test_points_outside_base_field_are_found_in_extensions():
    # -1 is not a square mod 7, so y = 0 meets x^2 + y^2 + z^2 only over GF(49)
    C = CurvePoly.from_terms(F7, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})
    inter = intersect_line(C, (0, 1, 0))
    assert inter.residual_degree == 0
    assert inter.searched_degrees == [1, 2]
    assert {P.ctx.q for P, _ in inter.points} == {49}


def test_residual_degree_when_search_is_capped():
    C = CurvePoly.from_terms(F7, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})
    inter = intersect_line(C, (0, 1, 0), max_ext=1)
    assert inter.points == [] and inter.residual_degree == 2


def test_component_line_raises():
    C = CurvePoly.from_terms(F7, {(1, 1, 0): 1})
    with pytest.raises(LineIsComponent):
        intersect_line(C, (1, 0, 0))


def test_quadratic_transform_of_line():
    C = CurvePoly.from_terms(F7, {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1})
    Q = quadratic_transform(C)
    assert Q == CurvePoly.from_terms(F7, {(0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): 1})


def test_quadratic_transform_is_an_involution_on_iiic():
    C = CurvePoly.from_terms(F7, {(2, 2, 0): 1, (0, 2, 2): 1, (2, 0, 2): 1})
    conic = CurvePoly.from_terms(F7, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})
    assert quadratic_transform(C) == conic.normalized()
    assert quadratic_transform(quadratic_transform(C)) == C.normalized()


def test_quadratic_transform_rejects_fundamental_component():
    with pytest.raises(FundamentalLineComponent):
        quadratic_transform(CurvePoly.from_terms(F7, {(1, 1, 0): 1, (2, 0, 0): 1}))


def test_apply_map_and_preserves():
    C = fermat(F4, 3)
    swap = Collineation(F4, ((0, 1, 0), (1, 0, 0), (0, 0, 1)))
    assert preserves(swap, C)
    shear = Collineation(F4, ((1, 1, 0), (0, 1, 0), (0, 0, 1)))
    D = apply_map_to_curve(C, shear)
    assert D != C.normalized()
    # every image point lies on the image curve
    assert all(D.contains(ProjPoint.make(F4, shear.apply(P.coords))) for P in rational_points(C))


def test_collineation_permutes_points():
    C = CurvePoly.from_terms(F7, {(2, 2, 0): 1, (0, 2, 2): 1, (2, 0, 2): 1})
    cyc = Collineation(F7, ((0, 1, 0), (0, 0, 1), (1, 0, 0)))
    pts = rational_points(C)
    img = sorted(ProjPoint.make(F7, cyc.apply(P.coords)) for P in pts)
    assert img == pts


def test_non_homogeneous_rejected():
    with pytest.raises(NotHomogeneous):
        CurvePoly(HPoly(F7, 3, {(1, 0, 0): 1, (0, 0, 2): 1}))
    with pytest.raises(CurveError):
        CurvePoly(HPoly(F7, 2, {(1, 0): 1}))


def test_json_round_trip_and_point_parsing():
    C = fermat(F9, 4)
    assert curve_from_json(C.to_json()) == C
    P = parse_point(F9, "(1:0:2)")
    assert P.coords == (F9.div(1, 2), 0, 1)
    assert parse_point(F9, P.text()) == P
