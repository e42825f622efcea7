"""A space model for the degree-9 plane curve z^9 + x^8 y + x y^8 + (x^2 y + x y^2)^3.

The plane curve over GF(8) is singular, and the Galois groups of its two
distinguished points act on it by birational maps that are not collineations.
Over GF(64) the curve is the image of the nonsingular space curve

    H = X^2 T + X T^2 + Y^3 = 0,    K = Z^3 + Y (X^2 + X T + T^2) = 0

under (X:Y:Z:T) -> (x:y:z) = (X:T:Z).  On this model both groups are linear:
they are the 4x4 maps keeping two coordinate rows and preserving the ideal,
which is found by an exhaustive search with entries in GF(4).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .ffield import FieldCtx, make_field
from .group_engine import Collineation, FinGroup, generate, mat_det, mat_vec
from .plane_curve import CurvePoly, ProjPoint, normalize_coords
from .polys import HPoly

# plane coordinates (x, y, z) read off space coordinates (X, Y, Z, T)
PLANE_FROM_SPACE = (0, 3, 2)


@dataclass
class SpaceCurve:
    ctx: FieldCtx
    equations: list[HPoly]
    points: list[tuple[int, ...]]

    def contains(self, v) -> bool:
        return all(E.evaluate(v) == 0 for E in self.equations)


def gk_equations(F: FieldCtx) -> list[HPoly]:
    X, Y, Z, T = (HPoly.variable(F, 4, i) for i in range(4))
    H = X.power(2).mul(T).add(X.mul(T.power(2))).add(Y.power(3))
    K = Z.power(3).add(Y.mul(X.power(2).add(X.mul(T)).add(T.power(2))))
    return [H, K]


def gk_model(F: FieldCtx | None = None) -> SpaceCurve:
    """The space curve over GF(64) with its rational points.

    Affine points (T = 1) come from solving H for (x, y) and then K for z;
    at T = 0 the equations force Y = Z = 0, leaving (1:0:0:0).
    """
    F = F or make_field(2, 6)
    H, K = gk_equations(F)
    pts = []
    for x in range(F.q):
        for y in range(F.q):
            if H.evaluate((x, y, 0, 1)) != 0:
                continue
            for z in range(F.q):
                if K.evaluate((x, y, z, 1)) == 0:
                    pts.append((x, y, z, 1))
    pts.append((1, 0, 0, 0))
    return SpaceCurve(F, [H, K], sorted(pts))


def va_plane_curve(F: FieldCtx | None = None) -> CurvePoly:
    """z^9 + x^8 y + x y^8 + (x^2 y + x y^2)^3."""
    F = F or make_field(2, 3)
    x, y, z = (HPoly.variable(F, 3, i) for i in range(3))
    P = z.power(9).add(x.power(8).mul(y)).add(x.mul(y.power(8)))
    P = P.add(x.power(2).mul(y).add(x.mul(y.power(2))).power(3))
    return CurvePoly(P)


def plane_image(F: FieldCtx, v) -> tuple[int, ...]:
    return normalize_coords(F, tuple(v[i] for i in PLANE_FROM_SPACE))


def _in_span(F: FieldCtx, target: HPoly, basis: list[HPoly]) -> bool:
    """Whether target is an F-linear combination of the basis polynomials."""
    mons = sorted(set(target.terms).union(*(B.terms for B in basis)))
    rows = [[B.terms.get(m, 0) for m in mons] for B in basis]
    t = [target.terms.get(m, 0) for m in mons]
    # reduce t against an echelon form of the rows
    piv = []
    for r in rows:
        r = list(r)
        for c, pr in piv:
            if r[c]:
                f = r[c]
                r = [F.sub(a, F.mul(f, b)) for a, b in zip(r, pr)]
        lead = next((i for i, a in enumerate(r) if a), None)
        if lead is None:
            continue
        inv = F.inv(r[lead])
        piv.append((lead, [F.mul(a, inv) for a in r]))
    for c, pr in piv:
        if t[c]:
            f = t[c]
            t = [F.sub(a, F.mul(f, b)) for a, b in zip(t, pr)]
    return not any(t)


def preserves_space_curve(M, curve: SpaceCurve) -> bool:
    """Exact check: each equation composed with M lies in the span of the equations."""
    return all(_in_span(curve.ctx, E.linear_substitute(M), curve.equations) for E in curve.equations)


def space_pencil_search(curve: SpaceCurve, kept: tuple[int, int], entries, sample: int = 20) -> list[Collineation]:
    """Linear maps keeping coordinate rows ``kept`` and preserving the curve.

    The two free rows range over ``entries`` (field codes).  A candidate is
    first tested on ``sample`` points and then exactly on the equations.
    """
    F = curve.ctx
    free = [i for i in range(4) if i not in kept]
    ptset = set(curve.points)
    test_pts = curve.points[:sample]
    out = []
    for vals in itertools.product(entries, repeat=8):
        rows = [None] * 4
        for i in kept:
            rows[i] = tuple(1 if j == i else 0 for j in range(4))
        rows[free[0]] = vals[:4]
        rows[free[1]] = vals[4:]
        if mat_det(F, rows) == 0:
            continue
        ok = True
        for v in test_pts:
            img = mat_vec(F, rows, v)
            if not any(img) or normalize_coords(F, img) not in ptset:
                ok = False
                break
        if ok and preserves_space_curve(rows, curve):
            out.append(Collineation(F, rows))
    return out


@dataclass
class GKGroups:
    curve: SpaceCurve
    P1: tuple[int, ...]
    P2: tuple[int, ...]
    G1: FinGroup
    G2: FinGroup
    G: FinGroup


def gk_groups(curve: SpaceCurve | None = None) -> GKGroups:
    """Groups of the two distinguished points.

    P1 = (0:0:0:1) lies over the plane point (0:1:0) and its group keeps the
    rows X and Z; P2 = (1:0:0:0) lies over (1:0:0) and its group keeps Z
    and T.  In plane terms both fix every line through the point.
    """
    curve = curve or gk_model()
    F = curve.ctx
    sub = F.embedding(make_field(2, 2))
    g1 = space_pencil_search(curve, (0, 2), sub)
    g2 = space_pencil_search(curve, (2, 3), sub)
    G1 = generate(g1)
    G2 = generate(g2)
    G = generate(g1 + g2)
    return GKGroups(curve, (0, 0, 0, 1), (1, 0, 0, 0), G1, G2, G)


def space_act(g: Collineation, v) -> tuple[int, ...]:
    return normalize_coords(g.ctx, mat_vec(g.ctx, g.matrix, v))


def line_support(curve: SpaceCurve) -> list[tuple[int, ...]]:
    """Points with Z = 0, lying over the line z = 0 through both plane points."""
    return [v for v in curve.points if v[2] == 0]


def plane_points(curve: SpaceCurve) -> list[ProjPoint]:
    F = curve.ctx
    return sorted({ProjPoint(plane_image(F, v), F) for v in curve.points})
