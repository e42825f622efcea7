"""Plane projective curves over finite fields.

Points are stored normalized so that the last nonzero coordinate is 1, and
point lists are sorted by the coordinate codes.  Curves are homogeneous
trivariate polynomials.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .ffield import (
    MAX_ORDER,
    FieldCtx,
    FieldError,
    format_element,
    make_field,
    parse_element,
    root_multiplicities,
)
from .polys import HPoly

POINT_CAP = 2**18


class CurveError(ValueError):
    pass


class CapExceeded(CurveError):
    pass


class PointNotOnCurve(CurveError):
    pass


class EqualPoints(CurveError):
    pass


class LineIsComponent(CurveError):
    pass


class FundamentalLineComponent(CurveError):
    pass


class NotHomogeneous(CurveError):
    pass


# ---------------------------------------------------------------------------


def normalize_coords(ctx: FieldCtx, coords) -> tuple[int, ...]:
    coords = tuple(coords)
    for c in reversed(coords):
        if c:
            if c == 1:
                return coords
            inv = ctx.inv(c)
            return tuple(ctx.mul(v, inv) for v in coords)
    raise CurveError("the zero vector is not a projective point")


@dataclass(frozen=True, order=True)
class ProjPoint:
    coords: tuple[int, ...]
    ctx: FieldCtx = field(compare=False, hash=False)

    @staticmethod
    def make(ctx: FieldCtx, coords) -> "ProjPoint":
        return ProjPoint(normalize_coords(ctx, coords), ctx)

    def over(self, big: FieldCtx) -> "ProjPoint":
        table = big.embedding(self.ctx)
        return ProjPoint(tuple(table[c] for c in self.coords), big)

    def text(self) -> str:
        return "(" + ":".join(format_element(self.ctx, c) for c in self.coords) + ")"

    def __repr__(self):
        return f"P{self.text()}"


def parse_point(ctx: FieldCtx, text) -> ProjPoint:
    if isinstance(text, str):
        parts = text.replace("(", "").replace(")", "").replace(":", ",").split(",")
    else:
        parts = list(text)
    return ProjPoint.make(ctx, [parse_element(ctx, s) for s in parts])


def projective_points(ctx: FieldCtx, n: int = 3):
    """All points of PG(n-1, q) in canonical order."""
    q = ctx.q
    if (q**n - 1) // (q - 1) > POINT_CAP * 8:
        raise CapExceeded("projective space too large to enumerate")
    out = []
    for lead in range(n):
        # free coordinates before ``lead``, a 1 at ``lead``, zeros after
        tail = (1,) + (0,) * (n - lead - 1)
        for head in itertools.product(range(q), repeat=lead):
            out.append(head + tail)
    out.sort()
    return out


# ---------------------------------------------------------------------------


class CurvePoly:
    """A plane curve C: F(x, y, z) = 0 with F homogeneous."""

    def __init__(self, poly: HPoly):
        if poly.nvars != 3:
            raise CurveError("plane curves have three variables")
        if poly.is_zero():
            raise CurveError("zero polynomial")
        degs = {sum(e) for e in poly.terms}
        if len(degs) != 1:
            raise NotHomogeneous("terms of different degrees")
        self.poly = poly
        self.ctx = poly.ctx
        self.degree = degs.pop()
        self._partials = None

    @staticmethod
    def from_terms(ctx: FieldCtx, terms) -> "CurvePoly":
        """Build from {(i, j, l): coeff} or [(i, j, l, coeff), ...].

        Coefficients may be codes, FieldElements or base-p digit strings.
        """
        from .ffield import FieldElement

        items = terms.items() if isinstance(terms, dict) else [((t[0], t[1], t[2]), t[3]) for t in terms]
        out: dict = {}
        for e, c in items:
            if isinstance(c, FieldElement):
                c = c.code
            elif isinstance(c, str):
                c = parse_element(ctx, c)
            else:
                c = ctx.from_int(c) if isinstance(c, int) and c < 0 else int(c)
            e = tuple(int(a) for a in e)
            out[e] = ctx.add(out.get(e, 0), c)
        return CurvePoly(HPoly(ctx, 3, out))

    def __eq__(self, other):
        return isinstance(other, CurvePoly) and self.poly.normalized() == other.poly.normalized()

    def __hash__(self):
        return hash(self.poly.normalized())

    def __repr__(self):
        return f"CurvePoly(deg={self.degree}, {self.ctx!r}, {len(self.poly.terms)} terms)"

    def normalized(self) -> "CurvePoly":
        return CurvePoly(self.poly.normalized())

    def over(self, big: FieldCtx) -> "CurvePoly":
        """Base change to an extension field."""
        if big is self.ctx:
            return self
        table = big.embedding(self.ctx)
        return CurvePoly(self.poly.map_coeffs(big, table))

    def evaluate(self, coords) -> int:
        return self.poly.evaluate(coords)

    def contains(self, P: ProjPoint) -> bool:
        return self.evaluate(self._coords_for(P)) == 0

    def partials(self) -> list[HPoly]:
        if self._partials is None:
            self._partials = [self.poly.partial(i) for i in range(3)]
        return self._partials

    def _coords_for(self, P: ProjPoint):
        if P.ctx is self.ctx:
            return P.coords
        raise FieldError(f"point over {P.ctx!r} used with curve over {self.ctx!r}")

    def to_json(self) -> dict:
        F = self.ctx
        return {
            "field": {"p": F.p, "k": F.k, "modulus": list(F.modulus)},
            "degree": self.degree,
            "terms": [[*e, format_element(F, c)] for e, c in sorted(self.poly.terms.items(), reverse=True)],
        }


def curve_from_json(data: dict) -> CurvePoly:
    fs = data["field"]
    ctx = make_field(int(fs["p"]), int(fs.get("k", 1)), fs.get("modulus"))
    C = CurvePoly.from_terms(ctx, [tuple(t) for t in data["terms"]])
    if "degree" in data and int(data["degree"]) != C.degree:
        raise CurveError("declared degree does not match the terms")
    return C


def _bring(C: CurvePoly, P: ProjPoint) -> tuple[CurvePoly, ProjPoint]:
    """Put a curve and a point over a common field."""
    if P.ctx is C.ctx:
        return C, P
    if P.ctx.k % C.ctx.k == 0:
        return C.over(P.ctx), P
    if C.ctx.k % P.ctx.k == 0:
        return C, P.over(C.ctx)
    big = make_field(C.ctx.p, _lcm(C.ctx.k, P.ctx.k))
    return C.over(big), P.over(big)


def _lcm(a, b):
    from math import gcd

    return a * b // gcd(a, b)


# ---------------------------------------------------------------------------


def rational_points(C: CurvePoly, ext: int = 1) -> list[ProjPoint]:
    """Points of C over the degree-``ext`` extension of its field, sorted."""
    F = C.ctx
    big = make_field(F.p, F.k * ext) if ext != 1 else F
    if big.q > MAX_ORDER or big.q**2 + big.q + 1 > POINT_CAP:
        raise CapExceeded(f"point enumeration over {big!r} exceeds the cap")
    D = C.over(big)
    pts = [ProjPoint(c, big) for c in projective_points(big) if D.evaluate(c) == 0]
    return pts


def point_multiplicity(C: CurvePoly, P: ProjPoint) -> int:
    """Multiplicity of C at P (0 when P is not on C)."""
    C, P = _bring(C, P)
    F = C.ctx
    if C.evaluate(P.coords) != 0:
        return 0
    # move P to (0:0:1) by a linear change of coordinates and read the
    # lowest degree in x, y of the dehomogenized equation
    M = _matrix_sending_to_origin(F, P.coords)
    G = C.poly.linear_substitute(M)
    return min(e[0] + e[1] for e in G.terms)


def _matrix_sending_to_origin(F: FieldCtx, coords):
    """A matrix M with M (0,0,1)^T = P, columns completing P to a basis."""
    P = list(coords)
    basis = []
    for i in range(3):
        e = [0, 0, 0]
        e[i] = 1
        basis.append(e)
    # choose two standard vectors independent from P
    piv = max(i for i in range(3) if P[i])
    others = [basis[i] for i in range(3) if i != piv]
    cols = [others[0], others[1], P]
    return [[cols[c][r] for c in range(3)] for r in range(3)]


def is_simple(C: CurvePoly, P: ProjPoint) -> bool:
    C, P = _bring(C, P)
    if C.evaluate(P.coords) != 0:
        raise PointNotOnCurve(f"{P} is not on the curve")
    # by Euler's relation the gradient at a point of C is orthogonal to the
    # point, so it vanishes exactly when the multiplicity exceeds one
    return any(d.evaluate(P.coords) for d in C.partials())


def tangent_line(C: CurvePoly, P: ProjPoint) -> tuple[int, ...] | None:
    """Coefficients (a, b, c) of the tangent line at a simple point.

    Normalized like a point.  Returns None at a singular point.
    """
    C, P = _bring(C, P)
    if C.evaluate(P.coords) != 0:
        raise PointNotOnCurve(f"{P} is not on the curve")
    grad = [d.evaluate(P.coords) for d in C.partials()]
    if not any(grad):
        return None
    return normalize_coords(C.ctx, grad)


def singular_points(C: CurvePoly, ext: int = 1) -> list[ProjPoint]:
    return [P for P in rational_points(C, ext) if not is_simple(C, P)]


def line_through(P: ProjPoint, Q: ProjPoint) -> tuple[int, ...]:
    """Coefficients of the line through two distinct points (cross product)."""
    if P.ctx is not Q.ctx:
        raise FieldError("points over different fields")
    if P.coords == Q.coords:
        raise EqualPoints("a line needs two distinct points")
    F = P.ctx
    a, b = P.coords, Q.coords

    def m(u, v):
        return F.mul(u, v)

    row = [
        F.sub(m(a[1], b[2]), m(a[2], b[1])),
        F.sub(m(a[2], b[0]), m(a[0], b[2])),
        F.sub(m(a[0], b[1]), m(a[1], b[0])),
    ]
    return normalize_coords(F, row)


def points_on_line(F: FieldCtx, line) -> list[ProjPoint]:
    return [ProjPoint(c, F) for c in projective_points(F) if _dot(F, line, c) == 0]


def _dot(F, u, v):
    acc = 0
    for a, b in zip(u, v):
        acc = F.add(acc, F.mul(a, b))
    return acc


def _two_points_on_line(F: FieldCtx, line):
    """Two canonical points spanning the line a x + b y + c z = 0."""
    a, b, c = line
    # kernel basis of the 1x3 matrix
    if c:
        u = (1, 0, F.neg(F.div(a, c)))
        v = (0, 1, F.neg(F.div(b, c)))
    elif b:
        u = (1, F.neg(F.div(a, b)), 0)
        v = (0, 0, 1)
    else:
        u = (0, 1, 0)
        v = (0, 0, 1)
    return u, v


@dataclass
class LineIntersection:
    """Intersection of a curve with a line.

    ``points`` holds (point, multiplicity); points are defined over the
    smallest searched extension containing them, and ``simple`` flags whether
    each is a simple point of the curve.  ``residual_degree`` counts
    intersections whose coordinates lie outside every searched extension.
    """

    points: list[tuple[ProjPoint, int]]
    residual_degree: int
    searched_degrees: list[int]
    simple: list[bool] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(m for _, m in self.points) + self.residual_degree

    def multiplicities(self) -> list[int]:
        return sorted(m for _, m in self.points)


def binary_restriction(C: CurvePoly, u, v) -> list[int]:
    """Coefficients in t of F(u + t v), degree <= deg C, constant first."""
    F = C.ctx
    d = C.degree
    # expand F(s u + t v) symbolically; the field may have fewer than d + 1
    # elements, so interpolation is not an option
    forms = []
    for i in range(3):
        forms.append(HPoly(F, 2, {(1, 0): u[i], (0, 1): v[i]}))
    G = C.poly.substitute(forms)
    coeffs = [0] * (d + 1)
    for (s, t), c in G.terms.items():
        coeffs[t] = c
    return coeffs


def intersect_line(
    C: CurvePoly,
    line,
    max_search: int = 4096,
    max_ext: int | None = None,
) -> LineIntersection:
    """Intersect C with a line defined over the curve's field.

    The restriction of F to the line is a binary form of degree deg C.  Its
    roots are found by exhaustive search over the extensions GF(q^e) with
    q^e <= ``max_search`` (and inside the field caps).  Roots of exact degree
    e are attributed to GF(q^e).  Whatever is left is reported as residual.
    """
    F = C.ctx
    line = normalize_coords(F, line)
    u, v = _two_points_on_line(F, line)
    coeffs = binary_restriction(C, u, v)
    if not any(coeffs):
        raise LineIsComponent("the line is a component of the curve")
    d = C.degree
    deg_t = max(i for i, c in enumerate(coeffs) if c)
    found: list[tuple[ProjPoint, int]] = []
    covered = 0
    # the point t = infinity, i.e. the point v itself
    if deg_t < d:
        found.append((ProjPoint.make(F, v), d - deg_t))
        covered += d - deg_t
    searched = []
    e = 1
    while covered < d:
        k = F.k * e
        if k > 8 or F.p**k > min(max_search, MAX_ORDER):
            break
        if max_ext is not None and e > max_ext:
            break
        big = make_field(F.p, k)
        searched.append(e)
        table = big.embedding(F)
        bc = [table[c] for c in coeffs]
        for r, m in root_multiplicities(big, bc):
            # exact degree e: not in any proper subfield GF(q^f), f | e, f < e
            if any(big.frob(r, F.k * f) == r for f in range(1, e) if e % f == 0):
                continue
            bu = tuple(table[c] for c in u)
            bv = tuple(table[c] for c in v)
            coords = tuple(big.add(bu[i], big.mul(r, bv[i])) for i in range(3))
            found.append((ProjPoint.make(big, coords), m))
            covered += m
        e += 1
    simple = [is_simple(C, P) for P, _ in found]
    return LineIntersection(found, d - covered, searched, simple)


# ---------------------------------------------------------------------------


def quadratic_transform(C: CurvePoly) -> CurvePoly:
    """Image under (x, y, z) -> (yz, zx, xy) with the monomial factor removed."""
    F = C.ctx
    for i in range(3):
        # the coordinate line x_i = 0 is a component iff every term has e_i > 0
        if all(e[i] > 0 for e in C.poly.terms):
            raise FundamentalLineComponent(f"coordinate line {'xyz'[i]} = 0 is a component")
    forms = [
        HPoly(F, 3, {(0, 1, 1): 1}),
        HPoly(F, 3, {(1, 0, 1): 1}),
        HPoly(F, 3, {(1, 1, 0): 1}),
    ]
    G = C.poly.substitute(forms)
    G = G.divide_monomial(G.monomial_content())
    return CurvePoly(G).normalized()


def apply_map_to_curve(C: CurvePoly, T) -> CurvePoly:
    """Equation of the image curve T(C), normalized.

    For T(P) = M sigma^e(P) the image has equation F^(sigma^e)(M^-1 X).
    """
    from .group_engine import mat_inv

    F = C.ctx
    if T.ctx is not F:
        C = C.over(T.ctx)
        F = T.ctx
    P = C.poly.frobenius(T.frob) if T.frob else C.poly
    Minv = mat_inv(F, T.matrix)
    return CurvePoly(P.linear_substitute(Minv)).normalized()


def preserves(T, C: CurvePoly) -> bool:
    return apply_map_to_curve(C, T) == C.over(T.ctx).normalized()
