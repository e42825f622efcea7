"""Galois points of plane curves and pairs of them.

A point Q of a curve C is a Galois point when the projection from Q is a
Galois covering.  When the covering group is realized by collineations it
consists of maps fixing every line through Q; after moving Q to (0:0:1)
these are exactly the maps (x:y:z) -> (x:y:bx+cy+az) with a != 0.  An
exhaustive search over them settles the linear case: the projection is
Galois with a linear group as soon as the search finds deg C - mult_Q C maps.

For a pair of points P1, P2 with groups G1, G2 the checks below follow the
divisor formulation: P1 + G1(P2) and P2 + G2(P1) must coincide as multisets,
G1 and G2 must meet trivially, and G = <G1, G2> then acts on their common
support Omega.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .ffield import FieldCtx, make_field
from .group_engine import (
    Collineation,
    FinGroup,
    GroupAction,
    NotInvariant,
    action_on,
    generate,
    intersection,
    is_cyclic_indices,
    mat_inv,
)
from .plane_curve import (
    CapExceeded,
    CurvePoly,
    ProjPoint,
    PointNotOnCurve,
    _bring,
    _matrix_sending_to_origin,
    apply_map_to_curve,
    intersect_line,
    is_simple,
    line_through,
    point_multiplicity,
    rational_points,
)
from .genus_tools import aggregate_different, hurwitz_quotient_genus
from .polys import HPoly


class GaloisError(ValueError):
    pass


class FixedPointViolation(GaloisError):
    pass


class PairInvariantViolation(GaloisError):
    """A consequence that must hold for every valid pair failed."""


@dataclass
class PencilResult:
    center: ProjPoint
    group: FinGroup
    certificate: bool
    degree: int
    multiplicity: int
    searched: int

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def is_galois_certificate(self) -> bool:
        return self.certificate

    @property
    def verdict(self) -> str:
        # a failed linear search says nothing about nonlinear realizations
        return "galois (linear)" if self.certificate else "no linear witness"

    def to_json(self) -> dict:
        return {
            "center": self.center.text(),
            "group_order": self.order,
            "certificate": self.certificate,
            "verdict": self.verdict,
            "degree": self.degree,
            "multiplicity": self.multiplicity,
            "element_orders": sorted(self.group.element_orders),
            "searched": self.searched,
        }


def _search_field(C: CurvePoly, ext: int) -> FieldCtx:
    F = C.ctx
    return F if ext == 1 else make_field(F.p, F.k * ext)


def _preserves_under_last_row(D: CurvePoly, b: int, c: int, a: int) -> bool:
    F = D.ctx
    forms = [
        HPoly.variable(F, 3, 0),
        HPoly.variable(F, 3, 1),
        HPoly.linear(F, [b, c, a]),
    ]
    G = D.poly.substitute(forms)
    return G.proportional(D.poly)


def perspectivity_candidates(F: FieldCtx):
    """All maps (x:y:z) -> (x:y:bx+cy+az), a != 0, as (b, c, a)."""
    for a in range(1, F.q):
        for b in range(F.q):
            for c in range(F.q):
                yield b, c, a


def pencil_perspectivities(C: CurvePoly, Q: ProjPoint, ext: int = 1, prefilter: bool = True) -> PencilResult:
    """Collineations fixing every line through Q and preserving C.

    The search runs over GF(q^ext).  ``certificate`` is True when the group
    order equals deg C - mult_Q(C), the degree of the projection from Q.
    """
    big = _search_field(C, ext)
    D0 = C.over(big)
    if Q.ctx is not big:
        Q = Q.over(big)
    if D0.evaluate(Q.coords) != 0:
        raise PointNotOnCurve(f"{Q} is not on the curve")
    mult = point_multiplicity(D0, Q)
    M = _matrix_sending_to_origin(big, Q.coords)  # M (0:0:1) = Q
    T = Collineation(big, mat_inv(big, M))  # T(Q) = (0:0:1)
    D = apply_map_to_curve(D0, T)
    pts = []
    if prefilter:
        try:
            pts = [P.coords for P in rational_points(D)]
        except CapExceeded:
            pts = []
    ptset = set(pts)
    sample = [P for P in pts if P[2] != 0 and (P[0] or P[1])][:12]
    found = []
    count = 0
    for b, c, a in perspectivity_candidates(big):
        count += 1
        ok = True
        for P in sample:
            z = big.add(big.add(big.mul(b, P[0]), big.mul(c, P[1])), big.mul(a, P[2]))
            img = _norm3(big, (P[0], P[1], z))
            if img not in ptset:
                ok = False
                break
        if not ok:
            continue
        if _preserves_under_last_row(D, b, c, a):
            found.append(((1, 0, 0), (0, 1, 0), (b, c, a)))
    Tinv = T.inverse()
    maps = [Tinv.compose(Collineation(big, m)).compose(T) for m in found]
    group = generate(maps) if maps else generate([], identity=Collineation.identity(big))
    if group.order != len(set(maps) | {group.identity}):
        raise GaloisError("perspectivity search did not return a group")
    return PencilResult(Q, group, group.order == D.degree - mult, D.degree, mult, count)


def _norm3(F, v):
    for c in reversed(v):
        if c:
            if c == 1:
                return v
            inv = F.inv(c)
            return tuple(F.mul(x, inv) for x in v)
    return v


def pencil_subgroup(G: FinGroup, forms) -> list:
    """Elements of a collineation group that fix each member of a pencil.

    ``forms`` are linear forms (coefficient rows) l_1, ..., l_r.  An element
    with matrix M qualifies when l_i M = c l_i for one common scalar c, i.e.
    it preserves every hyperplane l = t_1 l_1 + ... + t_r l_r.
    """
    out = []
    for g in G.elements:
        if g.frob:
            continue
        F = g.ctx
        M = g.matrix
        scal = None
        ok = True
        for ell in forms:
            row = [0] * len(M)
            for j in range(len(M)):
                acc = 0
                for i, li in enumerate(ell):
                    if li:
                        acc = F.add(acc, F.mul(li, M[i][j]))
                row[j] = acc
            # row must equal scal * ell
            piv = next(i for i, v in enumerate(ell) if v)
            s = F.div(row[piv], ell[piv])
            if any(row[j] != F.mul(s, ell[j]) for j in range(len(ell))):
                ok = False
                break
            if scal is None:
                scal = s
            elif scal != s:
                ok = False
                break
        if ok:
            out.append(g)
    return out


# ---------------------------------------------------------------------------


@dataclass
class PairReport:
    group_order: int
    g1_order: int
    g2_order: int
    cond_II: bool
    cond_III: bool | None
    omega: list
    divisor_1: dict
    divisor_2: dict
    kernel_order: int | None = None
    kernel_cyclic: bool | None = None
    kernel_divides_degree: bool | None = None
    kernel_prime_to_p: bool | None = None
    g1_sharply_transitive: bool | None = None
    g2_sharply_transitive: bool | None = None
    g1_normal_in_stabilizer: bool | None = None
    g2_normal_in_stabilizer: bool | None = None
    transitivity: str | None = None
    notes: list = field(default_factory=list)
    line_omega_clean: bool | None = None
    line_multiplicities: list | None = None
    line_residual: int | None = None
    cond_III_sharp: bool | None = None
    classification_label: str | None = None
    P1: object = None
    P2: object = None
    G1: FinGroup | None = field(default=None, repr=False)
    G2: FinGroup | None = field(default=None, repr=False)
    group: FinGroup | None = field(default=None, repr=False)
    action: GroupAction | None = field(default=None, repr=False)

    def summary(self) -> dict:
        return {
            "group_order": self.group_order,
            "g1_order": self.g1_order,
            "g2_order": self.g2_order,
            "cond_II": self.cond_II,
            "cond_III": "indeterminate" if self.cond_III is None else self.cond_III,
            "omega_size": len(self.omega),
            "kernel_order": self.kernel_order,
            "kernel_cyclic": self.kernel_cyclic,
            "kernel_divides_degree": self.kernel_divides_degree,
            "g1_normal_in_stabilizer": self.g1_normal_in_stabilizer,
            "g2_normal_in_stabilizer": self.g2_normal_in_stabilizer,
            "g1_sharply_transitive": self.g1_sharply_transitive,
            "g2_sharply_transitive": self.g2_sharply_transitive,
            "transitivity": self.transitivity,
            "line_omega_clean": self.line_omega_clean,
            "line_multiplicities": self.line_multiplicities,
            "cond_III_sharp": self.cond_III_sharp,
            "classification_label": self.classification_label,
            "notes": list(self.notes),
        }


def orbit_divisor(G1: FinGroup, P1, P2, act) -> Counter:
    """The multiset P1 + sum over s in G1 of s(P2)."""
    D = Counter({P1: 1})
    for s in G1.elements:
        D[act(s, P2)] += 1
    return D


def verify_pair_core(
    G1: FinGroup,
    G2: FinGroup,
    P1,
    P2,
    act,
    degree: int,
    p: int,
    is_simple_point=None,
    strict: bool = True,
) -> PairReport:
    """Pair conditions for groups acting on an abstract point set.

    ``act(g, P)`` applies a group element; ``is_simple_point`` tells whether a
    point of the model corresponds to a single point of the smooth curve.
    Without it every point counts as simple.
    """
    gens = list(G1.elements[1:]) + list(G2.elements[1:])
    G = generate(gens) if gens else G1
    common = intersection(G1, G2)
    cond_II = len(common) == 1
    D1 = orbit_divisor(G1, P1, P2, act)
    D2 = orbit_divisor(G2, P2, P1, act)
    support = sorted(set(D1) | set(D2))
    notes = []
    simple = True
    if is_simple_point is not None:
        bad = [P for P in support if not is_simple_point(P)]
        if bad:
            simple = False
            notes.append(f"{len(bad)} orbit point(s) are singular on the model")
    cond_III = (D1 == D2) if simple else None
    rep = PairReport(
        group_order=G.order,
        g1_order=G1.order,
        g2_order=G2.order,
        cond_II=cond_II,
        cond_III=cond_III,
        omega=sorted(D1),
        divisor_1=dict(D1),
        divisor_2=dict(D2),
        notes=notes,
        P1=P1,
        P2=P2,
        G1=G1,
        G2=G2,
        group=G,
    )
    if D1 != D2:
        return rep
    omega = sorted(D1)
    try:
        A = action_on(G, omega, act)
    except NotInvariant:
        rep.notes.append("Omega is not invariant under <G1, G2>")
        return rep
    rep.action = A
    K = A.kernel()
    rep.kernel_order = len(K)
    rep.kernel_cyclic = is_cyclic_indices(G, K)
    rep.kernel_divides_degree = degree % len(K) == 0
    rep.kernel_prime_to_p = len(K) % p != 0
    i1, i2 = omega.index(P1), omega.index(P2)
    g1 = [G.index[s] for s in G1.elements]
    g2 = [G.index[s] for s in G2.elements]
    rep.g1_sharply_transitive = A.is_sharply_transitive_on(g1, [j for j in range(len(omega)) if j != i1])
    rep.g2_sharply_transitive = A.is_sharply_transitive_on(g2, [j for j in range(len(omega)) if j != i2])
    rep.g1_normal_in_stabilizer = _normal_in(G, g1, A.stabilizer(i1))
    rep.g2_normal_in_stabilizer = _normal_in(G, g2, A.stabilizer(i2))
    rep.transitivity = A.transitivity_grade()
    if strict:
        _hard_checks(rep)
    return rep


def _hard_checks(rep: PairReport) -> None:
    """Consequences of a valid pair; a failure means a defect, not a report state."""
    bad = []
    if rep.kernel_cyclic is False:
        bad.append("kernel is not cyclic")
    if rep.kernel_divides_degree is False:
        bad.append("kernel order does not divide the degree")
    if rep.g1_normal_in_stabilizer is False or rep.g2_normal_in_stabilizer is False:
        bad.append("G_i is not normal in the stabilizer of P_i")
    if bad:
        raise PairInvariantViolation("; ".join(bad))


def _normal_in(G: FinGroup, H, S) -> bool:
    H = frozenset(H)
    if not H <= set(S):
        return False
    return all(G.conjugate_indices(H, s) == H for s in S)


def build_omega(C: CurvePoly, P1: ProjPoint, P2: ProjPoint, max_search: int = 4096):
    """Intersection of C with the line P1P2, and whether it is clean.

    Clean means deg C distinct points, each simple and of multiplicity one;
    only then the plane points stand for distinct points of the curve.
    """
    C, P1 = _bring(C, P1)
    C, P2 = _bring(C, P2)
    L = line_through(P1, P2)
    inter = intersect_line(C, L, max_search=max_search)
    clean = (
        inter.residual_degree == 0
        and all(m == 1 for _, m in inter.points)
        and len(inter.points) == C.degree
        and all(is_simple(C, P) for P, _ in inter.points)
    )
    return inter, clean


def verify_pair(
    C: CurvePoly,
    P1: ProjPoint,
    P2: ProjPoint,
    G1: FinGroup,
    G2: FinGroup,
    strict: bool = True,
) -> PairReport:
    """Pair conditions for two groups of collineations preserving C."""
    big = G1.identity.ctx
    D = C.over(big)
    P1 = P1 if P1.ctx is big else P1.over(big)
    P2 = P2 if P2.ctx is big else P2.over(big)
    for P in (P1, P2):
        if D.evaluate(P.coords) != 0:
            raise PointNotOnCurve(f"{P} is not on the curve")
    for name, H, P in (("G1", G1, P1), ("G2", G2, P2)):
        for g in H.elements:
            if g(P) != P:
                raise FixedPointViolation(f"an element of {name} moves {P}")

    def act(g, P):
        return g(P)

    rep = verify_pair_core(
        G1,
        G2,
        P1,
        P2,
        act,
        degree=C.degree,
        p=big.p,
        is_simple_point=lambda P: is_simple(D, P),
        strict=strict,
    )
    inter, clean = build_omega(D, P1, P2)
    rep.line_omega_clean = clean
    rep.line_multiplicities = inter.multiplicities()
    rep.line_residual = inter.residual_degree
    if clean:
        line_pts = [Q for Q, _ in inter.points]
        rep.cond_III_sharp = sharp_reformulation(G1, P1, line_pts) and sharp_reformulation(G2, P2, line_pts)
    else:
        rep.notes.append("the line through P1 and P2 does not meet C in deg C simple points")
    return rep


def sharp_reformulation(H: FinGroup, P: ProjPoint, omega) -> bool:
    """|H| = |omega| - 1, H permutes omega, and only 1 fixes a point of omega besides P."""
    rest = [Q for Q in omega if Q != P]
    if H.order != len(rest):
        return False
    rs = set(rest)
    for g in H.elements:
        imgs = [g(Q) for Q in rest]
        if any(Q not in rs for Q in imgs):
            return False
        if not g.is_identity() and any(a == b for a, b in zip(imgs, rest)):
            return False
    return True


# ---------------------------------------------------------------------------


def quotient_genus_from_profile(order: int, profile, genus: int) -> int:
    """Genus of X/H from the filtrations of the ramified points of H."""
    return hurwitz_quotient_genus(order, genus, aggregate_different(profile))


def condition_I_check(G1, profile, genus: int) -> bool:
    """Whether X/G1 is rational, from 2g - 2 = |G1| (2g' - 2) + sum d_P.

    ``G1`` is a FinGroup or its order; ``profile`` lists one filtration per
    ramified point.  Raises NonIntegerGenus for an inconsistent profile.
    """
    order = G1 if isinstance(G1, int) else G1.order
    return quotient_genus_from_profile(order, profile, genus) == 0
