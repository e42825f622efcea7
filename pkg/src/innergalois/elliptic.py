"""Elliptic curves in Weierstrass form and their automorphism groups.

The curve y^2 z + a1 xyz + a3 yz^2 = x^3 + a2 x^2 z + a4 xz^2 + a6 z^3 has its
origin O = (0:1:0), an inflection point, so the chord-tangent law is the usual
group law.  Affine points are pairs of field codes and O is the empty tuple,
which sorts first.

Automorphisms fixing O are the coordinate changes
    (x, y) -> (u^2 x + r, u^3 y + s u^2 x + t)
that leave the a-invariants unchanged; they are found by exhaustive search
over (u, r, s, t) with the standard transformation rules used for pruning.
Every automorphism of the curve is such a map followed by a translation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .ffield import FieldCtx, make_field
from .group_engine import FinGroup, generate, perm_inv, perm_mul
from .plane_curve import CurvePoly, ProjPoint
from .polys import HPoly

O = ()


class EllipticError(ValueError):
    pass


class NotWeierstrass(EllipticError):
    pass


class TorsionNotRational(EllipticError):
    pass


class NoSuitableStabilizerSubgroup(EllipticError):
    pass


class EllipticModel:
    def __init__(self, ctx: FieldCtx, a):
        self.ctx = ctx
        self.a = tuple(a)  # (a1, a2, a3, a4, a6) as codes
        if self.discriminant() == 0:
            raise EllipticError("singular cubic")

    @staticmethod
    def from_ints(ctx: FieldCtx, a) -> "EllipticModel":
        return EllipticModel(ctx, [c if isinstance(c, int) and c >= 0 else ctx.from_int(c) for c in a])

    def __repr__(self):
        return f"EllipticModel({self.ctx!r}, a={list(self.a)})"

    # -- invariants -------------------------------------------------------
    def b_invariants(self):
        F = self.ctx
        a1, a2, a3, a4, a6 = self.a
        m, ad = F.mul, F.add
        four = F.from_int(4)
        two = F.from_int(2)
        b2 = ad(m(a1, a1), m(four, a2))
        b4 = ad(m(two, a4), m(a1, a3))
        b6 = ad(m(a3, a3), m(four, a6))
        b8 = F.sub(
            ad(ad(m(m(a1, a1), a6), m(m(four, a2), a6)), F.sub(m(m(a2, a3), a3), m(m(a1, a3), a4))),
            m(a4, a4),
        )
        return b2, b4, b6, b8

    def discriminant(self) -> int:
        F = self.ctx
        b2, b4, b6, b8 = self.b_invariants()
        m = F.mul
        t1 = F.neg(m(m(b2, b2), b8))
        t2 = F.neg(m(F.from_int(8), m(m(b4, b4), b4)))
        t3 = F.neg(m(F.from_int(27), m(b6, b6)))
        t4 = m(F.from_int(9), m(m(b2, b4), b6))
        return F.add(F.add(t1, t2), F.add(t3, t4))

    def j_is_zero(self) -> bool:
        F = self.ctx
        b2, b4, _, _ = self.b_invariants()
        c4 = F.sub(F.mul(b2, b2), F.mul(F.from_int(24), b4))
        return c4 == 0

    # -- curve as a plane cubic -----------------------------------------
    def curve(self) -> CurvePoly:
        F = self.ctx
        a1, a2, a3, a4, a6 = self.a
        n = F.neg
        terms = {
            (0, 2, 1): 1,
            (1, 1, 1): a1,
            (0, 1, 2): a3,
            (3, 0, 0): n(1),
            (2, 0, 1): n(a2),
            (1, 0, 2): n(a4),
            (0, 0, 3): n(a6),
        }
        return CurvePoly(HPoly(F, 3, terms))

    def over(self, big: FieldCtx) -> "EllipticModel":
        if big is self.ctx:
            return self
        t = big.embedding(self.ctx)
        return EllipticModel(big, [t[c] for c in self.a])

    def lift_point(self, big: FieldCtx, P):
        if P == O or big is self.ctx:
            return P
        t = big.embedding(self.ctx)
        return (t[P[0]], t[P[1]])

    # -- points -----------------------------------------------------------
    def on_curve(self, P) -> bool:
        if P == O:
            return True
        F = self.ctx
        x, y = P
        a1, a2, a3, a4, a6 = self.a
        lhs = F.add(F.mul(y, y), F.mul(y, F.add(F.mul(a1, x), a3)))
        rhs = F.add(F.add(F.mul(F.mul(x, x), F.add(x, a2)), F.mul(a4, x)), a6)
        return lhs == rhs

    @cached_property
    def points(self) -> list:
        """All rational points, O first, then affine points by code."""
        F = self.ctx
        a1, a2, a3, a4, a6 = self.a
        out = [O]
        for x in range(F.q):
            rhs = F.add(F.add(F.mul(F.mul(x, x), F.add(x, a2)), F.mul(a4, x)), a6)
            lin = F.add(F.mul(a1, x), a3)
            for y in range(F.q):
                if F.add(F.mul(y, y), F.mul(y, lin)) == rhs:
                    out.append((x, y))
        return out

    def to_proj(self, P) -> ProjPoint:
        if P == O:
            return ProjPoint((0, 1, 0), self.ctx)
        return ProjPoint((P[0], P[1], 1), self.ctx)

    def from_proj(self, P: ProjPoint):
        x, y, z = P.coords
        if z == 0:
            if (x, y) != (0, 1):
                raise EllipticError(f"{P} is not on the curve")
            return O
        return (x, y)

    # -- group law ----------------------------------------------------------
    def neg(self, P):
        if P == O:
            return O
        F = self.ctx
        a1, _, a3, _, _ = self.a
        x, y = P
        return (x, F.neg(F.add(F.add(y, F.mul(a1, x)), a3)))

    def add(self, P, Q):
        if P == O:
            return Q
        if Q == O:
            return P
        F = self.ctx
        a1, a2, a3, a4, _ = self.a
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if F.add(F.add(F.add(y1, y2), F.mul(a1, x2)), a3) == 0:
                return O
            num = F.sub(
                F.add(F.add(F.mul(F.from_int(3), F.mul(x1, x1)), F.mul(F.mul(F.from_int(2), a2), x1)), a4),
                F.mul(a1, y1),
            )
            den = F.add(F.add(F.mul(F.from_int(2), y1), F.mul(a1, x1)), a3)
        else:
            num = F.sub(y2, y1)
            den = F.sub(x2, x1)
        lam = F.div(num, den)
        nu = F.sub(y1, F.mul(lam, x1))
        x3 = F.sub(F.sub(F.sub(F.add(F.mul(lam, lam), F.mul(a1, lam)), a2), x1), x2)
        y3 = F.sub(F.neg(F.mul(F.add(lam, a1), x3)), F.add(nu, a3))
        return (x3, y3)

    def mul(self, n: int, P):
        if n < 0:
            return self.mul(-n, self.neg(P))
        R = O
        while n:
            if n & 1:
                R = self.add(R, P)
            P = self.add(P, P)
            n >>= 1
        return R

    def point_order(self, P) -> int:
        n, Q = 1, P
        while Q != O:
            Q = self.add(Q, P)
            n += 1
        return n

    def torsion(self, r: int) -> list:
        """Rational points killed by r, sorted (O first)."""
        return [P for P in self.points if self.mul(r, P) == O]

    # -- isomorphisms -----------------------------------------------------------
    def transformed_invariants(self, u, r, s, t):
        """a-invariants of the curve obtained by the substitution (u, r, s, t)."""
        F = self.ctx
        a1, a2, a3, a4, a6 = self.a
        m, ad, sb = F.mul, F.add, F.sub
        ui = F.inv(u)
        two, three = F.from_int(2), F.from_int(3)
        a1n = m(ui, ad(a1, m(two, s)))
        a2n = m(F.pow(ui, 2), sb(ad(sb(a2, m(s, a1)), m(three, r)), m(s, s)))
        a3n = m(F.pow(ui, 3), ad(ad(a3, m(r, a1)), m(two, t)))
        a4n = m(
            F.pow(ui, 4),
            sb(
                ad(sb(a4, m(s, a3)), ad(m(m(two, r), a2), m(three, m(r, r)))),
                ad(m(ad(t, m(r, s)), a1), m(m(two, s), t)),
            ),
        )
        a6n = m(
            F.pow(ui, 6),
            sb(
                ad(ad(a6, m(r, a4)), ad(m(m(r, r), a2), m(m(r, r), r))),
                ad(ad(m(t, a3), m(t, t)), m(m(r, t), a1)),
            ),
        )
        return (a1n, a2n, a3n, a4n, a6n)


@dataclass(frozen=True)
class WeierstrassIso:
    """The point map (x, y) -> (u^2 x + r, u^3 y + s u^2 x + t)."""

    u: int
    r: int
    s: int
    t: int

    def apply(self, E: EllipticModel, P):
        if P == O:
            return O
        F = E.ctx
        x, y = P
        u2 = F.mul(self.u, self.u)
        u3 = F.mul(u2, self.u)
        nx = F.add(F.mul(u2, x), self.r)
        ny = F.add(F.add(F.mul(u3, y), F.mul(F.mul(self.s, u2), x)), self.t)
        return (nx, ny)


def automorphism_search(E: EllipticModel) -> list[WeierstrassIso]:
    """All automorphisms of E fixing O defined over the field of E.

    Exhaustive over (u, r, s, t).  The first two transformation rules fix r
    when 3 is invertible and the third fixes t when 2 is invertible; in
    characteristic 2 or 3 the free parameter is scanned.
    """
    F = E.ctx
    a1, a2, a3, a4, a6 = E.a
    p = F.p
    two, three = F.from_int(2), F.from_int(3)
    out = []
    for u in range(1, F.q):
        for s in range(F.q):
            # u a1' = a1 + 2 s with a1' = a1
            if F.mul(u, a1) != F.add(a1, F.mul(two, s)):
                continue
            if p != 3:
                # u^2 a2 = a2 - s a1 + 3 r - s^2
                rhs = F.add(F.sub(F.mul(F.mul(u, u), a2), a2), F.add(F.mul(s, a1), F.mul(s, s)))
                rs = [F.div(rhs, three)]
            else:
                rs = list(range(F.q))
            for r in rs:
                if p != 2:
                    rhs = F.sub(F.sub(F.mul(F.pow(u, 3), a3), a3), F.mul(r, a1))
                    ts = [F.div(rhs, two)]
                else:
                    if F.mul(F.pow(u, 3), a3) != F.add(a3, F.mul(r, a1)):
                        continue
                    ts = range(F.q)
                for t in ts:
                    if E.transformed_invariants(u, r, s, t) == E.a:
                        out.append(WeierstrassIso(u, r, s, t))
    return out


def iso_preserves_curve(E: EllipticModel, iso: WeierstrassIso) -> bool:
    """Independent check: the substituted equation is u^6 times the original."""
    F = E.ctx
    C = E.curve().poly
    u, r, s, t = iso.u, iso.r, iso.s, iso.t
    u2 = F.mul(u, u)
    forms = [
        HPoly(F, 3, {(1, 0, 0): u2, (0, 0, 1): r}),
        HPoly(F, 3, {(0, 1, 0): F.mul(u2, u), (1, 0, 0): F.mul(s, u2), (0, 0, 1): t}),
        HPoly(F, 3, {(0, 0, 1): 1}),
    ]
    return C.substitute(forms).proportional(C)


# ---------------------------------------------------------------------------
# permutation pictures of automorphisms


def translation_perm(E: EllipticModel, pts: list, a) -> tuple:
    idx = {P: i for i, P in enumerate(pts)}
    return tuple(idx[E.add(P, a)] for P in pts)


def iso_perm(E: EllipticModel, pts: list, iso: WeierstrassIso) -> tuple:
    idx = {P: i for i, P in enumerate(pts)}
    return tuple(idx[iso.apply(E, P)] for P in pts)


def fixed_points(E: EllipticModel, iso: WeierstrassIso, translation=O) -> list:
    """Rational points P with iso(P) + translation = P."""
    return [P for P in E.points if E.add(iso.apply(E, P), translation) == P]


@dataclass
class CaseIV:
    """Translations by E[r] together with a stabilizer subgroup of order r^2 - 1."""

    E: EllipticModel
    r: int
    omega: list
    stabilizer: list[WeierstrassIso]
    g1_isos: list[WeierstrassIso]
    G1: FinGroup
    G2: FinGroup
    tau_point: tuple
    P2_index: int
    extension_used: int


def subgroups_of_order(G: FinGroup, n: int) -> list[list[int]]:
    """All subgroups of G of order n (exhaustive joins of cyclic subgroups)."""
    from .group_id import all_subgroups

    return [sorted(H) for H in all_subgroups(G) if len(H) == n]


def build_case_iv(E0: EllipticModel, r: int, max_ext: int = 2) -> CaseIV:
    """Omega = E[r], G1 = a stabilizer subgroup of order r^2 - 1 regular on
    Omega minus O, G2 = tau^-1 G1 tau with tau the translation by the first
    nonzero point of Omega.

    The r-torsion must be rational over the field of E0.  When the
    automorphisms over that field are too few the search is repeated over a
    quadratic extension (at most ``max_ext`` as the extension degree).
    """
    R0 = E0.torsion(r)
    if len(R0) != r * r:
        raise TorsionNotRational(f"only {len(R0)} of the {r * r} points of E[{r}] are rational")
    e = 1
    while True:
        big = E0.ctx if e == 1 else make_field(E0.ctx.p, E0.ctx.k * e)
        E = E0.over(big)
        omega = sorted(E0.lift_point(big, P) for P in R0)
        autos = automorphism_search(E)
        perms = [iso_perm(E, omega, a) for a in autos]
        # -1 acts trivially on E[2]; lift each permutation by an automorphism
        # of least order so the lifts of a subgroup form a subgroup
        by_perm = {}
        for perm, a in sorted(zip(perms, autos), key=lambda pa: iso_order(E, pa[1])):
            by_perm.setdefault(perm, a)
        stab = generate(perms)
        candidates = []
        if stab.order % (r * r - 1) == 0:
            for H in subgroups_of_order(stab, r * r - 1):
                moved = set(range(1, len(omega)))
                regular = all(stab.elements[h][0] == 0 for h in H) and {
                    stab.elements[h][1] for h in H
                } == moved
                if regular:
                    candidates.append(H)
        if candidates:
            break
        if e * 2 > max_ext:
            raise NoSuitableStabilizerSubgroup(
                f"no subgroup of order {r * r - 1} of the stabilizer acts regularly on E[{r}] minus O"
            )
        e *= 2
    H = candidates[0]
    g1_perms = [stab.elements[h] for h in H]
    G1 = generate(g1_perms[1:]) if len(g1_perms) > 1 else generate([], identity=g1_perms[0])
    a = omega[1]
    tau = translation_perm(E, omega, a)
    tinv = perm_inv(tau)
    G2 = generate([perm_mul(perm_mul(tinv, g), tau) for g in G1.elements[1:]])
    p2 = tinv[0]
    return CaseIV(
        E=E,
        r=r,
        omega=omega,
        stabilizer=autos,
        g1_isos=[by_perm[g] for g in G1.elements],
        G1=G1,
        G2=G2,
        tau_point=a,
        P2_index=p2,
        extension_used=e,
    )


def verify_case_iv(case: CaseIV):
    """Pair report for a case built by :func:`build_case_iv`."""
    from .galois import verify_pair_core

    return verify_pair_core(
        case.G1,
        case.G2,
        0,
        case.P2_index,
        act=lambda g, i: g[i],
        degree=len(case.omega),
        p=case.E.ctx.p,
    )


def prime_order_fixed_point_counts(E: EllipticModel, isos: list[WeierstrassIso], ext: int = 1) -> dict:
    """Fixed points over GF(q^ext) of each automorphism of prime order != p.

    Returns {prime order: sorted list of counts}.
    """
    from .ffield import is_prime

    big = E.ctx if ext == 1 else make_field(E.ctx.p, E.ctx.k * ext)
    Eb = E.over(big)
    t = big.embedding(E.ctx)
    out: dict[int, list[int]] = {}
    for iso in isos:
        n = iso_order(E, iso)
        if n == 1 or not is_prime(n) or n == E.ctx.p:
            continue
        liso = WeierstrassIso(t[iso.u], t[iso.r], t[iso.s], t[iso.t])
        out.setdefault(n, []).append(len(fixed_points(Eb, liso)))
    return {k: sorted(v) for k, v in sorted(out.items())}


def iso_compose(E: EllipticModel, f: WeierstrassIso, g: WeierstrassIso) -> WeierstrassIso:
    """f o g as a coordinate change (apply g first)."""
    F = E.ctx
    m, ad = F.mul, F.add
    # g: x -> ug^2 x + rg ; f then: uf^2 (ug^2 x + rg) + rf
    u = m(f.u, g.u)
    r = ad(m(m(f.u, f.u), g.r), f.r)
    # y: uf^3 (ug^3 y + sg ug^2 x + tg) + sf uf^2 (ug^2 x + rg) + tf
    uf2 = m(f.u, f.u)
    uf3 = m(uf2, f.u)
    ug2 = m(g.u, g.u)
    coef_x = ad(m(uf3, m(g.s, ug2)), m(m(f.s, uf2), ug2))
    s = F.div(coef_x, m(u, u))
    t = ad(ad(m(uf3, g.t), m(m(f.s, uf2), g.r)), f.t)
    return WeierstrassIso(u, r, s, t)


def iso_order(E: EllipticModel, iso: WeierstrassIso) -> int:
    ident = WeierstrassIso(1, 0, 0, 0)
    x, n = iso, 1
    while x != ident:
        x = iso_compose(E, x, iso)
        n += 1
        if n > 10_000:
            raise EllipticError("automorphism of unexpected order")
    return n


def from_curve(C: CurvePoly, origin: ProjPoint | None = None) -> EllipticModel:
    """Read a Weierstrass cubic with origin (0:1:0)."""
    F = C.ctx
    if C.degree != 3:
        raise NotWeierstrass("not a cubic")
    if origin is not None and origin.coords != (0, 1, 0):
        raise NotWeierstrass("only the origin (0:1:0) of a Weierstrass cubic is supported")
    P = C.poly.terms
    lead = P.get((0, 2, 1))
    if not lead:
        raise NotWeierstrass("missing y^2 z term")
    allowed = {(0, 2, 1), (1, 1, 1), (0, 1, 2), (3, 0, 0), (2, 0, 1), (1, 0, 2), (0, 0, 3)}
    if set(P) - allowed:
        raise NotWeierstrass("unexpected monomials for a Weierstrass cubic")
    c3 = P.get((3, 0, 0), 0)
    if F.add(c3, lead) != 0:
        if c3 == 0:
            raise NotWeierstrass("missing x^3 term")
        raise NotWeierstrass("coefficients of y^2 z and x^3 must be opposite")
    inv = F.inv(lead)

    def c(e):
        return F.mul(P.get(e, 0), inv)

    a1, a3 = c((1, 1, 1)), c((0, 1, 2))
    a2, a4, a6 = F.neg(c((2, 0, 1))), F.neg(c((1, 0, 2))), F.neg(c((0, 0, 3)))
    return EllipticModel(F, (a1, a2, a3, a4, a6))
