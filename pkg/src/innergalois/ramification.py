"""Ramification data of collineation groups, measured on branches.

At a simple point P of a plane curve, one affine coordinate is a local
parameter t and the other is a power series in t.  For an element s of the
stabilizer of P, i(s) = ord_t(s*(t) - t) is computed from that series, and
the higher ramification groups are G^(i) = {s : i(s) >= i + 1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ffield import FieldCtx, make_field, root_multiplicities
from .group_engine import Collineation, FinGroup
from .plane_curve import CurvePoly, ProjPoint, intersect_line, is_simple, normalize_coords


class RamificationError(ValueError):
    pass


# truncated power series: lists of codes of fixed length N


def ps_mul(F: FieldCtx, a, b, N):
    out = [0] * N
    for i, x in enumerate(a[:N]):
        if x:
            for j in range(N - i):
                y = b[j]
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return out


def ps_inv(F: FieldCtx, a, N):
    if a[0] == 0:
        raise RamificationError("series with zero constant term is not invertible")
    out = [0] * N
    inv0 = F.inv(a[0])
    out[0] = inv0
    for n in range(1, N):
        acc = 0
        for k in range(1, n + 1):
            if a[k] and out[n - k]:
                acc = F.add(acc, F.mul(a[k], out[n - k]))
        out[n] = F.neg(F.mul(acc, inv0))
    return out


def ps_order(a) -> int | None:
    for i, x in enumerate(a):
        if x:
            return i
    return None


def _eval_series(C: CurvePoly, X, N):
    """F(X(t)) for a vector of three series."""
    F = C.ctx
    cache = {}

    def pw(i, e):
        key = (i, e)
        if key not in cache:
            if e == 0:
                cache[key] = [1] + [0] * (N - 1)
            else:
                cache[key] = ps_mul(F, pw(i, e - 1), X[i], N)
        return cache[key]

    acc = [0] * N
    for e, c in C.poly.terms.items():
        term = [c] + [0] * (N - 1)
        for i, a in enumerate(e):
            if a:
                term = ps_mul(F, term, pw(i, a), N)
        acc = [F.add(x, y) for x, y in zip(acc, term)]
    return acc


@dataclass
class Branch:
    """Parametrization t -> X(t) of C near a simple point."""

    point: ProjPoint
    chart: int  # coordinate normalized to 1
    param: int  # coordinate used as local parameter (minus its value at P)
    series: list  # three series, X[chart] = 1
    precision: int


def branch_at(C: CurvePoly, P: ProjPoint, N: int = 24) -> Branch:
    """Power series branch of C at a simple point, precision N."""
    if P.ctx is not C.ctx:
        C = C.over(P.ctx)
    if not is_simple(C, P):
        raise RamificationError(f"{P} is singular; branches are not separated")
    F = C.ctx
    chart = max(i for i in range(3) if P.coords[i])
    others = [i for i in range(3) if i != chart]
    grad = [d.evaluate(P.coords) for d in C.partials()]
    # the dependent coordinate must have nonzero partial derivative
    dep = next(i for i in others if grad[i])
    param = next(i for i in others if i != dep)
    X = [None, None, None]
    X[chart] = [1] + [0] * (N - 1)
    X[param] = [P.coords[param], 1] + [0] * (N - 2)
    w = [P.coords[dep]] + [0] * (N - 1)
    X[dep] = w
    fd = grad[dep]
    inv = F.inv(fd)
    # fixed point iteration w <- w - f(t, w) / f_w(P), one new coefficient per step
    for _ in range(N):
        val = _eval_series(C, X, N)
        if not any(val):
            break
        w = [F.sub(a, F.mul(b, inv)) for a, b in zip(w, val)]
        X[dep] = w
    if any(_eval_series(C, X, N)):
        raise RamificationError("branch series did not converge")
    return Branch(P, chart, param, X, N)


def _action_index(br: Branch, g: Collineation) -> int | None:
    """ord_t(g*(t) - t) along the branch; None if it vanishes to precision."""
    F = g.ctx
    if g.frob:
        raise RamificationError("semilinear maps are not supported here")
    N = br.precision
    M = g.matrix
    Y = []
    for row in M:
        acc = [0] * N
        for a, s in zip(row, br.series):
            if a:
                acc = [F.add(x, F.mul(a, y)) for x, y in zip(acc, s)]
        Y.append(acc)
    if Y[br.chart][0] == 0:
        raise RamificationError("element does not fix the point")
    u = ps_mul(F, Y[br.param], ps_inv(F, Y[br.chart], N), N)
    diff = [F.sub(a, b) for a, b in zip(u, br.series[br.param])]
    return ps_order(diff)


def filtration_at(C: CurvePoly, P: ProjPoint, group: FinGroup, N: int = 24) -> list[int]:
    """Orders |G_P^(0)|, |G_P^(1)|, ... (trivial groups omitted).

    ``group`` is a group of collineations; only its elements fixing P count.
    """
    while True:
        br = branch_at(C, P, N)
        idx = []
        short = False
        for g in group.elements[1:]:
            gg = g.over(P.ctx) if g.ctx is not P.ctx else g
            if gg.apply(P.coords) != P.coords:
                continue
            i = _action_index(br, gg)
            if i is None:
                short = True
                break
            idx.append(i)
        if not short:
            break
        N *= 2
        if N > 512:
            raise RamificationError("element acts trivially on the branch")
    out = []
    level = 0
    while True:
        n = 1 + sum(1 for i in idx if i >= level + 1)
        if n == 1:
            break
        out.append(n)
        level += 1
    return out


# ---------------------------------------------------------------------------
# fixed points of collineations on a curve


def _char_poly(F: FieldCtx, M):
    """det(t I - M) for a 3x3 matrix, coefficients constant first."""
    (a, b, c), (d, e, f), (g, h, i) = M
    m, ad, sb = F.mul, F.add, F.sub
    tr = ad(ad(a, e), i)
    minors = ad(ad(sb(m(a, e), m(b, d)), sb(m(a, i), m(c, g))), sb(m(e, i), m(f, h)))
    det = sb(
        ad(ad(m(a, sb(m(e, i), m(f, h))), m(c, sb(m(d, h), m(e, g)))), 0),
        m(b, sb(m(d, i), m(f, g))),
    )
    return [F.neg(det), minors, F.neg(tr), 1]


def _kernel(F: FieldCtx, A):
    """Basis of the null space of a 3x3 matrix."""
    M = [list(r) for r in A]
    n = 3
    pivots = []
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if M[r][col]), None)
        if piv is None:
            continue
        M[row], M[piv] = M[piv], M[row]
        inv = F.inv(M[row][col])
        M[row] = [F.mul(v, inv) for v in M[row]]
        for r in range(n):
            if r != row and M[r][col]:
                fct = M[r][col]
                M[r] = [F.sub(x, F.mul(fct, y)) for x, y in zip(M[r], M[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(M[r][fc])
        basis.append(tuple(v))
    return basis


def fixed_points_on_curve(C: CurvePoly, g: Collineation, max_search: int = 4096):
    """Fixed points of a linear collineation on C.

    Eigenvalues are searched in extensions of the field of g up to
    ``max_search`` elements.  Returns (points, complete) where complete is
    False if some fixed locus could not be resolved inside the search range.
    """
    F0 = g.ctx
    cp = _char_poly(F0, g.matrix)
    pts = {}
    covered = 0
    e = 1
    complete = True
    while covered < 3:
        k = F0.k * e
        if k > 8 or F0.p**k > max_search:
            complete = False
            break
        big = make_field(F0.p, k)
        t = big.embedding(F0)
        M = tuple(tuple(t[v] for v in r) for r in g.matrix)
        D = C.over(big)
        for lam, mult in root_multiplicities(big, [t[c] for c in cp]):
            if any(big.frob(lam, F0.k * f) == lam for f in range(1, e)):
                continue
            covered += mult
            A = tuple(tuple(big.sub(M[r][c], lam if r == c else 0) for c in range(3)) for r in range(3))
            ker = _kernel(big, A)
            if len(ker) == 1:
                v = normalize_coords(big, ker[0])
                if D.evaluate(v) == 0:
                    pts[(big.k, v)] = ProjPoint(v, big)
            elif len(ker) == 2:
                u, w = ker
                line = normalize_coords(
                    big,
                    (
                        big.sub(big.mul(u[1], w[2]), big.mul(u[2], w[1])),
                        big.sub(big.mul(u[2], w[0]), big.mul(u[0], w[2])),
                        big.sub(big.mul(u[0], w[1]), big.mul(u[1], w[0])),
                    ),
                )
                inter = intersect_line(D, line, max_search=max_search)
                if inter.residual_degree:
                    complete = False
                for Q, _ in inter.points:
                    pts[(Q.ctx.k, Q.coords)] = Q
            else:
                raise RamificationError("identity has every point fixed")
        e += 1
    uniq = {}
    for Q in pts.values():
        R = descend(Q, F0)
        uniq.setdefault((R.ctx.k, R.coords), R)
    return [uniq[k] for k in sorted(uniq)], complete


def descend(Q: ProjPoint, base: FieldCtx) -> ProjPoint:
    """Rewrite Q over the smallest field between ``base`` and Q.ctx containing it."""
    big = Q.ctx
    for d in range(base.k, big.k + 1, base.k):
        if big.k % d or not all(big.in_subfield(c, d) for c in Q.coords):
            continue
        if d == big.k:
            return Q
        sub = make_field(big.p, d)
        back = {v: i for i, v in enumerate(big.embedding(sub))}
        return ProjPoint(tuple(back[c] for c in Q.coords), sub)
    return Q


@dataclass
class ProfileEntry:
    point: ProjPoint
    filtration: list[int]


def ramification_profile(C: CurvePoly, group: FinGroup, max_search: int = 4096):
    """All points of C with nontrivial stabilizer in ``group`` and their filtrations.

    Returns (entries, complete).  Singular fixed points make the profile
    incomplete because their branches are not separated here.
    """
    complete = True
    found = {}
    for g in group.elements[1:]:
        pts, ok = fixed_points_on_curve(C, g, max_search)
        complete &= ok
        for Q in pts:
            found.setdefault((Q.ctx.k, Q.coords), Q)
    entries = []
    for key in sorted(found):
        Q = found[key]
        D = C.over(Q.ctx)
        if not is_simple(D, Q):
            complete = False
            continue
        entries.append(ProfileEntry(Q, filtration_at(D, Q, group)))
    return entries, complete
