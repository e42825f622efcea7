"""Seeded property checks shared by the property tests and the acceptance suite.

Each check returns a list of failure descriptions; an empty list is a pass.
"""

from __future__ import annotations

import random

from innergalois import catalog, gk
from innergalois.elliptic import build_case_iv, verify_case_iv
from innergalois.ffield import make_field
from innergalois.galois import pencil_perspectivities, verify_pair
from innergalois.genus_tools import NonIntegerGenus, hurwitz_identity, hurwitz_solve
from innergalois.group_engine import (
    Collineation,
    action_on,
    conjugation_action_on_conjugates,
    generate,
    lagrange_holds,
    sylow_indices,
)
from innergalois.plane_curve import (
    LineIsComponent,
    _two_points_on_line,
    binary_restriction,
    intersect_line,
    normalize_coords,
    rational_points,
)
from oracles import NaiveField

AXIOM_FIELDS = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (13, 1), (2, 6)]


def field_axiom_failures(triples: int = 1000, seed: int = 0) -> list[str]:
    """Ring axioms and inverses on random triples, plus products against schoolbook arithmetic."""
    rng = random.Random(seed)
    bad = []
    for p, k in AXIOM_FIELDS:
        F = make_field(p, k)
        N = NaiveField(p, k, F.modulus)
        ad, mu = F.add, F.mul
        for _ in range(triples):
            a, b, c = (rng.randrange(F.q) for _ in range(3))
            ok = (
                mu(mu(a, b), c) == mu(a, mu(b, c))
                and ad(ad(a, b), c) == ad(a, ad(b, c))
                and mu(a, ad(b, c)) == ad(mu(a, b), mu(a, c))
                and ad(a, b) == ad(b, a)
                and mu(a, b) == mu(b, a)
                and F.sub(a, a) == 0
                and (a == 0 or mu(a, F.inv(a)) == 1)
                and mu(a, b) == N.mul(a, b)
                and ad(a, b) == N.add(a, b)
            )
            if not ok:
                bad.append(f"GF({p}^{k}) at {(a, b, c)}")
    return bad


# ---------------------------------------------------------------------------


def plane_catalog_curves():
    out = []
    for name in catalog.names():
        e = catalog.entry(name)
        if e.curve is not None:
            out.append((name, e.curve))
    return out


def _divide_linear_power(F, coeffs, r, m):
    """Divide by (t - r)^m by synthetic division; None if not divisible."""
    c = list(coeffs)
    for _ in range(m):
        out = [0] * (len(c) - 1)
        acc = 0
        for i in range(len(c) - 1, 0, -1):
            acc = F.add(c[i], F.mul(acc, r))
            out[i - 1] = acc
        rem = F.add(c[0], F.mul(acc, r))
        if rem != 0:
            return None
        c = out
    return c


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def bezout_failures(lines_per_curve: int = 50, seed: int = 1) -> list[str]:
    """Intersections with random lines: multiplicities are exact and total deg C.

    For every line the restriction f(t) = F(u + t v) is checked against direct
    evaluation on the base field; each reported point is checked to be a root
    of exact multiplicity m by synthetic division over its field; and the
    multiplicities plus the unresolved residual add up to deg C.
    """
    rng = random.Random(seed)
    bad = []
    for name, C in plane_catalog_curves():
        F = C.ctx
        d = C.degree
        done = 0
        tries = 0
        while done < lines_per_curve and tries < 20 * lines_per_curve:
            tries += 1
            line = tuple(rng.randrange(F.q) for _ in range(3))
            if not any(line):
                continue
            try:
                inter = intersect_line(C, line)
            except LineIsComponent:
                continue
            done += 1
            line = normalize_coords(F, line)
            u, v = _two_points_on_line(F, line)
            f = binary_restriction(C, u, v)
            for t in range(F.q):
                pt = tuple(F.add(u[i], F.mul(t, v[i])) for i in range(3))
                acc = 0
                for k, c in enumerate(f):
                    acc = F.add(acc, F.mul(c, F.pow(t, k)))
                if acc != C.evaluate(pt):
                    bad.append(f"{name}: restriction differs from evaluation on {line}")
                    break
            deg_t = len(_trim(f)) - 1
            found = 0
            for P, m in inter.points:
                big = P.ctx
                D = C.over(big)
                if D.evaluate(P.coords) != 0:
                    bad.append(f"{name}: reported point {P} is not on C")
                    continue
                emb = big.embedding(F)
                lb = [emb[c] for c in line]
                if _dot(big, lb, P.coords) != 0:
                    bad.append(f"{name}: reported point {P} is not on the line {line}")
                    continue
                # parameter of P on the line, or infinity for v itself
                bu = [emb[c] for c in u]
                bv = [emb[c] for c in v]
                r = _parameter(big, bu, bv, P.coords)
                if r is None:
                    if m != d - deg_t:
                        bad.append(f"{name}: multiplicity at infinity {m} != {d - deg_t}")
                    found += m
                    continue
                fb = [emb[c] for c in f]
                q1 = _divide_linear_power(big, fb, r, m)
                if q1 is None or _divide_linear_power(big, q1, r, 1) is not None:
                    bad.append(f"{name}: multiplicity {m} at {P} is not exact")
                found += m
            if found + inter.residual_degree != d:
                bad.append(f"{name}: multiplicities {found} + residual {inter.residual_degree} != {d}")
        if done < lines_per_curve:
            bad.append(f"{name}: only {done} non-component lines sampled")
    return bad


def _dot(F, a, b):
    acc = 0
    for x, y in zip(a, b):
        acc = F.add(acc, F.mul(x, y))
    return acc


def _parameter(F, u, v, coords):
    """t with u + t v proportional to coords, or None when coords ~ v."""
    for t in range(F.q):
        w = [F.add(u[i], F.mul(t, v[i])) for i in range(3)]
        if _proportional(F, w, coords):
            return t
    return None


def _proportional(F, a, b):
    return all(F.mul(a[i], b[j]) == F.mul(a[j], b[i]) for i in range(3) for j in range(3))


# ---------------------------------------------------------------------------


def pair_groups(e):
    """G1, G2 for a plane catalog entry, rebuilt from its generators or by search."""
    C = e.curve
    if isinstance(e.generators, tuple) and isinstance(e.generators[0], list):
        (g1,), (g2,) = e.generators
        return generate([g1]), generate([g2])
    G1 = pencil_perspectivities(C, e.P1).group
    if e.name == "rational-agl-4":
        # the second group is the first conjugated by x -> x + z
        tau = Collineation(C.ctx, ((1, 0, 1), (0, 1, 0), (0, 0, 1)))
        ti = tau.inverse()
        return G1, generate([ti.compose(g).compose(tau) for g in G1.elements[1:]])
    return G1, pencil_perspectivities(C, e.P2).group


def _clean_plane_pairs():
    """(label, curve, P1, P2, G1, G2) for pairs whose line section is clean."""
    out = []
    for q in (2, 3):
        e = catalog.entry(f"hermitian-q{q}")
        C = e.curve
        pts = rational_points(C)
        groups = {P: pencil_perspectivities(C, P).group for P in pts}
        for i, j in ((0, 1), (0, 5), (2, 7), (3, 4)):
            P1, P2 = pts[i], pts[j]
            out.append((f"hermitian-q{q} {P1.text()} {P2.text()}", C, P1, P2, groups[P1], groups[P2]))
            triv = generate([], identity=groups[P1].identity)
            out.append((f"hermitian-q{q} {P1.text()} trivial G1", C, P1, P2, triv, groups[P2]))
    for name in ("rational-agl-4", "quartic-vb"):
        e = catalog.entry(name)
        out.append((name, e.curve, e.P1, e.P2, *pair_groups(e)))
    return out


def cond_III_equivalence_failures() -> list[str]:
    """Divisor condition agrees with the sharp-transitivity reformulation.

    Plane pairs use the line section as Omega; elliptic pairs compare with
    regularity of G_i on Omega minus P_i.
    """
    bad = []
    n_clean = 0
    for label, C, P1, P2, G1, G2 in _clean_plane_pairs():
        rep = verify_pair(C, P1, P2, G1, G2, strict=False)
        if not rep.line_omega_clean:
            continue
        n_clean += 1
        if bool(rep.cond_III) != bool(rep.cond_III_sharp):
            bad.append(f"{label}: cond_III={rep.cond_III} sharp={rep.cond_III_sharp}")
    for name, r in (("elliptic-iva", 2), ("elliptic-ivc", 3), ("elliptic-ive", 5)):
        case = build_case_iv(catalog.entry(name).elliptic, r)
        rep = verify_case_iv(case)
        n_clean += 1
        sharp = bool(rep.g1_sharply_transitive and rep.g2_sharply_transitive)
        if bool(rep.cond_III) != sharp:
            bad.append(f"{name}: cond_III={rep.cond_III} sharp={sharp}")
    if n_clean < 10:
        bad.append(f"only {n_clean} clean pairs examined")
    return bad


# ---------------------------------------------------------------------------


def constructed_actions():
    """Every group action the catalog pipeline builds, with a label."""
    acts = []
    for name in ("hermitian-q2", "hermitian-q3", "rational-agl-4", "quartic-iiic", "quartic-vb"):
        e = catalog.entry(name)
        C = e.curve
        rep = verify_pair(C, e.P1, e.P2, *pair_groups(e))
        acts.append((f"{name} on Omega", rep.action))
        acts.append((f"{name} on rational points", action_on(rep.group, rational_points(C))))
        S = sylow_indices(rep.group, C.ctx.p)
        acts.append((f"{name} on Sylow conjugates", conjugation_action_on_conjugates(rep.group, S)))
    for name, r in (("elliptic-iva", 2), ("elliptic-ivc", 3), ("elliptic-ive", 5)):
        rep = verify_case_iv(build_case_iv(catalog.entry(name).elliptic, r))
        acts.append((f"{name} on E[{r}]", rep.action))
    groups = gk.gk_groups()
    acts.append(("va-gk2 on Z = 0 points", action_on(groups.G, gk.line_support(groups.curve), gk.space_act)))
    acts.append(("va-gk2 on space points", action_on(groups.G, groups.curve.points, gk.space_act)))
    acts.append(("va-gk2 on Sylow-2 conjugates", conjugation_action_on_conjugates(groups.G, sylow_indices(groups.G, 2))))
    return acts


def lagrange_failures(actions=None) -> list[str]:
    bad = []
    for label, A in actions if actions is not None else constructed_actions():
        if A is None:
            bad.append(f"{label}: action missing")
        elif not lagrange_holds(A):
            bad.append(f"{label}: orbit-stabilizer fails")
    return bad


# ---------------------------------------------------------------------------


def hurwitz_failures(samples: int = 1000, seed: int = 2) -> list[str]:
    """hurwitz_solve on consistent data, and rejection of odd differents."""
    rng = random.Random(seed)
    bad = []
    n_done = 0
    while n_done < samples:
        n = rng.randint(1, 100)
        gq = rng.randint(0, 10)
        g = rng.randint(0, 500)
        D = 2 * g - 2 - n * (2 * gq - 2)
        if D < 0:
            continue
        n_done += 1
        if D % 2:
            bad.append(f"odd different from consistent data {(n, gq, g)}")
        if hurwitz_solve(n, gq, D) != g or not hurwitz_identity(n, g, gq, D):
            bad.append(f"identity fails at {(n, gq, D)}")
        try:
            hurwitz_solve(n, gq, D + 1)
            bad.append(f"odd different accepted at {(n, gq, D + 1)}")
        except NonIntegerGenus:
            pass
    return bad
