"""Naming the groups that turn up, by invariants rather than by presentation.

Labels come from orders, degrees, transitivity, kernels and small subgroup
facts.  Order formulas for the Lie-type families are included so that
candidate names can be matched against measured group orders.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .ffield import prime_factors
from .group_engine import FinGroup, GroupAction, center_indices, sylow_indices

SUBGROUP_SEARCH_CAP = 1000


class GroupIdError(ValueError):
    pass


# ---------------------------------------------------------------------------
# order formulas


def prime_power(q: int) -> tuple[int, int] | None:
    """(p, e) with q = p^e, or None."""
    if q < 2:
        return None
    fs = prime_factors(q)
    if len(fs) != 1:
        return None
    p = fs[0]
    e = 0
    while q > 1:
        q //= p
        e += 1
    return p, e


def lie_type_order(family: str, q: int) -> int:
    """Orders of the families PSL2, SL2, PSU3, SU3, Sz, Ree, PGL2, PGammaL2."""
    pp = prime_power(q)
    if pp is None:
        raise GroupIdError(f"{q} is not a prime power")
    p, e = pp
    fam = family.upper().replace("(", "").replace(")", "").replace(",", "")
    if fam in ("PSL2", "PSL"):
        return (q + 1) * q * (q - 1) // gcd(2, q + 1)
    if fam in ("SL2", "SL"):
        return (q + 1) * q * (q - 1)
    if fam in ("PGL2", "PGL"):
        return (q + 1) * q * (q - 1)
    if fam in ("PGAMMAL2", "PΓL2"):
        return (q + 1) * q * (q - 1) * e
    if fam in ("PSU3", "PSU"):
        return (q**3 + 1) * q**3 * (q**2 - 1) // gcd(3, q + 1)
    if fam in ("SU3", "SU"):
        return (q**3 + 1) * q**3 * (q**2 - 1)
    if fam in ("SZ", "SUZUKI"):
        if p != 2 or e % 2 == 0:
            raise GroupIdError("Suzuki groups need q = 2^(2s+1)")
        return (q**2 + 1) * q**2 * (q - 1)
    if fam == "REE":
        if p != 3 or e % 2 == 0:
            raise GroupIdError("Ree groups need q = 3^(2s+1)")
        return (q**3 + 1) * q**3 * (q - 1)
    raise GroupIdError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# subgroups


def all_subgroups(G: FinGroup, cap: int = SUBGROUP_SEARCH_CAP) -> list[frozenset]:
    """Every subgroup of G as a frozenset of element indices.

    Starts from the cyclic subgroups and closes under joins with cyclic
    subgroups until nothing new appears.  Exhaustive; limited to |G| <= cap.
    """
    if G.order > cap:
        raise GroupIdError(f"subgroup search is limited to order {cap}")
    cyclic: dict[frozenset, int] = {}
    for g in range(G.order):
        H = frozenset(G.closure_indices([g]))
        cyclic.setdefault(H, g)
    gens = sorted(cyclic.values())
    found = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        nxt = []
        for H in frontier:
            hl = sorted(H)
            for g in gens:
                if g in H:
                    continue
                J = frozenset(G.closure_indices(hl + [g]))
                if J not in found:
                    found.add(J)
                    nxt.append(J)
        frontier = nxt
    return sorted(found, key=lambda H: (len(H), sorted(H)))


def subgroup_order_spectrum(G: FinGroup) -> list[int]:
    return sorted({len(H) for H in all_subgroups(G)})


def is_cyclic(G: FinGroup) -> bool:
    n = G.order
    return any(G.element_order(i) == n for i in range(n))


def involution_count(G: FinGroup) -> int:
    return sum(1 for i in range(G.order) if G.element_order(i) == 2)


def is_quaternion(G: FinGroup) -> bool:
    """Generalized quaternion 2-group: a 2-group with a single involution, not cyclic."""
    n = G.order
    return n >= 8 and n & (n - 1) == 0 and involution_count(G) == 1 and not is_cyclic(G)


# ---------------------------------------------------------------------------


@dataclass
class Classification:
    label: str
    aliases: list[str] = field(default_factory=list)
    order: int = 0
    degree: int = 0
    kernel_order: int = 0
    quotient_order: int = 0
    transitivity: str = ""
    stabilizer_order: int | None = None
    stabilizer_cyclic: bool | None = None
    stabilizer_has_order_12: bool | None = None
    reasons: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "aliases": list(self.aliases),
            "order": self.order,
            "degree": self.degree,
            "kernel_order": self.kernel_order,
            "quotient_order": self.quotient_order,
            "transitivity": self.transitivity,
            "stabilizer_order": self.stabilizer_order,
            "stabilizer_cyclic": self.stabilizer_cyclic,
            "stabilizer_has_order_12": self.stabilizer_has_order_12,
            "reasons": list(self.reasons),
        }


def _lie_candidates(n: int, qorder: int) -> list[str]:
    out = []
    pp = prime_power(n - 1)
    if pp:
        q = n - 1
        if qorder == lie_type_order("PSL2", q):
            out.append(f"PSL(2,{q})")
        if qorder == lie_type_order("PGL2", q) and q % 2 == 1:
            out.append(f"PGL(2,{q})")
    for q in range(2, n):
        if q * q + 1 == n and prime_power(q) and prime_power(q)[0] == 2 and prime_power(q)[1] % 2:
            if qorder == lie_type_order("Sz", q):
                out.append(f"Sz({q})")
        if q**3 + 1 == n and prime_power(q):
            if qorder == lie_type_order("PSU3", q):
                out.append(f"PSU(3,{q})")
            pq = prime_power(q)
            if pq[0] == 3 and pq[1] % 2 and qorder == lie_type_order("Ree", q):
                out.append(f"Ree({q})")
    if n == 28 and qorder == lie_type_order("PGammaL2", 8):
        out.append("PΓL(2,8)")
    return out


def classify(action: GroupAction) -> Classification:
    """Name the group of an action from its invariants.

    Decision list:
      1. cyclic groups;
      2. sharply 2-transitive faithful image: AGL(1, m) when the point
         stabilizer is cyclic; in degree 9 a noncyclic stabilizer gives
         AΓL(1,9) (isomorphic to PSU(3,2)); in degree 25 a noncyclic
         stabilizer with no subgroup of order 12 gives the nearfield group
         N(5), otherwise AΓL(1,25);
      3. kernel-carrying signatures: SL(2,3) (order 24 on 4 points, one
         involution) and the order 216 group with center of order 3 over a
         degree 9 sharply 2-transitive image;
      4. Lie-type order and degree matches for the faithful image, with
         SL/SU chosen over PSL/PSU when the kernel is the center;
      5. otherwise "unrecognized".
    """
    G = action.group
    n = action.degree
    K = action.kernel()
    kord = len(K)
    qorder = G.order // kord
    grade = action.transitivity_grade()
    res = Classification(
        label="unrecognized",
        order=G.order,
        degree=n,
        kernel_order=kord,
        quotient_order=qorder,
        transitivity=grade,
    )
    if is_cyclic(G):
        res.label = f"cyclic C{G.order}"
        res.reasons.append("an element generates the group")
        return res
    if grade not in ("2-transitive", "sharply-2-transitive"):
        res.reasons.append(f"action is {grade}")
        return res

    Q = action.quotient_group()
    stab = Q.subgroup([i for i, g in enumerate(Q.elements) if g[0] == 0])
    res.stabilizer_order = stab.order
    res.stabilizer_cyclic = is_cyclic(stab)
    if stab.order <= SUBGROUP_SEARCH_CAP and stab.order % 12 == 0:
        res.stabilizer_has_order_12 = 12 in subgroup_order_spectrum(stab)
    elif stab.order % 12:
        res.stabilizer_has_order_12 = False

    sharp = grade == "sharply-2-transitive"
    pp = prime_power(n)
    if sharp and pp:
        if not res.stabilizer_cyclic and n == 9:
            quot = "AΓL(1,9)≅PSU(3,2)"
        elif not res.stabilizer_cyclic and n == 25:
            quot = "AΓL(1,25)" if res.stabilizer_has_order_12 else "N(5)"
        elif res.stabilizer_cyclic:
            quot = f"AGL(1,{n})"
        else:
            quot = f"nearfield group of degree {n}"
        res.reasons.append(f"faithful image is sharply 2-transitive of degree {n}")
        if kord == 1:
            res.label = quot
            res.aliases = _lie_candidates(n, qorder)
            if n == 3:
                res.aliases.append("S3")
            return res
        # a kernel is present; look for the known signatures
        center = center_indices(G)
        if G.order == 24 and n == 4 and involution_count(G) == 1:
            res.label = "SL(2,3)"
            res.aliases = [f"{quot} image", "PSL(2,3) image"]
            res.reasons.append("order 24 with a single involution")
            return res
        if G.order == 216 and n == 9 and kord == 3 and len(center) == 3 and not res.stabilizer_cyclic:
            res.label = "SU(3,2)-consistent"
            res.aliases = [f"{quot} image"]
            res.reasons.append("order 216, kernel equal to the center of order 3")
            return res
        res.aliases.append(f"{quot} image")

    if n == 4 and qorder == 24:
        Q = action.quotient_group()
        if involution_count(Q) == 9:
            res.label = "S4" if kord == 1 else "S4 image"
            res.aliases = ["PGL(2,3)"]
            res.reasons.append("order 24 on 4 points with nine involutions")
            return res

    cands = _lie_candidates(n, qorder)
    if cands:
        center = center_indices(G)
        if kord > 1 and set(K) == set(center):
            lifted = []
            for c in cands:
                if c.startswith("PSL(2,") and kord == 2:
                    lifted.append("SL" + c[3:])
                elif c.startswith("PSU(3,") and kord == 3:
                    lifted.append("SU" + c[3:])
            if lifted:
                res.label = lifted[0]
                res.aliases = lifted[1:] + [c + " image" for c in cands]
                res.reasons.append("kernel equals the center")
                return res
        res.label = cands[0] if kord == 1 else cands[0] + " image"
        res.aliases = cands[1:]
        res.reasons.append("order and degree match a Lie-type family")
        return res
    res.reasons.append("no rule matched")
    return res


# ---------------------------------------------------------------------------
# finite subgroups of PGL(2, K) in characteristic p


def _is_dihedral(G: FinGroup) -> bool:
    n = G.order
    if n < 4 or n % 2:
        return False
    half = n // 2
    for i in range(n):
        if G.element_order(i) == half:
            C = set(G.closure_indices([i]))
            return all(G.element_order(j) == 2 for j in range(n) if j not in C)
    return False


def dickson_shape(G: FinGroup, p: int) -> str | None:
    """Which shape of the list of finite subgroups of PGL(2, K) fits G, if any.

    Checked by invariants: cyclic, dihedral, A4, S4, A5, an elementary abelian
    normal Sylow p-subgroup with cyclic complement, or the order of PSL(2,q)
    or PGL(2,q) for a power q of p.
    """
    n = G.order
    if is_cyclic(G):
        return "cyclic"
    if _is_dihedral(G):
        return "dihedral"
    inv = involution_count(G)
    orders = set(G.element_orders)
    if n == 12 and inv == 3 and 6 not in orders:
        return "A4"
    if n == 24 and inv == 9 and orders <= {1, 2, 3, 4}:
        return "S4"
    if n == 60 and inv == 15 and orders <= {1, 2, 3, 5}:
        return "A5"
    pe = 1
    m = n
    while m % p == 0:
        m //= p
        pe *= p
    if pe > 1:
        P = sylow_indices(G, p)
        elem_ab = all(G.element_order(i) in (1, p) for i in P) and all(
            G.m(a, b) == G.m(b, a) for a in P for b in P
        )
        if elem_ab and G.is_normal_indices(P):
            # a cyclic complement exists iff some element has order n / |P|
            if any(G.element_order(i) == m for i in range(n)):
                return "p-semidirect"
    q = p
    while q <= n:
        if n in (lie_type_order("PSL2", q), lie_type_order("PGL2", q)):
            return f"order of PSL/PGL(2,{q})"
        q *= p
    return None
