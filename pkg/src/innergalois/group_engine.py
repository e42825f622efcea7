"""Finite groups of collineations and permutations.

Groups are closed by breadth-first search from a sorted generator list, so the
element order is deterministic.  Structural questions (center, derived series,
conjugates) go through a lazily built Cayley table on element indices.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from math import gcd

from .ffield import FieldCtx

CLOSURE_CAP = 2**20


class GroupError(ValueError):
    pass


class ClosureCapExceeded(GroupError):
    pass


class NotInvariant(GroupError):
    pass


class SingularMatrix(GroupError):
    pass


# ---------------------------------------------------------------------------
# matrices over a FieldCtx: tuples of row tuples of codes


def mat_mul(F: FieldCtx, A, B):
    n, m = len(A), len(B[0])
    inner = len(B)
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(m):
            acc = 0
            for k in range(inner):
                a = Ai[k]
                if a:
                    b = B[k][j]
                    if b:
                        acc = F.add(acc, F.mul(a, b))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_vec(F: FieldCtx, A, v):
    out = []
    for row in A:
        acc = 0
        for a, b in zip(row, v):
            if a and b:
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return tuple(out)


def mat_inv(F: FieldCtx, A):
    n = len(A)
    M = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            raise SingularMatrix("matrix is not invertible")
        M[col], M[piv] = M[piv], M[col]
        inv = F.inv(M[col][col])
        M[col] = [F.mul(v, inv) for v in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [F.sub(a, F.mul(f, b)) for a, b in zip(M[r], M[col])]
    return tuple(tuple(row[n:]) for row in M)


def mat_det(F: FieldCtx, A) -> int:
    n = len(A)
    M = [list(r) for r in A]
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            det = F.neg(det)
        det = F.mul(det, M[col][col])
        inv = F.inv(M[col][col])
        for r in range(col + 1, n):
            if M[r][col]:
                f = F.mul(M[r][col], inv)
                M[r] = [F.sub(a, F.mul(f, b)) for a, b in zip(M[r], M[col])]
    return det


def mat_frob(F: FieldCtx, A, e: int):
    if e % F.k == 0:
        return A
    return tuple(tuple(F.frob(v, e) for v in row) for row in A)


def mat_normalize(F: FieldCtx, A):
    """Scale so the first nonzero entry (row-major) is 1."""
    for row in A:
        for v in row:
            if v:
                if v == 1:
                    return tuple(tuple(r) for r in A)
                inv = F.inv(v)
                return tuple(tuple(F.mul(x, inv) for x in r) for r in A)
    raise SingularMatrix("zero matrix")


def identity_matrix(n: int):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


# ---------------------------------------------------------------------------


class Collineation:
    """A semilinear projective map P -> M sigma^frob(P), sigma = Frobenius.

    Equality is projective: matrices are kept scaled so that their first
    nonzero entry is 1.
    """

    __slots__ = ("ctx", "matrix", "frob", "_hash")

    def __init__(self, ctx: FieldCtx, matrix, frob: int = 0, normalized: bool = False):
        self.ctx = ctx
        self.frob = frob % ctx.k
        self.matrix = tuple(tuple(r) for r in matrix) if normalized else mat_normalize(ctx, matrix)
        self._hash = hash((self.matrix, self.frob))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @staticmethod
    def identity(ctx: FieldCtx, n: int = 3) -> "Collineation":
        return Collineation(ctx, identity_matrix(n), 0, normalized=True)

    def compose(self, other: "Collineation") -> "Collineation":
        """self o other: first apply ``other``."""
        F = self.ctx
        B = mat_frob(F, other.matrix, self.frob)
        return Collineation(F, mat_mul(F, self.matrix, B), self.frob + other.frob)

    __matmul__ = compose

    def inverse(self) -> "Collineation":
        F = self.ctx
        inv = mat_inv(F, self.matrix)
        return Collineation(F, mat_frob(F, inv, -self.frob % F.k), -self.frob)

    def apply(self, coords) -> tuple[int, ...]:
        """Image of a coordinate vector, normalized with last nonzero entry 1."""
        from .plane_curve import normalize_coords

        F = self.ctx
        if self.frob:
            coords = tuple(F.frob(c, self.frob) for c in coords)
        return normalize_coords(F, mat_vec(F, self.matrix, coords))

    def __call__(self, P):
        from .plane_curve import ProjPoint

        if P.ctx is not self.ctx:
            P = P.over(self.ctx)
        return ProjPoint(self.apply(P.coords), self.ctx)

    def over(self, big: FieldCtx) -> "Collineation":
        if big is self.ctx:
            return self
        if self.frob:
            raise GroupError("semilinear maps do not base-change")
        t = big.embedding(self.ctx)
        return Collineation(big, tuple(tuple(t[v] for v in r) for r in self.matrix), 0, normalized=True)

    def is_identity(self) -> bool:
        return self.frob == 0 and self.matrix == identity_matrix(self.dim)

    def order(self) -> int:
        x, n = self, 1
        while not x.is_identity():
            x = x.compose(self)
            n += 1
        return n

    def sort_key(self):
        return (self.frob, self.matrix)

    def __eq__(self, other):
        return isinstance(other, Collineation) and self.frob == other.frob and self.matrix == other.matrix

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"Collineation({[list(r) for r in self.matrix]}, frob={self.frob})"

    def to_json(self) -> dict:
        from .ffield import format_element

        return {
            "matrix": [[format_element(self.ctx, v) for v in r] for r in self.matrix],
            "frob": self.frob,
        }


def collineation_from_json(ctx: FieldCtx, data: dict) -> Collineation:
    from .ffield import parse_element

    M = [[parse_element(ctx, v) for v in row] for row in data["matrix"]]
    if mat_det(ctx, M) == 0:
        raise SingularMatrix("generator matrix is singular")
    return Collineation(ctx, M, int(data.get("frob", 0)))


# permutations are tuples; (a o b)(i) = a[b[i]]


def perm_mul(a, b):
    return tuple(a[i] for i in b)


def perm_inv(a):
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


# ---------------------------------------------------------------------------


def _defaults_for(sample):
    if isinstance(sample, Collineation):
        return (lambda a, b: a.compose(b)), Collineation.identity(sample.ctx, sample.dim)
    if isinstance(sample, tuple):
        return perm_mul, tuple(range(len(sample)))
    raise GroupError(f"no default operation for {type(sample).__name__}")


class FinGroup:
    """A finite group given by an explicit element list.

    ``elements[0]`` is the identity.  ``mul(a, b)`` means apply b, then a.
    Products of indices go through a Cayley table once it has been built
    (``table``), otherwise through ``mul`` directly.
    """

    def __init__(self, elements, mul, identity, gens=None):
        self.elements = list(elements)
        self.mul = mul
        self.identity = identity
        self.gens = list(gens) if gens is not None else None
        self.index = {g: i for i, g in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise GroupError("duplicate elements")
        if self.elements[0] != identity:
            raise GroupError("first element must be the identity")
        self._table = None
        self._inv: dict[int, int] = {}
        self._orders: dict[int, int] = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self.index

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"FinGroup(order={self.order})"

    # -- indexed arithmetic --------------------------------------------
    @property
    def table(self) -> list[list[int]]:
        if self._table is None:
            idx, els, mul = self.index, self.elements, self.mul
            self._table = [[idx[mul(a, b)] for b in els] for a in els]
        return self._table

    def m(self, i: int, j: int) -> int:
        if self._table is not None:
            return self._table[i][j]
        return self.index[self.mul(self.elements[i], self.elements[j])]

    def inv(self, i: int) -> int:
        if i not in self._inv:
            x, prev = i, 0
            while x != 0:
                prev = x
                x = self.m(x, i)
            self._inv[i] = prev
        return self._inv[i]

    @property
    def inverses(self) -> list[int]:
        return [self.inv(i) for i in range(self.order)]

    def element_order(self, i: int) -> int:
        if i not in self._orders:
            x, n = i, 1
            while x != 0:
                x = self.m(x, i)
                n += 1
            self._orders[i] = n
        return self._orders[i]

    @property
    def element_orders(self) -> list[int]:
        return [self.element_order(i) for i in range(self.order)]

    def closure_indices(self, gens) -> list[int]:
        """Indices of the subgroup generated by element indices ``gens``."""
        seen = {0}
        out = [0]
        queue = deque([0])
        gens = sorted(set(gens))
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.m(x, g)
                if y not in seen:
                    seen.add(y)
                    out.append(y)
                    queue.append(y)
        return out

    def subgroup(self, indices) -> "FinGroup":
        idx = sorted(set(indices), key=lambda i: (i != 0, i))
        return FinGroup([self.elements[i] for i in idx], self.mul, self.identity)

    def subgroup_of(self, elements) -> "FinGroup":
        return self.subgroup(self.closure_indices([self.index[g] for g in elements]))

    def conjugate_indices(self, H, g: int) -> frozenset:
        """g H g^-1 for a set of indices H."""
        gi = self.inv(g)
        return frozenset(self.m(self.m(g, h), gi) for h in H)

    def is_normal_indices(self, H) -> bool:
        H = frozenset(H)
        return all(self.conjugate_indices(H, g) == H for g in self.gens_indices())

    def gens_indices(self) -> list[int]:
        if self.gens:
            return [self.index[g] for g in self.gens]
        return list(range(self.order))


def generate(gens, mul=None, identity=None, cap: int = CLOSURE_CAP) -> FinGroup:
    """Closure of a set of generators by breadth-first search."""
    gens = list(gens)
    if not gens:
        if identity is None:
            raise GroupError("empty generator list needs an explicit identity")
        return FinGroup([identity], mul, identity, [])
    dmul, did = _defaults_for(gens[0])
    mul = mul or dmul
    identity = identity if identity is not None else did
    key = (lambda g: g.sort_key()) if isinstance(gens[0], Collineation) else None
    gens = sorted(set(gens), key=key)
    seen = {identity}
    out = [identity]
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                seen.add(y)
                out.append(y)
                queue.append(y)
                if len(out) > cap:
                    raise ClosureCapExceeded(f"group order exceeds {cap}")
    return FinGroup(out, mul, identity, [g for g in gens if g != identity])


def intersection(G1: FinGroup, G2: FinGroup) -> list:
    s2 = set(G2.elements)
    return [g for g in G1.elements if g in s2]


# ---------------------------------------------------------------------------
# structure


@dataclass
class StructureKit:
    order: int
    center_order: int
    derived_orders: list[int]
    solvable: bool
    involutions: int
    order_histogram: dict[int, int]
    abelian: bool
    cyclic: bool


def center_indices(G: FinGroup) -> list[int]:
    gens = G.gens_indices()
    return [i for i in range(G.order) if all(G.m(i, g) == G.m(g, i) for g in gens)]


def commutator_subgroup_indices(G: FinGroup, H=None) -> list[int]:
    """[H, H] for a subgroup given by indices (default: all of G)."""
    H = list(range(G.order)) if H is None else list(H)
    comms = set()
    for a in H:
        for b in H:
            comms.add(G.m(G.m(a, b), G.m(G.inv(a), G.inv(b))))
    return G.closure_indices(comms)


def derived_series(G: FinGroup) -> list[list[int]]:
    series = [list(range(G.order))]
    while True:
        nxt = commutator_subgroup_indices(G, series[-1])
        if len(nxt) == len(series[-1]):
            return series
        series.append(nxt)


def structure_kit(G: FinGroup) -> StructureKit:
    orders = G.element_orders
    hist = dict(sorted(Counter(orders).items()))
    ds = derived_series(G)
    center = center_indices(G)
    return StructureKit(
        order=G.order,
        center_order=len(center),
        derived_orders=[len(s) for s in ds],
        solvable=len(ds[-1]) == 1,
        involutions=hist.get(2, 0),
        order_histogram=hist,
        abelian=len(center) == G.order,
        cyclic=G.order in hist,
    )


def normal_closure(G: FinGroup, H) -> list[int]:
    """Smallest normal subgroup of G containing the index set H."""
    gens = set(H)
    for g in range(G.order):
        for h in H:
            gens.add(G.m(G.m(g, h), G.inv(g)))
    return G.closure_indices(gens)


# ---------------------------------------------------------------------------
# actions


class GroupAction:
    """A group acting on a finite point list through a permutation table."""

    def __init__(self, group: FinGroup, points: list, perms: list[tuple[int, ...]]):
        self.group = group
        self.points = list(points)
        self.perms = perms
        self.point_index = {P: i for i, P in enumerate(self.points)}

    @property
    def degree(self) -> int:
        return len(self.points)

    def kernel(self) -> list[int]:
        ident = tuple(range(self.degree))
        return [i for i, p in enumerate(self.perms) if p == ident]

    def image_order(self) -> int:
        return len(set(self.perms))

    def orbit(self, i: int) -> list[int]:
        return sorted({p[i] for p in self.perms})

    def orbits(self) -> list[list[int]]:
        seen, out = set(), []
        for i in range(self.degree):
            if i not in seen:
                o = self.orbit(i)
                seen.update(o)
                out.append(o)
        return out

    def stabilizer(self, i: int) -> list[int]:
        return [g for g, p in enumerate(self.perms) if p[i] == i]

    def fixed_points(self, g: int) -> list[int]:
        p = self.perms[g]
        return [i for i in range(self.degree) if p[i] == i]

    def is_transitive(self) -> bool:
        return self.degree > 0 and len(self.orbit(0)) == self.degree

    def is_2_transitive(self) -> bool:
        if not self.is_transitive():
            return False
        if self.degree < 2:
            return False
        st = self.stabilizer(0)
        rest = {self.perms[g][1] for g in st}
        return len(rest) == self.degree - 1 and 0 not in rest

    def transitivity_grade(self) -> str:
        if not self.is_transitive():
            return "intransitive"
        if not self.is_2_transitive():
            return "transitive"
        n = self.degree
        if self.image_order() == n * (n - 1):
            return "sharply-2-transitive"
        return "2-transitive"

    def is_sharply_transitive_on(self, subgroup: list[int], points: list[int]) -> bool:
        """Whether the subgroup (indices) is regular on the point subset."""
        pts = set(points)
        if len(subgroup) != len(pts) or not pts:
            return False
        base = next(iter(sorted(pts)))
        images = {self.perms[g][base] for g in subgroup}
        if images != pts:
            return False
        return all(self.perms[g][x] in pts for g in subgroup for x in pts)

    def quotient_group(self) -> FinGroup:
        """The faithful image as a permutation group on point indices."""
        perms = sorted(set(self.perms))
        ident = tuple(range(self.degree))
        perms.remove(ident)
        return FinGroup([ident] + perms, perm_mul, ident)


def action_on(G: FinGroup, points: list, act=None) -> GroupAction:
    """Permutation action of G on ``points``; ``act(g, P)`` defaults to g(P)."""
    act = act or (lambda g, P: g(P))
    index = {P: i for i, P in enumerate(points)}
    perms = []
    for g in G.elements:
        row = []
        for P in points:
            Q = act(g, P)
            j = index.get(Q)
            if j is None:
                raise NotInvariant(f"{P} is sent outside the point set")
            row.append(j)
        perms.append(tuple(row))
    return GroupAction(G, points, perms)


def conjugation_action_on_conjugates(G: FinGroup, H) -> GroupAction:
    """Action of G by conjugation on the conjugates of the subgroup H.

    H is given by element indices.  Points are frozensets of indices listed in
    order of first appearance.
    """
    H0 = frozenset(H)
    conj = []
    seen = set()
    for g in range(G.order):
        c = G.conjugate_indices(H0, g)
        if c not in seen:
            seen.add(c)
            conj.append(c)
    pos = {c: i for i, c in enumerate(conj)}
    perms = [tuple(pos[G.conjugate_indices(c, g)] for c in conj) for g in range(G.order)]
    return GroupAction(G, conj, perms)


def lagrange_holds(action: GroupAction) -> bool:
    """|orbit| * |stabilizer| = |G| for every point."""
    n = action.group.order
    return all(len(action.orbit(i)) * len(action.stabilizer(i)) == n for i in range(action.degree))


def orbits_and_stabilizer(action: GroupAction, i: int) -> tuple[list[int], FinGroup]:
    orbit = action.orbit(i)
    stab = action.stabilizer(i)
    if len(orbit) * len(stab) != action.group.order:
        raise GroupError("orbit-stabilizer relation fails")
    return orbit, action.group.subgroup(stab)


def sylow_indices(G: FinGroup, p: int) -> list[int]:
    """A Sylow p-subgroup, grown greedily from p-elements in element order.

    A p-subgroup that no p-element enlarges is maximal, hence Sylow.
    """
    H = [0]
    target = 1
    n = G.order
    while n % p == 0:
        n //= p
        target *= p
    for g in range(G.order):
        if len(H) == target:
            break
        o = G.element_order(g)
        if o == 1 or target % o or g in H:
            continue
        J = G.closure_indices(H + [g])
        if target % len(J) == 0:
            H = J
    return sorted(H)


def is_cyclic_indices(G: FinGroup, H) -> bool:
    H = list(H)
    return any(G.element_order(h) == len(H) for h in H)


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)
