"""Homogeneous polynomials over a FieldCtx, stored as {exponents: code}."""

from __future__ import annotations

from .ffield import FieldCtx


class HPoly:
    __slots__ = ("ctx", "nvars", "terms")

    def __init__(self, ctx: FieldCtx, nvars: int, terms: dict | None = None):
        self.ctx = ctx
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    # -- basics ----------------------------------------------------------
    @property
    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def copy(self) -> "HPoly":
        return HPoly(self.ctx, self.nvars, dict(self.terms))

    def __eq__(self, other):
        return (
            isinstance(other, HPoly)
            and self.ctx is other.ctx
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __repr__(self):
        return f"HPoly({self.ctx!r}, {sorted(self.terms.items())})"

    @staticmethod
    def variable(ctx, nvars, i) -> "HPoly":
        e = [0] * nvars
        e[i] = 1
        return HPoly(ctx, nvars, {tuple(e): 1})

    @staticmethod
    def linear(ctx, coeffs) -> "HPoly":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return HPoly(ctx, n, terms)

    @staticmethod
    def constant(ctx, nvars, c) -> "HPoly":
        return HPoly(ctx, nvars, {(0,) * nvars: c})

    def add(self, other: "HPoly") -> "HPoly":
        F = self.ctx
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = F.add(out.get(e, 0), c)
        return HPoly(F, self.nvars, out)

    def scale(self, c: int) -> "HPoly":
        F = self.ctx
        return HPoly(F, self.nvars, {e: F.mul(v, c) for e, v in self.terms.items()})

    def sub(self, other: "HPoly") -> "HPoly":
        return self.add(other.scale(self.ctx.neg(1)))

    def mul(self, other: "HPoly") -> "HPoly":
        F = self.ctx
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = F.add(out.get(e, 0), F.mul(c1, c2))
        return HPoly(F, self.nvars, out)

    def power(self, n: int) -> "HPoly":
        result = HPoly.constant(self.ctx, self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result.mul(base)
            n >>= 1
            if n:
                base = base.mul(base)
        return result

    # -- evaluation and calculus ----------------------------------------
    def evaluate(self, point) -> int:
        F = self.ctx
        q1 = F.q - 1
        logs = [None if v == 0 else F._log[v] for v in point]
        exp = F._exp
        acc = 0
        for e, c in self.terms.items():
            s = F._log[c]
            zero = False
            for a, lg in zip(e, logs):
                if a:
                    if lg is None:
                        zero = True
                        break
                    s += a * lg
            if not zero:
                acc = F.add(acc, exp[s % q1])
        return acc

    def partial(self, i: int) -> "HPoly":
        F = self.ctx
        out = {}
        for e, c in self.terms.items():
            a = e[i]
            if a % F.p:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = F.mul(c, F.from_int(a))
        return HPoly(F, self.nvars, out)

    def frobenius(self, e: int) -> "HPoly":
        F = self.ctx
        return HPoly(F, self.nvars, {m: F.frob(c, e) for m, c in self.terms.items()})

    def map_coeffs(self, ctx: FieldCtx, table) -> "HPoly":
        return HPoly(ctx, self.nvars, {m: table[c] for m, c in self.terms.items()})

    def substitute(self, forms: list["HPoly"]) -> "HPoly":
        """Replace variable i by the polynomial ``forms[i]``."""
        F = self.ctx
        nv = forms[0].nvars
        cache: dict = {}

        def pw(i, a):
            key = (i, a)
            if key not in cache:
                if a == 0:
                    cache[key] = HPoly.constant(F, nv, 1)
                elif a == 1:
                    cache[key] = forms[i]
                else:
                    cache[key] = pw(i, a - 1).mul(forms[i])
            return cache[key]

        out: dict = {}
        for e, c in self.terms.items():
            term = HPoly.constant(F, nv, c)
            for i, a in enumerate(e):
                if a:
                    term = term.mul(pw(i, a))
            for m, v in term.terms.items():
                out[m] = F.add(out.get(m, 0), v)
        return HPoly(F, nv, out)

    def linear_substitute(self, matrix) -> "HPoly":
        """P(x) -> P(M x) for a square matrix of codes (rows)."""
        forms = [HPoly.linear(self.ctx, row) for row in matrix]
        return self.substitute(forms)

    # -- normal form ----------------------------------------------------
    def leading(self):
        return max(self.terms)

    def normalized(self) -> "HPoly":
        """Scale so the lexicographically largest exponent has coefficient 1."""
        if not self.terms:
            return self
        lead = self.terms[self.leading()]
        if lead == 1:
            return self
        return self.scale(self.ctx.inv(lead))

    def proportional(self, other: "HPoly") -> bool:
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.normalized().terms == other.normalized().terms

    def monomial_content(self) -> tuple[int, ...]:
        """Exponents of the largest monomial dividing the polynomial."""
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    def divide_monomial(self, expo) -> "HPoly":
        return HPoly(
            self.ctx,
            self.nvars,
            {tuple(a - b for a, b in zip(e, expo)): c for e, c in self.terms.items()},
        )

    def univariate(self, i: int) -> list[int]:
        """Coefficient list in variable i for a polynomial in that variable alone."""
        d = max((e[i] for e in self.terms), default=0)
        out = [0] * (d + 1)
        for e, c in self.terms.items():
            out[e[i]] = c
        return out
