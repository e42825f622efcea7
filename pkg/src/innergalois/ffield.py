"""Finite fields GF(p^k) in a polynomial basis.

An element is stored as an integer code ``c0 + c1*p + ... + c_{k-1}*p^(k-1)``
where ``c0, ..., c_{k-1}`` are its coefficients against ``1, x, ..., x^(k-1)``
modulo the field modulus.  The canonical element order is the order of codes.

Arithmetic goes through exp/log tables built from a primitive element, with
Zech logarithms for addition in odd characteristic.  Code that needs speed
works with the integer codes directly through :class:`FieldCtx`; the
:class:`FieldElement` wrapper gives operator syntax on top.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

MAX_DEGREE = 8
MAX_ORDER = 2**20


class FieldError(ValueError):
    pass


class NonPrimeCharacteristic(FieldError):
    pass


class DegreeCapExceeded(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class NotADivisor(FieldError):
    pass


class ZeroPolynomial(FieldError):
    pass


class FieldMismatch(FieldError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# dense polynomials over GF(p), coefficient lists with the constant term first


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _monic_polys(p: int, degree: int):
    for tail in itertools.product(range(p), repeat=degree):
        yield list(tail) + [1]


def is_irreducible_mod_p(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree at most half."""
    poly = _trim([c % p for c in poly])
    n = len(poly) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for q in _monic_polys(p, d):
            if not _pmod(poly, q, p):
                return False
    return True


def canonical_modulus(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k.

    Candidates are compared as coefficient tuples ``(c0, c1, ..., c_{k-1}, 1)``.
    """
    for cand in _monic_polys(p, k):
        if is_irreducible_mod_p(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")


# ---------------------------------------------------------------------------


class FieldCtx:
    """Arithmetic context for GF(p^k).  Build through :func:`make_field`."""

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.modulus = tuple(modulus)
        self.q = p**k
        q = self.q
        self._pows = [p**i for i in range(k)]
        self.primitive = self._find_primitive()
        exp = [0] * (2 * (q - 1) + 1)
        log = [0] * q
        x = 1
        g = self._digits(self.primitive)
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._code(_pmod(_pmul(self._digits(x), g, p), list(self.modulus), p))
        for i in range(q - 1, len(exp)):
            exp[i] = exp[i - (q - 1)]
        self._exp = exp
        self._log = log
        if p != 2:
            # zech[n] = log(1 + g^n), or -1 when 1 + g^n = 0
            zech = [0] * (q - 1)
            for n in range(q - 1):
                c = exp[n]
                c0 = c % p
                s = c - c0 + (c0 + 1) % p
                zech[n] = -1 if s == 0 else log[s]
            self._zech = zech
            self._half = (q - 1) // 2
        self.one = 1
        self.zero = 0
        self._embeds: dict = {}
        self._frob_tables: dict = {}

    # -- conversions -----------------------------------------------------
    def _digits(self, code: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(code % self.p)
            code //= self.p
        return _trim(out)

    def _code(self, digits) -> int:
        return sum(int(c) * self._pows[i] for i, c in enumerate(digits) if i < self.k)

    def coeffs(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    def from_coeffs(self, coeffs) -> int:
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.k:
            coeffs = _pmod(coeffs, list(self.modulus), self.p)
        return self._code(coeffs)

    def from_int(self, n: int) -> int:
        """Image of the integer n under the prime-field embedding."""
        return n % self.p

    def _find_primitive(self) -> int:
        q = self.q
        if q == 2:
            return 1
        facs = prime_factors(q - 1)
        m = list(self.modulus)
        for cand in range(2, q):
            g = self._digits(cand)
            ok = True
            for ell in facs:
                if self._slow_pow(g, (q - 1) // ell, m) == [1]:
                    ok = False
                    break
            if ok:
                return cand
        raise AssertionError("no primitive element")

    def _slow_pow(self, base, e, m):
        p = self.p
        result = [1]
        b = list(base)
        while e:
            if e & 1:
                result = _pmod(_pmul(result, b, p), m, p)
            b = _pmod(_pmul(b, b, p), m, p)
            e >>= 1
        return result

    # -- arithmetic on codes -------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        n = self._log[b] - la
        if n < 0:
            n += self.q - 1
        z = self._zech[n]
        if z < 0:
            return 0
        return self._exp[la + z]

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        return self._exp[self._log[a] + self._half]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def log(self, a: int) -> int:
        return self._log[a]

    def exp(self, n: int) -> int:
        return self._exp[n % (self.q - 1)]

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        from math import gcd

        n = self.q - 1
        return n // gcd(n, self._log[a])

    def frob(self, a: int, e: int = 1) -> int:
        """a -> a^(p^e)."""
        e %= self.k
        if e == 0 or a == 0:
            return a
        return self._exp[(self._log[a] * self.p**e) % (self.q - 1)]

    def sqrt_all(self, a: int) -> list[int]:
        return [x for x in range(self.q) if self.mul(x, x) == a]

    def elements(self) -> range:
        return range(self.q)

    def in_subfield(self, a: int, d: int) -> bool:
        return self.frob(a, d) == a

    def elem(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            return value
        if isinstance(value, (list, tuple)):
            return FieldElement(self, self.from_coeffs(value))
        return FieldElement(self, int(value))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})"

    # -- subfield embeddings -------------------------------------------
    def embedding(self, sub: "FieldCtx") -> list[int]:
        """Table sending codes of ``sub`` to codes of this field.

        The generator x of ``sub`` goes to the smallest root of its modulus.
        """
        if sub is self:
            return list(range(self.q))
        key = (sub.p, sub.k, sub.modulus)
        if key in self._embeds:
            return self._embeds[key]
        if sub.p != self.p or self.k % sub.k:
            raise NotADivisor(f"GF({sub.p}^{sub.k}) does not embed in {self!r}")
        mod = [self.from_int(c) for c in sub.modulus]
        root = None
        for r in range(self.q):
            if poly_eval(self, mod, r) == 0:
                root = r
                break
        table = []
        rp = [self.pow(root, i) for i in range(sub.k)]
        for code in range(sub.q):
            acc = 0
            for i, c in enumerate(sub.coeffs(code)):
                if c:
                    acc = self.add(acc, self.mul(self.from_int(c), rp[i]))
            table.append(acc)
        self._embeds[key] = table
        return table


@functools.lru_cache(maxsize=None)
def _make_field_cached(p: int, k: int, modulus: tuple[int, ...] | None) -> FieldCtx:
    if modulus is None:
        modulus = canonical_modulus(p, k)
    return FieldCtx(p, k, modulus)


def make_field(p: int, k: int = 1, modulus=None) -> FieldCtx:
    """Return the (cached) context for GF(p^k).

    Without ``modulus`` the canonical lexicographically smallest irreducible
    polynomial is used.  A supplied modulus is a coefficient list, constant
    term first, and must be monic and irreducible of degree k.
    """
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if k < 1 or k > MAX_DEGREE or p**k > MAX_ORDER:
        raise DegreeCapExceeded(f"GF({p}^{k}) is outside the supported range")
    if modulus is not None:
        mod = [int(c) % p for c in modulus]
        _trim(mod)
        if len(mod) != k + 1 or mod[-1] != 1:
            raise ReducibleModulus("modulus must be monic of degree k")
        if not is_irreducible_mod_p(mod, p):
            raise ReducibleModulus(f"{mod} is reducible over GF({p})")
        modulus = tuple(mod)
        if modulus == canonical_modulus(p, k):
            modulus = None
    return _make_field_cached(p, k, modulus)


def extension(ctx: FieldCtx, e: int) -> FieldCtx:
    """The canonical field of degree e over ``ctx`` (same characteristic)."""
    return make_field(ctx.p, ctx.k * e)


# ---------------------------------------------------------------------------


class FieldElement:
    """An element of a finite field with operator support."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: FieldCtx, code: int):
        self.ctx = ctx
        self.code = code

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise FieldMismatch("elements of different fields")
            return other.code
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return FieldElement(self.ctx, self.ctx.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return FieldElement(self.ctx, self.ctx.sub(self.code, o))

    def __rsub__(self, other):
        o = self._other(other)
        return FieldElement(self.ctx, self.ctx.sub(o, self.code))

    def __mul__(self, other):
        o = self._other(other)
        return FieldElement(self.ctx, self.ctx.mul(self.code, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return FieldElement(self.ctx, self.ctx.div(self.code, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return FieldElement(self.ctx, self.ctx.div(o, self.code))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.code, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.inv(self.code))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx is other.ctx and self.code == other.code
        if isinstance(other, int):
            return self.code == self.ctx.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ctx), self.code))

    def __lt__(self, other: "FieldElement"):
        return self.code < other.code

    def __bool__(self):
        return self.code != 0

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.coeffs(self.code)

    def __repr__(self):
        return f"FieldElement({self.ctx!r}, {list(self.coeffs)})"


def _code(ctx: FieldCtx, a) -> int:
    if isinstance(a, FieldElement):
        if a.ctx is not ctx:
            raise FieldMismatch("elements of different fields")
        return a.code
    return ctx.from_int(a)


def primitive_element(ctx: FieldCtx) -> FieldElement:
    return FieldElement(ctx, ctx.primitive)


def frobenius(a: FieldElement, e: int = 1) -> FieldElement:
    return FieldElement(a.ctx, a.ctx.frob(a.code, e))


def norm_trace(a: FieldElement, sub_degree: int) -> tuple[FieldElement, FieldElement]:
    """Relative norm and trace of ``a`` down to GF(p^sub_degree).

    Both values are returned as elements of the field of ``a``; they lie in
    the subfield.
    """
    ctx = a.ctx
    if sub_degree < 1 or ctx.k % sub_degree:
        raise NotADivisor(f"{sub_degree} does not divide {ctx.k}")
    n, t = 1, 0
    x = a.code
    for _ in range(ctx.k // sub_degree):
        n = ctx.mul(n, x)
        t = ctx.add(t, x)
        x = ctx.frob(x, sub_degree)
    return FieldElement(ctx, n), FieldElement(ctx, t)


# ---------------------------------------------------------------------------
# univariate polynomials over a FieldCtx as lists of codes, constant first


def poly_eval(ctx: FieldCtx, coeffs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def poly_divide_linear(ctx: FieldCtx, coeffs: list[int], r: int) -> tuple[list[int], int]:
    """Synthetic division by (t - r); returns (quotient, remainder)."""
    n = len(coeffs) - 1
    out = [0] * n
    acc = 0
    for i in range(n, -1, -1):
        acc = ctx.add(ctx.mul(acc, r), coeffs[i])
        if i > 0:
            out[i - 1] = acc
    return out, acc


def _trim_codes(coeffs: list[int]) -> list[int]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def root_multiplicities(ctx: FieldCtx, coeffs: list[int]) -> list[tuple[int, int]]:
    """All roots in ``ctx`` of a nonzero polynomial with their multiplicities.

    Exhaustive search over the field, sorted by root code.
    """
    f = _trim_codes(coeffs)
    if not f:
        raise ZeroPolynomial("the zero polynomial has every element as a root")
    out = []
    for r in range(ctx.q):
        if len(f) <= 1:
            break
        m = 0
        while len(f) > 1:
            qt, rem = poly_divide_linear(ctx, f, r)
            if rem != 0:
                break
            f = qt
            m += 1
        if m:
            out.append((r, m))
    return out


def all_roots(poly) -> list[tuple[FieldElement, int]]:
    """Roots with multiplicity of a polynomial given as FieldElements.

    ``poly`` lists coefficients with the constant term first.
    """
    if not poly:
        raise ZeroPolynomial("empty polynomial")
    ctx = next(c.ctx for c in poly if isinstance(c, FieldElement))
    codes = [_code(ctx, c) for c in poly]
    return [(FieldElement(ctx, r), m) for r, m in root_multiplicities(ctx, codes)]


def parse_element(ctx: FieldCtx, text) -> int:
    """Code of an element written as base-p digits, constant term first.

    Digits use 0-9 then a-z.  Plain integers are read in the prime field, and
    over a prime field a decimal string is read as an integer.
    """
    if isinstance(text, int):
        return ctx.from_int(text)
    text = str(text).strip().lower()
    if text.startswith("-") and text[1:].isdigit():
        return ctx.from_int(int(text))
    if ctx.k == 1 and text.isdigit():
        return ctx.from_int(int(text))
    digits = [int(ch, 36) for ch in text]
    if len(digits) > ctx.k or any(d >= ctx.p for d in digits):
        raise FieldError(f"bad element string {text!r} for {ctx!r}")
    return ctx.from_coeffs(digits)


_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def format_element(ctx: FieldCtx, code: int) -> str:
    cs = list(ctx.coeffs(code))
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    return "".join(_DIGITS[c] for c in cs)


@dataclass(frozen=True)
class FieldInfo:
    p: int
    k: int
    order: int
    modulus: tuple[int, ...]
    primitive: tuple[int, ...]


def field_info(ctx: FieldCtx) -> FieldInfo:
    return FieldInfo(ctx.p, ctx.k, ctx.q, ctx.modulus, ctx.coeffs(ctx.primitive))
