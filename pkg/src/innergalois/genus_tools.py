"""Genus bookkeeping: Hurwitz, Deuring-Shafarevich and partition identities.

A ramification filtration at a point is the list of orders |G_P^(0)|,
|G_P^(1)|, ... of the higher ramification groups, stopping before the
trivial group.  Its different exponent is d_P = sum_i (|G_P^(i)| - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .group_id import prime_power


class GenusError(ValueError):
    pass


class MalformedFiltration(GenusError):
    pass


class NonIntegerGenus(GenusError):
    pass


class NotPPower(GenusError):
    pass


class NotAPartition(GenusError):
    pass


def validate_filtration(filtration) -> list[int]:
    f = [int(x) for x in filtration]
    if not f:
        raise MalformedFiltration("empty filtration")
    if any(x < 1 for x in f):
        raise MalformedFiltration("group orders must be positive")
    for a, b in zip(f, f[1:]):
        if b > a or a % b:
            raise MalformedFiltration(f"{b} cannot follow {a} in a filtration")
    return f


def different(filtration) -> int:
    """d_P = sum (|G^(i)| - 1)."""
    return sum(x - 1 for x in validate_filtration(filtration))


def aggregate_different(profile) -> int:
    return sum(different(f) for f in profile)


def tame_different(n: int, orbit_lengths) -> int:
    """Sum of (n - l_i) over the short orbits of a tame group of order n."""
    out = 0
    for ell in orbit_lengths:
        if ell < 1 or n % ell:
            raise GenusError(f"orbit length {ell} does not divide {n}")
        out += n - ell
    return out


def hurwitz_genus(n: int, base_genus: int, diff: int) -> Fraction:
    """g from 2g - 2 = n (2 g' - 2) + D, as an exact fraction."""
    return Fraction(n * (2 * base_genus - 2) + diff + 2, 2)


def hurwitz_solve(n: int, base_genus: int, diff: int) -> int:
    if n < 1 or base_genus < 0 or diff < 0:
        raise GenusError("bad Hurwitz data")
    g = hurwitz_genus(n, base_genus, diff)
    if g.denominator != 1 or g < 0:
        raise NonIntegerGenus(f"genus {g} is not a nonnegative integer")
    return int(g)


def hurwitz_quotient_genus(n: int, genus: int, diff: int) -> int:
    """g' from 2g - 2 = n (2 g' - 2) + D."""
    gq = (Fraction(2 * genus - 2 - diff, n) + 2) / 2
    if gq.denominator != 1 or gq < 0:
        raise NonIntegerGenus(f"quotient genus {gq} is not a nonnegative integer")
    return int(gq)


def hurwitz_identity(n: int, genus: int, base_genus: int, diff: int) -> bool:
    return 2 * genus - 2 == n * (2 * base_genus - 2) + diff


def deuring_shafarevich(n: int, base_prank: int, orbit_lengths, p: int | None = None) -> int:
    """p-rank from gamma - 1 = n (gamma' - 1) + sum (n - l_i), n a power of p."""
    pp = prime_power(n) if n > 1 else None
    if n == 1:
        pp = (p, 0) if p else None
    if pp is None or (p is not None and pp[0] != p):
        raise NotPPower(f"{n} is not a power of the characteristic")
    for ell in orbit_lengths:
        if ell < 1 or n % ell:
            raise GenusError(f"orbit length {ell} does not divide {n}")
    gamma = n * (base_prank - 1) + sum(n - ell for ell in orbit_lengths) + 1
    if gamma < 0:
        raise GenusError("negative p-rank")
    return gamma


@dataclass
class PartitionData:
    order: int
    parts: list[tuple[int, int]]  # (|N_i|, g(X/N_i))


def partition_quotient_genus(genus: int, data: PartitionData) -> int:
    """g(X/N) from (k - 1) g + |N| g(X/N) = sum |N_i| g(X/N_i).

    The N_i must partition N: every nontrivial element lies in exactly one,
    which forces sum (|N_i| - 1) = |N| - 1.
    """
    k = len(data.parts)
    if k < 2 or sum(n - 1 for n, _ in data.parts) != data.order - 1:
        raise NotAPartition("component orders do not partition the group")
    if any(data.order % n for n, _ in data.parts):
        raise NotAPartition("component order does not divide the group order")
    rhs = sum(n * g for n, g in data.parts) - (k - 1) * genus
    gq = Fraction(rhs, data.order)
    if gq.denominator != 1 or gq < 0:
        raise NonIntegerGenus(f"quotient genus {gq} is not a nonnegative integer")
    return int(gq)


def partition_identity_holds(genus: int, quotient_genus: int, data: PartitionData) -> bool:
    k = len(data.parts)
    return (k - 1) * genus + data.order * quotient_genus == sum(n * g for n, g in data.parts)
