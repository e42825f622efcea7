"""Ramification filtration of a Hermitian Galois point, measured on a branch.

For the Fermat curve of degree q + 1 over GF(q^2) the group of a point has
order q.  The script prints the measured filtration and the quotient genus
it implies by Hurwitz, next to the filtration with one term fewer.

    python3 scripts/filtration_discrepancy.py [--q 2 3]
"""

import argparse
from fractions import Fraction

from innergalois import catalog
from innergalois.galois import pencil_perspectivities
from innergalois.genus_tools import different, hurwitz_genus
from innergalois.ramification import filtration_at


def quotient_genus(n, genus, diff):
    # solve 2g - 2 = n (2g' - 2) + D for g' exactly
    return (Fraction(2 * genus - 2 - diff, n) + 2) / 2


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, nargs="*", default=[2, 3])
    args = ap.parse_args()
    for q in args.q:
        e = catalog.entry(f"hermitian-q{q}")
        C = e.curve
        G = pencil_perspectivities(C, e.P1).group
        genus = q * (q - 1) // 2
        measured = filtration_at(C, e.P1, G)
        shorter = [q] * (q + 1)
        print(f"q = {q}: |G| = {G.order}, genus {genus}")
        for label, f in (("measured", measured), ("one term fewer", shorter)):
            d = different(f)
            print(f"  {label:15s} {f}  d_P = {d}  quotient genus = {quotient_genus(q, genus, d)}")
        # sanity: the measured filtration reproduces the genus over a rational quotient
        assert hurwitz_genus(q, 0, different(measured)) == genus


if __name__ == "__main__":
    main()
