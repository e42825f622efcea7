"""The degree-9 curve over GF(8): plane collineations against the space model.

Prints what the linear pencil search finds at (0:1:0) on the plane model and
what the search on the space model over GF(64) finds, with the structure of
the group generated by the two point groups.

    python3 scripts/va_linear_vs_space.py
"""

from innergalois import gk
from innergalois.galois import pencil_perspectivities
from innergalois.group_engine import (
    action_on,
    center_indices,
    conjugation_action_on_conjugates,
    structure_kit,
    sylow_indices,
)
from innergalois.group_id import classify, is_quaternion
from innergalois.plane_curve import ProjPoint, intersect_line


def main() -> None:
    C = gk.va_plane_curve()
    for coords in ((0, 1, 0), (1, 0, 0)):
        r = pencil_perspectivities(C, ProjPoint.make(C.ctx, coords))
        print(f"plane model, point {coords}: linear group order {r.order}, "
              f"projection degree {r.degree - r.multiplicity}, {r.verdict}")
    print("line z = 0 meets C with multiplicities", intersect_line(C, (0, 0, 1)).multiplicities())
    groups = gk.gk_groups()
    print(f"space model over GF(64): {len(groups.curve.points)} points, "
          f"{len(gk.plane_points(groups.curve))} plane images")
    for name, H in (("G1", groups.G1), ("G2", groups.G2)):
        print(f"  {name}: order {H.order}, quaternion {is_quaternion(H)}")
    G = groups.G
    kit = structure_kit(G)
    A = action_on(G, gk.line_support(groups.curve), gk.space_act)
    conj = conjugation_action_on_conjugates(G, sylow_indices(G, 2))
    print(f"  <G1, G2>: order {G.order}, center {len(center_indices(G))}, derived orders {kit.derived_orders}")
    print(f"  on the {A.degree} points over z = 0: kernel {len(A.kernel())}, label {classify(A).label}")
    print(f"  on Sylow-2 conjugates: degree {conj.degree}, image {conj.image_order()}, {conj.transitivity_grade()}")


if __name__ == "__main__":
    main()
