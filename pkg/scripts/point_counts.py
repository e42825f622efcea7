"""Point counts for the Suzuki and Ree entries over the fields involved.

    python3 scripts/point_counts.py
"""

from innergalois import catalog


def main() -> None:
    m = catalog.verify(catalog.entry("suzuki-q8"))["measured"]
    print(f"Suzuki q = 8: affine over GF(8) {m['affine_count']}, with infinity {m['rational_points']}, "
          f"projective over GF(64) {m['rational_points_over_q2']}")
    m = catalog.verify(catalog.entry("ree-q3"))["measured"]
    print(f"Ree q = 3: space model affine {m['space_affine_count']}, with infinity {m['rational_points']}, "
          f"plane equation affine {m['plane_affine_count']}")


if __name__ == "__main__":
    main()
