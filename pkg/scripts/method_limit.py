"""Sweep the minimum non-triangular face length m and show where each argument breaks.

Two columns matter:
  * degree<=2 forced: the counting bound e < (m+6)(n-2)/m beats e = 3n/2,
    so a vertex of degree at most 2 exists (needs m >= 12);
  * contradicts 4-critical: the same bound sits below (5n-2)/3 for every n
    (needs m >= 9).
"""

from __future__ import annotations

from fractions import Fraction

from planecount.bounds import bound_chain, contradiction_report


def main() -> None:
    print(f"{'m':>3} {'f <':>9} {'e < slope*n - off':>22} {'degree<=2 forced':>17} {'contradicts 4-critical':>24}")
    for m in range(7, 16):
        chain = bound_chain(m)
        rep = contradiction_report(m)
        forced = chain.edge_slope <= Fraction(3, 2)
        if rep.always_contradicts:
            contra = "always"
        elif rep.threshold_n is not None:
            contra = f"n >= {rep.threshold_n}"
        else:
            contra = f"only n <= {rep.contradicts_up_to}"
        edge = f"{chain.edge_slope}n - {chain.edge_offset}"
        print(f"{m:>3} {str(chain.face_coefficient) + 'e':>9} {edge:>22} {str(forced):>17} {contra:>24}")


if __name__ == "__main__":
    main()
