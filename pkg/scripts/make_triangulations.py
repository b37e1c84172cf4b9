"""Write random plane triangulations (convex hulls of sphere points) as planar_code.

Usage:
    python scripts/make_triangulations.py OUT.pc [--min-n 4] [--max-n 40] [--seed 0]
"""

from __future__ import annotations

import argparse
from pathlib import Path

from planecount.corpus import sphere_triangulation, write_planar_code


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("out", type=Path)
    p.add_argument("--min-n", type=int, default=4)
    p.add_argument("--max-n", type=int, default=40)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    rots = [sphere_triangulation(n, seed=args.seed + n) for n in range(args.min_n, args.max_n + 1)]
    args.out.write_bytes(write_planar_code(rots))
    print(f"wrote {len(rots)} triangulations to {args.out}")


if __name__ == "__main__":
    main()
