"""Decompose V_xi^[k] into irreducible gl_r modules, split by t-degree.

    python scripts/decompositions.py --max-size 3 --rank 3 --level 2
"""

import argparse

from higherweyl.characters import graded_char
from higherweyl.symfunc import expand_in_schur
from higherweyl.verify import partitions_of


def fmt(expansion):
    return " + ".join(f"{c}*s{tuple(nu)}" if c > 1 else f"s{tuple(nu)}" for nu, c in expansion.items())


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-size", type=int, default=3)
    parser.add_argument("--rank", type=int, default=3)
    parser.add_argument("--level", type=int, default=2)
    args = parser.parse_args()

    for size in range(1, args.max_size + 1):
        for xi in partitions_of(size, max_parts=args.rank):
            g = graded_char(xi, args.rank, args.level)
            print(f"xi={tuple(xi)} r={args.rank} k={args.level} dim={g.total().at_ones()}")
            for d, piece in g.pieces.items():
                print(f"    t^{d}: {fmt(expand_in_schur(piece))}")


if __name__ == "__main__":
    main()
