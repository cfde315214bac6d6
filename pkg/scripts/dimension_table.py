"""Print level-k dimensions of V_(n) for a grid of (n, r, k), by three routes.

    python scripts/dimension_table.py --max-n 5 --max-rank 4 --max-level 4
"""

import argparse
import time

from higherweyl.enumeration import count_basis_matrices
from higherweyl.weyl_dims import hodge_det_dim, product_dim_rect


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--max-rank", type=int, default=4)
    parser.add_argument("--max-level", type=int, default=4)
    args = parser.parse_args()

    print(f"{'n':>3} {'r':>3} {'k':>3} {'product':>14} {'det':>14} {'count':>14}")
    start = time.perf_counter()
    for n in range(1, args.max_n + 1):
        for r in range(1, args.max_rank + 1):
            for k in range(1, args.max_level + 1):
                eta = [r * j for j in range(1, n + 1)]
                prod, det, count = product_dim_rect(n, r, k), hodge_det_dim(eta, k), count_basis_matrices(eta, k)
                flag = "" if prod == det == count else "  MISMATCH"
                print(f"{n:>3} {r:>3} {k:>3} {prod:>14} {det:>14} {count:>14}{flag}")
    print(f"# {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
