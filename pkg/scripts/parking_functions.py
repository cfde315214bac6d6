"""Compare the higher parking function dimension with (n+1)^(n-1) and with
the level-k generalisation for small n.

    python scripts/parking_functions.py --max-n 6 --max-level 3
"""

import argparse

from higherweyl.characters import cpf_dim


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--max-level", type=int, default=2)
    args = parser.parse_args()

    for k in range(1, args.max_level + 1):
        for n in range(1, args.max_n + 1):
            value = cpf_dim((n,), k)
            note = f"  (n+1)^(n-1) = {(n + 1) ** (n - 1)}" if k == 1 else ""
            print(f"k={k} n={n}: {value}{note}")


if __name__ == "__main__":
    main()
