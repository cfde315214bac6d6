"""Brute-force reference implementations used only by the tests.

Nothing here imports the library's enumeration or formula code.
"""

from itertools import permutations, product
from math import prod


def brute_basis_matrices(eta, k):
    """All k x n matrices over 1..max(eta) satisfying the three basis conditions."""
    n = len(eta)
    top = max(eta, default=1)
    out = []
    for flat in product(range(1, top + 1), repeat=k * n):
        rows = [flat[i * n:(i + 1) * n] for i in range(k)]
        if any(row[j] >= row[j + 1] for row in rows for j in range(n - 1)):
            continue
        if any(rows[i][j] > rows[i + 1][j] for i in range(k - 1) for j in range(n)):
            continue
        if any(rows[-1][j] > eta[j] for j in range(n)):
            continue
        out.append(tuple(tuple(r) for r in rows))
    return sorted(out, key=lambda rows: [a for r in rows for a in r])


def brute_plane_partitions(shape, k):
    cells = [(i, c) for i, length in enumerate(shape) for c in range(length)]
    out = []
    for values in product(range(k + 1), repeat=len(cells)):
        grid = dict(zip(cells, values))
        if all(grid[(i, c)] <= grid.get((i, c + 1), k + 1) and grid[(i, c)] <= grid.get((i + 1, c), k + 1)
               for (i, c) in cells):
            out.append(tuple(tuple(grid[(i, c)] for c in range(length)) for i, length in enumerate(shape)))
    return out


def brute_skew_schur(lam, mu, r):
    """Coefficient dict of the skew Schur polynomial by checking every filling.

    Diagram coordinates: row ``a`` (part index), column ``b``; entries weakly
    increase along rows and strictly down columns.
    """
    cells = [(a, b) for a, p in enumerate(lam) for b in range(mu[a] if a < len(mu) else 0, p)]
    out = {}
    for values in product(range(1, r + 1), repeat=len(cells)):
        f = dict(zip(cells, values))
        ok = all(f[(a, b)] <= f.get((a, b + 1), r + 1) and f[(a, b)] < f.get((a + 1, b), r + 2)
                 for (a, b) in cells)
        if ok:
            exp = tuple(values.count(v) for v in range(1, r + 1))
            out[exp] = out.get(exp, 0) + 1
    return out


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        total += (-1) ** inversions * prod(m[i][perm[i]] for i in range(n))
    return total


def brute_parking_functions(n):
    """Sequences in 1..n whose sorted form b satisfies b_i <= i."""
    return sum(1 for seq in product(range(1, n + 1), repeat=n)
               if all(b <= i for i, b in enumerate(sorted(seq), 1)))
