"""Basis matrices, bounded plane partitions and the bijection between them.

A basis matrix for ``(eta, k)`` is a k x n array of positive integers with
strictly increasing rows, weakly increasing columns and ``a[k][j] <= eta[j]``.
Plane partitions follow the weakly *increasing* convention: entries grow
weakly along rows and down columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator, Sequence

from .partitions import ExtremalIndex, Partition, PartitionChain, chain_lower_bounds, contains, eta_of_xi, lambda_of_eta

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class BasisMatrix:
    rows: Rows
    eta: ExtremalIndex

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(a) for a in row) for row in self.rows))
        if not isinstance(self.eta, ExtremalIndex):
            object.__setattr__(self, "eta", ExtremalIndex(tuple(self.eta)))
        problem = matrix_violation(self.rows, self.eta)
        if problem:
            raise ValueError(problem)

    @property
    def level(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return len(self.eta)

    def columns(self) -> list[tuple[int, ...]]:
        return list(zip(*self.rows)) if self.rows else [() for _ in self.eta]

    def flat(self) -> tuple[int, ...]:
        return tuple(a for row in self.rows for a in row)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


@dataclass(frozen=True)
class PlanePartition:
    shape: Partition
    rows: Rows

    def __post_init__(self):
        object.__setattr__(self, "shape", Partition(self.shape))
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if tuple(len(r) for r in rows) != tuple(self.shape):
            raise ValueError(f"row lengths {[len(r) for r in rows]} do not match shape {tuple(self.shape)}")
        for i, row in enumerate(rows):
            if any(v < 0 for v in row):
                raise ValueError("plane partition entries must be nonnegative")
            if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
                raise ValueError(f"row {i + 1} is not weakly increasing")
            if i and any(rows[i - 1][c] > row[c] for c in range(len(row))):
                raise ValueError(f"column order fails between rows {i} and {i + 1}")

    @property
    def max_entry(self) -> int:
        return max((v for row in self.rows for v in row), default=0)

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def matrix_violation(rows: Sequence[Sequence[int]], eta: Sequence[int]) -> str | None:
    """Describe why ``rows`` is not a basis matrix for ``eta``, or None."""
    n = len(eta)
    for i, row in enumerate(rows, 1):
        if len(row) != n:
            return f"row {i} has {len(row)} entries, expected {n}"
        if row and row[0] < 1:
            return f"row {i} has a nonpositive entry"
        if any(row[j] >= row[j + 1] for j in range(n - 1)):
            return f"row {i} is not strictly increasing"
    for i in range(1, len(rows)):
        if any(rows[i - 1][j] > rows[i][j] for j in range(n)):
            return f"columns decrease between rows {i} and {i + 1}"
    if rows and any(a > e for a, e in zip(rows[-1], eta)):
        return "last row exceeds the bound eta"
    return None


def _rows_between(lower: Sequence[int], upper: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Strictly increasing rows with ``lower[j] <= a_j <= upper[j]``, lex order."""
    n = len(upper)
    row = [0] * n

    def rec(j: int, floor: int):
        if j == n:
            yield tuple(row)
            return
        for v in range(max(floor, lower[j]), upper[j] + 1):
            row[j] = v
            yield from rec(j + 1, v + 1)

    yield from rec(0, 1)


def iter_basis_rows(eta: Sequence[int], k: int) -> Iterator[Rows]:
    """Yield the rows of every basis matrix, lexicographic on the row-major flattening."""
    eta = tuple(eta)
    if k < 1:
        raise ValueError("level k must be >= 1")

    def rec(prefix: list[tuple[int, ...]], lower: Sequence[int]):
        if len(prefix) == k:
            yield tuple(prefix)
            return
        for row in _rows_between(lower, eta):
            prefix.append(row)
            yield from rec(prefix, row)
            prefix.pop()

    yield from rec([], [1] * len(eta))


def enumerate_basis_matrices(eta: ExtremalIndex | Sequence[int], k: int) -> list[BasisMatrix]:
    eta = eta if isinstance(eta, ExtremalIndex) else ExtremalIndex(tuple(eta))
    return [BasisMatrix(rows, eta) for rows in iter_basis_rows(eta.entries, k)]


def count_basis_matrices(eta: ExtremalIndex | Sequence[int], k: int) -> int:
    """Count basis matrices by a column-to-column transfer over weak k-tuples."""
    if k < 1:
        raise ValueError("level k must be >= 1")
    eta = tuple(eta)
    if not eta:
        return 1
    counts = {col: 1 for col in combinations_with_replacement(range(1, eta[0] + 1), k)}
    for bound in eta[1:]:
        nxt = {}
        for col in combinations_with_replacement(range(1, bound + 1), k):
            total = sum(c for prev, c in counts.items()
                        if all(p < q for p, q in zip(prev, col)))
            if total:
                nxt[col] = total
        counts = nxt
    return sum(counts.values())


def iter_plane_partitions(shape: Sequence[int], k: int) -> Iterator[Rows]:
    """Yield fillings of ``shape`` by ``0..k``, weakly increasing along rows and
    columns, in lexicographic order of the row-major flattening."""
    shape = tuple(Partition(shape))
    if k < 0:
        raise ValueError("bound k must be >= 0")
    cells = [(i, c) for i, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]

    def rec(t: int):
        if t == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        i, c = cells[t]
        lo = max(grid[i][c - 1] if c else 0, grid[i - 1][c] if i else 0)
        for v in range(lo, k + 1):
            grid[i][c] = v
            yield from rec(t + 1)

    yield from rec(0)


def enumerate_plane_partitions(shape: Sequence[int], k: int) -> list[PlanePartition]:
    shape = Partition(shape)
    return [PlanePartition(shape, rows) for rows in iter_plane_partitions(shape, k)]


def count_plane_partitions(shape: Sequence[int], k: int) -> int:
    """Row-by-row transfer count of ``PP^shape(k)``.

    Each row is a weakly increasing word over ``0..k``; a row may sit below
    another when it dominates it entrywise on their common columns.
    """
    shape = tuple(Partition(shape))
    if k < 0:
        raise ValueError("bound k must be >= 0")
    if not shape:
        return 1
    counts = {row: 1 for row in combinations_with_replacement(range(k + 1), shape[0])}
    for length in shape[1:]:
        nxt = {}
        for row in combinations_with_replacement(range(k + 1), length):
            total = sum(c for above, c in counts.items()
                        if all(a <= b for a, b in zip(above, row)))
            if total:
                nxt[row] = total
        counts = nxt
    return sum(counts.values())


def _as_eta(eta) -> ExtremalIndex:
    return eta if isinstance(eta, ExtremalIndex) else ExtremalIndex(tuple(eta))


def pp_rows_to_matrix_rows(rows: Rows, n: int, k: int) -> Rows:
    """Raw form of :func:`pp_to_matrix` (no validation)."""
    rows = tuple(rows) + ((),) * (n - len(rows))
    return tuple(
        tuple(j + sum(1 for v in rows[n - j] if v < i) for j in range(1, n + 1))
        for i in range(1, k + 1)
    )


def matrix_rows_to_pp_rows(matrix: Rows, shape: Sequence[int]) -> Rows:
    """Raw form of :func:`matrix_to_pp` (no validation)."""
    n = len(matrix[0]) if matrix else 0
    out = []
    for row_index, length in enumerate(shape, 1):
        j = n - row_index + 1
        below = [row[j - 1] - j for row in matrix]
        out.append(tuple(sum(1 for c in below if c <= pos) for pos in range(length)))
    return tuple(out)


def pp_to_matrix(pp: PlanePartition, eta: ExtremalIndex | Sequence[int], k: int) -> BasisMatrix:
    """``a[i][j] - j`` = number of entries below ``i`` in row ``n - j + 1`` of ``pp``."""
    eta = _as_eta(eta)
    if pp.shape != lambda_of_eta(eta):
        raise ValueError(f"shape {tuple(pp.shape)} does not match eta {eta.entries}")
    if pp.max_entry > k:
        raise ValueError(f"plane partition has an entry above the bound {k}")
    return BasisMatrix(pp_rows_to_matrix_rows(pp.rows, len(eta), k), eta)


def matrix_to_pp(matrix: BasisMatrix, k: int | None = None) -> PlanePartition:
    """Inverse of :func:`pp_to_matrix`."""
    if k is not None and k != matrix.level:
        raise ValueError(f"matrix has {matrix.level} rows, expected level {k}")
    shape = lambda_of_eta(matrix.eta)
    if not matrix.rows:
        return PlanePartition(shape, tuple((0,) * length for length in shape))
    return PlanePartition(shape, matrix_rows_to_pp_rows(matrix.rows, shape))


def column_steps(rows: Rows, r: int) -> Rows:
    """``ceil(a / r)`` entrywise: the block of each entry."""
    return tuple(tuple(-(-a // r) for a in row) for row in rows)


def chain_parts(rows: Rows, r: int, n: int) -> list[tuple[int, ...]]:
    """Column counts of ``lam^s`` for ``s = 0..n`` (fast path, no validation)."""
    k = len(rows)
    steps = column_steps(rows, r)
    return [tuple(sum(1 for i in range(k) if steps[i][j] <= s) for j in range(n))
            for s in range(n + 1)]


def chain_of_matrix(matrix: BasisMatrix, r: int, xi: Sequence[int]) -> PartitionChain:
    """Chain with ``(i, j)`` in ``lam^s \\ lam^{s-1}`` iff ``r(s-1) < a_ij <= rs``."""
    if r < 1:
        raise ValueError("rank r must be >= 1")
    xi = Partition(xi)
    if matrix.eta != eta_of_xi(xi, r):
        raise ValueError(f"matrix bound {matrix.eta.entries} is not eta({tuple(xi)}, {r})")
    n, k = xi.size, matrix.level
    steps = []
    for parts in chain_parts(matrix.rows, r, n):
        if any(parts[j] < parts[j + 1] for j in range(n - 1)):
            raise AssertionError(f"cells of step do not form a Young diagram: {parts}")
        steps.append(Partition(parts))
    chain = PartitionChain(tuple(steps), k, n)
    for lam, low in zip(chain.steps, chain_lower_bounds(xi, k)):
        if not contains(lam, low):
            raise AssertionError(f"{tuple(lam)} does not contain {tuple(low)}")
    return chain
