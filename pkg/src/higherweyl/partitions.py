"""Partitions, extremal index sets and constrained partition chains.

Cell convention used throughout the package: a cell ``(i, j)`` with
``i`` in ``1..k`` (matrix row) and ``j`` in ``1..n`` (matrix column) lies in
a partition ``lam`` iff ``lam[j-1] >= i``.  Parts are therefore indexed by
matrix columns, and the rectangle ``k^n`` (n parts equal to k) is the
shape of a k x n matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros trimmed)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "0"

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (0-based), zero past the end."""
        return self[i] if i < len(self) else 0

    def transpose(self) -> "Partition":
        return transpose(self)

    def cells(self) -> list[tuple[int, int]]:
        """Cells ``(i, j)`` (1-based, ``i`` along the part) in part-major order."""
        return [(i, j) for j, p in enumerate(self, 1) for i in range(1, p + 1)]


def rectangle(n: int, k: int) -> Partition:
    """The shape ``k^n``: n parts, each equal to k."""
    return Partition([k] * n if k else [])


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1"``; ``""`` and ``"0"`` give the empty partition."""
    text = text.strip()
    if text in ("", "0"):
        return Partition()
    try:
        parts = [int(t) for t in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {text!r}")
    return Partition(parts)


def transpose(lam: Sequence[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= l) for l in range(1, lam[0] + 1))


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff the diagram of ``mu`` sits inside the diagram of ``lam``."""
    if len(mu) > len(lam) and any(mu[len(lam):]):
        return False
    return all(m <= l for m, l in zip(mu, lam))


@dataclass(frozen=True)
class ExtremalIndex:
    """Strictly increasing positive integers ``eta_1 < ... < eta_n``."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        for j, e in enumerate(entries, 1):
            if e < j:
                raise ValueError(f"entry {e} at position {j} is below its index")
            if j > 1 and entries[j - 2] >= e:
                raise ValueError(f"entries not strictly increasing: {entries}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))


def parse_eta(text: str) -> ExtremalIndex:
    text = text.strip()
    if not text:
        return ExtremalIndex(())
    try:
        return ExtremalIndex(tuple(int(t) for t in text.split(",")))
    except ValueError as exc:
        raise ValueError(f"malformed index set {text!r}: {exc}") from None


def eta_of_xi(xi: Sequence[int], r: int) -> ExtremalIndex:
    """Sorted set ``{l*r - s : l >= 1, 0 <= s < xi^t_l}`` of size ``|xi|``."""
    xi = Partition(xi)
    if len(xi) > r:
        raise ValueError(f"partition {tuple(xi)} has more than r={r} parts")
    xt = transpose(xi)
    return ExtremalIndex(tuple(sorted(l * r - s for l, c in enumerate(xt, 1) for s in range(c))))


def lambda_of_eta(eta: ExtremalIndex | Sequence[int]) -> Partition:
    """The shape ``(eta_n - n, ..., eta_1 - 1)`` indexing plane partitions."""
    entries = tuple(eta)
    return Partition(e - j for j, e in reversed(list(enumerate(entries, 1))))


@dataclass(frozen=True)
class PartitionChain:
    """``0 = lam^0 <= lam^1 <= ... <= lam^n = k^n``."""

    steps: tuple[Partition, ...]
    level: int
    size: int

    def __post_init__(self):
        steps = self.steps
        if not steps or steps[0]:
            raise ValueError("chain must start at the empty partition")
        if len(steps) != self.size + 1:
            raise ValueError(f"expected {self.size + 1} steps, got {len(steps)}")
        if steps[-1] != rectangle(self.size, self.level):
            raise ValueError(f"chain must end at {self.level}^{self.size}")
        for a, b in zip(steps, steps[1:]):
            if not contains(b, a):
                raise ValueError(f"{tuple(a)} not contained in {tuple(b)}")

    def skew_shapes(self) -> list[tuple[Partition, Partition]]:
        return list(zip(self.steps[1:], self.steps[:-1]))

    def sizes(self) -> list[int]:
        return [lam.size for lam in self.steps]

    def flat(self) -> tuple[int, ...]:
        """Flattened integer sequence used for canonical ordering."""
        n = self.size
        return tuple(lam.part(j) for lam in self.steps for j in range(n))

    def to_json(self) -> list[list[int]]:
        return [list(lam) for lam in self.steps]


def chain_lower_bounds(xi: Sequence[int], k: int) -> list[Partition]:
    """``k^{m_s}`` for ``s = 0..n`` with ``m_s = xi^t_1 + ... + xi^t_s``."""
    xi = Partition(xi)
    xt = transpose(xi)
    n = xi.size
    bounds, m = [Partition()], 0
    for s in range(1, n + 1):
        m += xt.part(s - 1)
        bounds.append(rectangle(m, k))
    return bounds


def _box_partitions(n: int, k: int, lower: Sequence[int]) -> list[tuple[int, ...]]:
    """Length-n weakly decreasing tuples with ``lower[j] <= p_j <= k``, lex order."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], cap: int):
        j = len(prefix)
        if j == n:
            out.append(tuple(prefix))
            return
        lo = lower[j] if j < len(lower) else 0
        for v in range(lo, cap + 1):
            prefix.append(v)
            rec(prefix, v)
            prefix.pop()

    rec([], k)
    return out


def enumerate_chains(xi: Sequence[int], k: int) -> list[PartitionChain]:
    """All weakly nested chains ending at ``k^n`` with ``lam^s >= k^{m_s}``.

    Output is sorted lexicographically on :meth:`PartitionChain.flat`.
    """
    if k < 1:
        raise ValueError("level k must be >= 1")
    xi = Partition(xi)
    n = xi.size
    if n < 1:
        raise ValueError("xi must be nonempty")
    bounds = chain_lower_bounds(xi, k)
    box = {s: _box_partitions(n, k, [bounds[s].part(j) for j in range(n)])
           for s in range(1, n)}
    result: list[PartitionChain] = []
    full = rectangle(n, k)

    def rec(steps: list[tuple[int, ...]]):
        s = len(steps)
        if s == n:
            result.append(PartitionChain(
                tuple(Partition(p) for p in steps) + (full,), k, n))
            return
        prev = steps[-1]
        for cand in box[s]:
            if all(c >= p for c, p in zip(cand, prev)):
                steps.append(cand)
                rec(steps)
                steps.pop()

    rec([(0,) * n])
    return result
