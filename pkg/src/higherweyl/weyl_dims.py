"""Closed dimension formulas over exact integers.

Factorial ratios are accumulated as :class:`fractions.Fraction` and checked
for integrality at the end; a non-integral value raises
:class:`NonIntegralError`, which always means a bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from ._linalg import bareiss_det
from .partitions import ExtremalIndex, Partition, rectangle
from .symfunc import weyl_dim_gl


class NonIntegralError(ArithmeticError):
    pass


class FormulaMismatch(AssertionError):
    """Two routes for the same quantity disagree."""


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise NonIntegralError(f"{what} evaluated to the non-integer {x}")
    return x.numerator


def binom(m: int, l: int) -> int:
    """Binomial coefficient, zero outside ``0 <= l <= m``."""
    return comb(m, l) if 0 <= l <= m else 0


def det_exact(matrix: Sequence[Sequence[int]]) -> int:
    return bareiss_det(matrix)


def hodge_matrix(eta: Sequence[int], k: int) -> list[list[int]]:
    n = len(eta)
    return [[binom(eta[j - 1] + k - j, i + k - j) for j in range(1, n + 1)] for i in range(1, n + 1)]


def hodge_det_dim(eta: ExtremalIndex | Sequence[int], k: int) -> int:
    """``det(binom(eta_j + k - j, i + k - j))``: sections of O(k) on the Schubert variety."""
    if k < 1:
        raise ValueError("level k must be >= 1")
    return det_exact(hodge_matrix(tuple(eta), k))


def _trapezoid_product(n: int, p: int, r: int, k: int) -> Fraction:
    value = Fraction(1)
    for j in range(1, n + 1):
        value *= Fraction(factorial(j * r + p + k - j), factorial(j * r + p - 1))
        value *= Fraction(factorial(k * r + j * r + p - 1), factorial(k * r + j * r + p - j))
        value *= Fraction(factorial(j - 1), factorial(k + j - 1))
    return value


def product_dim_rect(n: int, r: int, k: int) -> int:
    """Product formula for the level-k dimension in the one-row case ``xi = (n)``."""
    if n < 0 or r < 1 or k < 1:
        raise ValueError("need n >= 0, r >= 1, k >= 1")
    return _integral(_trapezoid_product(n, 0, r, k), f"product formula at n={n}, r={r}, k={k}")


def trapezoid_eta(n: int, p: int, r: int) -> ExtremalIndex:
    """Index set whose shape is ``(n(r-1)+p, ..., (r-1)+p)``."""
    return ExtremalIndex(tuple(r * j + p for j in range(1, n + 1)))


def trapezoid_det(n: int, p: int, r: int, k: int) -> int:
    return hodge_det_dim(trapezoid_eta(n, p, r), k)


def product_dim_trapezoid(n: int, p: int, r: int, k: int) -> int:
    """``pp^lam(k)`` for ``lam = (n(r-1)+p, ..., r-1+p)``; determinant and product must agree."""
    if n < 0 or p < 0 or r < 1 or k < 1:
        raise ValueError("need n >= 0, p >= 0, r >= 1, k >= 1")
    det = trapezoid_det(n, p, r, k)
    prod_value = _integral(_trapezoid_product(n, p, r, k), f"trapezoid product at n={n}, p={p}, r={r}, k={k}")
    if det != prod_value:
        raise FormulaMismatch(f"determinant {det} != product {prod_value} at n={n}, p={p}, r={r}, k={k}")
    return det


def higher_catalan(n: int, r: int) -> int:
    """``binom(r(n+1), n) / (n+1)``."""
    if n < 0 or r < 1:
        raise ValueError("need n >= 0, r >= 1")
    return _integral(Fraction(comb(r * (n + 1), n), n + 1), f"higher Catalan at n={n}, r={r}")


@dataclass(frozen=True)
class FundamentalWeightVector:
    """Multiplicities ``(lam_1, ..., lam_{r-1})`` of the fundamental weights of gl_r."""

    multiplicities: tuple[int, ...]
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "multiplicities", tuple(int(m) for m in self.multiplicities))
        if self.rank < 2:
            raise ValueError("rank must be >= 2")
        if len(self.multiplicities) != self.rank - 1:
            raise ValueError(f"expected {self.rank - 1} multiplicities, got {len(self.multiplicities)}")
        if any(m < 0 for m in self.multiplicities):
            raise ValueError("multiplicities must be nonnegative")

    @property
    def size(self) -> int:
        return sum(self.multiplicities)

    def to_partition(self) -> Partition:
        """The highest weight ``sum lam_i omega_i`` as a partition."""
        return Partition(sum(self.multiplicities[i:]) for i in range(self.rank - 1))


def demazure_dim_gl(weights: FundamentalWeightVector, k: int) -> int:
    """Level-k Demazure dimension as a product of ``dim V(k omega_i)`` factors."""
    if k < 1:
        raise ValueError("level k must be >= 1")
    r = weights.rank
    value = 1
    for i, m in enumerate(weights.multiplicities, 1):
        value *= weyl_dim_gl(rectangle(i, k), r) ** m
    return value
