"""Skew Schur polynomials in finitely many variables and related counts.

Fillings follow the cell convention of :mod:`higherweyl.partitions`: a cell
``(i, j)`` lies in ``lam`` iff ``lam[j-1] >= i``.  Entries ``k_ij`` satisfy
``k_ij <= k_{i+1,j}`` (weak along a part) and ``k_ij < k_{i,j+1}`` (strict
across parts), which is ordinary semistandardness for the Young diagram.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from typing import Iterable, Mapping, Sequence

from ._linalg import bareiss_det
from .partitions import Partition, contains

Exponent = tuple[int, ...]


class SymPolynomial:
    """Polynomial in ``x_1..x_r`` with integer coefficients.

    Immutable: arithmetic returns new instances.  Zero coefficients are never
    stored and :meth:`terms` lists keys in descending lexicographic order.
    """

    __slots__ = ("rank", "_coeffs")

    def __init__(self, rank: int, coeffs: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[Exponent, int] = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != rank or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for rank {rank}")
            clean[exp] = clean.get(exp, 0) + int(c)
        self.rank = rank
        self._coeffs = {e: c for e, c in clean.items() if c}

    @classmethod
    def one(cls, rank: int) -> "SymPolynomial":
        return cls(rank, {(0,) * rank: 1})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff: int = 1) -> "SymPolynomial":
        return cls(len(exponent), {tuple(exponent): coeff})

    def __getitem__(self, exp: Sequence[int]) -> int:
        return self._coeffs.get(tuple(exp), 0)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, SymPolynomial):
            return self.rank == other.rank and self._coeffs == other._coeffs
        if isinstance(other, int):
            return self == SymPolynomial(self.rank, {(0,) * self.rank: other})
        return NotImplemented

    def __hash__(self):
        return hash((self.rank, frozenset(self._coeffs.items())))

    def _check(self, other: "SymPolynomial"):
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "SymPolynomial") -> "SymPolynomial":
        self._check(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return SymPolynomial(self.rank, out)

    def __neg__(self) -> "SymPolynomial":
        return SymPolynomial(self.rank, {e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "SymPolynomial") -> "SymPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "SymPolynomial":
        if isinstance(other, int):
            return SymPolynomial(self.rank, {e: c * other for e, c in self._coeffs.items()})
        self._check(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SymPolynomial(self.rank, out)

    __rmul__ = __mul__

    def terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self._coeffs.items(), reverse=True)

    def evaluate(self, point: Sequence[int | Fraction]) -> int | Fraction:
        if len(point) != self.rank:
            raise ValueError("point has the wrong number of coordinates")
        return sum(c * prod(x ** e for x, e in zip(point, exp)) for exp, c in self._coeffs.items())

    def at_ones(self) -> int:
        return sum(self._coeffs.values())

    def permute(self, perm: Sequence[int]) -> "SymPolynomial":
        """Move exponent slot ``perm[s]`` to slot ``s``."""
        return SymPolynomial(self.rank, {tuple(e[p] for p in perm): c for e, c in self._coeffs.items()})

    def is_symmetric(self) -> bool:
        if self.rank < 2:
            return True
        cycle = tuple(range(1, self.rank)) + (0,)
        swap = (1, 0) + tuple(range(2, self.rank))
        return self.permute(cycle) == self and self.permute(swap) == self

    def degree(self) -> int:
        return max((sum(e) for e in self._coeffs), default=0)

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coefficient": str(c)} for e, c in self.terms()]

    @classmethod
    def from_json(cls, data: list[dict], rank: int | None = None) -> "SymPolynomial":
        if rank is None:
            rank = len(data[0]["exponents"]) if data else 0
        return cls(rank, [(tuple(d["exponents"]), int(d["coefficient"])) for d in data])

    def __repr__(self) -> str:
        return f"SymPolynomial({self.rank}, {dict(self.terms())!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for exp, c in self.terms():
            mono = "*".join(f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exp, 1) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


SchurExpansion = dict  # Partition -> int


def _skew_cells(lam: Partition, mu: Partition) -> list[tuple[int, int]]:
    """Cells of ``lam \\ mu`` as (i, j), ordered part by part then along the part."""
    return [(i, j) for j, p in enumerate(lam, 1) for i in range(mu.part(j - 1) + 1, p + 1)]


def iter_skew_fillings(lam: Sequence[int], mu: Sequence[int], r: int):
    """Yield dicts ``{(i, j): entry}`` of admissible fillings with entries in ``1..r``."""
    lam, mu = Partition(lam), Partition(mu)
    cells = _skew_cells(lam, mu)
    filling: dict[tuple[int, int], int] = {}

    def rec(t: int):
        if t == len(cells):
            yield dict(filling)
            return
        i, j = cells[t]
        lo = 1
        if (i - 1, j) in filling:
            lo = filling[(i - 1, j)]
        if (i, j - 1) in filling:
            lo = max(lo, filling[(i, j - 1)] + 1)
        for v in range(lo, r + 1):
            filling[(i, j)] = v
            yield from rec(t + 1)
        filling.pop((i, j), None)

    yield from rec(0)


@lru_cache(maxsize=4096)
def _skew_schur_cached(lam: Partition, mu: Partition, r: int) -> SymPolynomial:
    coeffs: dict[Exponent, int] = {}
    for filling in iter_skew_fillings(lam, mu, r):
        exp = [0] * r
        for v in filling.values():
            exp[v - 1] += 1
        exp = tuple(exp)
        coeffs[exp] = coeffs.get(exp, 0) + 1
    return SymPolynomial(r, coeffs)


def skew_schur(lam: Sequence[int], mu: Sequence[int], r: int) -> SymPolynomial:
    lam, mu = Partition(lam), Partition(mu)
    if not contains(lam, mu):
        raise ValueError(f"{tuple(mu)} is not contained in {tuple(lam)}")
    return _skew_schur_cached(lam, mu, r)


def schur(lam: Sequence[int], r: int) -> SymPolynomial:
    return skew_schur(lam, (), r)


def expand_in_schur(p: SymPolynomial) -> SchurExpansion:
    """Schur coefficients of a symmetric polynomial by leading-term elimination."""
    if not p.is_symmetric():
        raise ValueError("polynomial is not symmetric")
    out: SchurExpansion = {}
    rest = p
    while rest:
        lead, c = rest.terms()[0]
        if any(lead[i] < lead[i + 1] for i in range(len(lead) - 1)):
            raise ValueError(f"leading exponent {lead} is not a partition")
        nu = Partition(lead)
        out[nu] = c
        rest = rest - schur(nu, p.rank) * c
    return dict(sorted(out.items(), reverse=True))


def expansion_to_json(expansion: SchurExpansion) -> list[dict]:
    return [{"partition": list(nu), "multiplicity": str(c)} for nu, c in expansion.items()]


def lr_coefficients(lam: Sequence[int], mu: Sequence[int], r: int | None = None) -> SchurExpansion:
    """``C^nu_{lam, mu}`` for all ``nu``, read off from ``s_{lam/mu}``."""
    lam, mu = Partition(lam), Partition(mu)
    m = lam.size - mu.size
    if r is None:
        r = max(m, 1)
    if r < m:
        raise ValueError(f"rank {r} is below the skew size {m}; coefficients would be truncated")
    return expand_in_schur(skew_schur(lam, mu, r))


def weyl_dim_gl(lam: Sequence[int], r: int) -> int:
    """Dimension of the irreducible gl_r module with highest weight ``lam``."""
    lam = Partition(lam)
    if len(lam) > r:
        raise ValueError(f"{tuple(lam)} has more than r={r} parts")
    num = den = 1
    for i in range(r):
        for j in range(i + 1, r):
            num *= lam.part(i) - lam.part(j) + j - i
            den *= j - i
    q, rem = divmod(num, den)
    assert rem == 0
    return q


def skew_syt_count(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Standard fillings of ``lam \\ mu`` via ``m! det(1/(lam_i - mu_j - i + j)!)``."""
    lam, mu = Partition(lam), Partition(mu)
    if not contains(lam, mu):
        raise ValueError(f"{tuple(mu)} is not contained in {tuple(lam)}")
    m = lam.size - mu.size
    n = len(lam)

    def entry(i: int, j: int) -> Fraction:
        d = lam.part(i) - mu.part(j) - i + j
        return Fraction(1, factorial(d)) if d >= 0 else Fraction(0)

    det = bareiss_det([[entry(i, j) for j in range(n)] for i in range(n)])
    value = Fraction(factorial(m)) * det
    assert value.denominator == 1, "non-integral tableau count"
    return value.numerator


def skew_syt_brute(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Count standard fillings by checking every permutation of ``1..m``."""
    lam, mu = Partition(lam), Partition(mu)
    cells = _skew_cells(lam, mu)
    index = {c: t for t, c in enumerate(cells)}
    pairs = [(index[(i, j)], index[nb]) for (i, j) in cells
             for nb in ((i + 1, j), (i, j + 1)) if nb in index]
    return sum(1 for perm in permutations(range(len(cells)))
               if all(perm[a] < perm[b] for a, b in pairs))


def outer_dim(shapes: Sequence[tuple[Sequence[int], Sequence[int]]]) -> int:
    """Dimension of the induced outer product of skew Specht modules."""
    sizes, total = [], 1
    for lam, mu in shapes:
        lam, mu = Partition(lam), Partition(mu)
        sizes.append(lam.size - mu.size)
        total *= skew_syt_count(lam, mu)
    multinomial = factorial(sum(sizes))
    for s in sizes:
        multinomial //= factorial(s)
    return multinomial * total
