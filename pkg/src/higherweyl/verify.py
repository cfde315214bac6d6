"""Cross-checks between independent routes for every computed quantity.

Each ``check_*`` function returns a :class:`CheckResult`; ``run_all`` runs
them in order.  The default ranges are the acceptance ranges.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

from .characters import (
    char_chain_model,
    char_matrix_model,
    chain_degree,
    cpf_dim,
    graded_char,
    parking_function_count,
    t_degree,
)
from .enumeration import (
    count_plane_partitions,
    iter_basis_rows,
    iter_plane_partitions,
    matrix_rows_to_pp_rows,
    pp_rows_to_matrix_rows,
)
from .partitions import Partition, eta_of_xi, lambda_of_eta
from .symfunc import lr_coefficients, schur, skew_syt_brute, skew_syt_count, weyl_dim_gl
from .weyl_dims import (
    FundamentalWeightVector,
    _trapezoid_product,
    demazure_dim_gl,
    higher_catalan,
    hodge_det_dim,
    product_dim_rect,
    trapezoid_det,
    trapezoid_eta,
)


@dataclass
class VerifyConfig:
    max_size: int = 4
    max_rank: int = 3
    max_level: int = 3
    char_max_level: int = 2
    rect_max_n: int = 5
    rect_max_rank: int = 4
    rect_max_level: int = 4
    catalan_max_n: int = 6
    catalan_max_rank: int = 4
    trap_max_n: int = 4
    trap_max_p: int = 3
    trap_max_rank: int = 3
    trap_max_level: int = 3
    bij_max_len: int = 4
    bij_max_entry: int = 8
    bij_max_level: int = 3
    schur_max_size: int = 6
    schur_max_rank: int = 4
    lr_max_size: int = 5
    syt_max_size: int = 6
    parking_max_n: int = 5
    demazure_max_m: int = 4
    demazure_max_level: int = 3
    demazure_r3_max_size: int = 3


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int = 0
    seconds: float = 0.0
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.name}: {self.cases} cases, {self.seconds:.2f}s"
        if self.failures:
            text += f"; first failure: {self.failures[0]}"
        return text


class _Recorder:
    def __init__(self, name: str):
        self.result = CheckResult(name, True)
        self._start = time.perf_counter()

    def expect(self, ok: bool, message: Callable[[], str] | str):
        self.result.cases += 1
        if not ok:
            self.result.passed = False
            if len(self.result.failures) < 10:
                self.result.failures.append(message() if callable(message) else message)

    def done(self) -> CheckResult:
        self.result.seconds = time.perf_counter() - self._start
        return self.result


def partitions_of(n: int, max_parts: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""

    def rec(rest: int, cap: int, prefix: list[int]):
        if rest == 0:
            yield Partition(prefix)
            return
        if max_parts is not None and len(prefix) >= max_parts:
            return
        for part in range(min(rest, cap), 0, -1):
            yield from rec(rest - part, part, prefix + [part])

    yield from rec(n, n, [])


def subpartitions(lam: Partition) -> Iterator[Partition]:
    def rec(j: int, cap: int, prefix: list[int]):
        if j == len(lam):
            yield Partition(prefix)
            return
        for v in range(min(cap, lam[j]) + 1):
            yield from rec(j + 1, v, prefix + [v])

    yield from rec(0, lam[0] if lam else 0, [])


def xi_range(cfg: VerifyConfig, max_level: int) -> Iterator[tuple[Partition, int, int]]:
    for size in range(1, cfg.max_size + 1):
        for xi in partitions_of(size):
            for r in range(2, cfg.max_rank + 1):
                if len(xi) > r:
                    continue
                for k in range(1, max_level + 1):
                    yield xi, r, k


def check_triple_dimension(cfg: VerifyConfig) -> CheckResult:
    rec = _Recorder("1 triple dimension agreement (enumeration = Hodge determinant = plane partitions)")
    for xi, r, k in xi_range(cfg, cfg.max_level):
        eta = eta_of_xi(xi, r)
        enum = sum(1 for _ in iter_basis_rows(eta.entries, k))
        det = hodge_det_dim(eta, k)
        pp = count_plane_partitions(lambda_of_eta(eta), k)
        rec.expect(enum == det == pp, lambda: f"xi={tuple(xi)} r={r} k={k}: enum={enum} det={det} pp={pp}")
    return rec.done()


def check_rectangle_product(cfg: VerifyConfig) -> CheckResult:
    rec = _Recorder("2 product formula for xi=(n) equals the Hodge determinant")
    for n in range(cfg.rect_max_n + 1):
        for r in range(1, cfg.rect_max_rank + 1):
            for k in range(1, cfg.rect_max_level + 1):
                prod = product_dim_rect(n, r, k)
                det = hodge_det_dim([r * j for j in range(1, n + 1)], k)
                rec.expect(prod == det, lambda: f"n={n} r={r} k={k}: product={prod} det={det}")
    for (n, r, k), want in {(2, 2, 1): 5, (2, 2, 2): 14, (3, 2, 1): 14}.items():
        brute = sum(1 for _ in iter_basis_rows([r * j for j in range(1, n + 1)], k))
        got = product_dim_rect(n, r, k)
        rec.expect(got == brute == want, lambda: f"spot n={n} r={r} k={k}: {got}, brute {brute}, want {want}")
    return rec.done()


def check_higher_catalan(cfg: VerifyConfig) -> CheckResult:
    rec = _Recorder("3 higher Catalan = product formula at k=1 = staircase plane partitions")
    for n in range(cfg.catalan_max_n + 1):
        for r in range(1, cfg.catalan_max_rank + 1):
            cat = higher_catalan(n, r)
            prod = product_dim_rect(n, r, 1)
            stair = Partition((n - j) * (r - 1) for j in range(n))
            pp = count_plane_partitions(stair, 1)
            rec.expect(cat == prod == pp, lambda: f"n={n} r={r}: catalan={cat} product={prod} pp={pp}")
    seq = [count_plane_partitions(Partition(range(n, 0, -1)), 1) for n in range(min(6, cfg.catalan_max_n + 1))]
    rec.expect(seq == [1, 2, 5, 14, 42, 132][:len(seq)], lambda: f"r=2 sequence {seq}")
    return rec.done()


def check_trapezoid(cfg: VerifyConfig) -> CheckResult:
    rec = _Recorder("4 trapezoid: determinant = product = plane partition count")
    for n in range(cfg.trap_max_n + 1):
        for p in range(cfg.trap_max_p + 1):
            for r in range(1, cfg.trap_max_rank + 1):
                for k in range(1, cfg.trap_max_level + 1):
                    det = trapezoid_det(n, p, r, k)
                    prod = _trapezoid_product(n, p, r, k)
                    pp = count_plane_partitions(lambda_of_eta(trapezoid_eta(n, p, r)), k)
                    rec.expect(det == prod == pp, lambda: f"n={n} p={p} r={r} k={k}: det={det} product={prod} pp={pp}")
    return rec.done()


def check_bijection(cfg: VerifyConfig) -> CheckResult:
    rec = _Recorder("5 plane partition <-> basis matrix bijection")
    for length in range(cfg.bij_max_len + 1):
        for entries in combinations(range(1, cfg.bij_max_entry + 1), length):
            shape = lambda_of_eta(entries)
            for k in range(1, cfg.bij_max_level + 1):
                matrices = list(iter_basis_rows(entries, k))
                pps = list(iter_plane_partitions(shape, k))
                images = [pp_rows_to_matrix_rows(rows, length, k) for rows in pps]
                back = [matrix_rows_to_pp_rows(m, shape) for m in images]
                forth = [pp_rows_to_matrix_rows(matrix_rows_to_pp_rows(m, shape), length, k) for m in matrices]
                # every image is a basis matrix, the map is injective and onto,
                # and both composites are the identity
                rec.expect(set(images) == set(matrices) and len(images) == len(pps) == len(matrices)
                           and back == pps and forth == matrices,
                           lambda: f"eta={entries} k={k}: {len(set(images))} images vs {len(matrices)} matrices")
    return rec.done()


def check_character_identity(cfg: VerifyConfig) -> CheckResult:
    rec = _Recorder("6 matrix-model character = chain-model character; dimension = Hodge determinant")
    for xi, r, k in xi_range(cfg, cfg.char_max_level):
        a = char_matrix_model(xi, r, k)
        b = char_chain_model(xi, r, k)
        det = hodge_det_dim(eta_of_xi(xi, r), k)
        rec.expect(a == b and a.at_ones() == det,
                   lambda: f"xi={tuple(xi)} r={r} k={k}: {a} vs {b} (det {det})")
    return rec.done()


def check_schur_machinery(cfg: VerifyConfig) -> CheckResult:
    rec = _Recorder("7 Littlewood-Richardson, tableau counts and Weyl dimensions")
    for size in range(cfg.lr_max_size + 1):
        for lam in partitions_of(size):
            for mu in subpartitions(lam):
                m = lam.size - mu.size
                base = lr_coefficients(lam, mu, max(m, 1))
                bigger = lr_coefficients(lam, mu, max(m, 1) + 1)
                rec.expect(all(c >= 0 for c in base.values()) and base == bigger,
                           lambda: f"LR lam={tuple(lam)} mu={tuple(mu)}: {base} vs {bigger}")
    for size in range(cfg.syt_max_size + 1):
        for lam in partitions_of(size):
            for mu in subpartitions(lam):
                det, brute = skew_syt_count(lam, mu), skew_syt_brute(lam, mu)
                rec.expect(det == brute, lambda: f"SYT {tuple(lam)}/{tuple(mu)}: det={det} brute={brute}")
    for size in range(cfg.schur_max_size + 1):
        for r in range(1, cfg.schur_max_rank + 1):
            for lam in partitions_of(size, max_parts=r):
                s1, w = schur(lam, r).at_ones(), weyl_dim_gl(lam, r)
                rec.expect(s1 == w, lambda: f"Weyl {tuple(lam)} r={r}: schur(1)={s1} weyl={w}")
    return rec.done()


def check_parking(cfg: VerifyConfig) -> CheckResult:
    rec = _Recorder("8 higher parking functions at k=1: dim = (n+1)^(n-1)")
    for n in range(1, cfg.parking_max_n + 1):
        got, want = cpf_dim((n,), 1), parking_function_count(n)
        rec.expect(got == want, lambda: f"n={n}: {got} != {want}")
    return rec.done()


def check_demazure(cfg: VerifyConfig) -> CheckResult:
    rec = _Recorder("9 Demazure factorization over fundamental weights")
    for m in range(cfg.demazure_max_m + 1):
        for k in range(1, cfg.demazure_max_level + 1):
            got = demazure_dim_gl(FundamentalWeightVector((m,), 2), k)
            rec.expect(got == (k + 1) ** m, lambda: f"r=2 m={m} k={k}: {got}")
    for a in range(cfg.demazure_r3_max_size + 1):
        for b in range(cfg.demazure_r3_max_size + 1 - a):
            for k in range(1, cfg.demazure_max_level + 1):
                got = demazure_dim_gl(FundamentalWeightVector((a, b), 3), k)
                want = schur((k,), 3).at_ones() ** a * schur((k, k), 3).at_ones() ** b
                rec.expect(got == want, lambda: f"r=3 weights=({a},{b}) k={k}: {got} != {want}")
    return rec.done()


def check_grading(cfg: VerifyConfig) -> CheckResult:
    rec = _Recorder("10 graded pieces sum to the character; g(A) + sum|lam^s| = kn(n+1)")
    for xi, r, k in xi_range(cfg, cfg.max_level):
        n = xi.size
        target = k * n * (n + 1)
        bad = sum(1 for rows in iter_basis_rows(eta_of_xi(xi, r).entries, k)
                  if t_degree(rows, r) + chain_degree(rows, r, n) != target)
        rec.expect(bad == 0, lambda: f"xi={tuple(xi)} r={r} k={k}: {bad} matrices off")
        if k <= cfg.char_max_level:
            g = graded_char(xi, r, k)
            rec.expect(g.total() == char_matrix_model(xi, r, k),
                       lambda: f"xi={tuple(xi)} r={r} k={k}: graded pieces do not sum to the character")
            rec.expect(all(p.is_symmetric() for p in g.pieces.values()),
                       lambda: f"xi={tuple(xi)} r={r} k={k}: a graded piece is not symmetric")
    return rec.done()


CHECKS = [
    check_triple_dimension,
    check_rectangle_product,
    check_higher_catalan,
    check_trapezoid,
    check_bijection,
    check_character_identity,
    check_schur_machinery,
    check_parking,
    check_demazure,
    check_grading,
]


def run_all(cfg: VerifyConfig | None = None, report: Callable[[str], None] | None = None) -> list[CheckResult]:
    cfg = cfg or VerifyConfig()
    results = []
    for check in CHECKS:
        result = check(cfg)
        results.append(result)
        if report:
            report(result.line())
    return results
