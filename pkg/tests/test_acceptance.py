"""Exit criteria, one test per criterion, at the stated ranges and time limits.

Each test runs the matching cross-check from ``higherweyl.verify`` (which
compares independent routes) and adds literal spot values on top.
"""

import time

from higherweyl import verify
from higherweyl.characters import cpf_dim
from higherweyl.enumeration import count_plane_partitions, iter_basis_rows
from higherweyl.partitions import Partition
from higherweyl.weyl_dims import higher_catalan, product_dim_rect

CFG = verify.VerifyConfig()
REPORT: list[str] = []


def run_check(check, limit=None):
    result = check(CFG)
    line = result.line()
    if limit is not None:
        line += f" (limit {limit}s)"
    ok = result.passed and (limit is None or result.seconds < limit)
    REPORT.append(line if ok else line.replace("[PASS]", "[FAIL]", 1))
    assert result.passed, result.failures
    assert result.cases > 0
    if limit is not None:
        assert result.seconds < limit, f"{result.name} took {result.seconds:.1f}s"
    return result


def test_criterion_01_triple_dimension():
    run_check(verify.check_triple_dimension, limit=30)


def test_criterion_02_product_formula():
    run_check(verify.check_rectangle_product, limit=10)
    assert [product_dim_rect(2, 2, 1), product_dim_rect(2, 2, 2), product_dim_rect(3, 2, 1)] == [5, 14, 14]
    assert sum(1 for _ in iter_basis_rows((2, 4), 2)) == 14


def test_criterion_03_higher_catalan():
    run_check(verify.check_higher_catalan)
    assert [product_dim_rect(n, 2, 1) for n in range(6)] == [1, 2, 5, 14, 42, 132]
    assert [higher_catalan(n, 2) for n in range(6)] == [1, 2, 5, 14, 42, 132]
    assert [count_plane_partitions(Partition(range(n, 0, -1)), 1) for n in range(6)] == [1, 2, 5, 14, 42, 132]


def test_criterion_04_trapezoid():
    run_check(verify.check_trapezoid, limit=30)


def test_criterion_05_bijection():
    run_check(verify.check_bijection)


def test_criterion_06_character_identity():
    run_check(verify.check_character_identity)


def test_criterion_07_schur_machinery():
    run_check(verify.check_schur_machinery)


def test_criterion_08_parking_functions():
    run_check(verify.check_parking)
    assert [cpf_dim((n,), 1) for n in range(1, 6)] == [1, 3, 16, 125, 1296]


def test_criterion_09_demazure():
    run_check(verify.check_demazure)


def test_criterion_10_grading():
    run_check(verify.check_grading)


def test_full_verify_under_two_minutes():
    start = time.perf_counter()
    results = verify.run_all(CFG)
    elapsed = time.perf_counter() - start
    ok = elapsed < 120 and all(r.passed for r in results)
    REPORT.append(f"[{'PASS' if ok else 'FAIL'}] full verify run: {elapsed:.1f}s (limit 120s)")
    assert all(r.passed for r in results)
    assert elapsed < 120
