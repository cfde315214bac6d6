import pytest
from hypothesis import given, strategies as st

from higherweyl.partitions import (
    ExtremalIndex,
    Partition,
    PartitionChain,
    chain_lower_bounds,
    contains,
    enumerate_chains,
    eta_of_xi,
    lambda_of_eta,
    parse_partition,
    rectangle,
    transpose,
)

partitions = st.lists(st.integers(0, 6), max_size=6).map(lambda xs: Partition(sorted(xs, reverse=True)))


def test_trailing_zeros_trimmed():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    assert tuple(Partition((0,))) == ()


def test_rejects_increasing_parts():
    with pytest.raises(ValueError):
        Partition((1, 2))


@pytest.mark.parametrize("text, parts", [("3,1", (3, 1)), ("0", ()), ("", ()), ("2", (2,))])
def test_parse(text, parts):
    assert parse_partition(text) == Partition(parts)


@pytest.mark.parametrize("text", ["1,2", "a", "2,,1", "2,0"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_partition(text)


@pytest.mark.parametrize("lam, expected", [((), ()), ((2, 1), (2, 1)), ((3, 1), (2, 1, 1)), ((4, 2, 2), (3, 3, 1, 1))])
def test_transpose(lam, expected):
    assert transpose(lam) == Partition(expected)


@given(partitions)
def test_transpose_involution(lam):
    assert transpose(transpose(lam)) == lam
    assert transpose(lam).size == lam.size
    for l in range(1, 8):
        assert transpose(lam).part(l - 1) == sum(1 for p in lam if p >= l)


def test_contains():
    assert contains((2, 1), (1,))
    assert not contains((2, 1), (2, 2))
    for k in range(4):
        assert contains((k, k), ())
    assert not contains((1,), (1, 1))


@given(partitions, partitions)
def test_contains_matches_cell_sets(lam, mu):
    cells = lambda p: {(i, j) for j, part in enumerate(p) for i in range(part)}
    assert contains(lam, mu) == (cells(mu) <= cells(lam))


@pytest.mark.parametrize("xi, r, eta", [
    ((2,), 2, (2, 4)),
    ((2, 1), 2, (1, 2, 4)),
    ((1,), 3, (3,)),
    ((1, 1), 2, (1, 2)),
    ((2, 2, 1), 3, (1, 2, 3, 5, 6)),
])
def test_eta_of_xi(xi, r, eta):
    assert eta_of_xi(xi, r).entries == eta


@pytest.mark.parametrize("n, r", [(1, 1), (3, 2), (4, 3), (5, 4)])
def test_eta_of_one_row(n, r):
    eta = eta_of_xi((n,), r)
    assert eta.entries == tuple(r * j for j in range(1, n + 1))
    assert lambda_of_eta(eta) == Partition((n - j) * (r - 1) for j in range(n))


def test_eta_rejects_too_many_parts():
    with pytest.raises(ValueError):
        eta_of_xi((1, 1, 1), 2)


@given(partitions, st.integers(1, 6))
def test_eta_properties(xi, r):
    if len(xi) > r:
        return
    eta = eta_of_xi(xi, r).entries
    assert len(eta) == xi.size
    assert all(a < b for a, b in zip(eta, eta[1:]))
    assert all(j <= e <= r * max(xi.size, 1) for j, e in enumerate(eta, 1))


@pytest.mark.parametrize("eta, lam", [((2, 4), (2, 1)), ((1, 2), ()), ((3, 6, 9), (6, 4, 2))])
def test_lambda_of_eta(eta, lam):
    assert lambda_of_eta(eta) == Partition(lam)


def test_extremal_index_validation():
    with pytest.raises(ValueError):
        ExtremalIndex((2, 2))
    with pytest.raises(ValueError):
        ExtremalIndex((1, 1))
    with pytest.raises(ValueError):
        ExtremalIndex((2, 2, 3))
    assert len(ExtremalIndex(())) == 0


def _steps(chain):
    return [tuple(lam) for lam in chain.steps]


def test_chains_single_cell():
    assert [_steps(c) for c in enumerate_chains((1,), 1)] == [[(), (1,)]]


def test_chains_one_row_two():
    assert [_steps(c) for c in enumerate_chains((2,), 1)] == [[(), (1,), (1, 1)], [(), (1, 1), (1, 1)]]


def test_chains_column_two():
    assert [_steps(c) for c in enumerate_chains((1, 1), 1)] == [[(), (1, 1), (1, 1)]]


def _brute_chains(xi, k):
    """Every sequence of box partitions, filtered by the chain conditions."""
    from itertools import product

    n = Partition(xi).size
    box = [Partition(p) for p in product(range(k + 1), repeat=n) if list(p) == sorted(p, reverse=True)]
    bounds = chain_lower_bounds(xi, k)
    out = []
    for middle in product(box, repeat=n - 1):
        steps = [Partition()] + list(middle) + [rectangle(n, k)]
        if all(contains(b, a) for a, b in zip(steps, steps[1:])) and all(
                contains(s, b) for s, b in zip(steps, bounds)):
            out.append([tuple(s) for s in steps])
    return sorted(out, key=lambda st: [s[j] if j < len(s) else 0 for s in st for j in range(n)])


@pytest.mark.parametrize("xi", [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1), (2, 2), (3, 1)])
@pytest.mark.parametrize("k", [1, 2])
def test_chains_match_brute_force(xi, k):
    chains = enumerate_chains(xi, k)
    assert [_steps(c) for c in chains] == _brute_chains(xi, k)
    flats = [c.flat() for c in chains]
    assert flats == sorted(flats)


def test_chain_validation():
    with pytest.raises(ValueError):
        PartitionChain((Partition(), Partition((1,)), Partition((1,))), 1, 2)
    with pytest.raises(ValueError):
        PartitionChain((Partition(), Partition((1, 1)), Partition((1,)), Partition((1, 1, 1))), 1, 3)
