"""Partition-side rank computations for alternating groups, checked
against a brute-force partition oracle and the realized class
structures, plus the constructive lower-bound machinery."""

import math
from itertools import combinations

import pytest

from galorb.altcount import (
    count_partitions_exact, enumerate_distinct_odd_partitions,
    frobenius_rank, frobenius_records, partition_record, partitions_exact,
    prop8_construct, prop8_lower_bound, prop8_parameters,
)
from galorb.classtheory import analyze
from galorb.errors import InputError, ResourceLimitError
from galorb.permgroup import alternating_class_structure


def brute_distinct_odd(n):
    """All strictly decreasing tuples of distinct odd parts summing to n."""
    odds = list(range(1, n + 1, 2))
    out = set()
    for r in range(len(odds) + 1):
        for combo in combinations(odds, r):
            if sum(combo) == n:
                out.add(tuple(sorted(combo, reverse=True)))
    return sorted(out, reverse=True)


@pytest.mark.parametrize("n", [0, 1, 2, 8, 9, 16])
def test_enumeration_matches_brute_force(n):
    assert list(enumerate_distinct_odd_partitions(n)) == brute_distinct_odd(n)


def test_enumeration_small_cases():
    assert list(enumerate_distinct_odd_partitions(8)) == [(7, 1), (5, 3)]
    assert list(enumerate_distinct_odd_partitions(0)) == [()]
    assert list(enumerate_distinct_odd_partitions(2)) == []


def test_enumeration_guards():
    with pytest.raises(InputError):
        list(enumerate_distinct_odd_partitions(-1))
    with pytest.raises(ResourceLimitError):
        frobenius_rank(401)


def test_square_product_detection():
    for parts in [(9,), (1,), (25, 1), (9, 4), (3, 3), (5, 3), (2, 8),
                  (49, 25, 9), (45, 5)]:
        rec = partition_record(parts)
        prod = math.prod(parts)
        assert rec.product_not_square == (math.isqrt(prod) ** 2 != prod), parts


def test_rank_one_set_up_to_40():
    ranks = {n: frobenius_rank(n) for n in range(2, 41)}
    rank1 = sorted(n for n, r in ranks.items() if r == 1)
    assert rank1 == [5, 6, 10, 11, 13, 16, 17, 21, 25]


def test_rank_agrees_with_class_structures():
    for n in range(5, 14):
        assert frobenius_rank(n) == analyze(alternating_class_structure(n)).rank, n


def test_records_expose_the_contributing_partitions():
    recs = frobenius_records(10)
    contributing = [r.parts for r in recs if r.contributes]
    assert contributing == [(7, 3)]
    # (9, 1) has square product 9, (5, 4, 1) is not all odd and never appears
    assert all(all(p % 2 for p in r.parts) for r in recs)


def test_injection_parameters_at_anchors():
    assert prop8_parameters(26) == (17, 2, 3)
    b = prop8_lower_bound(26)
    assert (b.p, b.k, b.m, b.count, b.feasible) == (17, 2, 3, 1, True)
    b = prop8_lower_bound(27)
    assert not b.feasible and b.k == -1 and b.count == 0


def test_bound_below_rank_across_range():
    for n in range(26, 121):
        b = prop8_lower_bound(n)
        r = frobenius_rank(n)
        assert b.count <= r, (n, b.count, r)
        if n % 4 == 2:
            assert b.feasible and b.count == 1, (n, b)
        else:
            assert not b.feasible, (n, b)
        if n <= 60:
            assert r > 1, (n, r)


def test_construction_anchor():
    parts = prop8_construct(3, 2, 17, (3,))
    assert parts == (9, 17)
    rec = partition_record(parts)
    assert rec.contributes and rec.n == 26 and rec.k == 2


def test_construction_is_injective_and_lands_in_target():
    outs = set()
    for pi in partitions_exact(10, 4):
        out = prop8_construct(10, 5, 53, pi)
        outs.add(out)
        rec = partition_record(out)
        assert rec.contributes and rec.n == 97
    assert len(outs) == count_partitions_exact(10, 4) == 9


@pytest.mark.parametrize("m", range(0, 15))
@pytest.mark.parametrize("j", range(0, 7))
def test_partition_count_matches_generator(m, j):
    assert count_partitions_exact(m, j) == sum(1 for _ in partitions_exact(m, j))


@pytest.mark.parametrize("bad,msg", [
    (dict(m=3, k=2, p=16, pi=(3,)), "prime"),
    (dict(m=3, k=2, p=17, pi=(2,)), "sum"),
    (dict(m=3, k=2, p=17, pi=(3, 1)), "parts"),
    (dict(m=3, k=2, p=5, pi=(3,)), "dominate"),
    (dict(m=4, k=2, p=17, pi=(4,)), "congruent"),
    (dict(m=3, k=0, p=17, pi=()), "k"),
])
def test_construction_preconditions(bad, msg):
    with pytest.raises(InputError, match=msg):
        prop8_construct(**bad)
