"""Combinatorial rank computations for alternating groups.

The central-unit rank of an alternating group integral group ring is a
partition count: partitions of n into distinct odd parts, with the
number of parts congruent to n mod 4, whose part product is not a
perfect square.  This file computes that count exactly and also builds
the explicit injection from ordinary partitions that drives the
asymptotic lower bound: pad a partition of m to strictly increasing
values, double into odd parts, and append a dominating prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError, ResourceLimitError
from .numutil import is_prime


@dataclass(frozen=True)
class PartitionRecord:
    """One partition of n with the four contribution criteria spelled out."""

    parts: tuple[int, ...]
    n: int
    k: int
    all_odd: bool
    distinct: bool
    congruent_mod4: bool
    product_not_square: bool

    @property
    def contributes(self) -> bool:
        return (self.all_odd and self.distinct and self.congruent_mod4
                and self.product_not_square)


@lru_cache(maxsize=8)
def _spf_sieve(limit: int) -> tuple[int, ...]:
    """Smallest prime factor for every value up to limit."""
    spf = list(range(limit + 1))
    for p in range(2, int(limit ** 0.5) + 1):
        if spf[p] == p:
            for q in range(p * p, limit + 1, p):
                if spf[q] == q:
                    spf[q] = p
    return tuple(spf)


def _product_is_square(parts: tuple[int, ...]) -> bool:
    """Exact square test on the product, via prime exponent parities.

    Factoring the parts one by one keeps every intermediate small; the
    product itself can be astronomically larger than any sieve.
    """
    if not parts:
        return True
    spf = _spf_sieve(max(parts))
    odd_exponent: set[int] = set()
    for part in parts:
        while part > 1:
            p = spf[part]
            part //= p
            odd_exponent.symmetric_difference_update((p,))
    return not odd_exponent


def partition_record(parts: tuple[int, ...]) -> PartitionRecord:
    n = sum(parts)
    k = len(parts)
    return PartitionRecord(
        parts=tuple(parts),
        n=n,
        k=k,
        all_odd=all(p % 2 for p in parts),
        distinct=len(set(parts)) == k,
        congruent_mod4=(k - n) % 4 == 0,
        product_not_square=not _product_is_square(tuple(parts)),
    )


def enumerate_distinct_odd_partitions(n: int, limit: int = 400):
    """All partitions of n into distinct odd parts, decreasing within
    each partition and in decreasing lexicographic order overall."""
    if n < 0:
        raise InputError("n must be nonnegative")
    if n > limit:
        raise ResourceLimitError(
            f"partition enumeration capped at n = {limit}, got {n}")

    def rec(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        top = min(cap, remaining if remaining % 2 else remaining - 1)
        for p in range(top, 0, -2):
            for rest in rec(remaining - p, p - 2):
                yield (p,) + rest

    yield from rec(n, n if n % 2 else n - 1)


def frobenius_rank(n: int, limit: int = 400) -> int:
    """Central-unit rank for the alternating group on n points, n >= 2,
    as an exact partition count."""
    if n < 2:
        raise InputError("alternating rank needs n >= 2")
    count = 0
    for parts in enumerate_distinct_odd_partitions(n, limit):
        if (len(parts) - n) % 4 == 0 and not _product_is_square(parts):
            count += 1
    return count


def frobenius_records(n: int, limit: int = 400) -> tuple[PartitionRecord, ...]:
    """Every distinct-odd partition of n with its contribution flags."""
    return tuple(partition_record(parts)
                 for parts in enumerate_distinct_odd_partitions(n, limit))


# -- exact partition counts for the injection ---------------------------


@lru_cache(maxsize=None)
def count_partitions_exact(m: int, j: int) -> int:
    """Partitions of m into exactly j positive parts."""
    if m < 0 or j < 0:
        return 0
    if j == 0:
        return 1 if m == 0 else 0
    if m < j:
        return 0
    return count_partitions_exact(m - 1, j - 1) + count_partitions_exact(m - j, j)


def partitions_exact(m: int, j: int):
    """Generate the partitions counted by count_partitions_exact,
    parts decreasing within each tuple."""
    if m < 0 or j < 0:
        return
    if j == 0:
        if m == 0:
            yield ()
        return

    def rec(remaining: int, slots: int, cap: int):
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        top = min(cap, remaining - (slots - 1))
        for p in range(top, 0, -1):
            if p * slots < remaining:
                break
            for rest in rec(remaining - p, slots - 1, p):
                yield (p,) + rest

    yield from rec(m, j, m)


# -- the padded-doubling injection --------------------------------------


def prop8_construct(m: int, k: int, p: int,
                    pi: tuple[int, ...]) -> tuple[int, ...]:
    """Map one partition pi of m into exactly k - 1 parts to a
    contributing partition of n = p + k*k - 1 + 2*m.

    Sorted ascending, part i gains i, everything doubles into an odd
    value, and the prime p joins as the largest part.  Since p exceeds
    every other part, it divides the product exactly once, so the
    product cannot be a square.
    """
    if k < 1:
        raise InputError("k must be at least 1")
    if m < 0:
        raise InputError("m must be nonnegative")
    if not is_prime(p):
        raise InputError(f"p = {p} is not prime")
    if len(pi) != k - 1:
        raise InputError(f"need exactly {k - 1} parts, got {len(pi)}")
    if any(x < 1 for x in pi):
        raise InputError("partition parts must be positive")
    if sum(pi) != m:
        raise InputError(f"parts sum to {sum(pi)}, not m = {m}")
    if p <= k * k - 1 + 2 * m:
        raise InputError(
            f"p = {p} too small to dominate: need p > {k * k - 1 + 2 * m}")
    n = p + k * k - 1 + 2 * m
    if (n - k) % 4:
        raise InputError(f"k = {k} is not congruent to n = {n} mod 4")

    inc = sorted(pi)
    parts = tuple(2 * (x + i) + 1 for i, x in enumerate(inc, start=1)) + (p,)
    assert sum(parts) == n
    assert all(q % 2 for q in parts)
    assert len(set(parts)) == k
    assert (len(parts) - n) % 4 == 0
    assert not _product_is_square(parts)
    return parts


@dataclass(frozen=True)
class Prop8Bound:
    """Parameters and value of the injection-based lower bound at n."""

    n: int
    p: int
    k: int
    m: int
    count: int
    feasible: bool
    diagnostic: str


def prop8_parameters(n: int) -> tuple[int, int, int]:
    """The (p, k, m) used at n: the least prime above n/2, the admissible
    part count nearest sqrt(p)/10, and the leftover partition weight.

    k runs over every integer congruent to n mod 4, negative values
    included; with x = sqrt(p)/10 the two bracketing candidates are
    compared exactly (p against 25 (lo + hi)^2), the smaller winning
    ties.  m is integral because k and n share parity and p is odd.
    """
    p = n // 2 + 1
    while not is_prime(p):
        p += 1

    def below(k: int) -> bool:
        # k <= sqrt(p) / 10, exactly
        return k <= 0 or 100 * k * k <= p

    lo = n % 4
    if below(lo):
        while below(lo + 4):
            lo += 4
    else:
        while not below(lo):
            lo -= 4
    hi = lo + 4
    s = lo + hi
    if s <= 0:
        k = hi
    elif p > 25 * s * s:
        # 2 sqrt(p) / 10 > lo + hi: the upper candidate is closer
        k = hi
    else:
        k = lo
    m2 = n - p - k * k + 1
    assert m2 % 2 == 0
    return p, k, m2 // 2


def prop8_lower_bound(n: int) -> Prop8Bound:
    """Exact value of the injection bound at n >= 26; infeasible
    parameter combinations report a zero bound with a diagnostic."""
    if n < 26:
        raise InputError("the injection bound is stated for n >= 26")
    p, k, m = prop8_parameters(n)
    problems = []
    if k <= 0:
        problems.append(f"no positive admissible k (chose {k})")
    if k == 1 and m != 0:
        problems.append(f"k = 1 leaves m = {m} != 0 unplaced")
    if m < 0:
        problems.append(f"m = {m} negative")
    if k > 1 and 0 <= m < k - 1:
        problems.append(f"m = {m} cannot fill {k - 1} parts")
    if problems:
        return Prop8Bound(n, p, k, m, 0, False, "; ".join(problems))
    count = count_partitions_exact(m, k - 1)
    return Prop8Bound(n, p, k, m, count, True, "")
