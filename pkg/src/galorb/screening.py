"""Screening of classical simple group families by torus totients.

Each family of classical groups carries a distinguished cyclic maximal
torus whose order is an explicit cyclotomic-style expression in the
dimension parameter n and the field size q.  When Euler's phi of that
order exceeds a linear threshold in n, the group supports long Galois
orbits and leaves every candidate list here; the finitely many (n, q)
below threshold are the exceptions this module computes.

A finite (n, q) box never proves a list complete on its own, so each
scan carries a certificate: exact boundary checks one step beyond the
box in q and up to twice the box in n (both against the exact maximum
m with phi(m) <= t), a cruder phi(m) >= sqrt(m/2) bound for a long n
tail, and a closed-form exponential-versus-cubic comparison beyond
that.  Every check uses integer arithmetic only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import InputError
from .numutil import is_prime_power, prime_powers_upto, totient

__all__ = [
    "totient", "max_m_with_totient_at_most", "FamilyRecord", "FAMILIES",
    "singer_order", "exception_set", "ScreenResult", "lemma_bounds",
    "TorusRecord", "parse_torus_records", "exceptional_screen",
]


# -- exact M(t) = max { m : phi(m) <= t } -------------------------------

_M_TABLE = {"limit": 0, "best": None}


def _grow_m_table(t: int) -> None:
    # phi(m) >= sqrt(m/2), so m > 2 t^2 forces phi(m) > t; a table of
    # size 4 t^2 is therefore exhaustive for threshold t.
    need = max(256, 4 * t * t)
    if _M_TABLE["limit"] >= need:
        return
    limit = 1 << (need - 1).bit_length()
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p::p] = False
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in np.flatnonzero(sieve):
        phi[p::p] -= phi[p::p] // p
    best = np.zeros(limit + 2, dtype=np.int64)
    np.maximum.at(best, phi[1:], np.arange(1, limit + 1, dtype=np.int64))
    np.maximum.accumulate(best, out=best)
    _M_TABLE["limit"] = limit
    _M_TABLE["best"] = best


def max_m_with_totient_at_most(t: int) -> int:
    """Largest m with phi(m) <= t, exactly."""
    if t < 1:
        raise InputError("threshold must be at least 1")
    _grow_m_table(t)
    return int(_M_TABLE["best"][t])


# -- the seven families -------------------------------------------------


@dataclass(frozen=True)
class FamilyRecord:
    """One classical family: torus order, threshold, and known outliers."""

    tag: str
    summary: str
    n_min: int
    n_step: int            # admissible n form an arithmetic progression
    n_residue: int
    q_odd_only: bool
    threshold: Callable[[int], int]
    order_fn: Callable[[int, int], tuple[int, int]]
    order_lb_fn: Callable[[int, int], int]
    exclusions: dict[tuple[int, int], str]

    def in_domain(self, n: int) -> bool:
        return n >= self.n_min and n % self.n_step == self.n_residue

    def domain_text(self) -> str:
        shape = {(1, 0): "any n", (2, 0): "even n", (2, 1): "odd n",
                 (4, 0): "n divisible by 4", (4, 2): "n = 2 mod 4"}[
                     (self.n_step, self.n_residue)]
        q = ", odd q" if self.q_odd_only else ""
        return f"{shape} >= {self.n_min}{q}"


def _exact(num: int, den: int) -> int:
    assert num % den == 0, (num, den)
    return num // den


def _psl_order(n, q):
    d = math.gcd(n, q - 1)
    return _exact(q ** n - 1, d * (q - 1)), d


def _psp_order(n, q):
    d = math.gcd(2, q - 1)
    return _exact(q ** (n // 2) + 1, d), d


def _psu2_order(n, q):
    d = math.gcd(n // 2, q + 1)
    return _exact(q ** (n // 2) + 1, d * (q + 1)), d


def _pom_order(n, q):
    d = math.gcd(2, q + 1)
    return _exact(q ** (n // 2) + 1, d), d


def _psu4_order(n, q):
    d = math.gcd(n // 2, q + 1)
    return _exact(q ** (n // 2 - 1) + 1, d), d


def _poo_order(n, q):
    return _exact(q ** ((n - 1) // 2) + 1, 2), 2


def _pop_order(n, q):
    d = math.gcd(2, q + 1)
    return _exact(q ** ((n - 2) // 2) + 1, d), d


FAMILIES: dict[str, FamilyRecord] = {
    "PSL": FamilyRecord(
        "PSL", "projective special linear, full Singer torus",
        2, 1, 0, False, lambda n: 4 * n,
        _psl_order,
        lambda n, q: (q ** n - 1) // (n * (q - 1)),
        {
            (2, 2): "not simple (solvable of order 6)",
            (2, 3): "not simple (solvable of order 12)",
            (2, 4): "isomorphic to the alternating group on 5 letters",
            (2, 5): "isomorphic to the alternating group on 5 letters",
            (2, 9): "isomorphic to the alternating group on 6 letters",
            (4, 2): "isomorphic to the alternating group on 8 letters",
        }),
    "PSp": FamilyRecord(
        "PSp", "projective symplectic, torus of order (q^(n/2)+1)/(2,q-1)",
        4, 2, 0, False, lambda n: 4 * n,
        _psp_order,
        lambda n, q: (q ** (n // 2) + 1) // 2,
        {(4, 2): "not simple (isomorphic to the symmetric group on 6 letters)"}),
    "PSU_odd": FamilyRecord(
        "PSU_odd", "projective special unitary with n/2 odd",
        6, 4, 2, False, lambda n: 2 * n,
        _psu2_order,
        lambda n, q: (q ** (n // 2) + 1) // ((n // 2) * (q + 1)),
        {(6, 2): "not simple (solvable of order 72)"}),
    "POmegaMinus": FamilyRecord(
        "POmegaMinus", "minus-type orthogonal in even dimension",
        8, 2, 0, False, lambda n: 4 * n,
        _pom_order,
        lambda n, q: (q ** (n // 2) + 1) // 2,
        {}),
    "PSU_div4": FamilyRecord(
        "PSU_div4", "projective special unitary with n/2 even",
        8, 4, 0, False, lambda n: 4 * n,
        _psu4_order,
        lambda n, q: (q ** (n // 2 - 1) + 1) // (n // 2),
        {}),
    "POmega_odd": FamilyRecord(
        "POmega_odd", "odd-dimensional orthogonal, odd q",
        7, 2, 1, True, lambda n: 8 * n,
        _poo_order,
        lambda n, q: (q ** ((n - 1) // 2) + 1) // 2,
        {}),
    "POmegaPlus": FamilyRecord(
        "POmegaPlus", "plus-type orthogonal in even dimension",
        8, 2, 0, False, lambda n: 8 * (n - 2),
        _pop_order,
        lambda n, q: (q ** ((n - 2) // 2) + 1) // 2,
        {}),
}


def singer_order(tag: str, n: int, q: int) -> tuple[int, int]:
    """Order of the family's distinguished cyclic torus at (n, q), with
    the gcd cofactor that entered the denominator."""
    rec = FAMILIES.get(tag)
    if rec is None:
        raise InputError(
            f"unknown family {tag!r}; choose from {', '.join(sorted(FAMILIES))}")
    if not is_prime_power(q):
        raise InputError(f"q = {q} is not a prime power")
    if rec.q_odd_only and q % 2 == 0:
        raise InputError(f"family {tag} is defined for odd q only")
    if not rec.in_domain(n):
        raise InputError(f"family {tag} needs {rec.domain_text()}, got n = {n}")
    return rec.order_fn(n, q)


# -- box scan with completeness certificate -----------------------------


@dataclass(frozen=True)
class ScreenRow:
    n: int
    q: int
    order: int
    cofactor: int
    phi: int | None          # None: order alone already proves phi > threshold
    threshold: int
    verdict: str             # "exception", "screened", or "excluded"


@dataclass(frozen=True)
class BoundaryRow:
    n: int
    q: int
    order_lb: int
    m_cap: int
    ok: bool


@dataclass(frozen=True)
class Certificate:
    q_rows: tuple[BoundaryRow, ...]
    n_rows: tuple[BoundaryRow, ...]
    n_tail_range: tuple[int, int]
    n_tail_ok: bool
    asymptotic_ok: bool

    @property
    def ok(self) -> bool:
        return (all(r.ok for r in self.q_rows) and all(r.ok for r in self.n_rows)
                and self.n_tail_ok and self.asymptotic_ok)


@dataclass(frozen=True)
class ScreenResult:
    tag: str
    n_max: int
    q_max: int
    rows: tuple[ScreenRow, ...]
    exceptions: frozenset
    excluded: tuple[tuple[int, int, str], ...]
    certificate: Certificate
    certified: bool


_N_TAIL_END = 4096


def _family_qs(rec: FamilyRecord, q_max: int) -> tuple[int, ...]:
    qs = prime_powers_upto(q_max)
    if rec.q_odd_only:
        qs = tuple(q for q in qs if q % 2)
    return qs


def exception_set(tag: str, n_max: int = 40, q_max: int = 64) -> ScreenResult:
    """Scan the (n, q) box for sub-threshold torus totients and certify
    that nothing outside the box was missed."""
    rec = FAMILIES.get(tag)
    if rec is None:
        raise InputError(
            f"unknown family {tag!r}; choose from {', '.join(sorted(FAMILIES))}")
    if n_max < rec.n_min or q_max < 2:
        raise InputError(f"box too small for family {tag}: "
                         f"n_max {n_max}, q_max {q_max}")

    rows = []
    exceptions = set()
    excluded = []
    ns = [n for n in range(rec.n_min, n_max + 1) if rec.in_domain(n)]
    for n in ns:
        thr = rec.threshold(n)
        # Torus orders grow exponentially while phi is only needed when
        # it might undercut thr, which forces order <= M(thr).  Larger
        # orders are screened by size alone; factoring them (hundreds of
        # digits, Cunningham-hard) is never attempted.
        cap = max_m_with_totient_at_most(thr)
        for q in _family_qs(rec, q_max):
            order, cof = rec.order_fn(n, q)
            phi = totient(order) if order <= cap else None
            if (n, q) in rec.exclusions:
                verdict = "excluded"
                excluded.append((n, q, rec.exclusions[(n, q)]))
            elif phi is not None and phi <= thr:
                verdict = "exception"
                exceptions.add((n, q))
            else:
                verdict = "screened"
            rows.append(ScreenRow(n, q, order, cof, phi, thr, verdict))

    # Completeness, part 1: for every in-box n, the torus order lower
    # bound one q past the box already tops every m with small phi.
    # The lower bound is monotone in q, so one evaluation covers the ray.
    q_rows = []
    for n in ns:
        cap = max_m_with_totient_at_most(rec.threshold(n))
        lb = rec.order_lb_fn(n, q_max + 1)
        q_rows.append(BoundaryRow(n, q_max + 1, lb, cap, lb > cap))

    # Part 2: the next stretch of n, exactly, at the least admissible q.
    q_min = 3 if rec.q_odd_only else 2
    n_rows = []
    for n in range(n_max + 1, 2 * n_max + 1):
        if not rec.in_domain(n):
            continue
        cap = max_m_with_totient_at_most(rec.threshold(n))
        lb = rec.order_lb_fn(n, q_min)
        n_rows.append(BoundaryRow(n, q_min, lb, cap, lb > cap))

    # Part 3: a long tail via phi(m) >= sqrt(m/2): order > 2 thr^2
    # suffices, checked with margin.
    tail_lo, tail_hi = 2 * n_max + 1, _N_TAIL_END
    n_tail_ok = all(
        rec.order_lb_fn(n, q_min) > 4 * rec.threshold(n) ** 2
        for n in range(tail_lo, tail_hi + 1) if rec.in_domain(n))

    # Part 4: beyond the tail.  Every family's bound is at least
    # 2^((n-2)/2) / (2n) and every threshold is at most 8n, so
    # 2^((n-2)/2) > 512 n^3 gives phi > threshold; the gap widens with n
    # as soon as n log 2 > 6.  Both sides integer-checked at the first
    # n past the tail.
    n0 = tail_hi + 1
    while not rec.in_domain(n0):
        n0 += 1
    asymptotic_ok = (2 ** ((n0 - 2) // 2) > 512 * n0 ** 3) and (n0 * 7 > 61)
    # n * 7 > 61 is a safe integer stand-in for n > 6 / log 2 = 8.656...

    cert = Certificate(tuple(q_rows), tuple(n_rows), (tail_lo, tail_hi),
                       n_tail_ok, asymptotic_ok)
    return ScreenResult(
        tag=rec.tag, n_max=n_max, q_max=q_max,
        rows=tuple(rows),
        exceptions=frozenset(exceptions),
        excluded=tuple(excluded),
        certificate=cert,
        certified=cert.ok,
    )


# -- per-group torus bounds ---------------------------------------------


@dataclass(frozen=True)
class LemmaBounds:
    """Orbit-length and rank bounds from one cyclic subgroup of order m
    whose normalizer-induced class count is at most nbound."""

    m: int
    nbound: int
    f_lb: int
    r_lb: Fraction
    f_exceeds_4: bool


def lemma_bounds(m: int, nbound: int) -> LemmaBounds:
    if m < 1 or nbound < 1:
        raise InputError("need m >= 1 and nbound >= 1")
    phi = totient(m)
    return LemmaBounds(
        m=m, nbound=nbound,
        f_lb=-(-phi // nbound),
        r_lb=Fraction(phi, 2 * nbound) - 1,
        f_exceeds_4=phi > 4 * nbound,
    )


@dataclass(frozen=True)
class TorusRecord:
    group: str
    torus_order: int
    index_bound: int


def parse_torus_records(text: str) -> tuple[TorusRecord, ...]:
    """One JSON object per line: group label, cyclic torus order, and a
    bound on the number of classes meeting the torus.  Index bounds
    above 30 are outside the supported data and rejected."""
    import json

    records = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise InputError(f"line {lineno}: {exc.msg}") from None
        try:
            group = str(obj["group"])
            order = obj["torus_order"]
            index = obj["index_bound"]
        except (TypeError, KeyError) as exc:
            raise InputError(f"line {lineno}: missing field {exc}") from None
        if not isinstance(order, int) or isinstance(order, bool) or order < 1:
            raise InputError(f"line {lineno}: torus_order must be a positive integer")
        if not isinstance(index, int) or isinstance(index, bool) or index < 1:
            raise InputError(f"line {lineno}: index_bound must be a positive integer")
        if index > 30:
            raise InputError(
                f"line {lineno}: index_bound {index} exceeds the supported "
                "maximum of 30")
        records.append(TorusRecord(group, order, index))
    return tuple(records)


@dataclass(frozen=True)
class TorusVerdict:
    record: TorusRecord
    phi: int
    excluded: bool        # orbit bound beats 4: cannot have tiny orbits


def exceptional_screen(records) -> tuple[TorusVerdict, ...]:
    """Apply the f > 4 exclusion test to tabulated torus data."""
    out = []
    for rec in records:
        phi = totient(rec.torus_order)
        out.append(TorusVerdict(rec, phi, phi > 4 * rec.index_bound))
    return tuple(out)
