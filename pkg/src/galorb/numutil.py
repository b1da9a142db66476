"""Exact number-theory helpers shared across the package.

Everything here is integer arithmetic: factorization by trial division with
a Pollard rho fallback, deterministic Miller-Rabin for 64-bit inputs, unit
groups mod m, divisor lists.  No floats.
"""

from __future__ import annotations

import math
from functools import lru_cache

# Deterministic Miller-Rabin witnesses, valid for n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed on {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # wheel over 6k +- 1 up to 2**16, then rho on what remains
    f = 7
    incs = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while f * f <= n and f < 1 << 16:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += incs[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def divisors(n: int) -> list[int]:
    """Sorted list of the positive divisors of n."""
    ds = [1]
    for p, e in factorize(n).items():
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return sorted(ds)


@lru_cache(maxsize=None)
def totient(m: int) -> int:
    """Euler phi of m >= 1."""
    if m < 1:
        raise ValueError("totient expects a positive integer")
    result = m
    for p in factorize(m):
        result -= result // p
    return result


@lru_cache(maxsize=None)
def units_mod(m: int) -> tuple[int, ...]:
    """Canonical residues of (Z/mZ)^*, ascending.  units_mod(1) == (0,)."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return (0,)
    return tuple(k for k in range(1, m) if math.gcd(k, m) == 1)


def is_prime_power(q: int) -> tuple[int, int] | None:
    """(p, k) with q == p**k, or None when q is not a prime power >= 2."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f) != 1:
        return None
    (p, k), = f.items()
    return p, k


def prime_powers_upto(limit: int) -> list[int]:
    """All prime powers q with 2 <= q <= limit, ascending."""
    return [q for q in range(2, limit + 1) if is_prime_power(q)]


def primes_upto(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, int(math.isqrt(limit)) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(sieve[p * p :: p])
    return [i for i, b in enumerate(sieve) if b]
