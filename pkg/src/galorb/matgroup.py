"""Matrix groups over small finite fields, exactly.

Field elements are integers 0..q-1 encoding coefficient vectors over
the prime field in base p, with multiplication through discrete
exp/log tables built from a canonical primitive polynomial (the one
with the smallest encoded value; primitivity is tested directly and,
when it holds, the quotient ring is forced to be a field, so no
separate irreducibility check is needed).

On top of that: characteristic polynomials via Hessenberg reduction,
multiplicative orders through the factor-degree structure of the
characteristic polynomial, Singer elements as companion matrices, and
the count of characteristic polynomials among power-coprime elements
that drives class-count lower bounds.
"""

from __future__ import annotations

import json
import math
import random
from functools import lru_cache

from .errors import InputError, ResourceLimitError
from .numutil import factorize, is_prime, units_mod
from .permgroup import GroupSpec

MAX_FIELD = 512
MAX_DIM = 12    # keeps every q^d - 1 we must factor within easy reach


# -- polynomial helpers over the prime field (tuples of ints mod p) -----


def _ppoly_trim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _ppoly_mulmod(a, b, f, p):
    k = len(f) - 1
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    # reduce by the monic f
    for i in range(len(out) - 1, k - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(k):
                out[i - k + j] = (out[i - k + j] - c * f[j]) % p
    return _ppoly_trim(tuple(out[:k]))


def _ppoly_powmod(base, e, f, p):
    result = (1,)
    while e:
        if e & 1:
            result = _ppoly_mulmod(result, base, f, p)
        base = _ppoly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _is_primitive_mod(f, p, q):
    """Does x generate the units of GF(p)[x]/(f)?  True forces the
    quotient to be a field of size q: the q - 1 distinct powers of x
    plus zero exhaust it, leaving no room for zero divisors."""
    x = (0, 1)
    if _ppoly_powmod(x, q - 1, f, p) != (1,):
        return False
    for r in factorize(q - 1):
        if _ppoly_powmod(x, (q - 1) // r, f, p) == (1,):
            return False
    return True


class FiniteField:
    """GF(p^k) on integer-encoded elements with exp/log tables."""

    __slots__ = ("p", "k", "q", "poly", "exp", "log", "_neg")

    def __init__(self, p: int, k: int):
        self.p = p
        self.k = k
        self.q = q = p ** k
        self.poly = self._find_poly()
        exp = [0] * (q - 1)
        log = [0] * q
        cur = (1,)
        gen = (0, 1) if k > 1 else ((self.poly[0] and p - self.poly[0]) % p,)
        # degree 1: the defining polynomial is x - g for a generator g
        for i in range(q - 1):
            val = sum(c * p ** j for j, c in enumerate(cur))
            exp[i] = val
            log[val] = i
            cur = _ppoly_mulmod(cur, gen, self.poly + (1,), p)
        assert cur == (1,), "generator order is not q - 1"
        self.exp = tuple(exp)
        self.log = tuple(log)
        self._neg = tuple(
            sum(((p - d) % p) * p ** j for j, d in enumerate(self._digits(v)))
            for v in range(q))

    def _digits(self, v: int):
        out = []
        for _ in range(self.k):
            out.append(v % self.p)
            v //= self.p
        return out

    def _find_poly(self) -> tuple[int, ...]:
        p, k, q = self.p, self.k, self.q
        for enc in range(1, q):
            coeffs = tuple(self._digits(enc))
            if coeffs[0] == 0:
                continue
            if _is_primitive_mod(coeffs + (1,), p, q):
                return coeffs
        raise AssertionError(f"no primitive polynomial found for GF({q})")

    # element operations (integers 0..q-1)

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        total = 0
        mult = 1
        for _ in range(self.k):
            total += ((a + b) % self.p) * mult
            a //= self.p
            b //= self.p
            mult *= self.p
        return total

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.exp[-self.log[a] % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero has no inverse")
            return 1 if e == 0 else 0
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    @property
    def generator(self) -> int:
        return self.exp[1 % (self.q - 1)]

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=32)
def finite_field(q: int) -> FiniteField:
    if q < 2 or q > MAX_FIELD:
        raise InputError(f"field size must be in 2..{MAX_FIELD}, got {q}")
    fac = factorize(q)
    if len(fac) != 1:
        raise InputError(f"{q} is not a prime power")
    (p, k), = fac.items()
    return FiniteField(p, k)


# -- matrices -----------------------------------------------------------


class Matrix:
    """Immutable square matrix over a FiniteField."""

    __slots__ = ("field", "rows")

    def __init__(self, field: FiniteField, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise InputError("matrix must be square")
        if any(not (0 <= v < field.q) for r in rows for v in r):
            raise InputError(f"entries must be encoded field elements 0..{field.q - 1}")
        self.field = field
        self.rows = rows

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> "Matrix":
        return cls(field, tuple(tuple(1 if i == j else 0 for j in range(n))
                                for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field.q == other.field.q
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field.q, self.rows))

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.rows!r})"

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.field is not other.field or self.n != other.n:
            raise InputError("matrix shapes or fields differ")
        F = self.field
        cols = tuple(zip(*other.rows))
        out = []
        for row in self.rows:
            new = []
            for col in cols:
                acc = 0
                for a, b in zip(row, col):
                    if a and b:
                        acc = F.add(acc, F.mul(a, b))
                new.append(acc)
            out.append(tuple(new))
        return Matrix(F, out)

    def pow(self, e: int) -> "Matrix":
        if e < 0:
            raise InputError("negative matrix powers are not supported")
        result = Matrix.identity(self.field, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    @property
    def is_identity(self) -> bool:
        return all(v == (1 if i == j else 0)
                   for i, row in enumerate(self.rows) for j, v in enumerate(row))


def char_poly(M: Matrix) -> tuple[int, ...]:
    """Monic characteristic polynomial, ascending encoded coefficients.

    Similarity reduction to upper Hessenberg form, then the standard
    leading-minor recurrence; exact over the field.
    """
    F = M.field
    n = M.n
    h = [list(r) for r in M.rows]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if h[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            h[piv], h[j + 1] = h[j + 1], h[piv]
            for row in h:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        inv = F.inv(h[j + 1][j])
        for i in range(j + 2, n):
            if not h[i][j]:
                continue
            t = F.mul(h[i][j], inv)
            for c in range(n):
                h[i][c] = F.sub(h[i][c], F.mul(t, h[j + 1][c]))
            for r in range(n):
                h[r][j + 1] = F.add(h[r][j + 1], F.mul(t, h[r][i]))

    polys = [(1,)]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        pm = [0] * (m + 1)
        d = h[m - 1][m - 1]
        for i, c in enumerate(prev):
            pm[i + 1] = F.add(pm[i + 1], c)
            if d and c:
                pm[i] = F.sub(pm[i], F.mul(d, c))
        beta = 1
        for k in range(m - 1, 0, -1):
            beta = F.mul(beta, h[k][k - 1])
            if not beta:
                break
            coef = F.mul(h[k - 1][m - 1], beta)
            if coef:
                for i, c in enumerate(polys[k - 1]):
                    if c:
                        pm[i] = F.sub(pm[i], F.mul(coef, c))
        polys.append(tuple(pm))
    return polys[n]


# -- polynomial helpers over the field (for order computations) ---------


def _fpoly_divmod(F: FiniteField, a, b):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv = F.inv(lb)
    quo = [0] * max(0, len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            t = F.mul(c, inv)
            quo[i - db] = t
            for j in range(db + 1):
                a[i - db + j] = F.sub(a[i - db + j], F.mul(t, b[j]))
    while a and a[-1] == 0:
        a.pop()
    return tuple(quo), tuple(a)


def _fpoly_gcd(F: FiniteField, a, b):
    while b:
        _, a = _fpoly_divmod(F, a, b)
        a, b = b, a
    if a:
        inv = F.inv(a[-1])
        a = tuple(F.mul(c, inv) for c in a)
    return a


def _fpoly_mulmod(F: FiniteField, a, b, f):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    if len(out) >= len(f):
        _, out = _fpoly_divmod(F, tuple(out), f)
        return out
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _fpoly_powmod(F: FiniteField, base, e, f):
    result = (1,)
    while e:
        if e & 1:
            result = _fpoly_mulmod(F, result, base, f)
        base = _fpoly_mulmod(F, base, base, f)
        e >>= 1
    return result


def element_order(M: Matrix, bound: int = 10_000_000) -> int:
    """Exact multiplicative order via the factor degrees of the
    characteristic polynomial: the order divides
    p^ceil(log_p n) * lcm(q^d - 1) over the irreducible factor degrees
    d, and trial stripping of that multiple pins it down."""
    F = M.field
    n = M.n
    if n > MAX_DIM:
        raise ResourceLimitError(
            f"order computation supports dimension up to {MAX_DIM}, got {n}")
    f = char_poly(M)
    if f[0] == 0:
        raise InputError("matrix is singular; no multiplicative order")

    degrees = []
    rem = f
    d = 0
    while len(rem) - 1 > 0:
        d += 1
        # gcd with x^(q^d) - x collects the factors of degree dividing d;
        # ascending d means everything left in it has degree exactly d.
        xq = _fpoly_powmod(F, (0, 1), F.q ** d, rem)
        diff = list(xq) + [0] * (2 - len(xq))
        diff[1] = F.sub(diff[1], 1)
        g = _fpoly_gcd(F, rem, _ppoly_trim(tuple(diff)))
        if len(g) - 1 > 0:
            degrees.append(d)
            while True:
                quo, r = _fpoly_divmod(F, rem, g)
                if r:
                    break
                rem = quo

    ppart = 1
    while ppart < n:
        ppart *= F.p
    multiple = ppart
    primes = {F.p}
    for d in degrees:
        sub = F.q ** d - 1
        multiple = math.lcm(multiple, sub)
        primes.update(factorize(sub))

    order = multiple
    for r in sorted(primes):
        while order % r == 0 and M.pow(order // r).is_identity:
            order //= r
    assert M.pow(order).is_identity
    if order > bound:
        raise ResourceLimitError(f"order {order} exceeds the bound {bound}")
    return order


# -- Singer elements and power-coprime invariants -----------------------


@lru_cache(maxsize=64)
def _singer_poly(n: int, q: int) -> tuple[int, ...]:
    """Primitive degree-n polynomial over GF(q), least encoded value,
    ascending coefficients without the leading 1."""
    F = finite_field(q)
    target = q ** n - 1
    prime_factors = tuple(factorize(target))
    for enc in range(1, q ** n):
        coeffs = []
        v = enc
        for _ in range(n):
            coeffs.append(v % q)
            v //= q
        if coeffs[0] == 0:
            continue
        f = tuple(coeffs) + (1,)
        x = (0, 1)
        if _fpoly_powmod(F, x, target, f) != (1,):
            continue
        if all(_fpoly_powmod(F, x, target // r, f) != (1,) for r in prime_factors):
            return tuple(coeffs)
    raise AssertionError(f"no primitive polynomial of degree {n} over GF({q})")


def singer_element(n: int, q: int) -> Matrix:
    """Companion matrix of a primitive polynomial: a cyclic generator
    of order q^n - 1 inside the invertible n x n matrices."""
    if n < 1 or n > MAX_DIM:
        raise InputError(f"dimension must be in 1..{MAX_DIM}, got {n}")
    F = finite_field(q)
    coeffs = _singer_poly(n, q)
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = 1
    for i in range(n):
        rows[i][n - 1] = F.neg(coeffs[i])
    return Matrix(F, rows)


def coprime_power_charpoly_count(g: Matrix, max_order: int = 100_000) -> int:
    """Number of distinct characteristic polynomials among g^k with k
    coprime to the order of g."""
    m = element_order(g, bound=max_order)
    if m == 1:
        return 1
    units = set(units_mod(m))
    polys = set()
    cur = g
    for k in range(1, m):
        if k > 1:
            cur = cur * g
        if k in units:
            polys.add(char_poly(cur))
    return len(polys)


def class_lower_bound(count: int, center_order: int) -> tuple[int, bool]:
    """Conjugate matrices share a characteristic polynomial and central
    scalings collapse at most center_order polynomials together, so
    count // center_order classes are forced.  The verdict flags five
    or more, enough to rule out short Galois families."""
    if count < 1 or center_order < 1:
        raise InputError("count and center_order must be positive")
    bound = count // center_order
    return bound, bound >= 5


def random_element_search(gens, target_order: int, attempts: int = 100,
                          seed: int = 0, bound: int = 10_000_000):
    """Deterministic random walk through the generated group, returning
    the first element of the requested order, or None."""
    gens = tuple(gens)
    if not gens:
        raise InputError("at least one generator required")
    rng = random.Random(seed)
    cur = Matrix.identity(gens[0].field, gens[0].n)
    for _ in range(attempts):
        for _ in range(rng.randint(1, 3)):
            cur = cur * rng.choice(gens)
        try:
            if element_order(cur, bound=bound) == target_order:
                return cur
        except ResourceLimitError:
            continue
    return None


# -- the projective line ------------------------------------------------


def projective_line_action(q: int) -> GroupSpec:
    """PSL(2, q) permuting the q + 1 points of the projective line:
    field elements by their encodings, then infinity last.  Generators:
    translation by one, scaling by a generator (its square for odd q),
    and the point swap x -> -1/x."""
    if q > 64:
        raise InputError(f"projective line supported for q <= 64, got {q}")
    F = finite_field(q)
    inf = q
    pts = range(q)

    def perm_of(fn):
        images = [fn(x) for x in pts] + [fn(inf)]
        if sorted(images) != list(range(q + 1)):
            raise AssertionError("map is not a bijection on the line")
        return tuple(images)

    lam = F.generator
    scale = F.mul(lam, lam) if q % 2 else lam

    translate = perm_of(lambda x: inf if x == inf else F.add(x, 1))
    scaling = perm_of(lambda x: inf if x == inf else F.mul(scale, x))
    swap = perm_of(
        lambda x: 0 if x == inf else inf if x == 0 else F.neg(F.inv(x)))

    gens = [g for g in (translate, scaling, swap)
            if g != tuple(range(q + 1))]
    return GroupSpec(q + 1, tuple(gens))


# -- file ingestion -----------------------------------------------------


def parse_matrix_group_file(text: str) -> tuple[FiniteField, tuple[Matrix, ...]]:
    """JSON format: {"p": prime, "k": extension degree, "defining_poly":
    ascending coefficients with leading 1, "dim": n, "generators":
    [[row], ...]}.  The polynomial must match this build's canonical
    choice; entries are encoded field elements."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise InputError("matrix group file must hold a JSON object")
    try:
        p, k, dim, gens = obj["p"], obj["k"], obj["dim"], obj["generators"]
    except KeyError as exc:
        raise InputError(f"missing field {exc.args[0]!r}") from None
    for name, v in (("p", p), ("k", k), ("dim", dim)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise InputError(f"{name!r} must be a positive integer")
    if not is_prime(p):
        raise InputError(f"p = {p} is not prime")
    if dim > MAX_DIM:
        raise InputError(f"dimension must be at most {MAX_DIM}, got {dim}")
    F = finite_field(p ** k)
    want_poly = list(F.poly) + [1]
    got_poly = obj.get("defining_poly")
    if got_poly is not None and list(got_poly) != want_poly:
        raise InputError(
            f"defining_poly {got_poly} does not match the canonical "
            f"choice {want_poly} for GF({p ** k})")
    if not isinstance(gens, list) or not gens:
        raise InputError("'generators' must be a nonempty list of matrices")
    out = []
    for i, rows in enumerate(gens):
        if (not isinstance(rows, list) or len(rows) != dim
                or any(not isinstance(r, list) or len(r) != dim for r in rows)):
            raise InputError(f"generator {i} is not a {dim} x {dim} matrix")
        if any(not isinstance(v, int) or isinstance(v, bool) or
               not 0 <= v < F.q for r in rows for v in r):
            raise InputError(
                f"generator {i} has entries outside 0..{F.q - 1}")
        out.append(Matrix(F, rows))
    return F, tuple(out)
