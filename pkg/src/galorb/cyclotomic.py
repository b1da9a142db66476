"""Exact arithmetic with cyclotomic numbers.

A value is a finite rational combination of N-th roots of unity.  The
canonical form stores Fraction coefficients over the power basis
z^0 .. z^(phi(N)-1) of Q(zeta_N), obtained by reducing modulo the N-th
cyclotomic polynomial, and N itself is lowered to the conductor: the least
N' such that the value lies in Q(zeta_N').  Canonical forms are unique, so
equality is structural and values are hashable.

No floating point is used anywhere in the arithmetic; approx() exists only
as a complex-embedding debug aid.
"""

from __future__ import annotations

import cmath
import enum
import json
import math
from fractions import Fraction
from functools import lru_cache

from .errors import InputError
from .numutil import divisors, totient, units_mod

_ZERO = Fraction(0)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, ascending."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in divisors(n)[:-1]:
        poly = _polydiv_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials, den monic up to leading +-1
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        if r:
            raise ArithmeticError("division not exact")
        out[i - dn] = q
        for j, b in enumerate(den):
            num[i - dn + j] -= q * b
    if any(num[:dn]):
        raise ArithmeticError("nonzero remainder")
    return out


@lru_cache(maxsize=None)
def _power_reductions(n: int) -> tuple[tuple[int, ...], ...]:
    """Rows r[k - phi(n)] give x^k mod Phi_n for phi(n) <= k < n."""
    phi = totient(n)
    base = [-c for c in cyclotomic_polynomial(n)[:-1]]
    rows = [tuple(base)]
    cur = base
    for _ in range(phi + 1, n):
        lead = cur[-1]
        cur = [0] + cur[:-1]
        if lead:
            cur = [a + lead * b for a, b in zip(cur, base)]
        rows.append(tuple(cur))
    return tuple(rows)


def _reduce(n: int, terms) -> list[Fraction]:
    """Fold an exponent -> coefficient map into the power basis of Q(zeta_n)."""
    if n == 1:
        total = _ZERO
        for c in terms.values():
            total += c
        return [total]
    phi = totient(n)
    vec = [_ZERO] * phi
    red = None
    for e, c in terms.items():
        if not c:
            continue
        e %= n
        if e < phi:
            vec[e] += c
        else:
            if red is None:
                red = _power_reductions(n)
            for i, b in enumerate(red[e - phi]):
                if b:
                    vec[i] += c * b
    return vec


def _apply_unit(n: int, vec: list[Fraction], k: int) -> list[Fraction]:
    # image of the basis vector under zeta -> zeta^k, reduced; no conductor work
    return _reduce(n, {(k * i) % n: c for i, c in enumerate(vec) if c})


def _solve_exact(cols: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve sum x_j cols[j] = rhs over Q; the system is known consistent."""
    rows = len(rhs)
    ncols = len(cols)
    aug = [[cols[j][i] for j in range(ncols)] + [rhs[i]] for i in range(rows)]
    piv_cols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, rows) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
        if r == rows:
            break
    x = [_ZERO] * ncols
    for i, c in enumerate(piv_cols):
        x[c] = aug[i][-1]
    for i in range(r, rows):
        if aug[i][-1]:
            raise ArithmeticError("inconsistent rewrite system")
    return x


def _canonical(n: int, terms) -> tuple[int, tuple[Fraction, ...]]:
    vec = _reduce(n, terms)
    if n == 1:
        return 1, (vec[0],)
    if not any(vec):
        return 1, (_ZERO,)
    units = units_mod(n)
    stab = {1}
    for k in units:
        if k != 1 and _apply_unit(n, vec, k) == vec:
            stab.add(k)
    if len(stab) == len(units):  # fixed by the whole Galois group: rational
        return 1, (vec[0],)
    for d in divisors(n)[1:-1]:
        # value lies in Q(zeta_d) iff fixed by every k = 1 (mod d)
        if all(k in stab for k in units if k % d == 1):
            step = n // d
            cols = [_reduce(n, {(j * step) % n: Fraction(1)}) for j in range(totient(d))]
            return d, tuple(_solve_exact(cols, vec))
    return n, tuple(vec)


class FieldClass(enum.Enum):
    """Coarse classification of the field generated by a batch of values."""

    RATIONAL = "Rational"
    IMAGINARY_QUADRATIC = "ImaginaryQuadratic"
    REAL_NONRATIONAL = "RealNonRational"
    OTHER_COMPLEX = "OtherComplex"


class CyclotomicNumber:
    """Immutable element of some Q(zeta_N), always in canonical form."""

    __slots__ = ("order", "_vec")

    def __init__(self, order: int, vec: tuple[Fraction, ...], _raw: bool = False):
        if not _raw:
            order, vec = _canonical(order, dict(enumerate(vec)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_vec", vec)

    def __setattr__(self, *a):
        raise AttributeError("CyclotomicNumber is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def make(n: int, terms: dict[int, Fraction | int]) -> "CyclotomicNumber":
        """Value sum_k c_k zeta_n^k, canonicalized."""
        if n < 1:
            raise InputError("root-of-unity order must be positive")
        clean = {int(e): Fraction(c) for e, c in terms.items()}
        order, vec = _canonical(n, clean)
        return CyclotomicNumber(order, vec, _raw=True)

    @staticmethod
    def rational(x) -> "CyclotomicNumber":
        return CyclotomicNumber(1, (Fraction(x),), _raw=True)

    # -- structure ------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, Fraction]:
        """Nonzero power-basis coefficients at the conductor."""
        return {i: c for i, c in enumerate(self._vec) if c}

    @property
    def is_rational(self) -> bool:
        return self.order == 1

    @property
    def rational_value(self) -> Fraction:
        if self.order != 1:
            raise InputError(f"{self!r} is not rational")
        return self._vec[0]

    @property
    def is_integer(self) -> bool:
        return self.order == 1 and self._vec[0].denominator == 1

    def sort_key(self):
        """Total order on canonical forms, used for canonical orbit picks."""
        return (self.order, tuple((i, c.numerator, c.denominator) for i, c in enumerate(self._vec)))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.rational(other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self.order == other.order and self._vec == other._vec

    def __hash__(self):
        return hash((self.order, self._vec))

    def __bool__(self):
        return any(self._vec)

    # -- arithmetic -----------------------------------------------------

    def _terms_at(self, n: int) -> dict[int, Fraction]:
        step = n // self.order
        return {i * step: c for i, c in enumerate(self._vec) if c}

    @staticmethod
    def _coerce(x) -> "CyclotomicNumber":
        if isinstance(x, CyclotomicNumber):
            return x
        if isinstance(x, (int, Fraction)):
            return CyclotomicNumber.rational(x)
        raise TypeError(f"cannot mix CyclotomicNumber with {type(x).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        n = math.lcm(self.order, other.order)
        terms = self._terms_at(n)
        for e, c in other._terms_at(n).items():
            terms[e] = terms.get(e, _ZERO) + c
        order, vec = _canonical(n, terms)
        return CyclotomicNumber(order, vec, _raw=True)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, tuple(-c for c in self._vec), _raw=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other.order == 1:
            c = other._vec[0]
            if not c:
                return CyclotomicNumber.rational(0)
            return CyclotomicNumber(self.order, tuple(v * c for v in self._vec), _raw=True)
        if self.order == 1:
            return other * self
        n = math.lcm(self.order, other.order)
        a = self._terms_at(n)
        b = other._terms_at(n)
        terms: dict[int, Fraction] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = (e1 + e2) % n
                terms[e] = terms.get(e, _ZERO) + c1 * c2
        order, vec = _canonical(n, terms)
        return CyclotomicNumber(order, vec, _raw=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InputError("negative powers are not supported")
        result = CyclotomicNumber.rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- presentation ---------------------------------------------------

    def __repr__(self):
        if self.order == 1:
            return f"Cyc({self._vec[0]})"
        inner = ", ".join(f"{i}: {c}" for i, c in self.coeffs.items())
        return f"Cyc(n={self.order}, {{{inner}}})"

    def approx(self) -> complex:
        """Complex embedding zeta_N = exp(2 pi i / N); debugging only."""
        z = 0j
        for i, c in enumerate(self._vec):
            z += float(c) * cmath.exp(2j * cmath.pi * i / self.order)
        return z


def zeta(n: int, k: int = 1) -> CyclotomicNumber:
    """The root of unity zeta_n^k."""
    return CyclotomicNumber.make(n, {k: 1})


def make(n: int, terms: dict[int, Fraction | int]) -> CyclotomicNumber:
    return CyclotomicNumber.make(n, terms)


def galois_apply(z: CyclotomicNumber, k: int) -> CyclotomicNumber:
    """Image of z under the field map zeta -> zeta^k.

    k must be coprime to the conductor of z; the map is applied as k mod
    conductor, so a residue modulo any multiple of the conductor is fine.
    """
    n = z.order
    if n == 1:
        return z
    k %= n
    if math.gcd(k, n) != 1:
        raise InputError(f"galois_apply needs gcd(k, {n}) = 1, got k = {k}")
    vec = _apply_unit(n, list(z._vec), k)
    # conductor is Galois-invariant, so the reduced vector is canonical
    return CyclotomicNumber(n, tuple(vec), _raw=True)


def conjugate(z: CyclotomicNumber) -> CyclotomicNumber:
    """Complex conjugation, the Galois map zeta -> zeta^(-1)."""
    return galois_apply(z, -1)


def field_class(values) -> FieldClass:
    """Classify the field generated over Q by a batch of values."""
    vals = [CyclotomicNumber._coerce(v) for v in values]
    if not vals:
        raise InputError("field_class needs at least one value")
    n = 1
    for v in vals:
        n = math.lcm(n, v.order)
    if n == 1:
        return FieldClass.RATIONAL
    units = units_mod(n)
    stab = sum(1 for k in units if all(galois_apply(v, k) == v for v in vals))
    degree = len(units) // stab
    real = all(conjugate(v) == v for v in vals)
    if degree == 1:
        return FieldClass.RATIONAL
    if real:
        return FieldClass.REAL_NONRATIONAL
    if degree == 2:
        return FieldClass.IMAGINARY_QUADRATIC
    return FieldClass.OTHER_COMPLEX


# -- text encoding ------------------------------------------------------

def value_to_obj(z: CyclotomicNumber):
    """JSON-ready form: a rational string, or {"n": N, "coeffs": {...}}."""
    if z.order == 1:
        return str(z.rational_value)
    return {"n": z.order, "coeffs": {str(e): str(c) for e, c in z.coeffs.items()}}


def value_from_obj(obj) -> CyclotomicNumber:
    """Parse the encoding produced by value_to_obj; also accepts bare ints."""
    if isinstance(obj, bool):
        raise InputError("boolean is not a cyclotomic value")
    if isinstance(obj, int):
        return CyclotomicNumber.rational(obj)
    if isinstance(obj, str):
        try:
            return CyclotomicNumber.rational(Fraction(obj))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational literal {obj!r}: {exc}") from None
    if isinstance(obj, dict):
        try:
            n = int(obj["n"])
            coeffs = {int(e): Fraction(c) for e, c in obj["coeffs"].items()}
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad cyclotomic object {obj!r}: {exc}") from None
        return CyclotomicNumber.make(n, coeffs)
    raise InputError(f"cannot parse cyclotomic value from {type(obj).__name__}")


def value_to_text(z: CyclotomicNumber) -> str:
    return json.dumps(value_to_obj(z), sort_keys=True)


def value_from_text(text: str) -> CyclotomicNumber:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        obj = text.strip()
    return value_from_obj(obj)
