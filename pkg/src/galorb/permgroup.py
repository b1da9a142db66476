"""Permutation groups, conjugacy classes, and power-map fusion data.

Permutations on n points are tuples p of length n with p[i] the image of
i; composition pmul(p, q) applies q first.  Group input is a finite
generating set wrapped in a GroupSpec.  The class data consumed by the
rest of the package is a ClassStructure: sizes, element orders, the
inverse permutation on classes, and for each class the map recording
where coprime power maps send it, keyed by residues modulo the element
order.

Orders come from a stabilizer chain, classes from explicit element
enumeration when the group is small enough and from a seeded random
search otherwise.  Alternating and cyclic groups also get direct
combinatorial constructions that bypass element lists entirely.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError, ResourceLimitError
from .numutil import units_mod

MAX_DEGREE = 256

# -- permutation primitives ---------------------------------------------


def identity_perm(degree: int) -> tuple[int, ...]:
    return tuple(range(degree))


def pmul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Composition: apply q, then p."""
    return tuple(p[x] for x in q)


def pinv(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def ppow(p: tuple[int, ...], k: int) -> tuple[int, ...]:
    if k < 0:
        return ppow(pinv(p), -k)
    result = identity_perm(len(p))
    base = p
    while k:
        if k & 1:
            result = pmul(result, base)
        base = pmul(base, base)
        k >>= 1
    return result


def cycles(p: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Nontrivial cycles, each starting at its least point, ascending."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        out.append(tuple(cyc))
    return tuple(out)


def perm_order(p: tuple[int, ...]) -> int:
    o = 1
    for c in cycles(p):
        o = math.lcm(o, len(c))
    return o


def parity(p: tuple[int, ...]) -> int:
    """0 for even, 1 for odd."""
    return sum(len(c) - 1 for c in cycles(p)) % 2


# -- group input --------------------------------------------------------


@dataclass(frozen=True)
class GroupSpec:
    """A generating set for a permutation group on range(degree)."""

    degree: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not isinstance(self.degree, int) or not 1 <= self.degree <= MAX_DEGREE:
            raise InputError(f"degree must be in 1..{MAX_DEGREE}, got {self.degree!r}")
        if not self.generators:
            raise InputError("at least one generator required; () denotes the identity")
        for g in self.generators:
            if len(g) != self.degree or sorted(g) != list(range(self.degree)):
                raise InputError(f"not a permutation of {self.degree} points: {g!r}")


def parse_generators(text: str) -> GroupSpec:
    """Read a generator file: a "degree n" header, then one permutation
    per line as a product of disjoint cycles in 1-based points, e.g.
    (1,2,3)(4,5).  "()" is the identity; blank lines and # comments are
    skipped."""
    degree = None
    gens = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree" or not parts[1].isdigit():
                raise InputError(f"line {ln}: expected 'degree n' header, got {line!r}")
            degree = int(parts[1])
            if not 1 <= degree <= MAX_DEGREE:
                raise InputError(f"line {ln}: degree must be in 1..{MAX_DEGREE}")
            continue
        gens.append(_parse_cycle_line(line, ln, degree))
    if degree is None:
        raise InputError("missing 'degree n' header")
    if not gens:
        raise InputError("no generators; give () for the trivial group")
    return GroupSpec(degree=degree, generators=tuple(gens))


def _parse_cycle_line(line: str, ln: int, degree: int) -> tuple[int, ...]:
    if line.count("(") != line.count(")") or not line.startswith("("):
        raise InputError(f"line {ln}: malformed cycle notation {line!r}")
    perm = list(range(degree))
    used = set()
    body = line.replace(" ", "")
    pos = 0
    while pos < len(body):
        if body[pos] != "(":
            raise InputError(f"line {ln}: expected '(' at position {pos + 1}")
        end = body.find(")", pos)
        if end < 0:
            raise InputError(f"line {ln}: unclosed cycle")
        inner = body[pos + 1:end]
        pos = end + 1
        if not inner:
            continue  # () is the identity factor
        pts = []
        for tok in inner.split(","):
            if not tok.isdigit():
                raise InputError(f"line {ln}: bad point {tok!r}")
            x = int(tok)
            if not 1 <= x <= degree:
                raise InputError(f"line {ln}: point {x} outside 1..{degree}")
            if x - 1 in used:
                raise InputError(f"line {ln}: point {x} repeated; cycles must be disjoint")
            used.add(x - 1)
            pts.append(x - 1)
        if len(pts) < 2:
            raise InputError(f"line {ln}: cycle needs at least two points")
        for i, x in enumerate(pts):
            perm[x] = pts[(i + 1) % len(pts)]
    return tuple(perm)


def format_generators(spec: GroupSpec) -> str:
    lines = [f"degree {spec.degree}"]
    for g in spec.generators:
        cycs = cycles(g)
        if not cycs:
            lines.append("()")
        else:
            lines.append("".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cycs))
    return "\n".join(lines) + "\n"


# -- stabilizer chain ---------------------------------------------------


class _Chain:
    """Stabilizer chain maintained with deterministic Schreier-Sims.

    strong generators live in one list; the level-i generating set is
    the subset fixing base[:i] pointwise.  Levels are completed deepest
    first, so a residue added below never invalidates a level already
    verified above it.
    """

    def __init__(self, degree: int, max_order: int):
        self.degree = degree
        self.max_order = max_order
        self.identity = identity_perm(degree)
        self.base: list[int] = []
        self.sgens: list[tuple[int, ...]] = []
        self.transversal: list[dict[int, tuple[int, ...]]] = []

    def order(self) -> int:
        o = 1
        for t in self.transversal:
            o *= len(t)
        return o

    def _strong_at(self, level: int) -> list[tuple[int, ...]]:
        prefix = self.base[:level]
        return [g for g in self.sgens if all(g[b] == b for b in prefix)]

    def sift(self, g: tuple[int, ...], start: int = 0):
        """Reduce g through levels start..; returns (residue, level reached)."""
        for i in range(start, len(self.base)):
            x = g[self.base[i]]
            u = self.transversal[i].get(x)
            if u is None:
                return g, i
            g = pmul(pinv(u), g)
        return g, len(self.base)

    def contains(self, g: tuple[int, ...]) -> bool:
        res, _ = self.sift(g)
        return res == self.identity

    def insert(self, g: tuple[int, ...]) -> bool:
        res, level = self.sift(g)
        if res == self.identity:
            return False
        self._add_residue(res, level)
        for i in range(level, -1, -1):
            self._complete_level(i)
        return True

    def _add_residue(self, res: tuple[int, ...], level: int):
        # res fixes base[:level]; give it a base point if none is moved yet
        if level == len(self.base):
            b = min(x for x in range(self.degree) if res[x] != x)
            self.base.append(b)
            self.transversal.append({b: self.identity})
        self.sgens.append(res)

    def _complete_level(self, i: int):
        gens = self._strong_at(i)
        b = self.base[i]
        t = {b: self.identity}
        queue = [b]
        while queue:
            x = queue.pop()
            ux = t[x]
            for g in gens:
                y = g[x]
                if y not in t:
                    t[y] = pmul(g, ux)
                    queue.append(y)
        self.transversal[i] = t
        if self.order() > self.max_order:
            raise ResourceLimitError(
                f"group order exceeds the limit {self.max_order}")
        for x in list(t):
            ux = t[x]
            for g in gens:
                s = pmul(pinv(t[g[x]]), pmul(g, ux))
                if s == self.identity:
                    continue
                res, j = self.sift(s, i + 1)
                if res == self.identity:
                    continue
                self._add_residue(res, j)
                stop = min(j, len(self.base) - 1)
                for l in range(stop, i, -1):
                    self._complete_level(l)


def _build_chain(spec: GroupSpec, max_order: int) -> _Chain:
    chain = _Chain(spec.degree, max_order)
    for g in spec.generators:
        chain.insert(g)
    return chain


def group_order(spec: GroupSpec, max_order: int = 200_000_000) -> int:
    """Order of the generated group; ResourceLimitError beyond max_order."""
    return _build_chain(spec, max_order).order()


# -- conjugacy class data -----------------------------------------------


@dataclass(frozen=True, eq=True)
class ClassStructure:
    """Conjugacy class data of a finite group.

    Classes are indexed 0..n-1 with the identity class at index 0.
    fusion[c] maps each unit residue k modulo orders[c] to the index of
    the class of k-th powers of class c; the trivial class uses the
    single key 0.  labels are human-facing and carry no semantics.
    """

    group_order: int
    exponent: int
    sizes: tuple[int, ...]
    orders: tuple[int, ...]
    inverse_map: tuple[int, ...]
    fusion: tuple[dict[int, int], ...]
    labels: tuple[str, ...]
    reps: tuple = ()

    @property
    def num_classes(self) -> int:
        return len(self.sizes)

    def validate(self):
        n = self.num_classes
        if not (len(self.orders) == len(self.inverse_map) == len(self.fusion)
                == len(self.labels) == n):
            raise InputError("class structure fields disagree in length")
        if sum(self.sizes) != self.group_order:
            raise InputError("class sizes do not sum to the group order")
        if self.orders[0] != 1 or self.sizes[0] != 1:
            raise InputError("class 0 must be the trivial class")
        exp = 1
        for o in self.orders:
            exp = math.lcm(exp, o)
        if exp != self.exponent:
            raise InputError("exponent is not the lcm of element orders")
        for c in range(n):
            ci = self.inverse_map[c]
            if not 0 <= ci < n or self.inverse_map[ci] != c:
                raise InputError(f"inverse map is not an involution at class {c}")
            if self.orders[ci] != self.orders[c] or self.sizes[ci] != self.sizes[c]:
                raise InputError(f"inverse class of {c} has different invariants")
            m = self.orders[c]
            fus = self.fusion[c]
            if tuple(sorted(fus)) != units_mod(m):
                raise InputError(f"fusion keys of class {c} are not the units mod {m}")
            one = 0 if m == 1 else 1 % m
            if fus[one] != c:
                raise InputError(f"fusion of class {c} does not fix k = 1")
            for k, d in fus.items():
                if self.orders[d] != m or self.sizes[d] != self.sizes[c]:
                    raise InputError(
                        f"fusion image {d} of class {c} has different invariants")
            if m > 2 and fus[m - 1] != ci:
                raise InputError(f"fusion at -1 disagrees with inversion at class {c}")
        return self


def _labels_for(keys: list, lower: bool = False) -> tuple[str, ...]:
    """Spreadsheet-letter labels per element order, in listed sequence."""
    out = []
    counters: dict[int, int] = {}
    for order in keys:
        i = counters.get(order, 0)
        counters[order] = i + 1
        letters = ""
        j = i
        while True:
            letters = chr(ord("A") + j % 26) + letters
            j = j // 26 - 1
            if j < 0:
                break
        out.append(f"{order}{letters.lower() if lower else letters}")
    return tuple(out)


def _structure_from_classes(order, class_sets, elem_class, reps):
    """Assemble a ClassStructure from explicit class element sets."""
    perm_sort = sorted(range(len(reps)),
                       key=lambda c: (perm_order(reps[c]), len(class_sets[c]), reps[c]))
    newpos = {old: new for new, old in enumerate(perm_sort)}
    reps = [reps[c] for c in perm_sort]
    sizes = tuple(len(class_sets[c]) for c in perm_sort)
    orders = tuple(perm_order(r) for r in reps)
    exponent = 1
    for o in orders:
        exponent = math.lcm(exponent, o)
    inverse_map = tuple(newpos[elem_class[pinv(r)]] for r in reps)
    fusion = []
    for c, r in enumerate(reps):
        m = orders[c]
        fus = {}
        for k in units_mod(m):
            fus[k] = newpos[elem_class[ppow(r, k)]] if m > 1 else c
        fusion.append(fus)
    cs = ClassStructure(
        group_order=order,
        exponent=exponent,
        sizes=sizes,
        orders=orders,
        inverse_map=inverse_map,
        fusion=tuple(fusion),
        labels=_labels_for(list(orders)),
        reps=tuple(reps),
    )
    return cs.validate()


def _enumerate_elements(spec: GroupSpec, order: int) -> list[tuple[int, ...]]:
    e = identity_perm(spec.degree)
    seen = {e}
    queue = [e]
    while queue:
        x = queue.pop()
        for g in spec.generators:
            y = pmul(g, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if len(seen) != order:
        raise AssertionError("enumeration disagrees with the stabilizer chain")
    return sorted(seen)


def _class_of(x, gens):
    cls = {x}
    queue = [x]
    while queue:
        y = queue.pop()
        for g in gens:
            z = pmul(pmul(g, y), pinv(g))
            if z not in cls:
                cls.add(z)
                queue.append(z)
    return cls


@lru_cache(maxsize=32)
def _conjugacy_classes_cached(spec: GroupSpec, max_order: int, enum_limit: int,
                              seed: int) -> ClassStructure:
    order = group_order(spec, max_order)
    if order * spec.degree > 100_000_000:
        raise ResourceLimitError(
            f"class computation for order {order} on {spec.degree} points "
            "would exhaust memory")
    gens = spec.generators
    class_sets = []
    reps = []
    elem_class: dict[tuple[int, ...], int] = {}

    if order <= enum_limit:
        for x in _enumerate_elements(spec, order):
            if x in elem_class:
                continue
            # x is minimal among unassigned elements, hence in its class
            cls = _class_of(x, gens)
            idx = len(class_sets)
            class_sets.append(cls)
            reps.append(x)
            for y in cls:
                elem_class[y] = idx
    else:
        rng = random.Random(seed)
        covered = 0
        cur = identity_perm(spec.degree)
        while covered < order:
            if cur not in elem_class:
                cls = _class_of(cur, gens)
                if order % len(cls):
                    raise AssertionError("class size does not divide the group order")
                idx = len(class_sets)
                class_sets.append(cls)
                reps.append(min(cls))
                for y in cls:
                    elem_class[y] = idx
                covered += len(cls)
            for _ in range(rng.randrange(1, 4)):
                cur = pmul(rng.choice(gens), cur)

    return _structure_from_classes(order, class_sets, elem_class, reps)


def conjugacy_classes(spec: GroupSpec, *, max_order: int = 200_000_000,
                      enum_limit: int = 1_000_000, seed: int = 0) -> ClassStructure:
    """Conjugacy class data of the group generated by spec.

    Groups of order at most enum_limit are enumerated outright; larger
    ones are covered class by class from a seeded random walk, stopping
    when the class sizes account for the whole order.  Either way the
    result is deterministic: classes are sorted by (element order, size,
    least element) and representatives are the least elements.
    """
    return _conjugacy_classes_cached(spec, max_order, enum_limit, seed)


# -- direct constructions -----------------------------------------------


def cyclic_group_spec(m: int) -> GroupSpec:
    if m < 1 or m > MAX_DEGREE:
        raise InputError(f"cyclic order must be in 1..{MAX_DEGREE}")
    return GroupSpec(degree=m, generators=(tuple(range(1, m)) + (0,),) if m > 1
                     else (identity_perm(1),))


def symmetric_group_spec(n: int) -> GroupSpec:
    if n < 2 or n > MAX_DEGREE:
        raise InputError(f"symmetric degree must be in 2..{MAX_DEGREE}")
    ncycle = tuple(range(1, n)) + (0,)
    swap = (1, 0) + tuple(range(2, n))
    return GroupSpec(degree=n, generators=(swap, ncycle))


def alternating_group_spec(n: int) -> GroupSpec:
    if n < 3 or n > MAX_DEGREE:
        raise InputError(f"alternating degree must be in 3..{MAX_DEGREE}")
    three = (1, 2, 0) + tuple(range(3, n))
    if n % 2:
        big = tuple(range(1, n)) + (0,)  # n-cycle, even for odd n
    else:
        big = (0,) + tuple(range(2, n)) + (1,)  # (n-1)-cycle on 1..n-1
    return GroupSpec(degree=n, generators=(three, big))


def cyclic_class_structure(m: int) -> ClassStructure:
    """Class data of the cyclic group of order m, no permutations involved."""
    if m < 1:
        raise InputError("cyclic order must be positive")
    elems = sorted(range(m), key=lambda j: (m // math.gcd(m, j), j))
    pos = {j: c for c, j in enumerate(elems)}
    orders = tuple(m // math.gcd(m, j) for j in elems)
    fusion = []
    for c, j in enumerate(elems):
        d = orders[c]
        fusion.append({k: pos[j * k % m] for k in units_mod(d)} if d > 1 else {0: c})
    cs = ClassStructure(
        group_order=m,
        exponent=m,
        sizes=(1,) * m,
        orders=orders,
        inverse_map=tuple(pos[-j % m] for j in elems),
        fusion=tuple(fusion),
        labels=_labels_for(list(orders)),
        reps=tuple(elems),
    )
    return cs.validate()


def _even_partitions(n: int):
    """Partitions of n with an even number of even parts, parts decreasing."""
    out = []

    def rec(remaining, maxpart, acc, evens):
        if remaining == 0:
            if evens % 2 == 0:
                out.append(tuple(acc))
            return
        for part in range(min(maxpart, remaining), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc, evens + (1 - part % 2))
            acc.pop()

    rec(n, n, [], 0)
    return out


def _partition_perm(parts: tuple[int, ...], n: int) -> tuple[int, ...]:
    perm = list(range(n))
    start = 0
    for p in parts:
        for i in range(p):
            perm[start + i] = start + (i + 1) % p
        start += p
    return tuple(perm)


def _conjugator_parity(g, h, parts, n) -> int:
    """Parity of some c with c g c^(-1) = h, for distinct odd cycle type.

    The centralizer of g is generated by its own cycles, all of odd
    length, so the parity does not depend on the choice of c.
    """
    by_len_h = {len(c): c for c in cycles(h)}
    c = list(range(n))
    for gc in cycles(g):
        hc = by_len_h[len(gc)]
        for i, x in enumerate(gc):
            c[x] = hc[i]
    cp = tuple(c)
    if sorted(cp) != list(range(n)) or pmul(pmul(cp, g), pinv(cp)) != h:
        raise AssertionError("cycle matching failed to produce a conjugator")
    return parity(cp)


def alternating_class_structure(n: int) -> ClassStructure:
    """Class data of the alternating group on n points, 5 <= n <= 40,
    built from cycle types without touching group elements.

    A class is a partition of n with evenly many even parts; it splits
    into a pair exactly when the parts are odd and distinct.  Power-map
    fusion inside a split pair is decided by the parity of a conjugating
    permutation between a representative and its power.
    """
    if not 5 <= n <= 40:
        raise InputError(f"alternating class data supports 5 <= n <= 40, got {n}")
    nfact = math.factorial(n)
    records = []  # (order, size, parts, half, fusion_swap or None)
    for parts in _even_partitions(n):
        z = 1
        run = None
        mult = 0
        for p in parts + (0,):
            if p == run:
                mult += 1
            else:
                if run is not None:
                    z *= run ** mult * math.factorial(mult)
                run, mult = p, 1
        size = nfact // z
        order = math.lcm(*parts)
        split = all(p % 2 for p in parts) and len(set(parts)) == len(parts)
        if not split:
            records.append((order, size, parts, 0, None))
            continue
        if size % 2:
            raise AssertionError("split class size must be even")
        g = _partition_perm(parts, n)
        swap = {}
        for k in units_mod(order) if order > 1 else (0,):
            if order == 1:
                swap[0] = 0
                continue
            swap[k] = _conjugator_parity(g, ppow(g, k), parts, n)
        records.append((order, size // 2, parts, 0, swap))
        records.append((order, size // 2, parts, 1, swap))

    records.sort(key=lambda r: (r[0], r[1], r[2], r[3]))
    pos = {(r[2], r[3]): c for c, r in enumerate(records)}
    orders = tuple(r[0] for r in records)
    sizes = tuple(r[1] for r in records)
    fusion = []
    inverse_map = []
    for order, _size, parts, half, swap in records:
        if swap is None:
            fus = ({k: pos[(parts, 0)] for k in units_mod(order)} if order > 1
                   else {0: pos[(parts, 0)]})
            inverse_map.append(pos[(parts, 0)])
        else:
            fus = {k: pos[(parts, half ^ s)] for k, s in swap.items()}
            inv_k = order - 1 if order > 1 else 0
            inverse_map.append(fus[inv_k])
        fusion.append(fus)
    exponent = 1
    for o in orders:
        exponent = math.lcm(exponent, o)
    cs = ClassStructure(
        group_order=nfact // 2,
        exponent=exponent,
        sizes=sizes,
        orders=orders,
        inverse_map=tuple(inverse_map),
        fusion=tuple(fusion),
        labels=_labels_for(list(orders), lower=True),
        reps=tuple((r[2], r[3]) for r in records),
    )
    return cs.validate()
