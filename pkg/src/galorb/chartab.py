"""Character tables: ingestion, validation, and Galois-orbit analyses.

A table is a square matrix of exact cyclotomic values, rows indexed by
irreducible characters and columns by conjugacy classes, together with
the class sizes and (optionally) the element orders per class.  Row
orthogonality is the validation oracle: every shipped or ingested table
must satisfy it exactly, which pins down the matrix up to row and column
permutations.

Two analyses mirror the class-side computations: the central-unit rank
from row data (real rows, conjugate pairs, Galois orbits of rows) and
the longest Galois family of columns.  When a ClassStructure for the
same group is available, the Brauer permutation lemma ties the two sides
together check by check.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources

from .classtheory import analyze, q_classes
from .cyclotomic import (
    CyclotomicNumber,
    FieldClass,
    conjugate,
    field_class,
    galois_apply,
    value_from_obj,
    value_to_obj,
)
from .errors import DegenerateTableError, InputError
from .numutil import units_mod
from .permgroup import ClassStructure

Row = tuple[CyclotomicNumber, ...]


@dataclass(frozen=True)
class CharacterTable:
    """Validated exact character table; immutable after construction."""

    name: str
    group_order: int
    class_sizes: tuple[int, ...]
    class_orders: tuple[int, ...] | None
    irr: tuple[Row, ...]
    classes: ClassStructure | None = None

    @property
    def num_classes(self) -> int:
        return len(self.class_sizes)

    def validate(self) -> "CharacterTable":
        n = self.num_classes
        if len(self.irr) != n:
            raise InputError(
                f"table {self.name!r}: {len(self.irr)} rows for {n} columns")
        for i, row in enumerate(self.irr):
            if len(row) != n:
                raise InputError(f"table {self.name!r}: row {i} has {len(row)} entries")
        if any(s < 1 for s in self.class_sizes):
            raise InputError(f"table {self.name!r}: class sizes must be positive")
        if self.class_sizes[0] != 1:
            raise InputError(f"table {self.name!r}: column 0 must be the identity class")
        if self.class_orders is not None:
            if len(self.class_orders) != n:
                raise InputError(f"table {self.name!r}: class_orders length mismatch")
            if self.class_orders[0] != 1 or any(o < 1 for o in self.class_orders):
                raise InputError(
                    f"table {self.name!r}: class_orders must be positive with "
                    "the identity first")
        degsq = 0
        for i, row in enumerate(self.irr):
            d = row[0]
            if not d.is_integer or d.rational_value < 1:
                raise InputError(
                    f"table {self.name!r}: degree of row {i} is not a positive integer")
            degsq += int(d.rational_value) ** 2
        if degsq != self.group_order or sum(self.class_sizes) != self.group_order:
            raise InputError(
                f"table {self.name!r}: degree squares sum to {degsq} and sizes to "
                f"{sum(self.class_sizes)}, group order is {self.group_order}")
        e = table_exponent(self)
        for i, row in enumerate(self.irr):
            for z in row:
                if e % z.order:
                    raise InputError(
                        f"table {self.name!r}: row {i} has a value of conductor "
                        f"{z.order}, not dividing the exponent {e}")
        for i in range(len(self.irr)):
            for j in range(i, len(self.irr)):
                total = CyclotomicNumber.rational(0)
                for s, a, b in zip(self.class_sizes, self.irr[i], self.irr[j]):
                    total = total + s * (a * conjugate(b))
                want = self.group_order if i == j else 0
                if total != want:
                    raise InputError(
                        f"table {self.name!r}: rows {i} and {j} violate "
                        f"orthogonality (got {total!r}, want {want})")
        return self


def table_exponent(t: CharacterTable) -> int:
    """lcm of class element orders, or of value conductors when the
    orders are not recorded.  The fallback can be a proper divisor of
    the group exponent (rational tables give 1), but the Galois action
    on values factors through it, so every orbit computation here is
    unchanged."""
    if t.class_orders is not None:
        e = 1
        for o in t.class_orders:
            e = math.lcm(e, o)
        return e
    e = 1
    for row in t.irr:
        for z in row:
            e = math.lcm(e, z.order)
    return e


# -- parsing ------------------------------------------------------------


def parse_table(text: str, name: str | None = None) -> CharacterTable:
    """Parse and validate the JSON table format."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise InputError("table file must hold a JSON object")
    try:
        tname = str(obj["name"]) if name is None else name
        order = obj["order"]
        sizes = obj["class_sizes"]
        irr = obj["irr"]
    except KeyError as exc:
        raise InputError(f"missing table field {exc.args[0]!r}") from None
    orders = obj.get("class_orders")
    if not isinstance(order, int) or isinstance(order, bool):
        raise InputError("'order' must be an integer")
    if not isinstance(sizes, list) or not all(
            isinstance(s, int) and not isinstance(s, bool) for s in sizes):
        raise InputError("'class_sizes' must be a list of integers")
    if orders is not None and (not isinstance(orders, list) or not all(
            isinstance(o, int) and not isinstance(o, bool) for o in orders)):
        raise InputError("'class_orders' must be a list of integers")
    if not isinstance(irr, list) or not all(isinstance(r, list) for r in irr):
        raise InputError("'irr' must be a list of rows")
    rows = []
    for i, r in enumerate(irr):
        row = []
        for j, v in enumerate(r):
            try:
                row.append(value_from_obj(v))
            except InputError as exc:
                raise InputError(f"row {i}, column {j}: {exc}") from None
        rows.append(tuple(row))
    table = CharacterTable(
        name=tname,
        group_order=order,
        class_sizes=tuple(sizes),
        class_orders=tuple(orders) if orders is not None else None,
        irr=tuple(rows),
    )
    return table.validate()


def serialize_table(t: CharacterTable) -> str:
    """Canonical JSON rendering; parse(serialize(t)) round-trips exactly."""
    obj = {
        "name": t.name,
        "order": t.group_order,
        "class_sizes": list(t.class_sizes),
        "irr": [[value_to_obj(z) for z in row] for row in t.irr],
    }
    if t.class_orders is not None:
        obj["class_orders"] = list(t.class_orders)
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def fixture_names() -> tuple[str, ...]:
    root = resources.files("galorb") / "tables"
    return tuple(sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json")))


def fixture_table(name: str) -> CharacterTable:
    path = resources.files("galorb") / "tables" / f"{name}.json"
    try:
        text = path.read_text()
    except FileNotFoundError:
        raise InputError(f"no shipped table named {name!r}; "
                         f"available: {', '.join(fixture_names())}") from None
    return parse_table(text)


# -- row-side analysis --------------------------------------------------


def _row_key(row: Row):
    return tuple(z.sort_key() for z in row)


def _apply_row(row: Row, k: int) -> Row:
    return tuple(galois_apply(z, k) for z in row)


def _exponent_units(e: int) -> tuple[int, ...]:
    return (1,) if e == 1 else units_mod(e)


def real_row_count(t: CharacterTable) -> int:
    """Rows fixed entrywise by complex conjugation."""
    return sum(1 for row in t.irr if _apply_row(row, -1) == row)


def _row_orbit_keys(t: CharacterTable) -> list:
    """Canonical key per row: least image over the whole Galois action."""
    e = table_exponent(t)
    keys = []
    for row in t.irr:
        best = min(_row_key(_apply_row(row, k)) for k in _exponent_units(e))
        keys.append(best)
    return keys


def rank_of_central_units(t: CharacterTable) -> int:
    """Central-unit rank from row data: real rows count once, conjugate
    pairs count half, minus one per Galois orbit of rows."""
    n = len(t.irr)
    h_r = real_row_count(t)
    if (n - h_r) % 2:
        raise InputError(f"table {t.name!r}: non-real rows do not pair up")
    n_orbits = len(set(_row_orbit_keys(t)))
    return h_r + (n - h_r) // 2 - n_orbits


# -- column-side analysis -----------------------------------------------


def _column(t: CharacterTable, c: int) -> Row:
    return tuple(row[c] for row in t.irr)


def _column_maps(t: CharacterTable) -> dict[int, tuple[int, ...]]:
    """For each unit k mod the exponent, the permutation of columns
    induced by applying the Galois map entrywise."""
    n = t.num_classes
    cols = [_column(t, c) for c in range(n)]
    index = {}
    for c, col in enumerate(cols):
        key = _row_key(col)
        if key in index:
            raise DegenerateTableError(
                f"table {t.name!r}: degenerate table, columns {index[key]} "
                f"and {c} are identical")
        index[key] = c
    e = table_exponent(t)
    maps = {}
    for k in _exponent_units(e):
        images = []
        for c, col in enumerate(cols):
            key = _row_key(tuple(galois_apply(z, k) for z in col))
            if key not in index:
                raise InputError(
                    f"table {t.name!r}: image of column {c} under the Galois "
                    f"map k = {k} matches no column")
            images.append(index[key])
        maps[k] = tuple(images)
    return maps


def column_families(t: CharacterTable) -> tuple[tuple[int, ...], ...]:
    """Partition of columns into Galois families, ordered by least member."""
    n = t.num_classes
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for images in _column_maps(t).values():
        for c, d in enumerate(images):
            rc, rd = find(c), find(d)
            if rc != rd:
                parent[max(rc, rd)] = min(rc, rd)
    groups: dict[int, list[int]] = {}
    for c in range(n):
        groups.setdefault(find(c), []).append(c)
    return tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))


def max_galois_orbit_length(t: CharacterTable) -> int:
    """Size of the largest Galois family of columns; 1 on rational tables."""
    return max(len(fam) for fam in column_families(t))


# -- field-side analysis ------------------------------------------------


def b_set_quantities(t: CharacterTable) -> tuple[tuple[int, ...], int, int]:
    """Rows whose value field is neither rational nor imaginary
    quadratic, with conjugation-orbit and Galois-orbit counts inside
    that set; the rank identities are asserted."""
    keep = []
    for i, row in enumerate(t.irr):
        if field_class(row) not in (FieldClass.RATIONAL, FieldClass.IMAGINARY_QUADRATIC):
            keep.append(i)
    orbit_keys = _row_orbit_keys(t)
    b2 = len({orbit_keys[i] for i in keep})
    conj_keys = {}
    for i in keep:
        conj_keys[i] = min(_row_key(t.irr[i]), _row_key(_apply_row(t.irr[i], -1)))
    b1 = len(set(conj_keys.values()))
    rank = rank_of_central_units(t)
    if rank != b1 - b2:
        raise AssertionError(f"table {t.name!r}: rank {rank} != b1 - b2 = {b1 - b2}")
    if 2 * b2 > b1:
        raise AssertionError(f"table {t.name!r}: 2*b2 = {2 * b2} exceeds b1 = {b1}")
    return tuple(keep), b1, b2


def cut_by_character_fields(t: CharacterTable) -> bool:
    """True when every row generates a rational or imaginary quadratic
    field; asserted equivalent to central-unit rank zero."""
    flat = all(
        field_class(row) in (FieldClass.RATIONAL, FieldClass.IMAGINARY_QUADRATIC)
        for row in t.irr)
    if flat != (rank_of_central_units(t) == 0):
        raise AssertionError(
            f"table {t.name!r}: field criterion disagrees with the rank")
    return flat


@dataclass(frozen=True)
class CharReport:
    """Row-side summary of one table."""

    h_R: int
    rank_eq1: int
    f_table: int
    b1: int
    b2: int
    cut_by_fields: bool


def char_report(t: CharacterTable) -> CharReport:
    h_r = real_row_count(t)
    rank = rank_of_central_units(t)
    _b, b1, b2 = b_set_quantities(t)
    return CharReport(
        h_R=h_r,
        rank_eq1=rank,
        f_table=max_galois_orbit_length(t),
        b1=b1,
        b2=b2,
        cut_by_fields=cut_by_character_fields(t),
    )


# -- Brauer cross-checks ------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class CrosscheckReport:
    table_name: str
    passed: bool
    checks: tuple[CheckResult, ...]


def brauer_crosscheck(t: CharacterTable, cs: ClassStructure) -> CrosscheckReport:
    """Tie the row side of a table to an independently computed class
    structure for the same group, columns aligned to classes.

    Four checks: per-map fixed rows equal fixed classes; row orbits
    equal class families in number; the induced column permutation of
    every Galois map equals the class fusion permutation (and therefore
    the partitions agree); and both rank computations agree.  Alignment
    failures (sizes, orders, group order) are input errors; check
    failures are reported, not raised.
    """
    if t.num_classes != cs.num_classes:
        raise InputError(
            f"table has {t.num_classes} columns, class data has {cs.num_classes}")
    if t.group_order != cs.group_order:
        raise InputError(
            f"table group order {t.group_order} != class-side {cs.group_order}")
    if t.class_sizes != cs.sizes:
        raise InputError("columnwise class sizes disagree; columns misaligned")
    if t.class_orders is not None and t.class_orders != cs.orders:
        raise InputError("columnwise element orders disagree; columns misaligned")
    e = cs.exponent
    te = table_exponent(t)
    if e % te:
        raise InputError(
            f"table exponent {te} does not divide the group exponent {e}")

    checks = []
    units = _exponent_units(e)

    bad = []
    for k in units:
        fixed_rows = sum(1 for row in t.irr if _apply_row(row, k) == row)
        fixed_cols = sum(
            1 for c in range(cs.num_classes)
            if cs.fusion[c][k % cs.orders[c]] == c)
        if fixed_rows != fixed_cols:
            bad.append(f"k={k}: {fixed_rows} fixed rows vs {fixed_cols} fixed classes")
    checks.append(CheckResult(
        "fixed_counts", not bad,
        "; ".join(bad) if bad else f"all {len(units)} Galois maps agree"))

    n_g = len(set(_row_orbit_keys(t)))
    fams, n_q = q_classes(cs)
    checks.append(CheckResult(
        "orbit_counts", n_g == n_q,
        f"{n_g} row orbits vs {n_q} class families"))

    col_maps = _column_maps(t)
    bad = []
    for k in units:
        fusion_map = tuple(cs.fusion[c][k % cs.orders[c]] for c in range(cs.num_classes))
        table_map = col_maps.get(k)
        if table_map != fusion_map:
            diffs = [c for c in range(cs.num_classes) if table_map[c] != fusion_map[c]]
            bad.append(f"k={k}: columns {diffs} map to {[table_map[c] for c in diffs]} "
                       f"in the table but classes fuse to {[fusion_map[c] for c in diffs]}")
    fam_equal = set(column_families(t)) == set(fams)
    if not fam_equal and not bad:
        bad.append("family partitions differ")
    checks.append(CheckResult(
        "column_families", not bad,
        "; ".join(bad) if bad else "column maps match fusion maps for every k"))

    rank_t = rank_of_central_units(t)
    rank_c = analyze(cs).rank
    checks.append(CheckResult(
        "rank", rank_t == rank_c,
        f"table rank {rank_t} vs class-side rank {rank_c}"))

    return CrosscheckReport(
        table_name=t.name,
        passed=all(c.passed for c in checks),
        checks=tuple(checks),
    )
