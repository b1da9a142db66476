import json

import pytest

from galorb.chartab import (
    CharacterTable, b_set_quantities, brauer_crosscheck, char_report,
    column_families, cut_by_character_fields, fixture_names, fixture_table,
    max_galois_orbit_length, parse_table, rank_of_central_units,
    real_row_count, serialize_table, table_exponent,
)
from galorb.cyclotomic import CyclotomicNumber, zeta
from galorb.errors import DegenerateTableError, InputError
from galorb.permgroup import (
    GroupSpec, alternating_class_structure, alternating_group_spec,
    conjugacy_classes, cyclic_class_structure, symmetric_group_spec,
)

# rank, longest row family, number of real rows
REPORT_ANCHORS = {
    "c2": (0, 1, 2), "c3": (0, 2, 1), "c4": (0, 2, 2), "c5": (1, 4, 1),
    "s3": (0, 1, 3), "a4": (0, 2, 2), "q8": (0, 1, 5), "a5": (1, 2, 5),
    "psl2_7": (0, 2, 4),
}

Q8_SPEC = GroupSpec(8, ((2, 3, 1, 0, 6, 7, 5, 4), (4, 5, 7, 6, 1, 0, 2, 3)))


def test_fixture_inventory():
    assert set(fixture_names()) == set(REPORT_ANCHORS)


@pytest.mark.parametrize("name", sorted(REPORT_ANCHORS))
def test_fixture_validates_and_round_trips(name):
    t = fixture_table(name)
    t.validate()
    s = serialize_table(t)
    assert serialize_table(parse_table(s)) == s


@pytest.mark.parametrize("name", sorted(REPORT_ANCHORS))
def test_report_anchors(name):
    rep = char_report(fixture_table(name))
    assert (rep.rank_eq1, rep.f_table, rep.h_R) == REPORT_ANCHORS[name]


def test_rank_consistency_between_rows_and_quantities():
    for name in fixture_names():
        t = fixture_table(name)
        rep = char_report(t)
        assert rep.rank_eq1 == rank_of_central_units(t)
        assert rep.b1 - rep.b2 == rep.rank_eq1
        assert 2 * rep.b2 <= rep.b1
        assert rep.f_table == max_galois_orbit_length(t)


def test_b_sets():
    assert b_set_quantities(fixture_table("c3")) == ((), 0, 0)
    b, b1, b2 = b_set_quantities(fixture_table("c5"))
    assert (len(b), b1, b2) == (4, 2, 1)
    b, b1, b2 = b_set_quantities(fixture_table("a5"))
    assert (len(b), b1, b2) == (2, 2, 1)
    assert b_set_quantities(fixture_table("psl2_7")) == ((), 0, 0)


def test_cut_detection_by_fields():
    assert cut_by_character_fields(fixture_table("q8"))
    assert cut_by_character_fields(fixture_table("s3"))
    assert cut_by_character_fields(fixture_table("a4"))
    assert not cut_by_character_fields(fixture_table("c5"))
    assert not cut_by_character_fields(fixture_table("a5"))


CROSSCHECK_PAIRS = [
    ("c2", lambda: cyclic_class_structure(2)),
    ("c3", lambda: cyclic_class_structure(3)),
    ("c4", lambda: cyclic_class_structure(4)),
    ("c5", lambda: cyclic_class_structure(5)),
    ("s3", lambda: conjugacy_classes(symmetric_group_spec(3))),
    ("a4", lambda: conjugacy_classes(alternating_group_spec(4))),
    ("q8", lambda: conjugacy_classes(Q8_SPEC)),
    ("a5", lambda: conjugacy_classes(alternating_group_spec(5))),
    ("a5", lambda: alternating_class_structure(5)),
]


@pytest.mark.parametrize("name,make_cs", CROSSCHECK_PAIRS,
                         ids=[f"{n}-{i}" for i, (n, _) in enumerate(CROSSCHECK_PAIRS)])
def test_brauer_crosscheck_passes(name, make_cs):
    rep = brauer_crosscheck(fixture_table(name), make_cs())
    assert rep.passed, [c for c in rep.checks if not c.passed]
    assert {c.name for c in rep.checks} == {
        "fixed_counts", "orbit_counts", "column_families", "rank"}


def _permute_columns(t, perm):
    irr = tuple(tuple(row[p] for p in perm) for row in t.irr)
    orders = None if t.class_orders is None else tuple(t.class_orders[p] for p in perm)
    return CharacterTable(t.name, t.group_order,
                          tuple(t.class_sizes[p] for p in perm), orders,
                          irr).validate()


def test_crosscheck_negative_control():
    # swapping the columns of g and g^2 keeps sizes and orders aligned
    # but misplaces values relative to the power maps
    bad = _permute_columns(fixture_table("c5"), (0, 2, 1, 3, 4))
    rep = brauer_crosscheck(bad, cyclic_class_structure(5))
    assert not rep.passed
    assert "column_families" in [c.name for c in rep.checks if not c.passed]


def test_crosscheck_invariant_under_ambiguous_labeling():
    # swapping the two conjugate columns of a5 matches swapping the
    # class labels, which the checks must tolerate
    swapped = _permute_columns(fixture_table("a5"), (0, 1, 2, 4, 3))
    rep = brauer_crosscheck(swapped, conjugacy_classes(alternating_group_spec(5)))
    assert rep.passed, [c for c in rep.checks if not c.passed]


def test_report_invariant_under_row_and_column_shuffles():
    t = fixture_table("psl2_7")
    base = char_report(t)
    shuffled_rows = CharacterTable(t.name, t.group_order, t.class_sizes,
                                   t.class_orders,
                                   tuple(reversed(t.irr))).validate()
    assert char_report(shuffled_rows) == base
    perm = (0, 3, 1, 5, 2, 4)
    shuffled_cols = _permute_columns(t, perm)
    assert char_report(shuffled_cols) == base


def test_crosscheck_rejects_misaligned_inputs():
    with pytest.raises(InputError):
        brauer_crosscheck(fixture_table("a5"), cyclic_class_structure(5))
    with pytest.raises(InputError):
        brauer_crosscheck(fixture_table("c5"), cyclic_class_structure(3))


def test_degenerate_table_detected():
    one = CyclotomicNumber.rational(1)
    deg = CharacterTable("deg", 2, (1, 1), (1, 1), ((one, one), (one, one)))
    with pytest.raises(DegenerateTableError, match="identical"):
        column_families(deg)


def test_exponent_fallback_uses_conductors():
    t = fixture_table("a5")
    noorders = CharacterTable(t.name, t.group_order, t.class_sizes, None, t.irr)
    assert table_exponent(noorders) == 5
    assert rank_of_central_units(noorders) == 1
    assert real_row_count(noorders) == 5


def _fixture_obj(name):
    return json.loads(serialize_table(fixture_table(name)))


def test_validate_rejects_wrong_order():
    obj = _fixture_obj("s3")
    obj["order"] = 8
    with pytest.raises(InputError, match="degree"):
        parse_table(json.dumps(obj))


def test_validate_rejects_broken_orthogonality():
    obj = _fixture_obj("s3")
    obj["irr"][1][1] = 1  # was -1 on the transpositions
    with pytest.raises(InputError, match="rows 0 and 1"):
        parse_table(json.dumps(obj))


def test_validate_rejects_bad_shapes():
    obj = _fixture_obj("c2")
    obj["irr"][0] = [1]
    with pytest.raises(InputError):
        parse_table(json.dumps(obj))
    obj = _fixture_obj("c2")
    obj["class_sizes"] = [1, 0]
    with pytest.raises(InputError):
        parse_table(json.dumps(obj))
    obj = _fixture_obj("c2")
    obj["irr"][0][0] = -1
    with pytest.raises(InputError, match="degree"):
        parse_table(json.dumps(obj))


def test_validate_rejects_foreign_conductor():
    t = fixture_table("c5")
    rows = [list(r) for r in t.irr]
    rows[1][1] = zeta(7)
    with pytest.raises(InputError, match="conductor"):
        CharacterTable(t.name, t.group_order, t.class_sizes, t.class_orders,
                       tuple(tuple(r) for r in rows)).validate()


def test_parse_error_reporting():
    with pytest.raises(InputError, match="line 1"):
        parse_table("{nope")
    with pytest.raises(InputError, match="row 0, column 1"):
        parse_table(json.dumps({
            "name": "x", "order": 2, "class_sizes": [1, 1],
            "irr": [[1, {"broken": 1}], [1, -1]]}))
    with pytest.raises(InputError, match="missing"):
        parse_table(json.dumps({"order": 2}))
