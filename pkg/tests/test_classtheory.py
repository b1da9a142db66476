"""Class-side invariants: rational and real fusion counts and the rank
they determine, checked against closed forms for cyclic groups and
small simple groups."""

import pytest

from galorb.classtheory import (
    a_set_quantities, analyze, check_identities, is_cut, max_orbit_length,
    q_classes, r_classes, rank_central_units, report_to_obj,
)
from galorb.matgroup import projective_line_action
from galorb.numutil import divisors, totient
from galorb.permgroup import (
    alternating_class_structure, alternating_group_spec, conjugacy_classes,
    cyclic_class_structure, symmetric_group_spec,
)


def test_c5_quantities():
    cs = cyclic_class_structure(5)
    rep = analyze(cs)
    assert (rep.n_Q, rep.n_R) == (2, 3)
    assert rep.rank == 1
    assert rep.f == 4
    assert (rep.a1, rep.a2) == (2, 1)
    assert not rep.is_cut


def test_a5_quantities():
    cs = conjugacy_classes(alternating_group_spec(5))
    fams, n_q = q_classes(cs)
    assert n_q == 4
    _, n_r = r_classes(cs)
    assert n_r == 5
    assert rank_central_units(cs) == 1
    assert max_orbit_length(cs) == 2


def test_s3_is_rational():
    cs = conjugacy_classes(symmetric_group_spec(3))
    _, n_q = q_classes(cs)
    assert n_q == 3
    assert rank_central_units(cs) == 0
    assert is_cut(cs)


@pytest.mark.parametrize("m", list(range(1, 201)))
def test_cyclic_closed_forms(m):
    # rational classes of C_m are indexed by divisors of m; real classes
    # pair d-element classes for d > 2 and keep 1 and 2 fixed
    cs = cyclic_class_structure(m)
    rep = analyze(cs)
    assert rep.n_Q == len(divisors(m))
    want_r = 1 + (1 if m % 2 == 0 else 0)
    want_r += sum(totient(d) // 2 for d in divisors(m) if d > 2)
    assert rep.n_R == want_r
    assert rep.f == max(totient(d) for d in divisors(m))


def test_identity_suite_on_battery():
    battery = [
        cyclic_class_structure(1),
        cyclic_class_structure(2),
        cyclic_class_structure(36),
        conjugacy_classes(symmetric_group_spec(4)),
        conjugacy_classes(alternating_group_spec(6)),
        alternating_class_structure(11),
        alternating_class_structure(25),
        conjugacy_classes(projective_line_action(8)),
        conjugacy_classes(projective_line_action(11)),
    ]
    for cs in battery:
        rep = check_identities(cs)
        # check_identities already asserts the chained equalities; spot
        # the inequalities here as well
        assert 2 * rep.a2 <= rep.a1
        assert 2 * rep.rank >= rep.f - 2
        assert rep.is_cut == (rep.rank == 0)


def test_a_set_contents():
    cs = cyclic_class_structure(5)
    a_set, a1, a2 = a_set_quantities(cs)
    # the four nontrivial classes are neither rational nor quadratic
    assert len(a_set) == 4
    assert (a1, a2) == (2, 1)


def test_report_serialization():
    cs = conjugacy_classes(alternating_group_spec(5))
    rep = analyze(cs)
    obj = report_to_obj(rep, labels=cs.labels)
    assert obj["rank"] == 1
    assert obj["group_order"] == 60
    assert ["5A", "5B"] in obj["family_labels"]
    plain = report_to_obj(rep)
    assert "family_labels" not in plain
