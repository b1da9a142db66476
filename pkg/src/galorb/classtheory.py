"""Orbits of power maps on conjugacy classes and the derived rank data.

Two coarsenings of the set of conjugacy classes drive everything here:
classes fused by all power maps g -> g^k with k coprime to the element
order (called families below), and classes fused only with their
inverses.  The difference of the two counts is the rank of the group of
central units in the integral group ring, and several independent
recounts of that number are exposed so they can be checked against each
other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .permgroup import ClassStructure


def _merge(parent: list[int], a: int, b: int):
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    while parent[b] != b:
        parent[b] = parent[parent[b]]
        b = parent[b]
    if a != b:
        parent[max(a, b)] = min(a, b)


def _partition(parent: list[int]) -> tuple[tuple[int, ...], ...]:
    groups: dict[int, list[int]] = {}
    for c in range(len(parent)):
        r = c
        while parent[r] != r:
            r = parent[r]
        groups.setdefault(r, []).append(c)
    return tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))


def q_classes(cs: ClassStructure) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Orbits of the coprime power maps on classes, ordered by least member,
    together with their count."""
    parent = list(range(cs.num_classes))
    for c, fus in enumerate(cs.fusion):
        for d in fus.values():
            _merge(parent, c, d)
    fams = _partition(parent)
    return fams, len(fams)


def r_classes(cs: ClassStructure) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Orbits of class inversion (singletons and mirror pairs), with count."""
    parent = list(range(cs.num_classes))
    for c, d in enumerate(cs.inverse_map):
        _merge(parent, c, d)
    pairs = _partition(parent)
    return pairs, len(pairs)


@dataclass(frozen=True)
class GaloisReport:
    """Joint summary of the power-map and inversion orbit structure.

    rank is the rank of the central unit group of the integral group
    ring; f is the longest power-map orbit; a1 and a2 recount the rank
    from the classes whose family is larger than their inverse pair.
    """

    group_order: int
    num_classes: int
    n_Q: int
    n_R: int
    rank: int
    f: int
    families: tuple[tuple[int, ...], ...]
    family_contributions: tuple[int, ...]
    a1: int
    a2: int
    is_cut: bool


def analyze(cs: ClassStructure) -> GaloisReport:
    families, n_q = q_classes(cs)
    pairs, n_r = r_classes(cs)
    contributions = []
    a1 = a2 = 0
    for fam in families:
        fixed = sum(1 for c in fam if cs.inverse_map[c] == c)
        r_count = (len(fam) + fixed) // 2
        contributions.append(r_count - 1)
        if r_count > 1:
            a2 += 1
            a1 += r_count
    rank = n_r - n_q
    return GaloisReport(
        group_order=cs.group_order,
        num_classes=cs.num_classes,
        n_Q=n_q,
        n_R=n_r,
        rank=rank,
        f=max(len(fam) for fam in families),
        families=families,
        family_contributions=tuple(contributions),
        a1=a1,
        a2=a2,
        is_cut=rank == 0,
    )


def rank_central_units(cs: ClassStructure) -> int:
    """Rank of the central unit group of the integral group ring: the
    number of inversion orbits minus the number of power-map orbits."""
    return analyze(cs).rank


def max_orbit_length(cs: ClassStructure) -> int:
    """Length of the longest power-map orbit on classes."""
    return analyze(cs).f


def a_set_quantities(cs: ClassStructure) -> tuple[tuple[int, ...], int, int]:
    """Classes whose power-map family strictly exceeds their inversion
    orbit, with the family and pair counts (a1, a2) inside that set.

    The difference a1 - a2 recounts the rank; both identities from the
    report are asserted before returning.
    """
    rep = analyze(cs)
    a_set = []
    for fam, contrib in zip(rep.families, rep.family_contributions):
        if contrib > 0:
            a_set.extend(fam)
    a_set = tuple(sorted(a_set))
    if rep.a1 - rep.a2 != rep.rank:
        raise AssertionError("a1 - a2 disagrees with the rank")
    if 2 * rep.a2 > rep.a1:
        raise AssertionError("2*a2 exceeds a1")
    return a_set, rep.a1, rep.a2


def is_cut(cs: ClassStructure) -> bool:
    """True when every class generates its own power-map family up to
    inversion, i.e. the central units of the group ring are trivial."""
    a_set, _a1, _a2 = a_set_quantities(cs)
    empty = not a_set
    if empty != (analyze(cs).rank == 0):
        raise AssertionError("empty restricted set disagrees with rank 0")
    return empty


def check_identities(cs: ClassStructure) -> GaloisReport:
    """Recompute the rank several independent ways and insist they agree.

    Raises AssertionError naming the first identity that fails; returns
    the report otherwise.
    """
    rep = analyze(cs)
    if rep.rank != rep.n_R - rep.n_Q:
        raise AssertionError(f"rank {rep.rank} != n_R - n_Q = {rep.n_R - rep.n_Q}")
    if rep.rank != sum(rep.family_contributions):
        raise AssertionError("rank disagrees with the per-family contribution sum")
    if rep.rank != rep.a1 - rep.a2:
        raise AssertionError(f"rank {rep.rank} != a1 - a2 = {rep.a1 - rep.a2}")
    if 2 * rep.a2 > rep.a1:
        raise AssertionError(f"2*a2 = {2 * rep.a2} exceeds a1 = {rep.a1}")
    if Fraction(rep.rank) < Fraction(rep.f, 2) - 1:
        raise AssertionError(f"rank {rep.rank} below f/2 - 1 with f = {rep.f}")
    if rep.is_cut != (rep.rank == 0):
        raise AssertionError("cut flag disagrees with rank")
    half_pairs = sum(1 for c in range(cs.num_classes) if cs.inverse_map[c] != c)
    if half_pairs % 2:
        raise AssertionError("inversion pairs do not match up")
    if rep.n_R != cs.num_classes - half_pairs // 2:
        raise AssertionError("n_R disagrees with the direct pair count")
    return rep


def report_to_obj(rep: GaloisReport, labels=None) -> dict:
    """JSON-ready dict; families rendered with labels when given."""
    fams = [list(f) for f in rep.families]
    obj = {
        "group_order": rep.group_order,
        "num_classes": rep.num_classes,
        "n_Q": rep.n_Q,
        "n_R": rep.n_R,
        "rank": rep.rank,
        "f": rep.f,
        "a1": rep.a1,
        "a2": rep.a2,
        "is_cut": rep.is_cut,
        "families": fams,
        "family_contributions": list(rep.family_contributions),
    }
    if labels is not None:
        obj["family_labels"] = [[labels[c] for c in f] for f in rep.families]
    return obj
