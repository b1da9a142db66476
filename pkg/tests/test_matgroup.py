import itertools
import json
import random

import pytest

from galorb.errors import InputError, ResourceLimitError
from galorb.matgroup import (
    Matrix, char_poly, class_lower_bound, coprime_power_charpoly_count,
    element_order, finite_field, parse_matrix_group_file,
    projective_line_action, random_element_search, singer_element,
)
from galorb.numutil import units_mod
from galorb.permgroup import (
    alternating_group_spec, conjugacy_classes, group_order,
)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_field_axioms(q):
    F = finite_field(q)
    for a in range(q):
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
        for b in range(q):
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
    rng = random.Random(q)
    for _ in range(60):
        a, b, c = (rng.randrange(q) for _ in range(3))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_canonical_polynomials():
    assert finite_field(4).poly == (1, 1)
    assert finite_field(8).poly == (1, 1, 0)
    assert finite_field(9).poly == (2, 1)
    assert finite_field(16).poly == (1, 1, 0, 0)


def test_field_guards():
    with pytest.raises(InputError):
        finite_field(6)
    with pytest.raises(InputError):
        finite_field(1)
    with pytest.raises(InputError):
        finite_field(513)


# cofactor-expansion determinant of xI - M, an independent oracle
def _poly_add(F, a, b):
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    return tuple(F.add(x, y) for x, y in zip(a, b))


def _poly_mul(F, a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return tuple(out)


def _charpoly_oracle(M):
    F, n = M.field, M.n
    P = [[((F.neg(M.rows[i][j]), 1) if i == j else (F.neg(M.rows[i][j]),))
          for j in range(n)] for i in range(n)]

    def det(rows, cols):
        if not rows:
            return (1,)
        total = (0,)
        for idx, j in enumerate(cols):
            term = _poly_mul(F, P[rows[0]][j], det(rows[1:], cols[:idx] + cols[idx + 1:]))
            if idx % 2:
                term = tuple(F.neg(x) for x in term)
            total = _poly_add(F, total, term)
        return total

    return tuple(det(tuple(range(n)), tuple(range(n)))[:n + 1])


@pytest.mark.parametrize("q", [2, 3, 4, 9])
def test_char_poly_matches_cofactor_oracle(q):
    F = finite_field(q)
    rng = random.Random(7 * q)
    for n in (1, 2, 3, 4):
        for _ in range(12):
            M = Matrix(F, [[rng.randrange(q) for _ in range(n)] for _ in range(n)])
            assert char_poly(M) == _charpoly_oracle(M), (q, M.rows)


def test_companion_matrix_reproduces_its_polynomial():
    for n, q in [(2, 3), (3, 2), (4, 2), (2, 9), (3, 4)]:
        g = singer_element(n, q)
        cp = char_poly(g)
        assert len(cp) == n + 1 and cp[-1] == 1
        # the singer element's polynomial has maximal order, so g does too
        assert element_order(g) == q ** n - 1


def _all_invertible(F, n):
    q = F.q
    for entries in itertools.product(range(q), repeat=n * n):
        M = Matrix(F, [list(entries[i * n:(i + 1) * n]) for i in range(n)])
        try:
            element_order(M)
        except InputError:
            continue  # singular
        yield M


def test_singer_count_gl23_against_brute_conjugacy():
    # enumerate all 48 invertible matrices and bucket the coprime powers
    # of the singer element into true conjugacy classes
    F = finite_field(3)
    g = singer_element(2, 3)
    m = element_order(g)
    assert m == 8
    group = list(_all_invertible(F, 2))
    assert len(group) == 48
    powers = [g.pow(k) for k in units_mod(m)]

    def conjugate_in_group(x, y):
        return any(h * x == y * h for h in group)

    classes = []
    for x in powers:
        for cls in classes:
            if conjugate_in_group(x, cls[0]):
                cls.append(x)
                break
        else:
            classes.append([x])
    assert len(classes) == 2
    assert coprime_power_charpoly_count(g) == 2


def test_singer_count_gl32_against_brute_conjugacy():
    F = finite_field(2)
    g = singer_element(3, 2)
    assert element_order(g) == 7
    group = list(_all_invertible(F, 3))
    assert len(group) == 168
    powers = [g.pow(k) for k in units_mod(7)]
    reps = []
    for x in powers:
        if not any(any(h * x == y * h for h in group) for y in reps):
            reps.append(x)
    assert len(reps) == 2
    assert coprime_power_charpoly_count(g) == 2


def test_singer_count_gl42_against_unit_orbit_oracle():
    # powering by q permutes the eigenvalue exponents mod q^n - 1, so
    # the count equals the number of <q>-orbits on units mod 15
    g = singer_element(4, 2)
    assert element_order(g) == 15
    units = set(units_mod(15))
    orbits = 0
    while units:
        k = min(units)
        orbits += 1
        while k in units:
            units.discard(k)
            k = (k * 2) % 15
    assert orbits == 2
    assert coprime_power_charpoly_count(g) == 2


def test_element_order_edges():
    F3 = finite_field(3)
    assert element_order(Matrix.identity(F3, 3)) == 1
    uni = Matrix(F3, [[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    assert element_order(uni) == 3
    with pytest.raises(InputError, match="singular"):
        element_order(Matrix(F3, [[0, 0, 0], [0, 1, 0], [0, 0, 1]]))
    with pytest.raises(ResourceLimitError):
        element_order(singer_element(2, 5), bound=3)
    with pytest.raises(ResourceLimitError):
        element_order(Matrix.identity(F3, 13))


def test_class_lower_bound_values():
    assert class_lower_bound(16, 3) == (5, True)
    assert class_lower_bound(6, 1) == (6, True)
    assert class_lower_bound(4, 1) == (4, False)
    with pytest.raises(InputError):
        class_lower_bound(0, 1)
    with pytest.raises(InputError):
        class_lower_bound(4, 0)


def test_random_search_and_determinism():
    F2 = finite_field(2)
    a = Matrix(F2, [[1, 1], [0, 1]])
    b = Matrix(F2, [[0, 1], [1, 0]])
    found = random_element_search([a, b], 3)
    assert found is not None and element_order(found) == 3
    assert random_element_search([a, b], 5) is None
    assert (random_element_search([a, b], 3, seed=11)
            == random_element_search([a, b], 3, seed=11))
    assert random_element_search([a, b], 2, seed=4) is not None


@pytest.mark.parametrize("q,order", [(2, 6), (3, 12), (4, 60), (5, 60),
                                     (7, 168), (8, 504), (9, 360)])
def test_projective_line_orders(q, order):
    assert group_order(projective_line_action(q)) == order


def test_projective_line_class_structures():
    # PSL(2, 5) acting on 6 points is an A5 in disguise
    cs5 = conjugacy_classes(projective_line_action(5))
    a5 = conjugacy_classes(alternating_group_spec(5))
    assert cs5.sizes == a5.sizes and cs5.orders == a5.orders
    cs7 = conjugacy_classes(projective_line_action(7))
    assert cs7.sizes == (1, 21, 56, 42, 24, 24)
    assert cs7.orders == (1, 2, 3, 4, 7, 7)


def test_parse_matrix_group_file():
    text = json.dumps({
        "p": 3, "k": 1, "defining_poly": [1, 1], "dim": 2,
        "generators": [[[0, 1], [1, 2]]],
    })
    F, gens = parse_matrix_group_file(text)
    assert F.q == 3 and gens[0] == singer_element(2, 3)
    with pytest.raises(InputError, match="poly"):
        parse_matrix_group_file(json.dumps({
            "p": 3, "k": 2, "defining_poly": [1, 0, 1], "dim": 1,
            "generators": [[[1]]]}))
    with pytest.raises(InputError):
        parse_matrix_group_file(json.dumps({
            "p": 4, "k": 1, "dim": 1, "generators": [[[1]]]}))
    with pytest.raises(InputError):
        parse_matrix_group_file("[]")
