"""Constructor correctness against independent definitions.

The structure-constant builders are tested against direct evaluations of
the defining formulas (inner products, skew forms, cross products), which
serve as the independent oracle.
"""

from fractions import Fraction
from itertools import combinations

import pytest

from vidinli.algebra import check_morphism, multiply
from vidinli.constructors import (
    SkewForm,
    complex_algebra,
    conjugate,
    coordfree_product,
    cross3,
    cross7,
    cross7_formula,
    dual_numbers,
    heisenberg,
    inverse,
    jordan_part,
    jspin,
    lie_part,
    quaternion_pushforward,
    quaternions,
    standard_symplectic,
    twisted_v3,
    vidinli,
    vidinli7_directional,
    vidinli_jordan,
    vidinli_type,
)
from vidinli.linalg import Matrix, Vector, det
from vidinli.probes import deterministic_vectors, rational_unit_vectors_v0

OMEGA_TILDE = SkewForm.from_pairs(2, {(2, 3): 1, (3, 4): 1, (4, 5): 1})

# The 21-pair table of the 7-dimensional cross product, transcribed by hand
# from the component formula: (i, j) -> (k, sign) meaning e_i x e_j = sign e_k.
# The supports are the seven XOR-triples {i, j, i^j}.
CROSS7_PAIR_TABLE = {
    (1, 2): (3, 1), (1, 3): (2, -1), (1, 4): (5, 1), (1, 5): (4, -1),
    (1, 6): (7, 1), (1, 7): (6, -1),
    (2, 3): (1, 1), (2, 4): (6, 1), (2, 5): (7, -1), (2, 6): (4, -1),
    (2, 7): (5, 1),
    (3, 4): (7, 1), (3, 5): (6, 1), (3, 6): (5, -1), (3, 7): (4, 1),
    (4, 5): (1, 1), (4, 6): (2, 1), (4, 7): (3, -1),
    (5, 6): (3, 1), (5, 7): (2, -1),
    (6, 7): (1, 1),
}


def definition_product(n, omega, a, b):
    """Direct evaluation of (a.e1) b + (b.e1) a - (a.b) e1 + omega(a,b) e1."""
    dim = 2 * n + 1
    e1 = Vector.basis(dim, 1)
    out = b.scale(a.coord(1)) + a.scale(b.coord(1)) - e1.scale(a.dot(b))
    return out + e1.scale(omega.apply(a, b))


def test_standard_symplectic():
    w1 = standard_symplectic(1)
    assert w1.matrix == Matrix.from_rows([[0, 1], [-1, 0]])
    w2 = standard_symplectic(2)
    assert w2.basis_value(2, 3) == 1 and w2.basis_value(4, 5) == 1
    assert w2.basis_value(3, 2) == -1 and w2.basis_value(2, 4) == 0
    for n in (1, 2, 3, 4):
        assert det(standard_symplectic(n).matrix) == 1
    with pytest.raises(ValueError):
        standard_symplectic(0)


def test_skew_form_validation():
    with pytest.raises(ValueError):
        SkewForm(1, Matrix.from_rows([[0, 1], [1, 0]]))
    assert OMEGA_TILDE.is_nondegenerate()
    assert det(OMEGA_TILDE.matrix) == 1
    degenerate = SkewForm.from_pairs(2, {(2, 3): 1})
    assert not degenerate.is_nondegenerate()
    assert degenerate.radical_dim() == 2


def test_vidinli_structure_constants_match_definition():
    for n in range(1, 9):
        a = vidinli(n)
        omega = standard_symplectic(n)
        dim = 2 * n + 1
        for i in range(1, dim + 1):
            for j in range(1, dim + 1):
                expected = definition_product(n, omega, Vector.basis(dim, i), Vector.basis(dim, j))
                assert a.product_of_basis(i, j) == expected


def test_vidinli_basics():
    v3 = vidinli(1)
    e = lambda k: v3.basis_element(k)
    assert (e(2) * e(2)).coords == Vector.of([-1, 0, 0])
    assert (e(3) * e(3)).coords == Vector.of([-1, 0, 0])
    assert (e(2) * e(3)).coords == Vector.of([1, 0, 0])
    assert (e(3) * e(2)).coords == Vector.of([-1, 0, 0])
    v5 = vidinli(2)
    assert (v5.basis_element(4) * v5.basis_element(5)).coords == Vector.basis(5, 1)


def test_vidinli_type_with_modified_form():
    a = vidinli_type(2, OMEGA_TILDE)
    assert (a.basis_element(3) * a.basis_element(4)).coords == Vector.basis(5, 1)
    # The standard algebra and the modified one differ in exactly the
    # (3,4)/(4,3) products.
    std = vidinli(2)
    diffs = [(i, j) for i in range(1, 6) for j in range(1, 6)
             if a.product_of_basis(i, j) != std.product_of_basis(i, j)]
    assert diffs == [(3, 4), (4, 3)]


def test_vidinli_noncommutative_nonassociative():
    for n in (1, 2, 3):
        a = vidinli(n)
        e2, e3 = a.basis_element(2), a.basis_element(3)
        assert (e2 * e3) != (e3 * e2)
        assert ((e2 * e2) * e3) != (e2 * (e2 * e3))


def test_square_identity():
    # x*x = 2(x.e1) x - |x|^2 e1 for every x.
    for n in (1, 2, 3):
        a = vidinli(n)
        for v in deterministic_vectors(2 * n + 1, 8):
            x = a.element(v)
            expected = x.scale(2 * v.coord(1)) - a.unit_element().scale(v.norm_sq())
            assert (x * x) == expected


def test_vidinli_jordan():
    vj3 = vidinli_jordan(3)
    assert (vj3.basis_element(2) * vj3.basis_element(3)).is_zero()
    assert (vj3.basis_element(2) * vj3.basis_element(2)).coords == Vector.of([-1, 0, 0])
    assert vj3.unit_law_holds()
    for m in (2, 3, 4, 5):
        assert vidinli_jordan(m).is_commutative()


def test_heisenberg():
    h1 = heisenberg(1)
    assert h1.unit is None
    assert (h1.basis_element(2) * h1.basis_element(3)).coords == Vector.basis(3, 1)
    assert (h1.basis_element(3) * h1.basis_element(2)).coords == -Vector.basis(3, 1)
    assert (h1.basis_element(1) * h1.basis_element(2)).is_zero()
    h2 = heisenberg(2)
    assert h2.is_anticommutative()
    assert (h2.basis_element(2) * h2.basis_element(5)).is_zero()
    with pytest.raises(ValueError):
        h1.unit_element()


def test_jspin():
    j1 = jspin(1)
    assert (j1.basis_element(2) * j1.basis_element(2)).coords == Vector.basis(2, 1)
    j3 = jspin(3)
    assert j3.is_commutative() and j3.unit_law_holds()
    assert (j3.basis_element(2) * j3.basis_element(3)).is_zero()


def test_quaternions():
    h = quaternions()
    i, j, k = h.basis_element(2), h.basis_element(3), h.basis_element(4)
    assert (i * j) == k and (j * k) == i and (k * i) == j
    assert (j * i) == -k
    assert (i * i).coords == Vector.of([-1, 0, 0, 0])
    # Associativity on all basis triples.
    for a in range(1, 5):
        for b in range(1, 5):
            for c in range(1, 5):
                x, y, z = h.basis_element(a), h.basis_element(b), h.basis_element(c)
                assert ((x * y) * z) == (x * (y * z))


def test_dual_numbers():
    d = dual_numbers()
    assert (d.basis_element(2) * d.basis_element(2)).is_zero()
    assert d.unit_law_holds()


def test_twisted_v3():
    assert twisted_v3(1, 0, 0).same_table(vidinli(1))
    assert twisted_v3(1, 0, 0).label == vidinli(1).label
    a = twisted_v3(2, 0, 0)
    assert (a.basis_element(2) * a.basis_element(3)).coords == Vector.of([2, 0, 0])
    b = twisted_v3(0, 1, 0)
    assert (b.basis_element(2) * b.basis_element(3)).coords == Vector.of([0, 1, 0])
    assert (b.basis_element(3) * b.basis_element(2)).coords == Vector.of([0, -1, 0])


def test_coordfree_product_matches_twisted():
    triples = [(1, 0, 0), (2, 0, 0), (0, 1, 0), (0, 0, 1),
               (Fraction(1, 2), Fraction(-2, 3), 3), (1, 1, 1)]
    for t, u, v in triples:
        tw = twisted_v3(t, u, v)
        direction = Vector.of([t, u, v])
        for i in range(1, 4):
            for j in range(1, 4):
                got = coordfree_product(direction, Vector.basis(3, i), Vector.basis(3, j))
                assert got == tw.product_of_basis(i, j)
    # v = e1 reproduces the Vidinli product; a = b kills the cross term.
    v3 = vidinli(1)
    e1 = Vector.basis(3, 1)
    for i in range(1, 4):
        for j in range(1, 4):
            assert coordfree_product(e1, Vector.basis(3, i), Vector.basis(3, j)) == \
                v3.product_of_basis(i, j)
    a = Vector.of([1, 2, 3])
    assert coordfree_product(Vector.of([5, 7, 11]), a, a) == \
        coordfree_product(Vector.zero(3), a, a)
    assert coordfree_product(Vector.of([2, 0, 0]), Vector.basis(3, 2), Vector.basis(3, 3)) == \
        Vector.of([2, 0, 0])


def test_quaternion_pushforward():
    v3 = vidinli(1)
    for i in range(1, 4):
        for j in range(1, 4):
            a, b = Vector.basis(3, i), Vector.basis(3, j)
            assert quaternion_pushforward(a, b) == v3.product_of_basis(i, j)
    assert quaternion_pushforward(Vector.basis(3, 1), Vector.basis(3, 1)) == Vector.basis(3, 1)
    assert quaternion_pushforward(Vector.basis(3, 2), Vector.basis(3, 3)) == Vector.basis(3, 1)
    assert quaternion_pushforward(Vector.basis(3, 2), Vector.basis(3, 2)) == -Vector.basis(3, 1)


def expected_cross7(i, j):
    if i == j:
        return Vector.zero(7)
    if (i, j) in CROSS7_PAIR_TABLE:
        k, sign = CROSS7_PAIR_TABLE[(i, j)]
        return Vector.basis(7, k).scale(sign)
    k, sign = CROSS7_PAIR_TABLE[(j, i)]
    return Vector.basis(7, k).scale(-sign)


def test_cross7_table_matches_frozen_pairs():
    table = cross7()
    for i in range(1, 8):
        for j in range(1, 8):
            assert table.apply(Vector.basis(7, i), Vector.basis(7, j)) == expected_cross7(i, j)
    # Each product lands on the third point of the XOR-triple through i, j.
    for (i, j), (k, _) in CROSS7_PAIR_TABLE.items():
        assert k == i ^ j


def test_cross7_antisymmetric_and_orthogonal():
    for i, j in combinations(range(1, 8), 2):
        u, v = Vector.basis(7, i), Vector.basis(7, j)
        uv = cross7_formula(u, v)
        assert uv == -cross7_formula(v, u)
        assert uv.dot(u) == 0 and uv.dot(v) == 0
    # Bilinearity: table-based evaluation equals the componentwise formula.
    table = cross7()
    vs = deterministic_vectors(7, 6)
    for u, v in zip(vs[::2], vs[1::2]):
        assert table.apply(u, v) == cross7_formula(u, v)


def test_cross7_calibrates_standard_form():
    omega = standard_symplectic(3)
    for i in range(2, 8):
        for j in range(2, 8):
            u, v = Vector.basis(7, i), Vector.basis(7, j)
            assert cross7_formula(u, v).coord(1) == omega.basis_value(i, j)


def test_directional_vidinli():
    assert vidinli7_directional(1).same_table(vidinli(3).relabel("V7dir1"))
    for i in range(1, 8):
        a = vidinli7_directional(i)
        assert a.unit == i and a.unit_law_holds()
    with pytest.raises(ValueError):
        vidinli7_directional(8)


def test_conjugation():
    v5 = vidinli(2)
    e1 = v5.unit_element()
    assert conjugate(v5, e1) == e1
    e2 = v5.basis_element(2)
    assert conjugate(v5, e2) == -e2
    a = v5.element([1, 2, 0, -3, 1])
    assert conjugate(v5, conjugate(v5, a)) == a
    assert conjugate(v5, a).coords.norm_sq() == a.coords.norm_sq()


def test_conjugation_identity_and_inverses():
    for n in (1, 2, 3):
        a = vidinli(n)
        dim = 2 * n + 1
        pairs = list(zip(deterministic_vectors(dim, 100)[:50],
                         deterministic_vectors(dim, 100, seed=77)[:50]))
        pairs += [(Vector.basis(dim, i), Vector.basis(dim, j))
                  for i in range(1, dim + 1) for j in range(1, dim + 1)]
        for xv, yv in pairs:
            x, y = a.element(xv), a.element(yv)
            lhs = multiply(a, conjugate(a, x), y) + multiply(a, conjugate(a, y), x)
            assert lhs == a.unit_element().scale(2 * xv.dot(yv))
            if not xv.is_zero():
                xinv = inverse(a, x)
                assert (xinv * x) == a.unit_element()
                assert (x * xinv) == a.unit_element()


def test_inverse_examples():
    v3 = vidinli(1)
    e2 = v3.basis_element(2)
    assert inverse(v3, e2) == -e2
    a = v3.element([1, 1, 0])
    assert inverse(v3, a).coords == Vector.of([Fraction(1, 2), Fraction(-1, 2), 0])
    with pytest.raises(ZeroDivisionError):
        inverse(v3, v3.zero_element())


def test_jordan_and_lie_parts():
    v3 = vidinli(1)
    e2, e3 = v3.basis_element(2), v3.basis_element(3)
    assert jordan_part(v3, e2, e3).is_zero()
    assert lie_part(v3, e2, e3) == v3.unit_element()
    a = v3.element([1, 2, 3])
    assert lie_part(v3, a, a).is_zero()
    # The two independently computed parts reassemble the product.
    for n in (1, 2):
        alg = vidinli(n)
        dim = 2 * n + 1
        for i in range(1, dim + 1):
            for j in range(1, dim + 1):
                x, y = alg.basis_element(i), alg.basis_element(j)
                assert jordan_part(alg, x, y) + lie_part(alg, x, y) == x * y


def test_no_coordinate_pairing_splits_the_modified_v5():
    """The (3,4)-coupled 5-dimensional algebra admits no coordinate pairing
    into two 3-dimensional Vidinli blocks with vanishing cross products."""
    a = vidinli_type(2, OMEGA_TILDE)
    pairings = [((2, 3), (4, 5)), ((2, 4), (3, 5)), ((2, 5), (3, 4))]
    for (p, q) in pairings:
        blocks_ok = all(
            abs(OMEGA_TILDE.basis_value(x, y)) == 1 for x, y in (p, q))
        cross_zero = all(
            multiply(a, a.basis_element(x), a.basis_element(y)).is_zero()
            for x in p for y in q)
        assert not (blocks_ok and cross_zero)
