"""Algebra core: element arithmetic, morphisms, closures, simplicity."""

from fractions import Fraction

import pytest

from vidinli.algebra import (
    Algebra,
    Element,
    Morphism,
    algebra_from_json,
    algebra_to_json,
    anticommutator,
    check_morphism,
    commutator,
    dumps_algebra,
    ideal_closure,
    induced_on_basis_indices,
    is_simple_certified,
    left_mult_matrix,
    loads_algebra,
    multiply,
    permute_basis,
    right_mult_matrix,
    subalgebra_closure,
)
from vidinli.constructors import (
    complex_algebra,
    dual_numbers,
    heisenberg,
    jspin,
    quaternions,
    twisted_v3,
    vidinli,
    vidinli_jordan,
    vidinli_type,
    SkewForm,
)
from vidinli.linalg import Matrix, Subspace, Vector
from vidinli.probes import deterministic_vectors


def pointwise_product_algebra():
    """QQ x QQ with componentwise product."""
    return Algebra(2, {(1, 1): Vector.of([1, 0]), (2, 2): Vector.of([0, 1])},
                   unit=None, label="QQxQQ")


def test_multiply_v3_table():
    v3 = vidinli(1)
    e2, e3 = v3.basis_element(2), v3.basis_element(3)
    assert (e2 * e3).coords == Vector.of([1, 0, 0])
    assert (e3 * e2).coords == Vector.of([-1, 0, 0])


def test_unit_law():
    for a in (vidinli(2), vidinli_jordan(4), jspin(3), quaternions(), complex_algebra()):
        assert a.unit_law_holds()
        u = a.unit_element()
        for i in range(1, a.dim + 1):
            x = a.basis_element(i)
            assert (u * x) == x and (x * u) == x


def test_v5_decoupled_pair_annihilates():
    v5 = vidinli(2)
    assert (v5.basis_element(3) * v5.basis_element(4)).is_zero()


def test_bilinearity_on_deterministic_triples():
    v5 = vidinli(2)
    vs = deterministic_vectors(5, 9)
    for x, xp, y in zip(vs[::3], vs[1::3], vs[2::3]):
        alpha, beta = Fraction(2, 3), Fraction(-5, 7)
        lhs = multiply(v5, v5.element(x.scale(alpha) + xp.scale(beta)), v5.element(y))
        rhs = (multiply(v5, v5.element(x), v5.element(y)).scale(alpha)
               + multiply(v5, v5.element(xp), v5.element(y)).scale(beta))
        assert lhs == rhs


def test_left_right_mult_matrices():
    v3 = vidinli(1)
    assert left_mult_matrix(v3, v3.unit_element()) == Matrix.identity(3)
    assert left_mult_matrix(v3, v3.basis_element(2)) == Matrix.from_rows(
        [[0, -1, 1], [1, 0, 0], [0, 0, 0]])
    assert right_mult_matrix(v3, v3.basis_element(3)) == Matrix.from_rows(
        [[0, 1, -1], [0, 0, 0], [1, 0, 0]])


def test_commutator_and_anticommutator():
    v5 = vidinli(2)
    x = v5.element([0, 1, 2, 0, 3])
    assert commutator(v5, x, x).is_zero()
    # For u, v orthogonal to e1 the commutator is 2*omega(u, v)*e1.
    u = v5.element([0, 1, 0, 2, 0])
    w = v5.element([0, 0, 3, 0, -1])
    omega = Fraction(1 * 3) + Fraction(2 * -1)
    assert commutator(v5, u, w).coords == Vector.basis(5, 1).scale(2 * omega)
    v3 = vidinli(1)
    e2 = v3.basis_element(2)
    assert anticommutator(v3, e2, e2).coords == Vector.of([-2, 0, 0])


def test_check_morphism_rotation_and_swap():
    v3 = vidinli(1)
    # e2 -> e3, e3 -> -e2 extends to an automorphism (a quarter turn).
    rot = Morphism(v3, v3, Matrix.from_rows([[1, 0, 0], [0, 0, -1], [0, 1, 0]]))
    assert check_morphism(rot)
    # Swapping e2 and e3 negates the skew form and is not multiplicative.
    swap = Morphism(v3, v3, Matrix.from_rows([[1, 0, 0], [0, 0, 1], [0, 1, 0]]))
    assert not check_morphism(swap)
    assert check_morphism(Morphism(v3, v3, Matrix.identity(3)))


def test_check_morphism_full_element_pairs():
    v3 = vidinli(1)
    rot = Morphism(v3, v3, Matrix.from_rows([[1, 0, 0], [0, 0, -1], [0, 1, 0]]))
    vs = deterministic_vectors(3, 100)
    for x, y in zip(vs[:50], vs[50:]):
        ex, ey = v3.element(x), v3.element(y)
        assert rot.apply(ex * ey) == rot.apply(ex) * rot.apply(ey)


def test_ideal_closure():
    v3 = vidinli(1)
    assert ideal_closure(v3, [v3.basis_element(2)]) == Subspace.full(3)
    assert ideal_closure(v3, [v3.zero_element()]).dim == 0
    qq2 = pointwise_product_algebra()
    one_sided = ideal_closure(qq2, [qq2.element([1, 0])])
    assert one_sided == Subspace.from_vectors(2, [Vector.of([1, 0])])


def test_ideal_closure_stable_under_enlargement():
    v5 = vidinli(2)
    base = ideal_closure(v5, [v5.basis_element(2)])
    extra = v5.element([0, 1, 1, 0, 0])
    assert base.contains_vector(extra.coords)
    assert ideal_closure(v5, [v5.basis_element(2), extra]) == base


def test_subalgebra_closure():
    v7 = vidinli(3)
    span = subalgebra_closure(v7, [v7.basis_element(i) for i in (1, 2, 3)])
    assert span == Subspace.from_vectors(7, [Vector.basis(7, i) for i in (1, 2, 3)])
    v5 = vidinli(2)
    closed = subalgebra_closure(v5, [v5.basis_element(2)])
    assert closed == Subspace.from_vectors(5, [Vector.basis(5, 1), Vector.basis(5, 2)])
    unit_only = subalgebra_closure(v5, [v5.unit_element()])
    assert unit_only.dim == 1


def test_simplicity_certificates():
    for n in (1, 2, 3):
        cert = is_simple_certified(vidinli(n))
        assert cert.is_simple
        assert cert.mult_algebra_dim == (2 * n + 1) ** 2
    dual = dual_numbers()
    cert = is_simple_certified(dual)
    assert cert.kind == "not_simple"
    assert cert.ideal == Subspace.from_vectors(2, [Vector.basis(2, 2)])


def test_simple_implies_basis_ideals_full():
    for algebra in (vidinli(1), vidinli(2)):
        assert is_simple_certified(algebra).is_simple
        for i in range(1, algebra.dim + 1):
            assert ideal_closure(algebra, [algebra.basis_element(i)]).dim == algebra.dim


def test_simplicity_requires_unit():
    with pytest.raises(ValueError):
        is_simple_certified(heisenberg(1))


def test_induced_subalgebra_and_permutation():
    v5 = vidinli(2)
    sub = induced_on_basis_indices(v5, [1, 2, 3])
    assert sub is not None and sub.same_table(vidinli(1))
    assert induced_on_basis_indices(v5, [2, 3]) is None  # e2*e2 = -e1 escapes
    perm = permute_basis(v5, [1, 4, 5, 2, 3])
    assert perm.same_table(vidinli(2))  # swapping the two coupled pairs


def test_json_roundtrip_all_constructors():
    algebras = [vidinli(1), vidinli(3), vidinli_jordan(4), heisenberg(2), jspin(2),
                quaternions(), complex_algebra(), twisted_v3(2, 1, 0),
                vidinli_type(2, SkewForm.from_pairs(2, {(2, 3): 1, (3, 4): 1, (4, 5): 1}))]
    for a in algebras:
        back = algebra_from_json(algebra_to_json(a))
        assert back.same_table(a) and back.label == a.label
        assert loads_algebra(dumps_algebra(a)).same_table(a)
        assert dumps_algebra(back) == dumps_algebra(a)


def test_json_value_format():
    payload = algebra_to_json(vidinli(1))
    values = {entry["value"] for entry in payload["constants"]}
    assert values <= {"1/1", "-1/1"}
    assert all("/" in v for v in values)


def test_algebra_validation():
    with pytest.raises(ValueError):
        Algebra(0, {})
    with pytest.raises(ValueError):
        Algebra(2, {}, unit=5)
    with pytest.raises(ValueError):
        Algebra(2, {(1, 3): Vector.zero(2)})
    with pytest.raises(ValueError):
        Algebra(2, {(1, 1): Vector.zero(3)})


def test_algebra_mismatch_raises():
    v3, v5 = vidinli(1), vidinli(2)
    with pytest.raises(ValueError):
        multiply(v3, v3.basis_element(1), v5.basis_element(1))
