from fractions import Fraction

import pytest

from matlislab.algebra import (
    Presentation,
    annihilator_of_ideal,
    build_algebra,
    ideal_from_generators,
    ideal_product,
    ideal_sum,
    is_iso_to_regular,
    minimal_generators,
    unit_ideal,
    zero_ideal,
)
from matlislab.errors import BoundNotCertified, FixtureValidationError
from matlislab.fields import PrimeField, QQ

F = Fraction


def _build(field, variables, relations, bound):
    return build_algebra(Presentation(field, variables, relations, bound))


@pytest.fixture(scope="module")
def R3():
    return _build(QQ, ["x"], [[(F(1), (3,))]], 3)


@pytest.fixture(scope="module")
def KXY():
    return _build(QQ, ["x", "y"], [[(F(1), (2, 0))], [(F(1), (0, 2))]], 3)


def test_truncated_polynomial_dims(R3):
    assert R3.dim == 3
    assert R3.basis == ((0,), (1,), (2,))


def test_two_variable_basis_order(KXY):
    # graded-lex ascending: 1, y, x, xy
    assert KXY.basis == ((0, 0), (0, 1), (1, 0), (1, 1))


def test_square_of_max_ideal_relations():
    V2 = _build(QQ, ["x", "y"], [[(F(1), (2, 0))], [(F(1), (1, 1))], [(F(1), (0, 2))]], 2)
    assert V2.dim == 3


def test_prime_field_algebra():
    R4 = _build(PrimeField(5), ["x"], [[(1, (4,))]], 4)
    assert R4.dim == 4
    x = R4.var_elements[0]
    x2 = R4.multiply(x, x)
    assert R4.multiply(x2, x2) == tuple([0] * 4)


def test_bound_not_certified():
    # x^3 = 0 declared with nilpotency 2: x^2 does not reduce to zero
    with pytest.raises(BoundNotCertified):
        _build(QQ, ["x"], [[(F(1), (3,))]], 2)


def test_multiplication_matches_table(R3):
    x = R3.var_elements[0]
    x2 = R3.multiply(x, x)
    assert x2 == (F(0), F(0), F(1))
    assert R3.multiply(x2, x) == (F(0), F(0), F(0))


def test_relation_with_lower_order_terms():
    # x^2 = x^3 collapses: x^2(1 - x) = 0 and 1 - x is a unit
    A = _build(QQ, ["x"], [[(F(1), (2,)), (F(-1), (3,))]], 4)
    assert A.dim == 2


def test_annihilator_and_double_annihilator(R3):
    x = R3.var_elements[0]
    I = ideal_from_generators(R3, [x])
    ann = annihilator_of_ideal(I)
    assert ann.dim == 1 and ann.contains(R3.multiply(x, x))
    bar = annihilator_of_ideal(ann)
    assert bar.basis_matrix == I.basis_matrix


def test_ideal_product_and_sum(KXY):
    x, y = KXY.var_elements
    m = ideal_from_generators(KXY, [x, y])
    m2 = ideal_product(m, m)
    assert m2.dim == 1 and m2.contains(KXY.multiply(x, y))
    assert ideal_sum(m2, m).basis_matrix == m.basis_matrix


def test_annihilator_of_max_ideal(KXY):
    x, y = KXY.var_elements
    m = ideal_from_generators(KXY, [x, y])
    ann = annihilator_of_ideal(m)
    assert ann.dim == 1 and ann.contains(KXY.multiply(x, y))


def test_zero_and_unit_ideals(R3):
    assert zero_ideal(R3).is_zero()
    assert unit_ideal(R3).is_whole_ring()
    assert annihilator_of_ideal(unit_ideal(R3)).is_zero()
    assert annihilator_of_ideal(zero_ideal(R3)).is_whole_ring()


def test_minimal_generators(KXY):
    x, y = KXY.var_elements
    m = ideal_from_generators(KXY, [x, y])
    gens = minimal_generators(m)
    assert len(gens) == 2
    assert ideal_from_generators(KXY, gens).basis_matrix == m.basis_matrix


def test_is_iso_to_regular(R3, KXY):
    one = R3.element_from_terms([(F(1), (0,))])
    assert is_iso_to_regular(unit_ideal(R3))
    x = R3.var_elements[0]
    assert not is_iso_to_regular(ideal_from_generators(R3, [x]))
    # a principal ideal generated by a unit is the whole ring
    u = tuple(F(a) for a in (1, 1, 0))
    assert is_iso_to_regular(ideal_from_generators(R3, [u]))
    xk, yk = KXY.var_elements
    assert not is_iso_to_regular(ideal_from_generators(KXY, [xk, yk]))


def test_degree_zero_relation_rejected():
    with pytest.raises(Exception):
        _build(QQ, ["x"], [[(F(1), (0,))]], 3)
