import cmath
import sympy
import pytest

from fractions  import Fraction
from hypothesis import given, settings, strategies as st
from zx_axiom_verifier.error import CapacityError
from zx_axiom_verifier.arithmetic import Cyclotomic, RationalAngle, angle_normalize, root_of_unity, unit_sum, radians_close

rational_angles = st.builds(RationalAngle, st.integers(-24, 24), st.integers(1, 12))


@pytest.mark.parametrize('numerator, denominator, expected', [
    (3, 2, (3, 2)),
    (-1, 2, (3, 2)),
    (10, 4, (1, 2)),
    (0, 5, (0, 1)),
    (4, 2, (0, 1)),
    (-7, 3, (5, 3)),
])
def test_angle_normalize(numerator, denominator, expected):
    angle = angle_normalize(numerator, denominator)
    assert (angle.numerator, angle.denominator) == expected


def test_angle_normalize_rejects_zero_denominator():
    with pytest.raises(ValueError):
        angle_normalize(1, 0)


def test_rational_angle_arithmetic():
    assert RationalAngle(1, 2) + RationalAngle(3, 2) == RationalAngle(0)
    assert -RationalAngle(1, 3) == RationalAngle(5, 3)
    assert RationalAngle(1, 4) * 9 == RationalAngle(1, 4)
    assert str(RationalAngle(3, 4)) == '3*pi/4'
    assert str(RationalAngle(1)) == 'pi'


@pytest.mark.parametrize('angle, order, value', [
    (RationalAngle(1, 2), 4, 1j),
    (RationalAngle(1), 2, -1),
    (RationalAngle(2, 3), 3, cmath.exp(2j * cmath.pi / 3)),
    (RationalAngle(0), 1, 1),
])
def test_root_of_unity_has_minimal_order(angle, order, value):
    root = root_of_unity(angle)
    assert root.order == order
    assert abs(complex(root) - value) < 1e-12


def test_third_roots_of_unity_sum_to_zero():
    zeta = root_of_unity(RationalAngle(2, 3))
    assert (1 + zeta + zeta * zeta).is_zero()


def test_cyclotomic_operations():
    assert (1 + Cyclotomic.root(2)).is_zero()
    assert Cyclotomic.root(4) * Cyclotomic.root(4) == Cyclotomic.root(2)
    assert (Cyclotomic.sqrt2() * Cyclotomic.sqrt2()) == 2
    assert Cyclotomic.sqrt2() * Cyclotomic.inv_sqrt2() == 1


@pytest.mark.parametrize('p', list(sympy.primerange(2, 24)))
def test_prime_roots_of_unity_sum_to_zero(p):
    assert unit_sum(p, list(range(p))).is_zero()


def test_cyclotomic_values_of_different_orders_compare_by_value():
    assert Cyclotomic.root(2) == Cyclotomic.root(8, 4)
    assert Cyclotomic.root(3) != Cyclotomic.root(6)
    assert Cyclotomic.from_rational(Fraction(1, 3), 5) == Fraction(1, 3)


def test_coefficients_are_dense_and_canonical():
    value = Cyclotomic(8, {7: 1})
    assert len(value.coefficients) == 8
    assert value.coefficients[3] == -1
    assert value.key() == (8, ((3, Fraction(-1)),))


def test_lift_requires_a_multiple_of_the_order():
    assert Cyclotomic.root(4).lift(8) == Cyclotomic.root(8, 2)
    with pytest.raises(ValueError):
        Cyclotomic.root(4).lift(6)


def test_order_cap():
    with pytest.raises(CapacityError):
        Cyclotomic.root(5000)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.zero(8).inverse()


@given(rational_angles, rational_angles)
@settings(max_examples=60, deadline=None)
def test_roots_of_unity_multiply_by_adding_angles(a, b):
    assert root_of_unity(a) * root_of_unity(b) == root_of_unity(a + b)


@given(rational_angles)
@settings(max_examples=60, deadline=None)
def test_float_embedding_matches_the_angle(angle):
    assert abs(complex(root_of_unity(angle)) - cmath.exp(1j * angle.radians)) < 1e-12


@given(st.lists(st.tuples(st.integers(0, 23), st.fractions(min_value=-5, max_value=5, max_denominator=9)), min_size=1, max_size=6))
@settings(max_examples=40, deadline=None)
def test_inverse_and_conjugate(terms):
    value = Cyclotomic(24, dict(terms))

    assert abs(complex(value.conjugate()) - complex(value).conjugate()) < 1e-9
    if not value.is_zero():
        assert value * value.inverse() == 1


def test_radians_close_wraps_around():
    assert radians_close(0.0, 2 * cmath.pi - 1e-12)
    assert not radians_close(0.0, 0.1)
