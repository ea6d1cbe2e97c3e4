import numpy as np
import pytest

from conftest import FIXTURES, SINGLE_POINT_X
from zx_axiom_verifier.error import UnboundVariableError
from zx_axiom_verifier.arithmetic import RationalAngle
from zx_axiom_verifier.diagram import parse_diagram_file, parse_diagram_text
from zx_axiom_verifier.rules import scaled_equality_test, rational_approximations, limit_check
from zx_axiom_verifier.euler import FAMILIES, family_instance, alternating_diagram


@pytest.fixture
def single_point():
    document = parse_diagram_file(FIXTURES / 'single_point.zx')
    return document.terms['lhs'], document.terms['rhs']


def test_single_point_coincidence_fails_after_scaling(single_point):
    report = scaled_equality_test(*single_point, {'x': SINGLE_POINT_X}, n=2, k_max=50)

    assert report.tested == list(range(1, 51, 2))
    assert report.results[1]
    assert report.first_failure == 3
    assert not report.passed


def test_stop_at_first_failure(single_point):
    report = scaled_equality_test(*single_point, {'x': SINGLE_POINT_X}, 2, 50, stop_at_first_failure=True)
    assert report.tested == [1, 3]


def test_scaling_keeps_sound_rules():
    document = parse_diagram_text('vars: a, b\nlhs: seq(Z(2,1,a), Z(1,2,b))\nrhs: Z(2,2,a + b)')
    report = scaled_equality_test(document.terms['lhs'], document.terms['rhs'], {'a': 0.4, 'b': 2.9}, 3, 40)

    assert report.passed
    assert report.tested[:3] == [1, 4, 7]
    assert report.to_dict()['results']['1'] is True


def test_scaling_rational_assignments_compares_exactly():
    document = parse_diagram_text('vars: a\nlhs: seq(Z(1,1,a), Z(1,1,a))\nrhs: Z(1,1,2*a)')
    report = scaled_equality_test(document.terms['lhs'], document.terms['rhs'], {'a': RationalAngle(1, 5)}, 4, 21)

    assert report.passed
    assert report.tested == [1, 5, 9, 13, 17, 21]


def test_euler_family_instances_survive_odd_scaling():
    rng = np.random.default_rng(2024)

    for index in range(20):
        family = FAMILIES[index % len(FAMILIES)]
        assignment = {name: float(rng.uniform(0, 2 * np.pi)) for name in family.free}
        equality = family_instance(family, int(rng.integers(0, 2)), int(rng.integers(0, 2)), assignment, index % 2 == 1)

        d1 = alternating_diagram(equality.lhs, equality.lhs_order[0])
        d2 = alternating_diagram(equality.rhs, equality.rhs_order[0])
        report = scaled_equality_test(d1, d2, {}, n=2, k_max=50, mode='scalar')

        assert report.passed, f'{equality} fails at k = {report.first_failure}'


@pytest.mark.parametrize('n, k_max, mode', [(0, 5, 'exact'), (2, 0, 'exact'), (2, 5, 'fuzzy')])
def test_scaled_equality_validation(single_point, n, k_max, mode):
    with pytest.raises(ValueError):
        scaled_equality_test(*single_point, {'x': 1.0}, n, k_max, mode)


def test_scaled_equality_needs_every_variable(single_point):
    with pytest.raises(UnboundVariableError):
        scaled_equality_test(*single_point, {}, 2, 5)


def test_rational_approximations():
    assert rational_approximations(1.0, 3) == [RationalAngle(1, 2), RationalAngle(1, 4), RationalAngle(3, 8)]
    assert rational_approximations(RationalAngle(1, 3), 2) == [RationalAngle(1, 3)] * 2

    with pytest.raises(ValueError):
        rational_approximations(1.0, 0)
    with pytest.raises(ValueError):
        rational_approximations(1.0, 11)


def test_limit_check(single_point):
    document = parse_diagram_text('vars: a, b\nlhs: seq(Z(2,1,a), Z(1,2,b))\nrhs: Z(2,2,a + b)')

    assert limit_check(document.terms['lhs'], document.terms['rhs'], {'a': 0.7, 'b': 1.9}, 4) == {1: True, 2: True, 3: True, 4: True}
    assert not any(limit_check(*single_point, {'x': SINGLE_POINT_X}, 4).values())
