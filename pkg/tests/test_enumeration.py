import pytest

from zx_axiom_verifier.error import CapacityError
from zx_axiom_verifier.arithmetic import RationalAngle, PI, HALF_PI, ZERO
from zx_axiom_verifier.euler import (
    angle_grid,
    common_order,
    enumerate_euler,
    radin_sadun_check,
    radin_sadun_sweep,
    conclusion_holds,
    sweep_grid,
    NOT_IDENTITY,
    CONCLUSION_HOLDS,
)


def test_angle_grid():
    assert angle_grid(1) == [ZERO, PI]
    assert len(angle_grid(6)) == 24
    assert angle_grid(2)[1] == HALF_PI
    assert RationalAngle(1, 3) in angle_grid(4)
    assert angle_grid(6) == sweep_grid(6)

    with pytest.raises(ValueError):
        angle_grid(0)
    with pytest.raises(CapacityError):
        angle_grid(9)


@pytest.mark.parametrize('max_denominator', [1, 2, 3])
def test_every_small_grid_equality_is_classified(max_denominator):
    results = enumerate_euler(max_denominator)

    assert results
    assert all(match is not None for _, match in results), [str(eq) for eq, match in results if match is None]
    assert all(equality.holds() for equality, _ in results[:50])


def test_enumeration_finds_the_pi_triple():
    lhs_rhs = {(equality.lhs, equality.rhs) for equality, _ in enumerate_euler(1)}
    assert ((PI, PI, PI), (PI, ZERO, ZERO)) in lhs_rhs
    assert ((ZERO, ZERO, ZERO), (ZERO, ZERO, ZERO)) in lhs_rhs


def test_common_order():
    assert [common_order(q) for q in (1, 4, 6, 8)] == [2, 24, 120, 1680]


def test_enumeration_mixes_denominators():
    third = RationalAngle(1, 3)
    lhs_rhs = {(equality.lhs, equality.rhs) for equality, _ in enumerate_euler(4)}

    assert ((third, ZERO, ZERO), (ZERO, third, ZERO)) in lhs_rhs
    assert ((RationalAngle(1, 4), third, ZERO), (ZERO, RationalAngle(1, 4), third)) in lhs_rhs


def test_enumeration_is_sorted():
    results = enumerate_euler(2)
    keys = [(equality.lhs, equality.rhs) for equality, _ in results]
    assert keys == sorted(keys)


@pytest.mark.slow
def test_every_equality_with_denominator_six_is_classified():
    assert all(match is not None for _, match in enumerate_euler(6))


@pytest.mark.parametrize('sequence, verdict', [
    ((PI, PI, PI, PI), CONCLUSION_HOLDS),
    ((ZERO,), CONCLUSION_HOLDS),
    ((HALF_PI, HALF_PI, HALF_PI, HALF_PI), NOT_IDENTITY),
    ((HALF_PI, RationalAngle(3, 2)), NOT_IDENTITY),
    ((RationalAngle(1, 3),), NOT_IDENTITY),
])
def test_radin_sadun_check(sequence, verdict):
    assert radin_sadun_check(sequence) == verdict


def test_radin_sadun_check_validation():
    with pytest.raises(ValueError):
        radin_sadun_check(())
    with pytest.raises(ValueError):
        radin_sadun_check((PI, 1.0))


def test_conclusion_holds():
    assert conclusion_holds((RationalAngle(1, 3), PI))
    assert conclusion_holds((RationalAngle(1, 3), HALF_PI, RationalAngle(3, 2)))
    assert not conclusion_holds((HALF_PI, RationalAngle(1, 3), HALF_PI))


def test_sweep_grid():
    grid = sweep_grid(4)

    assert len(grid) == 12
    assert len(set(grid)) == len(grid)
    assert len(sweep_grid(6)) == 24


def test_small_sweep():
    report = radin_sadun_sweep(2, 4)

    assert report.by_length == {1: 1, 2: 1}
    assert report.sequences == 12 + 12 ** 2
    assert report.identity_instances == 2
    assert report.passed
    assert report.to_dict()['by_length'] == {'1': 1, '2': 1}


def test_sweep_of_length_three_passes():
    report = radin_sadun_sweep(3, 4)

    assert report.passed
    assert report.counterexamples == []
    assert report.by_length[3] >= 1


@pytest.mark.slow
def test_sweep_of_length_four_passes():
    report = radin_sadun_sweep(4, 6)

    assert report.sequences == 24 + 24 ** 2 + 24 ** 3 + 24 ** 4
    assert report.passed


@pytest.mark.parametrize('length, denominator, error', [
    (6, 4, CapacityError),
    (2, 9, CapacityError),
    (0, 4, ValueError),
    (2, 0, ValueError),
])
def test_sweep_limits(length, denominator, error):
    with pytest.raises(error):
        radin_sadun_sweep(length, denominator)
