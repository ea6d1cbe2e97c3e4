"""The seven parametric families of provable Euler equalities Z(a1)·X(a2)·Z(a3) = X(b1)·Z(b2)·X(b3)

Each family is written with two integers n, m and one or two free angles. Since nπ only matters modulo 2π, n and m
range over {0, 1}. Every family also has a color-swapped variant, with Z and X exchanged on both sides.
"""
import functools

from dataclasses import dataclass
from typing      import Callable, Mapping, Union
from zx_axiom_verifier.arithmetic import PI, HALF_PI
from zx_axiom_verifier.diagram import AngleExpr, Angle
from zx_axiom_verifier.euler.equality import EulerEquality

PARITIES = [(0, 0), (0, 1), (1, 0), (1, 1)]

Positions = 'tuple[tuple[AngleExpr, AngleExpr, AngleExpr], tuple[AngleExpr, AngleExpr, AngleExpr]]'

A2, A3, B1 = AngleExpr.variable('alpha2'), AngleExpr.variable('alpha3'), AngleExpr.variable('beta1')


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _family_1(n: int, m: int) -> Positions:
    return (AngleExpr.of(PI * n), A2 * _sign(n), A3 + PI * n), (A2 + PI * m, A3 * _sign(m), AngleExpr.of(PI * m))


def _family_2(n: int, m: int) -> Positions:
    return (AngleExpr.of(PI * (m + n)), A2 * _sign(n), AngleExpr.of(PI * n)), (B1 * _sign(m), AngleExpr.of(PI * m), A2 - B1)


def _family_3(n: int, m: int) -> Positions:
    return (PI * m - A2, AngleExpr.of(PI * n), A2 * _sign(n)), (A3 * _sign(m), AngleExpr.of(PI * m), PI * n - A3)


def _family_4(n: int, m: int) -> Positions:
    return (
        AngleExpr.of(PI * n + HALF_PI), AngleExpr.of(PI * n + HALF_PI), A3 + PI * n
    ), (
        A3 + PI * m, AngleExpr.of(PI * m + HALF_PI), AngleExpr.of(PI * m + HALF_PI)
    )


def _family_5(n: int, m: int) -> Positions:
    return (
        AngleExpr.of(PI * n - HALF_PI), AngleExpr.of(PI * n + HALF_PI), A3 + PI * n
    ), (
        PI * m - A3, AngleExpr.of(PI * m - HALF_PI), AngleExpr.of(PI * m + HALF_PI)
    )


def _family_6(n: int, m: int) -> Positions:
    return (
        AngleExpr.of(PI * n + HALF_PI), A3 + PI * n, AngleExpr.of(PI * m - HALF_PI)
    ), (
        AngleExpr.of(PI * n - HALF_PI), A3 + PI * m, AngleExpr.of(PI * m + HALF_PI)
    )


def _family_7(n: int, m: int) -> Positions:
    return (
        AngleExpr.of(PI * n + HALF_PI), A3 + PI * n, AngleExpr.of(PI * m - HALF_PI)
    ), (
        AngleExpr.of(PI * n + HALF_PI), PI * m - A3, AngleExpr.of(PI * m - HALF_PI)
    )


@dataclass(frozen=True)
class EulerFamily:
    """One of the seven families: an identifier, its free angle names and the template builder"""

    family_id: int
    free: 'tuple[str, ...]'
    builder: 'Callable[[int, int], Positions]'

    def positions(self, n: int, m: int) -> Positions:
        return _positions(self.family_id, n % 2, m % 2)

    def __str__(self) -> str:
        return f'family {self.family_id}'


@functools.lru_cache(maxsize=None)
def _positions(family_id: int, n: int, m: int) -> Positions:
    return FAMILIES[family_id - 1].builder(n, m)


FAMILIES = [
    EulerFamily(1, ('alpha2', 'alpha3'), _family_1),
    EulerFamily(2, ('alpha2', 'beta1'), _family_2),
    EulerFamily(3, ('alpha2', 'alpha3'), _family_3),
    EulerFamily(4, ('alpha3',), _family_4),
    EulerFamily(5, ('alpha3',), _family_5),
    EulerFamily(6, ('alpha3',), _family_6),
    EulerFamily(7, ('alpha3',), _family_7),
]


def get_family(family_id: int) -> EulerFamily:
    if not 1 <= family_id <= len(FAMILIES):
        raise ValueError(f'family_id must be one of the following: {", ".join(str(f.family_id) for f in FAMILIES)}')
    return FAMILIES[family_id - 1]


def family_instance(
        family: 'Union[EulerFamily, int]',
        n: int,
        m: int,
        assignment: 'Mapping[str, Angle]',
        color_swapped: bool = False
    ) -> EulerEquality:
    """Instantiates a family at integers n, m and values of its free angles

    Args:
        family (EulerFamily | int): the family or its identifier 1-7
        n (int): first integer parameter
        m (int): second integer parameter
        assignment (Mapping[str, Angle]): values of the family's free angles
        color_swapped (bool, optional): build the color-swapped variant. Defaults to False.

    Raises:
        ValueError: If the family identifier is unknown
        UnboundVariableError: If a free angle of the family has no value

    Returns:
        EulerEquality: the instance
    """
    family = get_family(family) if isinstance(family, int) else family
    lhs, rhs = family.positions(n, m)

    return EulerEquality(
        tuple(expr.evaluate(assignment) for expr in lhs),
        tuple(expr.evaluate(assignment) for expr in rhs),
        color_swapped
    )
