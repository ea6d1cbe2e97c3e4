import logging

from dataclasses import dataclass
from typing      import Any, Union
from zx_axiom_verifier.arithmetic import RationalAngle, radians_close
from zx_axiom_verifier.diagram import AngleExpr, Angle, add_angles, scale_angle, angle_radians, format_angle
from zx_axiom_verifier.semantics import DEFAULT_TOLERANCE
from zx_axiom_verifier.euler.equality import EulerEquality
from zx_axiom_verifier.euler.families import FAMILIES, PARITIES, EulerFamily

VERDICTS = ['classified', 'not-equal', 'unprovable', 'completeness-violation']


@dataclass(frozen=True)
class FamilyMatch:
    """A family instance equal to an Euler equality, position by position modulo 2π

    Note:
        color_swapped is set when the equality is the color-swapped variant of the family
    """

    family: EulerFamily
    n: int
    m: int
    assignment: 'dict[str, Angle]'
    color_swapped: bool

    def to_dict(self) -> 'dict[str, Any]':
        return {
            'family': self.family.family_id,
            'n': self.n,
            'm': self.m,
            'color_swapped': self.color_swapped,
            'assignment': {name: format_angle(value) for name, value in sorted(self.assignment.items())},
        }

    def __str__(self) -> str:
        swapped = ', color-swapped' if self.color_swapped else ''
        values = ', '.join(f'{name} = {format_angle(value)}' for name, value in sorted(self.assignment.items()))
        return f'{self.family} (n = {self.n}, m = {self.m}{swapped}){": " + values if values else ""}'


def angles_equal(a: Angle, b: Angle, tolerance: float = DEFAULT_TOLERANCE) -> bool:
    """Equality modulo 2π: exact for two rational angles, within tolerance otherwise"""
    if isinstance(a, RationalAngle) and isinstance(b, RationalAngle):
        return a == b
    return radians_close(angle_radians(a), angle_radians(b), tolerance)


def _solve_free(expressions: 'tuple[AngleExpr, ...]', values: 'tuple[Angle, ...]', free: 'tuple[str, ...]') -> 'Union[dict[str, Angle], None]':
    """Values of the free angles read off positions of the form ±v + c"""
    assignment = {}
    for name in free:
        for expr, value in zip(expressions, values):
            if len(expr.terms) == 1 and expr.terms[0][0] == name and expr.terms[0][1] in (1, -1):
                assignment[name] = scale_angle(add_angles(value, scale_angle(expr.constant, -1)), expr.terms[0][1])
                break
        else:
            return None
    return assignment


def _match(family: EulerFamily, n: int, m: int, values: 'tuple[Angle, ...]', tolerance: float) -> 'Union[dict[str, Angle], None]':
    lhs, rhs = family.positions(n, m)
    expressions = lhs + rhs

    assignment = _solve_free(expressions, values, family.free)
    if assignment is None:
        return None

    if all(angles_equal(expr.evaluate(assignment), value, tolerance) for expr, value in zip(expressions, values)):
        return assignment
    return None


def classify_euler(eq: EulerEquality, tolerance: float = DEFAULT_TOLERANCE) -> Union[FamilyMatch, None]:
    """First family instance matching an Euler equality, trying families in order, then (n, m), then orientation

    Note:
        An equality matches a family directly, or with its two sides exchanged; the latter is the family's color-swapped
        variant. Rational inputs are matched exactly modulo 2π, real inputs within tolerance

    Args:
        eq (EulerEquality): the equality to classify
        tolerance (float, optional): angle tolerance on real inputs. Defaults to 1e-9.

    Returns:
        FamilyMatch | None: the match, or None when no family contains the equality
    """
    orientations = [(False, eq.lhs + eq.rhs), (True, eq.rhs + eq.lhs)]

    for family in FAMILIES:
        for n, m in PARITIES:
            for exchanged, values in orientations:
                assignment = _match(family, n, m, values, tolerance)
                if assignment is not None:
                    return FamilyMatch(family, n, m, assignment, eq.color_swapped != exchanged)

    return None


def euler_verdict(eq: EulerEquality, tolerance: float = DEFAULT_TOLERANCE) -> 'tuple[str, Union[FamilyMatch, None]]':
    """Verdict on an Euler equality

    Note:
        'unprovable' is a true equality with a real angle outside every family, which needs the nonlinear rule.
        'completeness-violation' is a true rational equality outside every family and never occurs for a correct family list

    Returns:
        tuple[str, FamilyMatch | None]: one of the VERDICTS, and the family match when classified
    """
    match = classify_euler(eq, tolerance)
    if match is not None:
        return 'classified', match

    if not eq.holds(tolerance):
        return 'not-equal', None

    if eq.is_rational():
        logging.error(f'completeness violation: {eq} holds but matches no family')
        return 'completeness-violation', None

    return 'unprovable', None
