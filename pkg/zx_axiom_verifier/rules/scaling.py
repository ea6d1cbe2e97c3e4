"""Scaled equality: an equality between linear diagrams that is provable without rule (A) keeps holding when every
angle is multiplied by any k ≡ 1 (mod n), for a suitable n. Also rational (dyadic) approximation utilities that check an
equality at rational points converging to a real assignment.
"""
import logging
import numpy as np

from fractions   import Fraction
from dataclasses import dataclass, field, asdict
from typing      import Any, Mapping, Union
from zx_axiom_verifier.arithmetic import RationalAngle
from zx_axiom_verifier.diagram import Diagram, Angle, angle_radians, substitute, scale_variables
from zx_axiom_verifier.semantics import Interpreter, DEFAULT_TOLERANCE, DEFAULT_MAX_WIRES
from zx_axiom_verifier.rules.rule_schema import MODES
from zx_axiom_verifier.rules.soundness import compare

MAX_APPROXIMATION_LEVEL = 10


@dataclass(frozen=True)
class ScalingReport:
    n: int
    k_max: int
    mode: str
    tested: 'list[int]' = field(default_factory=list)
    results: 'dict[int, bool]' = field(default_factory=dict)
    first_failure: Union[int, None] = None

    @property
    def passed(self) -> bool:
        return self.first_failure is None

    def to_dict(self) -> 'dict[str, Any]':
        payload = asdict(self)
        payload['results'] = {str(k): value for k, value in self.results.items()}
        return {**payload, 'passed': self.passed}


def _backend_for(*diagrams: Diagram) -> str:
    return 'exact' if all(diagram.is_rational() for diagram in diagrams) else 'float'


def scaled_equality_test(
        d1: Diagram,
        d2: Diagram,
        assignment: 'Mapping[str, Angle]',
        n: int,
        k_max: int,
        mode: str = 'exact',
        tolerance: float = DEFAULT_TOLERANCE,
        max_wires: int = DEFAULT_MAX_WIRES,
        stop_at_first_failure: bool = False
    ) -> ScalingReport:
    """Tests d1 = d2 after multiplying every angle by k, for k = 1, n + 1, 2n + 1, ... <= k_max

    Note:
        Both diagrams are substituted first. Rational diagrams are compared exactly, others on the float backend

    Args:
        d1 (Diagram): left diagram
        d2 (Diagram): right diagram, same arity as d1
        assignment (Mapping[str, Angle]): values of every variable of d1 and d2
        n (int): modulus of the scaling factors
        k_max (int): largest scaling factor
        mode (str, optional): 'exact' or 'scalar'. Defaults to 'exact'.
        stop_at_first_failure (bool, optional): stop after the first failing k. Defaults to False.

    Raises:
        ValueError: If n or k_max is not positive, or the mode is unknown

    Returns:
        ScalingReport: per-k results and the first failing k, if any
    """
    if n < 1 or k_max < 1:
        raise ValueError('n and k_max must be positive integers')
    if mode not in MODES:
        raise ValueError(f'mode must be one of the following: {", ".join(MODES)}')

    concrete_1 = substitute(d1, assignment)
    concrete_2 = substitute(d2, assignment)

    tested, results, first_failure = [], {}, None
    for k in range(1, k_max + 1, n):
        scaled_1 = scale_variables(concrete_1, k)
        scaled_2 = scale_variables(concrete_2, k)
        interpreter = Interpreter(_backend_for(scaled_1, scaled_2), max_wires)

        matched, _ = compare(interpreter.interpret(scaled_1), interpreter.interpret(scaled_2), mode, tolerance)
        tested.append(k)
        results[k] = matched

        if not matched and first_failure is None:
            first_failure = k
            logging.info(f'scaled equality fails at {k = }')
            if stop_at_first_failure:
                break

    return ScalingReport(n, k_max, mode, tested, results, first_failure)


def rational_approximations(value: Angle, levels: int) -> 'list[RationalAngle]':
    """Dyadic approximations round(x/π · 2^j)·π / 2^j of an angle, for j = 1 .. levels

    Raises:
        ValueError: If levels is outside 1 .. 10
    """
    if not 1 <= levels <= MAX_APPROXIMATION_LEVEL:
        raise ValueError(f'levels must be between 1 and {MAX_APPROXIMATION_LEVEL}')

    if isinstance(value, RationalAngle):
        return [value] * levels

    turns = angle_radians(value) / np.pi
    return [RationalAngle.from_fraction(Fraction(round(turns * 2 ** level), 2 ** level)) for level in range(1, levels + 1)]


def limit_check(
        d1: Diagram,
        d2: Diagram,
        assignment: 'Mapping[str, Angle]',
        levels: int,
        mode: str = 'exact',
        max_wires: int = DEFAULT_MAX_WIRES
    ) -> 'dict[int, bool]':
    """Exact comparison of d1 and d2 at the dyadic approximations of a real assignment, one per level

    Returns:
        dict[int, bool]: level -> whether the two sides agree exactly there
    """
    approximations = {name: rational_approximations(value, levels) for name, value in assignment.items()}
    interpreter = Interpreter('exact', max_wires)

    results = {}
    for level in range(1, levels + 1):
        point = {name: values[level - 1] for name, values in approximations.items()}
        matched, _ = compare(interpreter.interpret(substitute(d1, point)), interpreter.interpret(substitute(d2, point)), mode)
        results[level] = matched

    return results
