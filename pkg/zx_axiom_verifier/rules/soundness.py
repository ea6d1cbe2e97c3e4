import logging
import numpy as np

from dataclasses import dataclass, field, asdict
from typing      import Any, Union
from zx_axiom_verifier.util import task_rng
from zx_axiom_verifier.arithmetic import RationalAngle
from zx_axiom_verifier.diagram import Diagram, Angle, format_angle
from zx_axiom_verifier.semantics import Interpreter, Matrix, equal_exact, equal_up_to_scalar, DEFAULT_TOLERANCE, DEFAULT_MAX_WIRES
from zx_axiom_verifier.rules.rule_schema import RuleSchema
from zx_axiom_verifier.rules.rule_a import sample_rule_a

DEFAULT_SAMPLES = 200
MAX_SAMPLE_DENOMINATOR = 16


@dataclass(frozen=True)
class SoundnessReport:
    """Outcome of sampling one rule on both backends

    Note:
        counterexample is set iff some check failed; it records the backend and the failing assignment
    """

    rule: str
    mode: str
    exact_samples: int
    exact_passed: int
    float_samples: int
    float_passed: int
    max_deviation: float
    counterexample: 'Union[dict[str, str], None]' = None
    skipped: 'list[str]' = field(default_factory=list)

    @property
    def samples(self) -> int:
        return self.exact_samples + self.float_samples

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def to_dict(self) -> 'dict[str, Any]':
        return {**asdict(self), 'passed': self.passed}


def sample_assignment(
        variables: 'tuple[str, ...]',
        rng: np.random.Generator,
        backend: str,
        max_denominator: int = MAX_SAMPLE_DENOMINATOR
    ) -> 'dict[str, Angle]':
    """Random values for the variables: multiples kπ/q of one denominator q <= max_denominator, or uniform reals in [0, 2π)

    Note:
        One shared denominator per sample keeps the cyclotomic working order small
    """
    if backend == 'exact':
        denominator = int(rng.integers(1, max_denominator + 1))
        return {name: RationalAngle(int(rng.integers(0, 2 * denominator)), denominator) for name in variables}

    return {name: float(value) for name, value in zip(variables, rng.uniform(0, 2 * np.pi, size=len(variables)))}


def compare(lhs: Matrix, rhs: Matrix, mode: str, tolerance: float = DEFAULT_TOLERANCE) -> 'tuple[bool, float]':
    """Compares two interpretations per the rule mode

    Returns:
        tuple[bool, float]: whether they match, and the float max-norm deviation (0 for exact matrices)
    """
    if mode == 'exact':
        matched = equal_exact(lhs, rhs, tolerance)
        deviation = 0.0 if lhs.backend == 'exact' else _deviation(lhs.entries, rhs.entries)
        return matched, deviation

    scalar = equal_up_to_scalar(lhs, rhs, tolerance)
    if lhs.backend == 'exact':
        return scalar is not None, 0.0

    if scalar is None:
        pivot = int(np.argmax(np.abs(rhs.entries)))
        ratio = lhs.entries.flat[pivot] / rhs.entries.flat[pivot] if abs(rhs.entries.flat[pivot]) > tolerance else 1.0
        return False, _deviation(lhs.entries, ratio * rhs.entries)
    return True, _deviation(lhs.entries, scalar * rhs.entries)


def _deviation(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b), initial=0.0))


def format_assignment(assignment: 'dict[str, Angle]') -> 'dict[str, str]':
    return {name: format_angle(value) for name, value in sorted(assignment.items())}


class SoundnessChecker:
    """Samples variable assignments of a rule and compares the interpretations of both sides

    Args:
        tolerance (float, optional): float comparison tolerance. Defaults to 1e-9.
        max_wires (int, optional): wire cap for the interpreter. Defaults to 14.
        max_denominator (int, optional): largest denominator of exact samples. Defaults to 16.
    """

    def __init__(self, tolerance: float = DEFAULT_TOLERANCE, max_wires: int = DEFAULT_MAX_WIRES, max_denominator: int = MAX_SAMPLE_DENOMINATOR) -> None:
        self.tolerance = tolerance
        self.max_wires = max_wires
        self.max_denominator = max_denominator
        self.interpreters = {backend: Interpreter(backend, max_wires) for backend in ('exact', 'float')}

    def _sample(self, rule: RuleSchema, backend: str, seed: int, index: int) -> 'dict[str, Angle]':
        rng = task_rng(seed, f'{rule.name}/{backend}', index)
        if rule.side_condition == 'ruleA':
            return sample_rule_a(rng, backend, self.max_denominator)
        return sample_assignment(rule.variables, rng, backend, self.max_denominator)

    def check_pair(self, lhs: Diagram, rhs: Diagram, mode: str, backend: str) -> 'tuple[bool, float]':
        interpreter = self.interpreters[backend]
        return compare(interpreter.interpret(lhs), interpreter.interpret(rhs), mode, self.tolerance)

    def check(self, rule: RuleSchema, exact_samples: int = DEFAULT_SAMPLES, float_samples: int = DEFAULT_SAMPLES, seed: int = 0) -> SoundnessReport:
        """Checks one rule

        Note:
            A rule with real constants cannot be sampled exactly; its exact samples are skipped and listed in the report.
            Variable-free rules are evaluated once per backend and the verdict counted for every sample

        Returns:
            SoundnessReport: per-backend pass counts, max float deviation and the first counterexample
        """
        rule.validate()

        passed = {'exact': 0, 'float': 0}
        requested = {'exact': exact_samples, 'float': float_samples}
        max_deviation = 0.0
        counterexample = None
        skipped = []

        for backend in ('exact', 'float'):
            if backend == 'exact' and not all(isinstance(angle.constant, RationalAngle) for angle in rule.lhs.angles() + rule.rhs.angles()):
                skipped.append('exact: rule has real constants')
                requested['exact'] = 0
                continue

            cached: 'Union[tuple[bool, float], None]' = None
            for index in range(requested[backend]):
                assignment = self._sample(rule, backend, seed, index)

                if rule.variables:
                    result = self.check_pair(*rule.instantiate(assignment), rule.mode, backend)
                else:
                    cached = cached or self.check_pair(rule.lhs, rule.rhs, rule.mode, backend)
                    result = cached

                matched, deviation = result
                max_deviation = max(max_deviation, deviation)
                if matched:
                    passed[backend] += 1
                elif counterexample is None:
                    counterexample = {'backend': backend, **format_assignment(assignment)}
                    logging.warning(f'rule {rule.name} fails on the {backend} backend at {counterexample}')

        report = SoundnessReport(
            rule=rule.name,
            mode=rule.mode,
            exact_samples=requested['exact'],
            exact_passed=passed['exact'],
            float_samples=requested['float'],
            float_passed=passed['float'],
            max_deviation=max_deviation,
            counterexample=counterexample,
            skipped=skipped,
        )
        logging.info(f'{report.rule}: {report.exact_passed}/{report.exact_samples} exact, {report.float_passed}/{report.float_samples} float, {report.max_deviation = }')

        return report


def check_soundness(
        rule: RuleSchema,
        exact_samples: int = DEFAULT_SAMPLES,
        float_samples: int = DEFAULT_SAMPLES,
        seed: int = 0,
        tolerance: float = DEFAULT_TOLERANCE,
        max_wires: int = DEFAULT_MAX_WIRES
    ) -> SoundnessReport:
    return SoundnessChecker(tolerance, max_wires).check(rule, exact_samples, float_samples, seed)
