import logging
import numpy as np

from dataclasses import dataclass, field, asdict
from typing      import Any, Callable, Union
from zx_axiom_verifier.util import task_rng
from zx_axiom_verifier.arithmetic import Cyclotomic, RationalAngle, root_of_unity
from zx_axiom_verifier.diagram import Angle, format_angle, scale_angle, substitute
from zx_axiom_verifier.semantics import Interpreter, DEFAULT_TOLERANCE, DEFAULT_MAX_WIRES
from zx_axiom_verifier.supplementarity.polynomial import Coefficient, is_zero_value
from zx_axiom_verifier.supplementarity.formulas import D_semantics, D1_semantics, D2_semantics, Q_coefficients, power_sum
from zx_axiom_verifier.supplementarity.extraction import extract_a1, extraction_width, w_matrix
from zx_axiom_verifier.supplementarity.diagrams import d_diagram, d1_diagram, d2_diagram

SUPPORTED_PRIMES = [3, 5, 7, 11, 13]
STEPS = ['supplementarity', 'first_proposition', 'q_vanishes', 'extraction', 'cyclotomic_sum']
MAX_SAMPLE_DENOMINATOR = 16
DIAGRAM_CHECK_SAMPLES = 3


@dataclass(frozen=True)
class StepResult:
    name: str
    passed: bool
    checked: int
    detail: str = ''


@dataclass(frozen=True)
class SupToCycReport:
    """Per-step outcome of the supplementarity-to-cyclotomic chain for one prime

    Note:
        extraction_width is the n with 2^n > 2p used by the extraction step, so the averaging runs over the 2^n-th
        roots of unity. diagram_check is None unless the diagram-level cross-check was requested
    """

    p: int
    extraction_width: int
    steps: 'list[StepResult]' = field(default_factory=list)
    diagram_check: Union[bool, None] = None

    @property
    def passed(self) -> bool:
        return all(step.passed for step in self.steps) and self.diagram_check is not False

    def step(self, name: str) -> StepResult:
        return next(step for step in self.steps if step.name == name)

    def to_dict(self) -> 'dict[str, Any]':
        return {**asdict(self), 'passed': self.passed}


def _vectors_equal(values: 'tuple[Coefficient, Coefficient]', expected: 'tuple[Coefficient, Coefficient]', tolerance: float) -> bool:
    return all(is_zero_value(value - target, tolerance) for value, target in zip(values, expected))


def _sample_alpha(rng: np.random.Generator, exact: bool) -> Angle:
    if exact:
        denominator = int(rng.integers(1, MAX_SAMPLE_DENOMINATOR + 1))
        return RationalAngle(int(rng.integers(0, 2 * denominator)), denominator)
    return float(rng.uniform(0, 2 * np.pi))


def _run_over_alphas(
        label: str,
        check: Callable[[Angle], bool],
        seed: int,
        exact_samples: int,
        float_samples: int
    ) -> StepResult:
    checked = 0
    for exact, count in ((True, exact_samples), (False, float_samples)):
        for index in range(count):
            alpha = _sample_alpha(task_rng(seed, f'{label}/{"exact" if exact else "float"}', index), exact)
            checked += 1
            if not check(alpha):
                logging.warning(f'{label} fails at alpha = {format_angle(alpha)}')
                return StepResult(label, False, checked, f'fails at alpha = {format_angle(alpha)}')

    return StepResult(label, True, checked)


def _lemma_value(p: int, alpha: Angle) -> 'tuple[Coefficient, Coefficient]':
    if isinstance(alpha, RationalAngle):
        return root_of_unity(scale_angle(alpha, p)) * 2, Cyclotomic.zero()
    return complex(2 * np.exp(1j * p * alpha)), 0j


def _unit_vector(alpha: Angle) -> 'tuple[Coefficient, Coefficient]':
    if isinstance(alpha, RationalAngle):
        return Cyclotomic.one(), Cyclotomic.zero()
    return 1 + 0j, 0j


def _extraction_step(p: int, n: int, seed: int, beta_samples: int) -> StepResult:
    """W_n against its closed form, then extract_a1 over Q against -(1 + e^{iβ} + ... + e^{i(p-1)β}) at sampled rational β"""
    try:
        averaging = w_matrix(n)
    except ArithmeticError as error:
        return StepResult('extraction', False, 0, str(error))

    if not averaging.satisfies_closed_form():
        logging.warning(f'W_{n} disagrees with its closed form')
        return StepResult('extraction', False, 0, f'W_{n} disagrees with its closed form')

    for index in range(beta_samples):
        beta = _sample_alpha(task_rng(seed, 'extraction', index), True)
        polynomial = Q_coefficients(p, beta)

        if not is_zero_value(polynomial.coefficient(0)):
            return StepResult('extraction', False, index + 1, f'Q has a nonzero constant term at beta = {beta}')
        if extract_a1(polynomial, n) != -power_sum(p, beta):
            logging.warning(f'extraction fails at beta = {beta}')
            return StepResult('extraction', False, index + 1, f'fails at beta = {beta}')

    return StepResult('extraction', True, beta_samples, f'averaging over the {2 ** n}-th roots of unity')


def _cyclotomic_sum_step(p: int, n: int) -> StepResult:
    period = RationalAngle(2, p)
    extracted = extract_a1(Q_coefficients(p, period), n)
    passed = extracted.is_zero() and power_sum(p, period).is_zero()

    return StepResult('cyclotomic_sum', passed, 1, f'1 + zeta_{p} + ... + zeta_{p}^{p - 1} = {-extracted}')


def _diagram_check(p: int, seed: int, max_wires: int) -> bool:
    """Compares the interpretations of the D, D1 and D2 diagrams with the closed formulas at a few rational points"""
    interpreter = Interpreter('exact', max_wires)
    builders = [(d_diagram, D_semantics), (d1_diagram, D1_semantics), (d2_diagram, D2_semantics)]

    for index in range(DIAGRAM_CHECK_SAMPLES):
        rng = task_rng(seed, 'diagrams', index)
        alpha, beta = _sample_alpha(rng, True), _sample_alpha(rng, True)

        for build, formula in builders:
            matrix = interpreter.interpret(substitute(build(p), {'a': alpha, 'b': beta}))
            expected = formula(p, alpha, beta)
            if not all(matrix.entries[row, 0] == expected[row] for row in range(2)):
                logging.warning(f'{build.__name__}({p}) disagrees with its formula at a = {alpha}, b = {beta}')
                return False

    return True


def verify_sup_to_cyc(
        p: int,
        seed: int = 0,
        exact_samples: int = 50,
        float_samples: int = 50,
        beta_samples: int = 20,
        tolerance: float = DEFAULT_TOLERANCE,
        diagrams: bool = False,
        max_wires: int = DEFAULT_MAX_WIRES
    ) -> SupToCycReport:
    """Checks the chain from the supplementarity rule to the cyclotomic rule for one prime, step by step

    Note:
        Steps, in order: the supplementarity lemma D(α, 2π/p) = (2e^{ipα}, 0)ᵀ; the first proposition D2(α, 2π/p) = (1, 0)ᵀ;
        Q(·, 2π/p) vanishing identically; the extraction of the degree-1 coefficient of Q; and the resulting sum
        1 + ζ_p + ... + ζ_p^{p-1} = 0. Failures are reported, never raised

    Args:
        p (int): prime, one of 3, 5, 7, 11 or 13
        seed (int, optional): run seed. Defaults to 0.
        exact_samples (int, optional): rational α per α-step. Defaults to 50.
        float_samples (int, optional): real α per α-step. Defaults to 50.
        beta_samples (int, optional): rational β for the extraction step. Defaults to 20.
        tolerance (float, optional): float tolerance. Defaults to 1e-9.
        diagrams (bool, optional): also compare the D, D1 and D2 diagrams with their formulas. Defaults to False.
        max_wires (int, optional): wire cap for the diagram check. Defaults to 14.

    Raises:
        ValueError: If p is not supported

    Returns:
        SupToCycReport: the per-step results
    """
    if p not in SUPPORTED_PRIMES:
        raise ValueError(f'p must be one of the following: {", ".join(map(str, SUPPORTED_PRIMES))}')

    period = RationalAngle(2, p)
    n = extraction_width(2 * p)

    steps = [
        _run_over_alphas(
            'supplementarity',
            lambda alpha: _vectors_equal(D_semantics(p, alpha, period), _lemma_value(p, alpha), tolerance),
            seed, exact_samples, float_samples
        ),
        _run_over_alphas(
            'first_proposition',
            lambda alpha: _vectors_equal(D2_semantics(p, alpha, period), _unit_vector(alpha), tolerance),
            seed, exact_samples, float_samples
        ),
        StepResult('q_vanishes', Q_coefficients(p, period).is_zero(), 1),
        _extraction_step(p, n, seed, beta_samples),
        _cyclotomic_sum_step(p, n),
    ]

    for step in steps:
        logging.info(f'p = {p}: {step.name} {"passed" if step.passed else "FAILED"} ({step.checked} checks)')

    diagram_check = _diagram_check(p, seed, max_wires) if diagrams else None

    return SupToCycReport(p, n, steps, diagram_check)
