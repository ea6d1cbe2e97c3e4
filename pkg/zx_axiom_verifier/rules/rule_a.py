"""Side condition of the nonlinear rule (A): 2e^{iθ3}cos γ = e^{iθ1}cos α + e^{iθ2}cos β"""
import logging
import numpy as np

from typing import Union
from zx_axiom_verifier.arithmetic import RationalAngle, root_of_unity, PI, HALF_PI
from zx_axiom_verifier.diagram import Angle, angle_radians
from zx_axiom_verifier.semantics import DEFAULT_TOLERANCE
from zx_axiom_verifier.rules.rule_schema import RULE_A_VARIABLES

MAX_RESAMPLES = 1000


def rule_A_condition(
        alpha: Angle,
        beta: Angle,
        gamma: Angle,
        theta1: Angle,
        theta2: Angle,
        theta3: Angle,
        tolerance: float = DEFAULT_TOLERANCE
    ) -> bool:
    """Whether the six angles satisfy the rule (A) side condition

    Note:
        Written with 2cos x = e^{ix} + e^{-ix}, the condition is
        2(e^{i(θ3+γ)} + e^{i(θ3-γ)}) = e^{i(θ1+α)} + e^{i(θ1-α)} + e^{i(θ2+β)} + e^{i(θ2-β)},
        decided exactly when every angle is rational

    Args:
        tolerance (float, optional): absolute tolerance for real angles. Defaults to 1e-9.

    Returns:
        bool: True iff the identity holds
    """
    angles = (alpha, beta, gamma, theta1, theta2, theta3)

    if all(isinstance(angle, RationalAngle) for angle in angles):
        left = 2 * (root_of_unity(theta3 + gamma) + root_of_unity(theta3 - gamma))
        right = (
            root_of_unity(theta1 + alpha) + root_of_unity(theta1 - alpha)
            + root_of_unity(theta2 + beta) + root_of_unity(theta2 - beta)
        )
        return (left - right).is_zero()

    alpha, beta, gamma, theta1, theta2, theta3 = (angle_radians(angle) for angle in angles)
    left = 2 * np.exp(1j * theta3) * np.cos(gamma)
    right = np.exp(1j * theta1) * np.cos(alpha) + np.exp(1j * theta2) * np.cos(beta)

    return bool(abs(left - right) <= tolerance)


def sample_rule_a_float(rng: np.random.Generator) -> 'dict[str, float]':
    """Samples α, β, θ1, θ2 uniformly and solves the side condition for γ and θ3

    Note:
        γ = arccos(|s| / 2) and θ3 = arg s with s = e^{iθ1}cos α + e^{iθ2}cos β; draws with |s| > 2 are resampled
    """
    for _ in range(MAX_RESAMPLES):
        alpha, beta, theta1, theta2 = rng.uniform(0, 2 * np.pi, size=4)
        total = np.exp(1j * theta1) * np.cos(alpha) + np.exp(1j * theta2) * np.cos(beta)
        magnitude = abs(total)
        if magnitude > 2:
            continue

        gamma = float(np.arccos(magnitude / 2))
        theta3 = float(np.angle(total)) % (2 * np.pi) if magnitude > 0 else float(rng.uniform(0, 2 * np.pi))

        return dict(zip(RULE_A_VARIABLES, (float(alpha), float(beta), gamma, float(theta1), float(theta2), theta3)))

    raise RuntimeError('could not sample an assignment satisfying the rule (A) side condition')


def sample_rule_a_exact(rng: np.random.Generator, max_denominator: int = 16) -> 'dict[str, RationalAngle]':
    """Samples rational solutions of the side condition from two families

    Note:
        Equal family: α = β = γ = x and θ1 = θ2 = θ3 = t.
        Cancelling family: β = π - x, γ = π/2, θ1 = θ2 = t, θ3 free, where both sides vanish.
        Either family may be drawn with the two input pairs (α, θ1) and (β, θ2) exchanged
    """
    denominator = int(rng.integers(1, max_denominator + 1))

    def draw() -> RationalAngle:
        return RationalAngle(int(rng.integers(0, 2 * denominator)), denominator)

    x, t, free = draw(), draw(), draw()

    if rng.integers(0, 2) == 0:
        values = {'alpha': x, 'beta': x, 'gamma': x, 'theta1': t, 'theta2': t, 'theta3': t}
    else:
        values = {'alpha': x, 'beta': PI - x, 'gamma': HALF_PI, 'theta1': t, 'theta2': t, 'theta3': free}

    if rng.integers(0, 2) == 1:
        values['alpha'], values['beta'] = values['beta'], values['alpha']
        values['theta1'], values['theta2'] = values['theta2'], values['theta1']

    return values


def sample_rule_a(rng: np.random.Generator, backend: str, max_denominator: int = 16) -> 'dict[str, Union[RationalAngle, float]]':
    values = sample_rule_a_exact(rng, max_denominator) if backend == 'exact' else sample_rule_a_float(rng)

    if not rule_A_condition(*(values[name] for name in RULE_A_VARIABLES), tolerance=1e-7):
        logging.error(f'rule (A) sampler produced an assignment outside the side condition: {values}')

    return values
