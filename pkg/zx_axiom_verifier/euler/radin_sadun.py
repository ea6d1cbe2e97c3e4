"""Alternating products of rational-angle spiders that equal the identity up to scalar

If Z(α1)·X(α2)·Z(α3)··· is a scalar multiple of the identity with every αi in Qπ, then some αi is 0 or π, or two
consecutive angles both lie in {π/2, -π/2}. radin_sadun_check tests one sequence, radin_sadun_sweep every sequence up
to a length and a denominator bound.
"""
import logging
import itertools
import numpy as np

from dataclasses import dataclass, field, asdict
from typing      import Any, Sequence
from zx_axiom_verifier.error import CapacityError
from zx_axiom_verifier.util import progress_bar
from zx_axiom_verifier.arithmetic import RationalAngle, rational_angles
from zx_axiom_verifier.diagram import Angle
from zx_axiom_verifier.semantics import Interpreter, is_scalar_identity
from zx_axiom_verifier.euler.equality import alternating_diagram

MAX_SWEEP_LENGTH = 5
MAX_SWEEP_DENOMINATOR = 8
SCREENING_TOLERANCE = 1e-7
SUFFIX_LENGTH = 3

NOT_IDENTITY = 'not-identity'
CONCLUSION_HOLDS = 'conclusion-holds'
COUNTEREXAMPLE = 'counterexample'


def conclusion_holds(sequence: 'Sequence[RationalAngle]') -> bool:
    """Some angle is 0 or π, or two consecutive angles are ±π/2"""
    if any(angle.is_multiple_of_pi() for angle in sequence):
        return True
    return any(a.is_half_pi() and b.is_half_pi() for a, b in zip(sequence, sequence[1:]))


def radin_sadun_check(sequence: 'Sequence[Angle]') -> str:
    """Verdict on one alternating sequence Z(α1)·X(α2)·Z(α3)···

    Raises:
        ValueError: If the sequence is empty or holds a real angle

    Returns:
        str: 'not-identity' when the product is no scalar multiple of the identity, else 'conclusion-holds', or
            'counterexample' when neither disjunct holds
    """
    if not sequence:
        raise ValueError('sequence must not be empty')
    if not all(isinstance(angle, RationalAngle) for angle in sequence):
        raise ValueError('every angle must be a rational multiple of pi')

    product = Interpreter('exact').interpret(alternating_diagram(sequence, 'Z'))
    if not is_scalar_identity(product):
        return NOT_IDENTITY

    if conclusion_holds(sequence):
        return CONCLUSION_HOLDS

    logging.error(f'counterexample: {", ".join(map(str, sequence))}')
    return COUNTEREXAMPLE


def sweep_grid(max_denominator: int) -> 'list[RationalAngle]':
    """Distinct angles kπ/q for 1 <= q <= max_denominator, 0 <= k < 2q"""
    return rational_angles(max_denominator)


def _float_spiders(grid: 'list[RationalAngle]') -> 'dict[str, np.ndarray]':
    phases = np.exp(1j * np.array([angle.radians for angle in grid]))
    z = np.zeros((len(grid), 2, 2), dtype=complex)
    z[:, 0, 0], z[:, 1, 1] = 1, phases
    x = np.empty((len(grid), 2, 2), dtype=complex)
    x[:, 0, 0] = x[:, 1, 1] = (1 + phases) / 2
    x[:, 0, 1] = x[:, 1, 0] = (1 - phases) / 2
    return {'Z': z, 'X': x}


def _suffix_products(spiders: 'dict[str, np.ndarray]', length: int, first: str) -> np.ndarray:
    """All products of `length` alternating spiders starting with color `first`, indexed in itertools.product order"""
    colors = [first if index % 2 == 0 else ('X' if first == 'Z' else 'Z') for index in range(length)]
    products = spiders[colors[0]]
    for color in colors[1:]:
        products = np.einsum('aij,bjk->abik', products, spiders[color]).reshape(-1, 2, 2)
    return products


def _screen_identity(products: np.ndarray) -> np.ndarray:
    off_diagonal = np.maximum(np.abs(products[:, 0, 1]), np.abs(products[:, 1, 0]))
    diagonal = np.abs(products[:, 0, 0] - products[:, 1, 1])
    return np.flatnonzero((off_diagonal <= SCREENING_TOLERANCE) & (diagonal <= SCREENING_TOLERANCE))


@dataclass(frozen=True)
class RadinSadunReport:
    max_length: int
    max_denominator: int
    sequences: int
    identity_instances: int
    by_length: 'dict[int, int]' = field(default_factory=dict)
    counterexamples: 'list[list[str]]' = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> 'dict[str, Any]':
        payload = asdict(self)
        payload['by_length'] = {str(length): count for length, count in self.by_length.items()}
        return {**payload, 'passed': self.passed}


def radin_sadun_sweep(max_length: int, max_denominator: int) -> RadinSadunReport:
    """Every alternating sequence of length 1..L over the angles kπ/q, q <= Q, checked against the conclusion

    Note:
        Products are screened in floating point, a fixed prefix times a vectorized block of up to three trailing
        spiders, and every screened candidate is confirmed exactly before it counts

    Args:
        max_length (int): L, at most 5
        max_denominator (int): Q, at most 8

    Raises:
        ValueError: If L or Q is not positive
        CapacityError: If L or Q exceeds its cap

    Returns:
        RadinSadunReport: sequence and identity counts, and any counterexample
    """
    if max_length < 1 or max_denominator < 1:
        raise ValueError('max_length and max_denominator must be positive integers')
    if max_length > MAX_SWEEP_LENGTH or max_denominator > MAX_SWEEP_DENOMINATOR:
        raise CapacityError(f'sweeps are capped at length {MAX_SWEEP_LENGTH} and denominator {MAX_SWEEP_DENOMINATOR}')

    grid = sweep_grid(max_denominator)
    spiders = _float_spiders(grid)
    interpreter = Interpreter('exact')

    sequences, by_length, counterexamples = 0, {}, []
    for length in range(1, max_length + 1):
        prefix_length = max(0, length - SUFFIX_LENGTH)
        first = 'Z' if prefix_length % 2 == 0 else 'X'
        suffixes = _suffix_products(spiders, length - prefix_length, first)
        suffix_indices = list(itertools.product(range(len(grid)), repeat=length - prefix_length))

        prefixes = list(itertools.product(range(len(grid)), repeat=prefix_length))
        identities = 0
        for count, prefix in enumerate(prefixes):
            head = np.eye(2, dtype=complex)
            for position, index in enumerate(prefix):
                head = head @ spiders['Z' if position % 2 == 0 else 'X'][index]

            for candidate in _screen_identity(head @ suffixes):
                sequence = [grid[index] for index in prefix + suffix_indices[candidate]]
                if not is_scalar_identity(interpreter.interpret(alternating_diagram(sequence, 'Z'))):
                    continue
                identities += 1
                if not conclusion_holds(sequence):
                    logging.error(f'counterexample: {", ".join(map(str, sequence))}')
                    counterexamples.append([str(angle) for angle in sequence])

            progress_bar(count + 1, len(prefixes), suffix=f'length {length}')

        sequences += len(grid) ** length
        by_length[length] = identities
        logging.info(f'length {length}: {identities} scalar identities among {len(grid) ** length} sequences')

    return RadinSadunReport(max_length, max_denominator, sequences, sum(by_length.values()), by_length, counterexamples)
