import logging
import numpy as np

from fractions import Fraction
from typing    import Union
from zx_axiom_verifier.arithmetic import RationalAngle, radians_close
from zx_axiom_verifier.diagram import Angle, scale_angle
from zx_axiom_verifier.semantics import Matrix, equal_up_to_scalar, DEFAULT_TOLERANCE
from zx_axiom_verifier.euler.equality import EulerEquality, euler_compose, check_order, is_rational_sequence
from zx_axiom_verifier.euler.classifier import FamilyMatch, euler_verdict

SNAP_DENOMINATOR = 12
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


def snap_angle(radians: float, tolerance: float = DEFAULT_TOLERANCE, max_denominator: int = SNAP_DENOMINATOR) -> Angle:
    """The rational angle kπ/q (q <= max_denominator) within tolerance of the input, or the input itself"""
    candidate = RationalAngle.from_fraction(Fraction(radians / np.pi).limit_denominator(max_denominator))
    if radians_close(candidate.radians, radians, tolerance):
        return candidate
    return float(radians % (2 * np.pi))


def _multiple_of_pi(angle: Angle, tolerance: float) -> Union[int, None]:
    """k in {0, 1} when the angle is kπ, else None"""
    for k in (0, 1):
        if isinstance(angle, RationalAngle):
            if angle == RationalAngle(k):
                return k
        elif radians_close(float(angle), k * np.pi, tolerance):
            return k
    return None


def _matches(triple_1: 'tuple[Angle, ...]', order_1: str, triple_2: 'tuple[Angle, ...]', order_2: str, tolerance: float) -> bool:
    backend = 'exact' if is_rational_sequence(triple_1 + triple_2) else 'float'
    return equal_up_to_scalar(euler_compose(triple_1, order_1, backend), euler_compose(triple_2, order_2, backend), tolerance) is not None


def two_spider_solve(alpha1: Angle, alpha2: Angle, tolerance: float = DEFAULT_TOLERANCE) -> 'Union[tuple[Angle, Angle], None]':
    """Solves Z(α1)·X(α2) = X(β1)·Z(β2) up to a scalar

    Note:
        A solution exists only when α2 = nπ, giving (β1, β2) = (nπ, (-1)^n·α1), or α1 = nπ, giving ((-1)^n·α2, nπ).
        A returned pair has always been checked against the matrices

    Returns:
        tuple[Angle, Angle] | None: (β1, β2), or None when no solution exists
    """
    candidate = None
    if (k := _multiple_of_pi(alpha2, tolerance)) is not None:
        candidate = (RationalAngle(k), scale_angle(alpha1, -1 if k else 1))
    elif (k := _multiple_of_pi(alpha1, tolerance)) is not None:
        candidate = (scale_angle(alpha2, -1 if k else 1), RationalAngle(k))

    if candidate is None:
        return None

    lhs = (alpha1, alpha2, RationalAngle(0))
    rhs = (candidate[0], candidate[1], RationalAngle(0))
    if not _matches(lhs, 'ZXZ', rhs, 'XZX', tolerance):
        logging.error(f'two_spider_solve candidate {candidate} fails verification for {alpha1 = }, {alpha2 = }')
        return None

    return candidate


def _as_unitary_2x2(matrix: 'Union[Matrix, np.ndarray]') -> np.ndarray:
    entries = matrix.to_complex() if isinstance(matrix, Matrix) else np.asarray(matrix, dtype=complex)
    if entries.shape != (2, 2):
        raise ValueError(f'matrix must be 2x2, found {entries.shape[0]}x{entries.shape[1]}')

    determinant = np.linalg.det(entries)
    if abs(determinant) <= DEFAULT_TOLERANCE:
        raise ValueError('matrix must be invertible')
    return entries / np.sqrt(determinant)


def _zxz_angles(v: np.ndarray, tolerance: float) -> 'list[tuple[float, float, float]]':
    """Candidate (a, b, c) with v ∝ M_Z(a)·M_X(b)·M_Z(c), for v of determinant 1"""
    b = 2 * np.arctan2(abs(v[1, 0]), abs(v[0, 0]))

    if abs(v[1, 0]) <= tolerance:
        return [(2 * np.angle(v[1, 1]), 0.0, 0.0)]
    if abs(v[0, 0]) <= tolerance:
        return [(2 * np.angle(1j * v[1, 0]), np.pi, 0.0)]

    total = 2 * np.angle(v[1, 1])
    difference = 2 * np.angle(1j * v[1, 0])
    a, c = (total + difference) / 2, (total - difference) / 2

    return [(a, b, c), (a + np.pi, b, c + np.pi)]


def euler_decompose(
        matrix: 'Union[Matrix, np.ndarray]',
        order: str = 'ZXZ',
        tolerance: float = DEFAULT_TOLERANCE
    ) -> 'tuple[Angle, Angle, Angle]':
    """Angles (a, b, c) such that euler_compose((a, b, c), order) equals the matrix up to a scalar

    Note:
        The XZX decomposition of U is the ZXZ decomposition of H·U·H. Angles within tolerance of some kπ/q with q <= 12
        are returned as RationalAngle

    Args:
        matrix (Matrix | np.ndarray): an invertible 2×2 matrix
        order (str, optional): 'ZXZ' or 'XZX'. Defaults to 'ZXZ'.
        tolerance (float, optional): tolerance for degenerate cases and snapping. Defaults to 1e-9.

    Raises:
        ValueError: If the matrix is not an invertible 2×2 matrix, or the order is unknown

    Returns:
        tuple[Angle, Angle, Angle]: the angles
    """
    check_order(order)
    v = _as_unitary_2x2(matrix)
    if order == 'XZX':
        v = HADAMARD @ v @ HADAMARD

    target = Matrix.numeric(v)
    for candidate in _zxz_angles(v, tolerance):
        raw = euler_compose(candidate, 'ZXZ', 'float')
        if equal_up_to_scalar(raw, target, max(tolerance, 1e-7)) is not None:
            return tuple(snap_angle(angle, max(tolerance, 1e-9)) for angle in candidate)

    raise ValueError('matrix has no Euler decomposition; it is not proportional to a unitary')


def euler_solve(matrix: 'Union[Matrix, np.ndarray]', tolerance: float = DEFAULT_TOLERANCE) -> 'tuple[EulerEquality, str, Union[FamilyMatch, None]]':
    """Both Euler decompositions of a matrix, as an equality with its verdict

    Returns:
        tuple[EulerEquality, str, FamilyMatch | None]: ZXZ = XZX equality, verdict and family match when classified
    """
    equality = EulerEquality(euler_decompose(matrix, 'ZXZ', tolerance), euler_decompose(matrix, 'XZX', tolerance))
    verdict, match = euler_verdict(equality, max(tolerance, 1e-9))
    logging.info(f'{equality}: {verdict}')

    return equality, verdict, match
