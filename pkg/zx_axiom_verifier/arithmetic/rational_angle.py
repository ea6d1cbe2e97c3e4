import numpy as np

from fractions   import Fraction
from dataclasses import dataclass
from typing      import Union


@dataclass(frozen=True, order=True)
class RationalAngle:
    """An exact angle (numerator / denominator)·π, reduced modulo 2π

    Note:
        The fraction is normalized on construction, so RationalAngle(-1, 2) and RationalAngle(3, 2) are the same value
    """

    numerator: int
    denominator: int = 1

    def __post_init__(self) -> None:
        if self.denominator == 0:
            raise ValueError('denominator must be nonzero')

        value = Fraction(self.numerator, self.denominator) % 2

        object.__setattr__(self, 'numerator', value.numerator)
        object.__setattr__(self, 'denominator', value.denominator)

    @classmethod
    def from_fraction(cls, value: Union[Fraction, int]) -> 'RationalAngle':
        """Builds the angle value·π

        Args:
            value (Fraction | int): multiple of π

        Returns:
            RationalAngle: the normalized angle
        """
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def radians(self) -> float:
        return float(self.fraction) * np.pi

    def is_multiple_of_pi(self) -> bool:
        return self.denominator == 1

    def is_half_pi(self) -> bool:
        """True for ±π/2"""
        return self.denominator == 2

    def __add__(self, other: 'RationalAngle') -> 'RationalAngle':
        if not isinstance(other, RationalAngle):
            return NotImplemented
        return RationalAngle.from_fraction(self.fraction + other.fraction)

    def __sub__(self, other: 'RationalAngle') -> 'RationalAngle':
        if not isinstance(other, RationalAngle):
            return NotImplemented
        return RationalAngle.from_fraction(self.fraction - other.fraction)

    def __neg__(self) -> 'RationalAngle':
        return RationalAngle(-self.numerator, self.denominator)

    def __mul__(self, factor: int) -> 'RationalAngle':
        if not isinstance(factor, int):
            return NotImplemented
        return RationalAngle(self.numerator * factor, self.denominator)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.numerator == 0:
            return '0'

        prefix = 'pi' if self.numerator == 1 else f'{self.numerator}*pi'

        return prefix if self.denominator == 1 else f'{prefix}/{self.denominator}'


ZERO = RationalAngle(0)
PI = RationalAngle(1)
HALF_PI = RationalAngle(1, 2)


def angle_normalize(numerator: int, denominator: int) -> RationalAngle:
    """Reduced, sign-normalized representative of (numerator / denominator)·π in [0, 2π)

    Args:
        numerator (int): numerator of the multiple of π
        denominator (int): nonzero denominator

    Raises:
        ValueError: If the denominator is zero

    Returns:
        RationalAngle: the normalized angle
    """
    return RationalAngle(numerator, denominator)


def radians_close(x: float, y: float, tolerance: float = 1e-9) -> bool:
    """Whether two real angles agree modulo 2π within the tolerance"""
    difference = (x - y) % (2 * np.pi)
    return min(difference, 2 * np.pi - difference) <= tolerance


def rational_angles(max_denominator: int) -> 'list[RationalAngle]':
    """Sorted distinct angles kπ/q for 1 <= q <= max_denominator and 0 <= k < 2q

    Raises:
        ValueError: If max_denominator is not positive
    """
    if max_denominator < 1:
        raise ValueError(f'max_denominator must be a positive integer, found {max_denominator}')

    values = {Fraction(k, q) for q in range(1, max_denominator + 1) for k in range(2 * q)}
    return [RationalAngle.from_fraction(value) for value in sorted(values)]
