from dataclasses import dataclass
from typing      import Sequence, Union
from zx_axiom_verifier.arithmetic import RationalAngle
from zx_axiom_verifier.diagram import Angle, Diagram, Generator, format_angle, x_spider, z_spider, seq
from zx_axiom_verifier.semantics import Matrix, Interpreter, equal_up_to_scalar, DEFAULT_TOLERANCE

ORDERS = ['ZXZ', 'XZX']


def check_order(order: str) -> None:
    if order not in ORDERS:
        raise ValueError(f'order must be one of the following: {", ".join(ORDERS)}')


def is_rational_sequence(angles: 'Sequence[Angle]') -> bool:
    return all(isinstance(angle, RationalAngle) for angle in angles)


def _spider(color: str, angle: Angle) -> Generator:
    return z_spider(1, 1, angle) if color == 'Z' else x_spider(1, 1, angle)


def alternating_diagram(angles: 'Sequence[Angle]', first: str = 'Z') -> Diagram:
    """One-wire column of spiders, colors alternating from `first`, such that the first angle is applied last

    Note:
        Its interpretation is M_first(a_1)·M_other(a_2)·M_first(a_3)···, acting on column vectors
    """
    other = 'X' if first == 'Z' else 'Z'
    spiders = [_spider(first if index % 2 == 0 else other, angle) for index, angle in enumerate(angles)]
    return seq(*reversed(spiders))


def euler_compose(triple: 'Sequence[Angle]', order: str = 'ZXZ', backend: Union[str, None] = None) -> Matrix:
    """M_Z(a)·M_X(b)·M_Z(c) for order ZXZ, or M_X(a)·M_Z(b)·M_X(c) for order XZX

    Args:
        triple (Sequence[Angle]): the three angles (a, b, c)
        order (str, optional): 'ZXZ' or 'XZX'. Defaults to 'ZXZ'.
        backend (str, optional): 'exact' or 'float'; exact when every angle is rational if omitted. Defaults to None.

    Returns:
        Matrix: the 2×2 product
    """
    check_order(order)
    if len(triple) != 3:
        raise ValueError(f'an Euler triple has exactly three angles, found {len(triple)}')

    backend = backend or ('exact' if is_rational_sequence(triple) else 'float')
    return Interpreter(backend).interpret(alternating_diagram(triple, order[0]))


@dataclass(frozen=True)
class EulerEquality:
    """Z(a1)·X(a2)·Z(a3) = X(b1)·Z(b2)·X(b3) up to a nonzero scalar

    Note:
        When color_swapped is set, Z and X are exchanged on both sides: the lhs is read XZX and the rhs ZXZ
    """

    lhs: 'tuple[Angle, Angle, Angle]'
    rhs: 'tuple[Angle, Angle, Angle]'
    color_swapped: bool = False

    def __post_init__(self) -> None:
        if len(self.lhs) != 3 or len(self.rhs) != 3:
            raise ValueError('both sides of an Euler equality have exactly three angles')
        object.__setattr__(self, 'lhs', tuple(self.lhs))
        object.__setattr__(self, 'rhs', tuple(self.rhs))

    @property
    def lhs_order(self) -> str:
        return 'XZX' if self.color_swapped else 'ZXZ'

    @property
    def rhs_order(self) -> str:
        return 'ZXZ' if self.color_swapped else 'XZX'

    def is_rational(self) -> bool:
        return is_rational_sequence(self.lhs + self.rhs)

    def matrices(self) -> 'tuple[Matrix, Matrix]':
        backend = 'exact' if self.is_rational() else 'float'
        return euler_compose(self.lhs, self.lhs_order, backend), euler_compose(self.rhs, self.rhs_order, backend)

    def holds(self, tolerance: float = DEFAULT_TOLERANCE) -> bool:
        """Whether both sides agree up to a nonzero scalar; exact on rational angles"""
        return equal_up_to_scalar(*self.matrices(), tolerance) is not None

    def swap_colors(self) -> 'EulerEquality':
        return EulerEquality(self.lhs, self.rhs, not self.color_swapped)

    def reversed(self) -> 'EulerEquality':
        """The same equality read right to left: the rhs triple becomes the lhs, with colors swapped to keep the lhs order"""
        return EulerEquality(self.rhs, self.lhs, not self.color_swapped)

    def __str__(self) -> str:
        left = ', '.join(format_angle(angle) for angle in self.lhs)
        right = ', '.join(format_angle(angle) for angle in self.rhs)
        return f'{self.lhs_order}({left}) = {self.rhs_order}({right})'
