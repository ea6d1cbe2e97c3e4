import numpy as np

from dataclasses import dataclass
from typing      import Mapping, Union
from zx_axiom_verifier.error import UnboundVariableError
from zx_axiom_verifier.arithmetic import RationalAngle, ZERO

# A concrete angle: exact multiple of π, or a float in radians
Angle = Union[RationalAngle, float]


def _normalize_radians(value: float) -> float:
    return float(value % (2 * np.pi))


def angle_radians(angle: Angle) -> float:
    return angle.radians if isinstance(angle, RationalAngle) else float(angle)


def add_angles(a: Angle, b: Angle) -> Angle:
    """Sum of two concrete angles; rational only when both are rational"""
    if isinstance(a, RationalAngle) and isinstance(b, RationalAngle):
        return a + b
    return _normalize_radians(angle_radians(a) + angle_radians(b))


def scale_angle(angle: Angle, factor: int) -> Angle:
    if isinstance(angle, RationalAngle):
        return angle * factor
    return _normalize_radians(angle * factor)


def as_angle(value: 'Union[Angle, int]') -> Angle:
    if isinstance(value, RationalAngle):
        return value
    if isinstance(value, int):
        # integers stand for multiples of π
        return RationalAngle(value)
    return _normalize_radians(value)


def format_angle(angle: Angle) -> str:
    if isinstance(angle, RationalAngle):
        return str(angle)
    return f'{angle!r}r'


@dataclass(frozen=True)
class AngleExpr:
    """Linear angle expression: a concrete constant plus integer multiples of named variables

    Note:
        An expression with no variables and a RationalAngle constant is "rational"; a float constant makes it "real"
    """

    constant: Angle = ZERO
    terms: 'tuple[tuple[str, int], ...]' = ()

    def __post_init__(self) -> None:
        merged: 'dict[str, int]' = {}
        for name, coefficient in self.terms:
            if not isinstance(coefficient, int):
                raise ValueError(f'coefficient of {name} must be an integer')
            merged[name] = merged.get(name, 0) + coefficient

        object.__setattr__(self, 'constant', as_angle(self.constant))
        object.__setattr__(self, 'terms', tuple(sorted((name, c) for name, c in merged.items() if c)))

    @classmethod
    def variable(cls, name: str, coefficient: int = 1) -> 'AngleExpr':
        return cls(ZERO, ((name, coefficient),))

    @classmethod
    def of(cls, value: 'Union[AngleExpr, Angle, int, str]') -> 'AngleExpr':
        """Coerces angles, integer multiples of π and variable names into expressions"""
        if isinstance(value, AngleExpr):
            return value
        if isinstance(value, str):
            return cls.variable(value)
        return cls(as_angle(value))

    @property
    def variables(self) -> 'frozenset[str]':
        return frozenset(name for name, _ in self.terms)

    def is_concrete(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return not self.terms and isinstance(self.constant, RationalAngle)

    def evaluate(self, assignment: 'Mapping[str, Angle]') -> Angle:
        """Concrete value of the expression

        Raises:
            UnboundVariableError: If a variable has no value in the assignment
        """
        value = self.constant
        for name, coefficient in self.terms:
            if name not in assignment:
                raise UnboundVariableError(name)
            value = add_angles(value, scale_angle(as_angle(assignment[name]), coefficient))
        return value

    def substitute(self, assignment: 'Mapping[str, Angle]') -> 'AngleExpr':
        return AngleExpr(self.evaluate(assignment))

    def rename(self, mapping: 'Mapping[str, str]') -> 'AngleExpr':
        return AngleExpr(self.constant, tuple((mapping.get(name, name), c) for name, c in self.terms))

    def scale(self, factor: int) -> 'AngleExpr':
        return AngleExpr(scale_angle(self.constant, factor), tuple((name, c * factor) for name, c in self.terms))

    def __add__(self, other: 'Union[AngleExpr, Angle, int, str]') -> 'AngleExpr':
        other = AngleExpr.of(other)
        return AngleExpr(add_angles(self.constant, other.constant), self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> 'AngleExpr':
        return self.scale(-1)

    def __sub__(self, other: 'Union[AngleExpr, Angle, int, str]') -> 'AngleExpr':
        return self + (-AngleExpr.of(other))

    def __rsub__(self, other: 'Union[AngleExpr, Angle, int, str]') -> 'AngleExpr':
        return AngleExpr.of(other) + (-self)

    def __mul__(self, factor: int) -> 'AngleExpr':
        if not isinstance(factor, int):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def __str__(self) -> str:
        parts = []
        for name, coefficient in self.terms:
            magnitude = abs(coefficient)
            text = name if magnitude == 1 else f'{magnitude}*{name}'
            parts.append(('-' if coefficient < 0 else '+', text))

        if not parts or self.constant != ZERO:
            parts.append(('+', format_angle(self.constant)))

        text = ''
        for sign, part in parts:
            if not text:
                text = part if sign == '+' else f'-{part}'
            else:
                text += f' {sign} {part}'
        return text

