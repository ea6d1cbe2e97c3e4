"""Exact arithmetic in the cyclotomic fields Q(ζ_N)

Elements are stored in the power basis ζ_N^0 .. ζ_N^(d-1), d = φ(N), i.e. already reduced modulo the
N-th cyclotomic polynomial Φ_N, which makes the representation canonical at a fixed order.
"""
import math
import sympy
import functools
import numpy as np

from fractions import Fraction
from typing    import Mapping, Union
from zx_axiom_verifier.error import CapacityError
from zx_axiom_verifier.arithmetic.rational_angle import RationalAngle

MAX_CYCLOTOMIC_ORDER = 4096

Scalar = Union[int, Fraction]


@functools.lru_cache(maxsize=128)
def cyclotomic_polynomial(order: int) -> 'tuple[int, ...]':
    """Integer coefficients of Φ_order, lowest degree first"""
    x = sympy.Symbol('x')
    coefficients = sympy.cyclotomic_poly(order, x, polys=True).all_coeffs()

    return tuple(int(c) for c in reversed(coefficients))


@functools.lru_cache(maxsize=128)
def _power_remainders(order: int) -> 'tuple[dict[int, int], ...]':
    """x^k mod Φ_order for every 0 <= k < order, as sparse integer dictionaries"""
    phi = cyclotomic_polynomial(order)
    degree = len(phi) - 1
    # Φ is monic: x^degree ≡ -(lower terms)
    tail = {exponent: -c for exponent, c in enumerate(phi[:-1]) if c}

    table = []
    current = {0: 1}
    for _ in range(order):
        table.append(current)
        shifted: 'dict[int, int]' = {}
        for exponent, c in current.items():
            if exponent + 1 == degree:
                for tail_exponent, tail_c in tail.items():
                    shifted[tail_exponent] = shifted.get(tail_exponent, 0) + c * tail_c
            else:
                shifted[exponent + 1] = shifted.get(exponent + 1, 0) + c
        current = {exponent: c for exponent, c in shifted.items() if c}

    return tuple(table)


def _reduce(order: int, terms: 'Mapping[int, Scalar]') -> 'dict[int, Fraction]':
    degree = len(cyclotomic_polynomial(order)) - 1
    table = _power_remainders(order)

    reduced: 'dict[int, Fraction]' = {}
    for exponent, c in terms.items():
        if not c:
            continue
        exponent %= order
        if exponent < degree:
            reduced[exponent] = reduced.get(exponent, 0) + c
            continue
        for remainder_exponent, remainder_c in table[exponent].items():
            reduced[remainder_exponent] = reduced.get(remainder_exponent, 0) + c * remainder_c

    return {exponent: Fraction(c) for exponent, c in reduced.items() if c}


def _check_order(order: int) -> None:
    if order < 1:
        raise ValueError('order must be a positive integer')
    if order > MAX_CYCLOTOMIC_ORDER:
        raise CapacityError(f'Cyclotomic order {order} exceeds the supported maximum of {MAX_CYCLOTOMIC_ORDER}')


class Cyclotomic:
    """An element of Q(ζ_N), N = order

    Note:
        Values of different orders compare and combine by lifting both operands to lcm(N_x, N_y)

    Note:
        Instances are immutable and deliberately unhashable, since equal values may have different orders. Use key() for bucketing values that share an order
    """

    __slots__ = ('_order', '_terms')

    def __init__(self, order: int, terms: 'Union[Mapping[int, Scalar], None]' = None) -> None:
        _check_order(order)
        self._order = order
        self._terms = _reduce(order, terms or {})

    @classmethod
    def _from_reduced(cls, order: int, terms: 'dict[int, Fraction]') -> 'Cyclotomic':
        instance = cls.__new__(cls)
        instance._order = order
        instance._terms = terms
        return instance

    @classmethod
    def from_rational(cls, value: Scalar, order: int = 1) -> 'Cyclotomic':
        return cls(order, {0: Fraction(value)})

    @classmethod
    def zero(cls, order: int = 1) -> 'Cyclotomic':
        return cls(order)

    @classmethod
    def one(cls, order: int = 1) -> 'Cyclotomic':
        return cls(order, {0: 1})

    @classmethod
    def root(cls, order: int, exponent: int = 1) -> 'Cyclotomic':
        """ζ_order^exponent"""
        return cls(order, {exponent % order: 1})

    @classmethod
    def sqrt2(cls) -> 'Cyclotomic':
        """√2 = ζ_8 + ζ_8^-1"""
        return cls(8, {1: 1, 7: 1})

    @classmethod
    def inv_sqrt2(cls) -> 'Cyclotomic':
        return cls(8, {1: Fraction(1, 2), 7: Fraction(1, 2)})

    @property
    def order(self) -> int:
        return self._order

    @property
    def terms(self) -> 'dict[int, Fraction]':
        return dict(self._terms)

    @property
    def coefficients(self) -> 'tuple[Fraction, ...]':
        """Dense length-N coefficient sequence of the canonical form (index k holds the coefficient of ζ_N^k)"""
        return tuple(self._terms.get(k, Fraction(0)) for k in range(self._order))

    def key(self) -> 'tuple[int, tuple[tuple[int, Fraction], ...]]':
        return self._order, tuple(sorted(self._terms.items()))

    def lift(self, order: int) -> 'Cyclotomic':
        """The same value written at a multiple of the current order

        Raises:
            ValueError: If order is not a multiple of the current order
        """
        if order == self._order:
            return self
        if order % self._order:
            raise ValueError(f'order must be a multiple of {self._order}')

        factor = order // self._order
        return Cyclotomic(order, {exponent * factor: c for exponent, c in self._terms.items()})

    def is_zero(self) -> bool:
        return not self._terms

    def rational_value(self) -> 'Union[Fraction, None]':
        """The value as a Fraction when it lies in Q, else None"""
        if not self._terms:
            return Fraction(0)
        if set(self._terms) == {0}:
            return self._terms[0]
        return None

    def conjugate(self) -> 'Cyclotomic':
        return Cyclotomic(self._order, {-exponent: c for exponent, c in self._terms.items()})

    def inverse(self) -> 'Cyclotomic':
        """Multiplicative inverse, computed as a polynomial inverse modulo Φ_N

        Raises:
            ZeroDivisionError: If the value is zero
        """
        if not self._terms:
            raise ZeroDivisionError('Cyclotomic zero has no inverse')

        if len(self._terms) == 1:
            (exponent, c), = self._terms.items()
            return Cyclotomic(self._order, {-exponent: 1 / c})

        x = sympy.Symbol('x')
        element = sympy.Poly.from_dict(
            {(exponent,): sympy.Rational(c.numerator, c.denominator) for exponent, c in self._terms.items()},
            x,
            domain='QQ'
        )
        modulus = sympy.Poly(list(reversed(cyclotomic_polynomial(self._order))), x, domain='QQ')
        inverse = element.invert(modulus)

        return Cyclotomic(
            self._order,
            {monomial[0]: Fraction(int(c.p), int(c.q)) for monomial, c in inverse.terms()}
        )

    def _coerce(self, other: 'Union[Cyclotomic, Scalar]') -> 'tuple[Cyclotomic, Cyclotomic]':
        if isinstance(other, (int, Fraction)):
            return self, Cyclotomic._from_reduced(self._order, {0: Fraction(other)} if other else {})
        order = math.lcm(self._order, other._order)
        return self.lift(order), other.lift(order)

    def __add__(self, other: 'Union[Cyclotomic, Scalar]') -> 'Cyclotomic':
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        left, right = self._coerce(other)
        terms = dict(left._terms)
        for exponent, c in right._terms.items():
            terms[exponent] = terms.get(exponent, 0) + c
        return Cyclotomic._from_reduced(left._order, {exponent: c for exponent, c in terms.items() if c})

    __radd__ = __add__

    def __neg__(self) -> 'Cyclotomic':
        return Cyclotomic._from_reduced(self._order, {exponent: -c for exponent, c in self._terms.items()})

    def __sub__(self, other: 'Union[Cyclotomic, Scalar]') -> 'Cyclotomic':
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> 'Cyclotomic':
        return (-self) + other

    def __mul__(self, other: 'Union[Cyclotomic, Scalar]') -> 'Cyclotomic':
        if isinstance(other, (int, Fraction)):
            if not other:
                return Cyclotomic._from_reduced(self._order, {})
            return Cyclotomic._from_reduced(self._order, {exponent: c * other for exponent, c in self._terms.items()})
        if not isinstance(other, Cyclotomic):
            return NotImplemented

        left, right = self._coerce(other)
        product: 'dict[int, Fraction]' = {}
        for exponent_a, a in left._terms.items():
            for exponent_b, b in right._terms.items():
                exponent = exponent_a + exponent_b
                product[exponent] = product.get(exponent, 0) + a * b

        return Cyclotomic(left._order, product)

    __rmul__ = __mul__

    def __truediv__(self, other: 'Union[Cyclotomic, Scalar]') -> 'Cyclotomic':
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> 'Cyclotomic':
        return self.inverse() * other

    def __pow__(self, exponent: int) -> 'Cyclotomic':
        if exponent < 0:
            return self.inverse() ** -exponent

        result = Cyclotomic.one(self._order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic._from_reduced(self._order, {0: Fraction(other)} if other else {})
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        left, right = self._coerce(other)
        return left._terms == right._terms

    __hash__ = None  # type: ignore

    def __complex__(self) -> complex:
        if not self._terms:
            return 0j
        exponents = np.fromiter(self._terms.keys(), dtype=float)
        weights = np.fromiter((float(c) for c in self._terms.values()), dtype=float)
        return complex(np.sum(weights * np.exp(2j * np.pi * exponents / self._order)))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        """Canonical text form: a sum of `a/b*z^k` terms, z = ζ_N"""
        if not self._terms:
            return '0'

        text = ''
        for exponent, c in sorted(self._terms.items()):
            sign = '-' if c < 0 else '+'
            magnitude = abs(c)
            term = str(magnitude) if exponent == 0 else f'{magnitude}*z^{exponent}'
            text += term if not text and sign == '+' else f'{sign}{term}'

        return text

    def __repr__(self) -> str:
        return f'Cyclotomic(order={self._order}, {self})'


def root_of_unity(angle: RationalAngle) -> Cyclotomic:
    """e^{i·angle} as ζ_N^k, with k/N the reduced form of angle / 2π

    Args:
        angle (RationalAngle): exact angle

    Returns:
        Cyclotomic: the root of unity at the minimal order N

    Example:
        π/2 → ζ_4, π → ζ_2, 2π/3 → ζ_3, 0 → ζ_1 = 1
    """
    turn = Fraction(angle.numerator, 2 * angle.denominator)

    return Cyclotomic.root(turn.denominator, turn.numerator)


def unit_sum(order: int, exponents: 'list[int]') -> Cyclotomic:
    """Σ ζ_order^k over the given exponents"""
    terms: 'dict[int, int]' = {}
    for exponent in exponents:
        terms[exponent % order] = terms.get(exponent % order, 0) + 1
    return Cyclotomic(order, terms)
