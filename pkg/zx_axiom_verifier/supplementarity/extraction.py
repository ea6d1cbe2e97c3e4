"""Recovering the degree-1 coefficient of a polynomial by averaging over roots of unity, and the matrices W_n"""
import logging
import numpy as np

from fractions   import Fraction
from dataclasses import dataclass
from zx_axiom_verifier.arithmetic import Cyclotomic
from zx_axiom_verifier.supplementarity.polynomial import ExpPolynomial, Coefficient

MAX_W_LEVEL = 8
PLUS_MATRIX = np.array([[1, 0, 0, 0], [0, 1, 1, 0]], dtype=object)


def extraction_width(degree: int) -> int:
    """Smallest n with 2^n > degree"""
    return max(degree, 0).bit_length()


def extract_a1(polynomial: ExpPolynomial, n: int) -> Coefficient:
    """(1 / 2^n)·Σ_{k < 2^n} P(ω^k) / ω^k with ω = e^{2iπ/2^n}

    Note:
        Every term a_r·ω^{k(r-1)} is a single monomial, so the exact sum is formed term by term instead of evaluating P
        at each root. The sum equals a_1 whenever 2^n > deg P

    Args:
        polynomial (ExpPolynomial): P, exact or float
        n (int): the averaging width is 2^n

    Raises:
        ValueError: If 2^n <= deg P, or n is negative

    Returns:
        Cyclotomic | complex: the extracted coefficient
    """
    if n < 0:
        raise ValueError(f'n must be non-negative, found {n}')

    width = 2 ** n
    if width <= polynomial.degree:
        raise ValueError(f'2^n must exceed the degree of the polynomial, found 2^{n} = {width} <= {polynomial.degree}')

    if not polynomial.exact:
        roots = np.exp(2j * np.pi * np.arange(width) / width)
        values = np.array([polynomial.evaluate(complex(root)) for root in roots])
        return complex(np.sum(values / roots) / width)

    total = Cyclotomic.zero()
    for k in range(width):
        for r, c in enumerate(polynomial.coefficients):
            if c.is_zero():
                continue
            total = total + c * Cyclotomic.root(width, (k * (r - 1)) % width)

    return total * Fraction(1, width)


@dataclass(frozen=True, eq=False)
class WMatrix:
    """The 2 × 4^n matrix W_n of Fractions

    Note:
        Row 0 is 1 at column 0; row 1 is 2^{-n} at the columns 2^i for i < 2n; everything else is 0
    """

    n: int
    entries: np.ndarray

    @property
    def shape(self) -> 'tuple[int, int]':
        return self.entries.shape

    def satisfies_closed_form(self) -> bool:
        return self.shape == (2, 4 ** self.n) and bool(np.all(self.entries == w_closed_form(self.n).entries))

    def second_row_support(self) -> 'list[int]':
        return [int(column) for column in np.flatnonzero(self.entries[1] != 0)]

    def __str__(self) -> str:
        return '\n'.join(' '.join(str(value) for value in row) for row in self.entries)


def _check_level(n: int) -> None:
    if not 0 <= n <= MAX_W_LEVEL:
        raise ValueError(f'n must be between 0 and {MAX_W_LEVEL}, found {n}')


def w_closed_form(n: int) -> WMatrix:
    _check_level(n)

    entries = np.full((2, 4 ** n), Fraction(0), dtype=object)
    entries[0, 0] = Fraction(1)
    for i in range(2 * n):
        entries[1, 2 ** i] = Fraction(1, 2 ** n)

    return WMatrix(n, entries)


def _mixing_matrix(level: int) -> np.ndarray:
    """M_level, combining the rows of W_level ⊗ PLUS into W_{level+1}"""
    return np.array([
        [Fraction(1), Fraction(0), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(1, 2 ** (level + 1)), Fraction(1, 2), Fraction(0)],
    ], dtype=object)


def w_matrix(n: int) -> WMatrix:
    """W_n by the recursion W_0 = (1, 0)ᵀ and W_{k+1} = M_k·(W_k ⊗ PLUS), checked against the closed form

    Note:
        PLUS is the adder [[1, 0, 0, 0], [0, 1, 1, 0]]

    Args:
        n (int): level, 1 <= n <= 8 (0 gives W_0)

    Raises:
        ValueError: If n is outside 0 .. 8
        ArithmeticError: If the recursion disagrees with the closed form

    Returns:
        WMatrix: W_n
    """
    _check_level(n)

    entries = np.array([[Fraction(1)], [Fraction(0)]], dtype=object)
    for level in range(n):
        entries = _mixing_matrix(level).dot(np.kron(entries, PLUS_MATRIX))

    matrix = WMatrix(n, entries)
    if not matrix.satisfies_closed_form():
        logging.error(f'W_{n} recursion disagrees with the closed form')
        raise ArithmeticError(f'W_{n} recursion disagrees with the closed form')

    return matrix
