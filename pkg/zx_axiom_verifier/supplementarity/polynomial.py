from dataclasses import dataclass
from typing      import Sequence, Union
from zx_axiom_verifier.arithmetic import Cyclotomic
from zx_axiom_verifier.semantics import DEFAULT_TOLERANCE

Coefficient = Union[Cyclotomic, complex]


def is_zero_value(value: Coefficient, tolerance: float = DEFAULT_TOLERANCE) -> bool:
    if isinstance(value, Cyclotomic):
        return value.is_zero()
    return abs(value) <= tolerance


@dataclass(frozen=True, eq=False)
class ExpPolynomial:
    """Polynomial Σ c_r X^r in X = e^{iα}, with cyclotomic (exact) or complex (float) coefficients

    Note:
        Exactly-zero trailing coefficients are trimmed, so degree is the true degree on the exact backend
    """

    coefficients: 'tuple[Coefficient, ...]'
    exact: bool = True

    def __post_init__(self) -> None:
        coefficients = list(self.coefficients)
        while coefficients and self._trim_candidate(coefficients[-1]):
            coefficients.pop()
        object.__setattr__(self, 'coefficients', tuple(coefficients))

    def _trim_candidate(self, value: Coefficient) -> bool:
        return value.is_zero() if isinstance(value, Cyclotomic) else value == 0

    @classmethod
    def from_values(cls, values: 'Sequence[Union[Coefficient, int]]', exact: bool = True) -> 'ExpPolynomial':
        if exact:
            return cls(tuple(value if isinstance(value, Cyclotomic) else Cyclotomic.from_rational(value) for value in values), True)
        return cls(tuple(complex(value) for value in values), False)

    @classmethod
    def monomial(cls, degree: int, coefficient: 'Union[Coefficient, int]' = 1, exact: bool = True) -> 'ExpPolynomial':
        zero = 0 if exact else 0j
        return cls.from_values([zero] * degree + [coefficient], exact)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial"""
        return len(self.coefficients) - 1

    def coefficient(self, power: int) -> Coefficient:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Cyclotomic.zero() if self.exact else 0j

    def is_zero(self, tolerance: float = DEFAULT_TOLERANCE) -> bool:
        return all(is_zero_value(c, tolerance) for c in self.coefficients)

    def evaluate(self, x: Coefficient) -> Coefficient:
        result = Cyclotomic.zero() if self.exact else 0j
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def _zero(self) -> Coefficient:
        return Cyclotomic.zero() if self.exact else 0j

    def __add__(self, other: 'ExpPolynomial') -> 'ExpPolynomial':
        size = max(len(self.coefficients), len(other.coefficients))
        return ExpPolynomial(tuple(self.coefficient(r) + other.coefficient(r) for r in range(size)), self.exact)

    def __neg__(self) -> 'ExpPolynomial':
        return ExpPolynomial(tuple(-c for c in self.coefficients), self.exact)

    def __sub__(self, other: 'ExpPolynomial') -> 'ExpPolynomial':
        return self + (-other)

    def __mul__(self, other: 'Union[ExpPolynomial, Coefficient, int]') -> 'ExpPolynomial':
        if not isinstance(other, ExpPolynomial):
            return ExpPolynomial(tuple(c * other for c in self.coefficients), self.exact)

        if not self.coefficients or not other.coefficients:
            return ExpPolynomial((), self.exact)

        product = [self._zero()] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if is_zero_value(a, 0.0):
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] = product[i + j] + a * b
        return ExpPolynomial(tuple(product), self.exact)

    __rmul__ = __mul__

    def __str__(self) -> str:
        terms = [f'({c})*X^{r}' for r, c in enumerate(self.coefficients) if not is_zero_value(c, 0.0)]
        return ' + '.join(terms) if terms else '0'
