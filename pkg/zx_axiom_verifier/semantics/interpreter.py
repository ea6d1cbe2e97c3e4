"""Standard interpretation of diagrams as matrices

seq(top, bottom) maps to M_bottom · M_top and par(left, right) to M_left ⊗ M_right. The exact backend works in a single
cyclotomic field Q(ζ_N), N = lcm(8, 2·q) over every angle denominator q: the factor 8 holds √2 = ζ_8 + ζ_8^-1, so
1/√2 = (ζ_8 + ζ_8^-1)/2 and the Hadamard box stay inside the field.
"""
import math
import logging
import numpy as np

from fractions import Fraction
from typing    import Union
from zx_axiom_verifier.error import BackendError, CapacityError, UnboundVariableError
from zx_axiom_verifier.arithmetic import Cyclotomic, RationalAngle, root_of_unity, MAX_CYCLOTOMIC_ORDER
from zx_axiom_verifier.diagram import Diagram, Leaf, Seq, Par, Generator
from zx_axiom_verifier.semantics.matrix import Matrix, check_backend

DEFAULT_MAX_WIRES = 14
MAX_WIRES_LIMIT = 20


def working_order(diagram: Diagram) -> int:
    """Cyclotomic order N = lcm(8, 2·q) over the denominators q of the diagram's rational angles

    Raises:
        CapacityError: If N exceeds the supported cyclotomic order
    """
    order = 8
    for angle in diagram.angles():
        if isinstance(angle.constant, RationalAngle):
            order = math.lcm(order, 2 * angle.constant.denominator)

    if order > MAX_CYCLOTOMIC_ORDER:
        raise CapacityError(f'diagram needs cyclotomic order {order}, above the maximum of {MAX_CYCLOTOMIC_ORDER}')

    return order


def _popcounts(size: int) -> np.ndarray:
    return np.array([bin(index).count('1') for index in range(size)])


class Interpreter:
    """Evaluates fully substituted diagrams with one backend

    Args:
        backend (str, optional): 'exact' or 'float'. Defaults to 'exact'.
        max_wires (int, optional): largest inputs + outputs allowed at any node. Defaults to 14.
    """

    def __init__(self, backend: str = 'exact', max_wires: int = DEFAULT_MAX_WIRES) -> None:
        check_backend(backend)
        if not 1 <= max_wires <= MAX_WIRES_LIMIT:
            raise ValueError(f'max_wires must be between 1 and {MAX_WIRES_LIMIT}')

        self.backend = backend
        self.max_wires = max_wires
        self.order = 1

    def interpret(self, diagram: Diagram) -> Matrix:
        """Interprets a diagram

        Raises:
            ArityMismatchError: If the diagram is ill-typed
            UnboundVariableError: If an angle still has free variables
            BackendError: If the exact backend meets a real angle
            CapacityError: If a node exceeds the wire cap or the cyclotomic order cap

        Returns:
            Matrix: the 2^outputs × 2^inputs interpretation
        """
        diagram.validate()

        for angle in diagram.angles():
            if not angle.is_concrete():
                raise UnboundVariableError(sorted(angle.variables)[0], 'interpret')
            if self.backend == 'exact' and not angle.is_rational():
                raise BackendError(f'exact backend cannot evaluate the real angle {angle}; use the float backend')

        self.order = working_order(diagram) if self.backend == 'exact' else 1
        logging.debug(f'interpreting {diagram.generator_count()} generators, {self.backend = }, {self.order = }')

        memo: 'dict[int, Matrix]' = {}
        return self._fold(diagram, memo)

    def _fold(self, diagram: Diagram, memo: 'dict[int, Matrix]') -> Matrix:
        key = id(diagram)
        if key in memo:
            return memo[key]

        if isinstance(diagram, Leaf):
            self._check_wires(diagram.generator.inputs, diagram.generator.outputs)
            result = self.generator_matrix(diagram.generator)
        elif isinstance(diagram, Seq):
            top = self._fold(diagram.top, memo)
            bottom = self._fold(diagram.bottom, memo)
            self._check_wires(top.inputs, bottom.outputs)
            result = bottom @ top
        elif isinstance(diagram, Par):
            left = self._fold(diagram.left, memo)
            right = self._fold(diagram.right, memo)
            self._check_wires(left.inputs + right.inputs, left.outputs + right.outputs)
            result = left.kron(right)
        else:
            raise TypeError(f'unknown diagram node {type(diagram).__name__}')

        memo[key] = result
        return result

    def _check_wires(self, inputs: int, outputs: int) -> None:
        if inputs + outputs > self.max_wires:
            raise CapacityError(
                f'a subdiagram has {inputs} input(s) and {outputs} output(s), more than the cap of {self.max_wires} wires'
            )

    def _number(self, value: 'Union[int, Fraction]') -> 'Union[Cyclotomic, complex]':
        if self.backend == 'float':
            return complex(value)
        return Cyclotomic.from_rational(value, self.order)

    def _phase(self, generator: Generator) -> 'Union[Cyclotomic, complex]':
        angle = generator.angle.constant
        if self.backend == 'float':
            radians = angle.radians if isinstance(angle, RationalAngle) else angle
            return complex(np.exp(1j * radians))
        return root_of_unity(angle).lift(self.order)

    def _inv_sqrt2_power(self, power: int) -> 'Union[Cyclotomic, complex]':
        """2^{-power/2}"""
        if self.backend == 'float':
            return complex(2.0 ** (-power / 2))
        value = Cyclotomic.from_rational(Fraction(1, 2 ** (power // 2)), self.order)
        return value * Cyclotomic.inv_sqrt2().lift(self.order) if power % 2 else value

    def _matrix(self, rows: 'list[list[Union[int, Fraction]]]', factor: 'Union[Cyclotomic, complex, None]' = None) -> Matrix:
        dtype = complex if self.backend == 'float' else object
        entries = np.empty((len(rows), len(rows[0])), dtype=dtype)
        for index, value in np.ndenumerate(np.array(rows, dtype=object)):
            entry = self._number(value)
            entries[index] = entry * factor if factor is not None else entry
        return Matrix(entries, self.backend, self.order)

    def generator_matrix(self, generator: Generator) -> Matrix:
        """Matrix of a single generator, at the current working order"""
        if generator.kind == 'Z':
            return self._z_spider(generator.inputs, generator.outputs, self._phase(generator))
        if generator.kind == 'X':
            return self._x_spider(generator.inputs, generator.outputs, self._phase(generator))
        if generator.kind == 'H':
            return self._matrix([[1, 1], [1, -1]], self._inv_sqrt2_power(1))
        if generator.kind == 'I':
            return self._matrix([[1, 0], [0, 1]])
        if generator.kind == 'SWAP':
            return self._matrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
        if generator.kind == 'CUP':
            return self._matrix([[1, 0, 0, 1]])
        if generator.kind == 'CAP':
            return self._matrix([[1], [0], [0], [1]])
        if generator.kind == 'E':
            return self._matrix([[1]])
        if generator.kind == 'TRI':
            return self._matrix([[1, 1], [0, 1]])

        raise ValueError(f'unknown generator kind {generator.kind!r}')

    def _empty(self, rows: int, cols: int) -> np.ndarray:
        if self.backend == 'float':
            return np.zeros((rows, cols), dtype=complex)
        entries = np.empty((rows, cols), dtype=object)
        zero = Cyclotomic.zero(self.order)
        for index in np.ndindex(rows, cols):
            entries[index] = zero
        return entries

    def _z_spider(self, inputs: int, outputs: int, phase: 'Union[Cyclotomic, complex]') -> Matrix:
        """1 at the (0, 0) corner and e^{iα} at the opposite corner; the 0→0 spider is 1 + e^{iα}"""
        entries = self._empty(2 ** outputs, 2 ** inputs)
        entries[0, 0] = self._number(1)
        entries[-1, -1] = entries[-1, -1] + phase
        return Matrix(entries, self.backend, self.order)

    def _x_spider(self, inputs: int, outputs: int, phase: 'Union[Cyclotomic, complex]') -> Matrix:
        """Closed form of H^{⊗m} · Z · H^{⊗n}: entry (i, j) = 2^{-(n+m)/2}·(1 + e^{iα}·(-1)^{|i|+|j|})"""
        scale = self._inv_sqrt2_power(inputs + outputs)
        even = (self._number(1) + phase) * scale
        odd = (self._number(1) - phase) * scale

        parity = np.add.outer(_popcounts(2 ** outputs), _popcounts(2 ** inputs)) % 2
        entries = self._empty(*parity.shape)
        entries[parity == 0] = even
        entries[parity == 1] = odd
        return Matrix(entries, self.backend, self.order)


def interpret(diagram: Diagram, backend: str = 'exact', max_wires: int = DEFAULT_MAX_WIRES) -> Matrix:
    return Interpreter(backend, max_wires).interpret(diagram)
