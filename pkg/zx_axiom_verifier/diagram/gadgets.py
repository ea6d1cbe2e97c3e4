"""Small diagrams with known interpretations, used to write scalar and arithmetic facts as diagram pairs

Vectors (1, v)ᵀ on one wire encode a complex number v: plus() adds the encoded numbers, times() multiplies them.
"""
import functools

from typing import Sequence, Union
from zx_axiom_verifier.arithmetic import PI, RationalAngle
from zx_axiom_verifier.diagram.angle_expr import AngleExpr, Angle
from zx_axiom_verifier.diagram.generator import z_spider, x_spider
from zx_axiom_verifier.diagram.diagram import Diagram, seq, par, as_diagram

AngleLike = Union[AngleExpr, Angle, int, str]

THIRD_PI = RationalAngle(1, 3)


class Gadgets:

    @staticmethod
    @functools.lru_cache(maxsize=None)
    def sqrt2() -> Diagram:
        """0→0 diagram with value √2"""
        return seq(z_spider(0, 1, 0), x_spider(1, 0, 0))

    @staticmethod
    @functools.lru_cache(maxsize=None)
    def inv_sqrt2() -> Diagram:
        """0→0 diagram with value 1/√2

        Note:
            (1 + e^{iπ/3} + e^{-iπ/3} - 1) / √2 = 1/√2
        """
        return seq(z_spider(0, 1, THIRD_PI), 'H', z_spider(1, 0, -THIRD_PI))

    @staticmethod
    def sqrt2_power(power: int) -> Diagram:
        """0→0 diagram with value √2^power, for any integer power"""
        gadget = Gadgets.sqrt2() if power > 0 else Gadgets.inv_sqrt2()
        return par(*([gadget] * abs(power)))

    @staticmethod
    @functools.lru_cache(maxsize=None)
    def not_gate() -> Diagram:
        return as_diagram(x_spider(1, 1, PI))

    @staticmethod
    @functools.lru_cache(maxsize=None)
    def scaled_plus() -> Diagram:
        """2→1 diagram with matrix (1/√2)·[[1, 0, 0, 0], [0, 1, 1, 0]], built with the triangle"""
        split = par(z_spider(1, 2, 0), z_spider(1, 2, 0))
        guard = seq(par('I', seq(Gadgets.not_gate(), 'TRI')), 'CUP')

        return seq(split, par('I', 'SWAP', 'I'), par(x_spider(2, 1, 0), guard))

    @staticmethod
    @functools.lru_cache(maxsize=None)
    def plus() -> Diagram:
        """2→1 diagram with matrix [[1, 0, 0, 0], [0, 1, 1, 0]]: maps (1, a) ⊗ (1, b) to (1, a + b)"""
        return par(Gadgets.scaled_plus(), Gadgets.sqrt2())

    @staticmethod
    @functools.lru_cache(maxsize=None)
    def times() -> Diagram:
        """2→1 diagram mapping (1, a) ⊗ (1, b) to (1, a·b)"""
        return as_diagram(z_spider(2, 1, 0))

    @staticmethod
    def state(angle: AngleLike) -> Diagram:
        """The state (1, e^{i·angle})"""
        return as_diagram(z_spider(0, 1, AngleExpr.of(angle)))

    @staticmethod
    @functools.lru_cache(maxsize=None)
    def zero_state() -> Diagram:
        """The state (1, 0)"""
        return par(x_spider(0, 1, 0), Gadgets.inv_sqrt2())

    @staticmethod
    def fold(states: 'Sequence[Diagram]', combiner: Diagram) -> Diagram:
        """Combines encoded states from left to right with a 2→1 combiner"""
        if not states:
            raise ValueError('states must not be empty')

        current = states[0]
        for state in states[1:]:
            current = seq(par(current, state), combiner)
        return current

    @staticmethod
    def sum_state(angles: 'Sequence[AngleLike]') -> Diagram:
        """The state (1, Σ e^{iθ}) over the given angles"""
        return Gadgets.fold([Gadgets.state(angle) for angle in angles], Gadgets.plus())

    @staticmethod
    def product_state(states: 'Sequence[Diagram]') -> Diagram:
        return Gadgets.fold(list(states), Gadgets.times())

    @staticmethod
    @functools.lru_cache(maxsize=None)
    def half() -> Diagram:
        """The state (1, 1/2) = (1/2)·NOT(1, 1 + 1)"""
        two = seq(par(Gadgets.state(0), Gadgets.state(0)), Gadgets.plus())
        return par(seq(two, Gadgets.not_gate()), Gadgets.inv_sqrt2(), Gadgets.inv_sqrt2())

    @staticmethod
    @functools.lru_cache(maxsize=None)
    def minus_half() -> Diagram:
        """The state (1, -1/2)"""
        return seq(par(Gadgets.half(), Gadgets.state(PI)), Gadgets.times())
