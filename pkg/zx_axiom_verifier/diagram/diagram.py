from abc         import ABC, abstractmethod
from functools   import reduce
from dataclasses import dataclass
from typing      import Callable, Iterator, Mapping, Union
from zx_axiom_verifier.error import ArityMismatchError, UnboundVariableError
from zx_axiom_verifier.diagram.angle_expr import AngleExpr, Angle
from zx_axiom_verifier.diagram.generator import Generator, FIXED_ARITIES


class Diagram(ABC):
    """A ZX diagram as a term tree: leaf(generator) | seq(top, bottom) | par(left, right)

    Note:
        Trees may be ill-typed when built; validate() is the arity check
    """

    @abstractmethod
    def validate(self, path: 'tuple[str, ...]' = ()) -> 'tuple[int, int]':
        """Checks every sequential composition and returns the (inputs, outputs) arity

        Args:
            path (tuple[str, ...], optional): location of this node inside the enclosing diagram. Defaults to ().

        Raises:
            ArityMismatchError: If a seq node connects a different number of wires, with the path to that node

        Returns:
            tuple[int, int]: number of inputs and outputs
        """

    @abstractmethod
    def map_generators(self, func: Callable[[Generator], Generator]) -> 'Diagram':
        pass

    @abstractmethod
    def generators(self) -> Iterator[Generator]:
        pass

    @property
    def inputs(self) -> int:
        return self.validate()[0]

    @property
    def outputs(self) -> int:
        return self.validate()[1]

    def angles(self) -> 'list[AngleExpr]':
        return [generator.angle for generator in self.generators() if generator.is_spider()]

    def free_variables(self) -> 'frozenset[str]':
        return frozenset().union(*(angle.variables for angle in self.angles()))

    def generator_count(self) -> int:
        return sum(1 for _ in self.generators())

    def is_rational(self) -> bool:
        return all(angle.is_rational() for angle in self.angles())

    def map_angles(self, func: Callable[[AngleExpr], AngleExpr]) -> 'Diagram':
        return self.map_generators(lambda g: g.with_angle(func(g.angle)) if g.is_spider() else g)


@dataclass(frozen=True)
class Leaf(Diagram):
    generator: Generator

    def validate(self, path: 'tuple[str, ...]' = ()) -> 'tuple[int, int]':
        return self.generator.inputs, self.generator.outputs

    def map_generators(self, func: Callable[[Generator], Generator]) -> Diagram:
        return Leaf(func(self.generator))

    def generators(self) -> Iterator[Generator]:
        yield self.generator

    def __str__(self) -> str:
        return str(self.generator)


@dataclass(frozen=True)
class Seq(Diagram):
    """Sequential composition: top is applied first, its outputs feed bottom's inputs"""

    top: Diagram
    bottom: Diagram

    def validate(self, path: 'tuple[str, ...]' = ()) -> 'tuple[int, int]':
        top_inputs, top_outputs = self.top.validate(path + ('seq.top',))
        bottom_inputs, bottom_outputs = self.bottom.validate(path + ('seq.bottom',))

        if top_outputs != bottom_inputs:
            raise ArityMismatchError(
                f'seq connects {top_outputs} output(s) to {bottom_inputs} input(s): {top_outputs} ≠ {bottom_inputs}',
                path or ('seq',)
            )

        return top_inputs, bottom_outputs

    def map_generators(self, func: Callable[[Generator], Generator]) -> Diagram:
        return Seq(self.top.map_generators(func), self.bottom.map_generators(func))

    def generators(self) -> Iterator[Generator]:
        yield from self.top.generators()
        yield from self.bottom.generators()

    def __str__(self) -> str:
        parts = []
        node: Diagram = self
        while isinstance(node, Seq):
            parts.append(node.bottom)
            node = node.top
        parts.append(node)
        return f'seq({", ".join(str(part) for part in reversed(parts))})'


@dataclass(frozen=True)
class Par(Diagram):
    """Parallel composition: left's wires come first"""

    left: Diagram
    right: Diagram

    def validate(self, path: 'tuple[str, ...]' = ()) -> 'tuple[int, int]':
        left_inputs, left_outputs = self.left.validate(path + ('par.left',))
        right_inputs, right_outputs = self.right.validate(path + ('par.right',))

        return left_inputs + right_inputs, left_outputs + right_outputs

    def map_generators(self, func: Callable[[Generator], Generator]) -> Diagram:
        return Par(self.left.map_generators(func), self.right.map_generators(func))

    def generators(self) -> Iterator[Generator]:
        yield from self.left.generators()
        yield from self.right.generators()

    def __str__(self) -> str:
        parts = []
        node: Diagram = self
        while isinstance(node, Par):
            parts.append(node.right)
            node = node.left
        parts.append(node)
        return f'par({", ".join(str(part) for part in reversed(parts))})'


DiagramLike = Union[Diagram, Generator, str]


def as_diagram(item: DiagramLike) -> Diagram:
    """Wraps generators, and fixed-arity generator names such as 'H', into leaves"""
    if isinstance(item, Diagram):
        return item
    if isinstance(item, Generator):
        return Leaf(item)
    if item in FIXED_ARITIES:
        return Leaf(Generator.fixed(item))
    raise ValueError(f'item must be one of the following: a Diagram, a Generator, {", ".join(FIXED_ARITIES)}')


def seq(*items: DiagramLike) -> Diagram:
    """n-ary sequential composition, folded to the left: seq(a, b, c) = seq(seq(a, b), c)"""
    if not items:
        raise ValueError('seq needs at least one diagram')
    return reduce(Seq, (as_diagram(item) for item in items))


def par(*items: DiagramLike) -> Diagram:
    """n-ary parallel composition, folded to the left"""
    if not items:
        return Leaf(Generator.fixed('E'))
    return reduce(Par, (as_diagram(item) for item in items))


def tensor_power(item: DiagramLike, count: int) -> Diagram:
    return par(*([as_diagram(item)] * count))


def validate(diagram: Diagram) -> 'tuple[int, int]':
    return diagram.validate()


def substitute(diagram: Diagram, assignment: 'Mapping[str, Angle]') -> Diagram:
    """Evaluates every angle expression under the assignment

    Raises:
        UnboundVariableError: If the assignment misses a free variable of the diagram
    """
    missing = sorted(diagram.free_variables() - set(assignment))
    if missing:
        raise UnboundVariableError(missing[0], 'substitute')

    return diagram.map_angles(lambda angle: angle.substitute(assignment))


def scale_variables(diagram: Diagram, factor: int) -> Diagram:
    """Multiplies every angle by factor, modulo 2π"""
    return diagram.map_angles(lambda angle: angle.scale(factor))
