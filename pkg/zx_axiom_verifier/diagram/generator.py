from dataclasses import dataclass
from typing      import Union
from zx_axiom_verifier.diagram.angle_expr import AngleExpr, Angle

SPIDER_KINDS = ['Z', 'X']

# kind -> (inputs, outputs) for the generators with a fixed arity
FIXED_ARITIES = {
    'H': (1, 1),
    'I': (1, 1),
    'SWAP': (2, 2),
    'CUP': (2, 0),
    'CAP': (0, 2),
    'E': (0, 0),
    'TRI': (1, 1),
}

GENERATOR_KINDS = SPIDER_KINDS + list(FIXED_ARITIES)


@dataclass(frozen=True)
class Generator:
    """One of the ZX generators: Z/X spiders n→m with a phase, or a fixed-arity wire generator

    Note:
        The triangle TRI is the 1→1 generator with matrix [[1, 1], [0, 1]]
    """

    kind: str
    inputs: int
    outputs: int
    angle: Union[AngleExpr, None] = None

    def __post_init__(self) -> None:
        if self.kind not in GENERATOR_KINDS:
            raise ValueError(f'kind must be one of the following: {", ".join(GENERATOR_KINDS)}')

        if self.kind in SPIDER_KINDS:
            if self.inputs < 0 or self.outputs < 0:
                raise ValueError('spider inputs and outputs must be non-negative')
            object.__setattr__(self, 'angle', AngleExpr.of(self.angle if self.angle is not None else 0))
            return

        if (self.inputs, self.outputs) != FIXED_ARITIES[self.kind]:
            raise ValueError(f'{self.kind} must be {FIXED_ARITIES[self.kind][0]}→{FIXED_ARITIES[self.kind][1]}')
        if self.angle is not None:
            raise ValueError(f'{self.kind} takes no angle')

    @classmethod
    def fixed(cls, kind: str) -> 'Generator':
        inputs, outputs = FIXED_ARITIES[kind]
        return cls(kind, inputs, outputs)

    def is_spider(self) -> bool:
        return self.kind in SPIDER_KINDS

    def with_angle(self, angle: AngleExpr) -> 'Generator':
        return Generator(self.kind, self.inputs, self.outputs, angle)

    def __str__(self) -> str:
        if self.is_spider():
            return f'{self.kind}({self.inputs},{self.outputs},{self.angle})'
        return self.kind


def z_spider(inputs: int, outputs: int, angle: 'Union[AngleExpr, Angle, int, str]' = 0) -> Generator:
    return Generator('Z', inputs, outputs, AngleExpr.of(angle))


def x_spider(inputs: int, outputs: int, angle: 'Union[AngleExpr, Angle, int, str]' = 0) -> Generator:
    return Generator('X', inputs, outputs, AngleExpr.of(angle))
