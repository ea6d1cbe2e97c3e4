from dataclasses import dataclass
from typing      import Mapping, Union
from zx_axiom_verifier.error import ArityMismatchError
from zx_axiom_verifier.diagram import Diagram, DiagramDocument, Angle, substitute

MODES = ['exact', 'scalar']
SIDE_CONDITIONS = ['ruleA']
RULE_A_VARIABLES = ('alpha', 'beta', 'gamma', 'theta1', 'theta2', 'theta3')


@dataclass(frozen=True)
class RuleSchema:
    """A rewrite rule lhs = rhs over named angle variables

    Note:
        mode 'exact' compares the interpretations entrywise, 'scalar' compares them up to a nonzero scalar
    """

    name: str
    lhs: Diagram
    rhs: Diagram
    variables: 'tuple[str, ...]' = ()
    side_condition: Union[str, None] = None
    mode: str = 'exact'
    description: str = ''

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f'mode must be one of the following: {", ".join(MODES)}')
        if self.side_condition is not None and self.side_condition not in SIDE_CONDITIONS:
            raise ValueError(f'side_condition must be one of the following: {", ".join(SIDE_CONDITIONS)}')

    @classmethod
    def from_document(cls, document: DiagramDocument) -> 'RuleSchema':
        """Builds a rule from a parsed rule file

        Raises:
            ValueError: If the document lacks a name, lhs or rhs, or has an unknown mode or side condition
        """
        missing = [key for key in ('lhs', 'rhs') if key not in document.terms]
        if 'name' not in document.headers:
            missing.insert(0, 'name')
        if missing:
            raise ValueError(f'{document.source}: rule file must define {", ".join(missing)}')

        return cls(
            name=document.headers['name'],
            lhs=document.terms['lhs'],
            rhs=document.terms['rhs'],
            variables=document.variables,
            side_condition=document.headers.get('side_condition'),
            mode=document.headers.get('mode', 'exact'),
            description=document.headers.get('description', ''),
        )

    def validate(self) -> 'tuple[int, int]':
        """Checks both sides and returns their common arity

        Raises:
            ArityMismatchError: If a side is ill-typed or the two sides have different arities
            ValueError: If a side uses an undeclared variable, or a rule (A) schema does not declare the six rule (A) variables
        """
        lhs_arity = self.lhs.validate(('lhs',))
        rhs_arity = self.rhs.validate(('rhs',))

        if lhs_arity != rhs_arity:
            raise ArityMismatchError(f'rule {self.name}: lhs is {lhs_arity[0]}→{lhs_arity[1]} but rhs is {rhs_arity[0]}→{rhs_arity[1]}')

        undeclared = (self.lhs.free_variables() | self.rhs.free_variables()) - set(self.variables)
        if undeclared:
            raise ValueError(f'rule {self.name} uses undeclared variables: {", ".join(sorted(undeclared))}')

        if self.side_condition == 'ruleA' and set(self.variables) != set(RULE_A_VARIABLES):
            raise ValueError(f'rule {self.name}: ruleA schemas must declare exactly {", ".join(RULE_A_VARIABLES)}')

        return lhs_arity

    def instantiate(self, assignment: 'Mapping[str, Angle]') -> 'tuple[Diagram, Diagram]':
        return substitute(self.lhs, assignment), substitute(self.rhs, assignment)

    def is_rational(self) -> bool:
        return self.lhs.is_rational() and self.rhs.is_rational()
