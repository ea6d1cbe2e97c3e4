"""Reader for the diagram text format

A document is a list of `key: value` headers and `let NAME = term` definitions; lines starting with whitespace continue
the previous entry and `#` starts a comment. A document made only of a term (no headers) is read as `term: ...`.

    name: S1
    vars: a, b
    mode: exact
    let FUSE = seq(Z(2,1,a), Z(1,2,b))
    lhs: FUSE
    rhs: Z(2,2,a + b)

Terms use the constructors Z(n,m,angle), X(n,m,angle), H, I, SWAP, CUP, CAP, E, TRI and the n-ary combinators
seq(t1, ..., tk) and par(t1, ..., tk), both folded to the left. Angles are linear expressions: multiples of pi
(`3*pi/4`, `-pi/2`), reals in radians with an `r` suffix (`1.234r`) and declared variables with integer
coefficients (`2*x + pi/4`). The full grammar is in README.md.
"""
import re
import pathlib
import numpy as np

from fractions   import Fraction
from dataclasses import dataclass, field
from typing      import NamedTuple, Union
from zx_axiom_verifier.error import DiagramParseError
from zx_axiom_verifier.arithmetic import RationalAngle
from zx_axiom_verifier.diagram.angle_expr import AngleExpr
from zx_axiom_verifier.diagram.generator import Generator, FIXED_ARITIES, SPIDER_KINDS
from zx_axiom_verifier.diagram.diagram import Diagram, Leaf, seq, par

HEADER_KEYS = ['name', 'vars', 'mode', 'side_condition', 'description', 'term', 'lhs', 'rhs']
TERM_KEYS = ['term', 'lhs', 'rhs']
COMBINATORS = ['seq', 'par']
RESERVED_NAMES = SPIDER_KINDS + list(FIXED_ARITIES) + COMBINATORS + ['pi', 'let']

_TOKEN_PATTERN = re.compile(r'''
    (?P<REAL>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?r(?![A-Za-z0-9_]))
  | (?P<INT>\d+)
  | (?P<NAME>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<OP>[-+*/(),=])
  | (?P<SKIP>[ \t]+)
  | (?P<MISMATCH>.)
''', re.VERBOSE)

_HEADER_PATTERN = re.compile(r'^([A-Za-z_][A-Za-z0-9_]*)\s*:')
_LET_PATTERN = re.compile(r'^let\s')


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


class TokenStream:
    """Cursor over the tokens of one entry, with error reporting at token positions"""

    def __init__(self, tokens: 'list[Token]', source: str, end: 'tuple[int, int]') -> None:
        self.tokens = tokens
        self.source = source
        self.position = 0
        self.end = Token('EOF', '', *end)

    def next(self, lookahead: int = 0) -> Token:
        index = self.position + lookahead
        return self.tokens[index] if index < len(self.tokens) else self.end

    def advance(self) -> Token:
        token = self.next()
        self.position += 1
        return token

    def raise_error(self, message: str, token: Union[Token, None] = None) -> None:
        token = token or self.next()
        raise DiagramParseError(message, token.line, token.column, self.source)

    def next_is(self, text: str) -> bool:
        token = self.next()
        return token.kind in ('OP', 'NAME') and token.text == text

    def eat(self, text: str) -> Token:
        if not self.next_is(text):
            found = self.next().text or 'end of entry'
            self.raise_error(f'expected {text!r}, found {found!r}')
        return self.advance()

    def eat_int(self) -> int:
        token = self.next()
        if token.kind != 'INT':
            self.raise_error(f'expected an integer, found {token.text or "end of entry"!r}')
        self.advance()
        return int(token.text)

    def eat_name(self) -> Token:
        token = self.next()
        if token.kind != 'NAME':
            self.raise_error(f'expected a name, found {token.text or "end of entry"!r}')
        return self.advance()

    def check_eof(self) -> None:
        if self.next().kind != 'EOF':
            self.raise_error(f'unexpected {self.next().text!r}')


@dataclass
class _Linear:
    """Intermediate value of an angle expression: number + pi·π + real + Σ c·variable"""

    number: Fraction = Fraction(0)
    pi: Fraction = Fraction(0)
    real: float = 0.0
    has_real: bool = False
    variables: 'dict[str, Fraction]' = field(default_factory=dict)

    def is_number(self) -> bool:
        return not self.pi and not self.has_real and not self.variables

    def scaled(self, factor: Fraction) -> '_Linear':
        return _Linear(
            self.number * factor,
            self.pi * factor,
            self.real * float(factor),
            self.has_real,
            {name: c * factor for name, c in self.variables.items()}
        )

    def plus(self, other: '_Linear') -> '_Linear':
        variables = dict(self.variables)
        for name, c in other.variables.items():
            variables[name] = variables.get(name, 0) + c
        return _Linear(
            self.number + other.number,
            self.pi + other.pi,
            self.real + other.real,
            self.has_real or other.has_real,
            {name: c for name, c in variables.items() if c}
        )


@dataclass
class DiagramDocument:
    """A parsed diagram or rule file"""

    source: str
    headers: 'dict[str, str]' = field(default_factory=dict)
    variables: 'tuple[str, ...]' = ()
    lets: 'dict[str, Diagram]' = field(default_factory=dict)
    terms: 'dict[str, Diagram]' = field(default_factory=dict)

    @property
    def term(self) -> Diagram:
        if 'term' not in self.terms:
            raise DiagramParseError('document has no term entry', source=self.source)
        return self.terms['term']


class _Entry(NamedTuple):
    kind: str   # header key, 'let' or 'term'
    line: int
    segments: 'list[tuple[str, int, int]]'  # (text, line, column of the first character)


class DiagramParser:
    """Recursive descent parser for diagram documents, terms and angle expressions"""

    def __init__(self, source: str = '<input>') -> None:
        self.source = source

    def tokenize(self, segments: 'list[tuple[str, int, int]]') -> 'list[Token]':
        tokens = []
        for text, line, column in segments:
            for match in _TOKEN_PATTERN.finditer(text):
                kind = match.lastgroup
                token = Token(kind, match.group(), line, column + match.start())
                if kind == 'SKIP':
                    continue
                if kind == 'MISMATCH':
                    raise DiagramParseError(f'unexpected character {token.text!r}', token.line, token.column, self.source)
                tokens.append(token)
        return tokens

    def _stream(self, segments: 'list[tuple[str, int, int]]') -> TokenStream:
        if segments:
            text, line, column = segments[-1]
            end = (line, column + len(text))
        else:
            end = (0, 0)
        return TokenStream(self.tokenize(segments), self.source, end)

    def _split_entries(self, text: str) -> 'list[_Entry]':
        entries: 'list[_Entry]' = []
        for line_number, raw_line in enumerate(text.splitlines(), start=1):
            line = raw_line.split('#', 1)[0].rstrip()
            if not line.strip():
                continue

            stripped = line.lstrip()
            column = len(line) - len(stripped) + 1

            if line[0] in ' \t':
                if not entries:
                    raise DiagramParseError('continuation line without an entry', line_number, column, self.source)
                entries[-1].segments.append((stripped, line_number, column))
                continue

            header = _HEADER_PATTERN.match(line)
            if header:
                value_start = header.end()
                entries.append(_Entry(header.group(1), line_number, [(line[value_start:], line_number, value_start + 1)]))
            elif _LET_PATTERN.match(line):
                entries.append(_Entry('let', line_number, [(line[3:], line_number, 4)]))
            elif entries and entries[-1].kind == 'term' and entries[-1].line < 0:
                entries[-1].segments.append((line, line_number, 1))
            else:
                # bare term; a negative line number marks it as headerless
                entries.append(_Entry('term', -line_number, [(line, line_number, 1)]))

        return entries

    def parse_document(self, text: str) -> DiagramDocument:
        """Parses a diagram or rule document

        Raises:
            DiagramParseError: On any syntax error, unknown header, undeclared variable or unknown name, with line and column

        Returns:
            DiagramDocument: headers, declared variables, let definitions and the parsed terms
        """
        entries = self._split_entries(text)
        document = DiagramDocument(self.source)

        seen = set()
        for entry in entries:
            if entry.kind == 'let':
                continue
            if entry.kind not in HEADER_KEYS:
                raise DiagramParseError(
                    f'header must be one of the following: {", ".join(HEADER_KEYS)}; found {entry.kind!r}',
                    entry.line, 1, self.source
                )
            if entry.kind in seen:
                raise DiagramParseError(f'duplicate header {entry.kind!r}', abs(entry.line), 1, self.source)
            seen.add(entry.kind)

        for entry in entries:
            if entry.kind == 'vars':
                document.variables = self._parse_variables(entry)
            elif entry.kind not in TERM_KEYS and entry.kind != 'let':
                document.headers[entry.kind] = ' '.join(text.strip() for text, _, _ in entry.segments).strip()

        declared = set(document.variables)
        for entry in entries:
            if entry.kind == 'let':
                self._parse_let(entry, document, declared)
            elif entry.kind in TERM_KEYS:
                stream = self._stream(entry.segments)
                document.terms[entry.kind] = self._parse_term(stream, document.lets, declared)
                stream.check_eof()

        return document

    def _parse_variables(self, entry: _Entry) -> 'tuple[str, ...]':
        stream = self._stream(entry.segments)
        names: 'list[str]' = []
        while stream.next().kind != 'EOF':
            token = stream.eat_name()
            if token.text in RESERVED_NAMES:
                stream.raise_error(f'{token.text!r} is reserved and cannot be a variable', token)
            if token.text in names:
                stream.raise_error(f'variable {token.text!r} declared twice', token)
            names.append(token.text)
            if stream.next().kind != 'EOF':
                stream.eat(',')
        return tuple(names)

    def _parse_let(self, entry: _Entry, document: DiagramDocument, declared: 'set[str]') -> None:
        stream = self._stream(entry.segments)
        name = stream.eat_name()
        if name.text in RESERVED_NAMES:
            stream.raise_error(f'{name.text!r} is reserved and cannot be redefined', name)
        if name.text in document.lets:
            stream.raise_error(f'{name.text!r} is already defined', name)
        stream.eat('=')
        document.lets[name.text] = self._parse_term(stream, document.lets, declared)
        stream.check_eof()

    def _parse_term(self, stream: TokenStream, lets: 'dict[str, Diagram]', declared: 'Union[set[str], None]') -> Diagram:
        token = stream.eat_name()
        name = token.text

        if name in SPIDER_KINDS:
            stream.eat('(')
            inputs = stream.eat_int()
            stream.eat(',')
            outputs = stream.eat_int()
            stream.eat(',')
            angle = self._parse_angle(stream, declared)
            stream.eat(')')
            return Leaf(Generator(name, inputs, outputs, angle))

        if name in COMBINATORS:
            stream.eat('(')
            parts = [self._parse_term(stream, lets, declared)]
            while stream.next_is(','):
                stream.advance()
                parts.append(self._parse_term(stream, lets, declared))
            stream.eat(')')
            return seq(*parts) if name == 'seq' else par(*parts)

        if name in FIXED_ARITIES:
            return Leaf(Generator.fixed(name))

        if name in lets:
            return lets[name]

        stream.raise_error(f'unknown constructor or definition {name!r}', token)

    def _parse_angle(self, stream: TokenStream, declared: 'Union[set[str], None]') -> AngleExpr:
        start = stream.next()
        value = self._parse_sum(stream, declared)

        if value.number:
            stream.raise_error(f'bare number {value.number} is not an angle; write {value.number}*pi or {value.number}r', start)

        coefficients = {}
        for name, c in value.variables.items():
            if c.denominator != 1:
                stream.raise_error(f'coefficient of {name} must be an integer, found {c}', start)
            coefficients[name] = int(c)

        if value.has_real:
            constant = value.real + float(value.pi) * np.pi
        else:
            constant = RationalAngle.from_fraction(value.pi)

        return AngleExpr(constant, tuple(coefficients.items()))

    def _parse_sum(self, stream: TokenStream, declared: 'Union[set[str], None]') -> _Linear:
        value = self._parse_product(stream, declared)
        while stream.next_is('+') or stream.next_is('-'):
            sign = stream.advance().text
            right = self._parse_product(stream, declared)
            value = value.plus(right if sign == '+' else right.scaled(Fraction(-1)))
        return value

    def _parse_product(self, stream: TokenStream, declared: 'Union[set[str], None]') -> _Linear:
        value = self._parse_unary(stream, declared)
        while stream.next_is('*') or stream.next_is('/'):
            operator = stream.advance()
            right = self._parse_unary(stream, declared)
            if operator.text == '/':
                if not right.is_number() or not right.number:
                    stream.raise_error('can only divide by a nonzero number', operator)
                value = value.scaled(1 / right.number)
            elif right.is_number():
                value = value.scaled(right.number)
            elif value.is_number():
                value = right.scaled(value.number)
            else:
                stream.raise_error('angle expressions must be linear', operator)
        return value

    def _parse_unary(self, stream: TokenStream, declared: 'Union[set[str], None]') -> _Linear:
        if stream.next_is('-'):
            stream.advance()
            return self._parse_unary(stream, declared).scaled(Fraction(-1))
        if stream.next_is('+'):
            stream.advance()
            return self._parse_unary(stream, declared)
        return self._parse_atom(stream, declared)

    def _parse_atom(self, stream: TokenStream, declared: 'Union[set[str], None]') -> _Linear:
        token = stream.next()

        if token.kind == 'INT':
            stream.advance()
            return _Linear(number=Fraction(int(token.text)))

        if token.kind == 'REAL':
            stream.advance()
            return _Linear(real=float(token.text[:-1]), has_real=True)

        if token.kind == 'NAME':
            stream.advance()
            if token.text == 'pi':
                return _Linear(pi=Fraction(1))
            if token.text in RESERVED_NAMES:
                stream.raise_error(f'{token.text!r} cannot be used inside an angle', token)
            if declared is not None and token.text not in declared:
                stream.raise_error(f'undeclared variable {token.text!r}', token)
            return _Linear(variables={token.text: Fraction(1)})

        if stream.next_is('('):
            stream.advance()
            value = self._parse_sum(stream, declared)
            stream.eat(')')
            return value

        stream.raise_error(f'expected an angle, found {token.text or "end of entry"!r}')

    def parse_term(self, text: str, variables: 'Union[list[str], None]' = None) -> Diagram:
        """Parses a single term; variables, when given, restricts the allowed variable names"""
        stream = self._stream([(text, 1, 1)])
        term = self._parse_term(stream, {}, set(variables) if variables is not None else None)
        stream.check_eof()
        return term

    def parse_angle(self, text: str, variables: 'Union[list[str], None]' = None) -> AngleExpr:
        stream = self._stream([(text, 1, 1)])
        angle = self._parse_angle(stream, set(variables) if variables is not None else None)
        stream.check_eof()
        return angle


def parse_diagram_text(text: str, source: str = '<input>') -> DiagramDocument:
    return DiagramParser(source).parse_document(text)


def parse_diagram_file(path: 'Union[str, pathlib.Path]') -> DiagramDocument:
    path = pathlib.Path(path)
    return DiagramParser(str(path)).parse_document(path.read_text(encoding='utf-8'))


def parse_angle(text: str) -> AngleExpr:
    """Parses a standalone angle literal such as `3*pi/4`, `-pi/2` or `0.7r`"""
    return DiagramParser('<angle>').parse_angle(text)
