import re
import numpy as np

from fractions   import Fraction
from dataclasses import dataclass
from typing      import Union
from zx_axiom_verifier.error import BackendError, DiagramParseError
from zx_axiom_verifier.arithmetic import Cyclotomic

BACKENDS = ['exact', 'float']
DEFAULT_TOLERANCE = 1e-9

Scalar = Union[Cyclotomic, complex]

_EXACT_TERM = re.compile(r'([+-]?)(\d+(?:/\d+)?)(?:\*z\^(\d+))?')
_HEADER = re.compile(r'^#\s*(exact|float)\s+(\d+)x(\d+)(?:\s+order=(\d+))?\s*$')


def check_backend(backend: str) -> None:
    if backend not in BACKENDS:
        raise ValueError(f'backend must be one of the following: {", ".join(BACKENDS)}')


@dataclass(frozen=True, eq=False)
class Matrix:
    """Dense 2^m × 2^n matrix, either of Cyclotomic entries (exact backend) or of complex floats (float backend)"""

    entries: np.ndarray
    backend: str
    order: int = 1

    def __post_init__(self) -> None:
        check_backend(self.backend)
        rows, cols = self.entries.shape
        if rows & (rows - 1) or cols & (cols - 1):
            raise ValueError(f'matrix dimensions must be powers of two, found {rows}x{cols}')

    @classmethod
    def exact(cls, rows: 'list[list[Union[Cyclotomic, int, Fraction]]]', order: int = 1) -> 'Matrix':
        """Builds an exact matrix, lifting every entry to the given order"""
        entries = np.empty((len(rows), len(rows[0])), dtype=object)
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                value = value if isinstance(value, Cyclotomic) else Cyclotomic.from_rational(value)
                entries[i, j] = value
                order = np.lcm(order, value.order)
        for index, value in np.ndenumerate(entries):
            entries[index] = value.lift(int(order))
        return cls(entries, 'exact', int(order))

    @classmethod
    def numeric(cls, rows: 'Union[list[list[complex]], np.ndarray]') -> 'Matrix':
        return cls(np.asarray(rows, dtype=complex), 'float')

    @property
    def shape(self) -> 'tuple[int, int]':
        return self.entries.shape

    @property
    def inputs(self) -> int:
        return self.shape[1].bit_length() - 1

    @property
    def outputs(self) -> int:
        return self.shape[0].bit_length() - 1

    def to_complex(self) -> np.ndarray:
        if self.backend == 'float':
            return self.entries
        return np.vectorize(complex, otypes=[complex])(self.entries)

    def as_float(self) -> 'Matrix':
        return Matrix(self.to_complex(), 'float')

    def __matmul__(self, other: 'Matrix') -> 'Matrix':
        _check_same_backend(self, other)
        return Matrix(self.entries @ other.entries, self.backend, int(np.lcm(self.order, other.order)))

    def kron(self, other: 'Matrix') -> 'Matrix':
        _check_same_backend(self, other)
        return Matrix(np.kron(self.entries, other.entries), self.backend, int(np.lcm(self.order, other.order)))

    def scaled(self, factor: Scalar) -> 'Matrix':
        return Matrix(self.entries * factor, self.backend, self.order)

    def __str__(self) -> str:
        return dump_matrix(self)


def _check_same_backend(a: Matrix, b: Matrix) -> None:
    if a.backend != b.backend:
        raise BackendError(f'cannot combine a {a.backend} matrix with a {b.backend} matrix')


def _is_zero(value: Scalar, tolerance: float) -> bool:
    if isinstance(value, Cyclotomic):
        return value.is_zero()
    return abs(value) <= tolerance


def equal_exact(a: Matrix, b: Matrix, tolerance: float = DEFAULT_TOLERANCE) -> bool:
    """Entrywise equality: exact zero test on cyclotomic differences, max-norm within tolerance on floats

    Raises:
        BackendError: If the matrices come from different backends
    """
    _check_same_backend(a, b)
    if a.shape != b.shape:
        return False

    if a.backend == 'float':
        return bool(np.max(np.abs(a.entries - b.entries), initial=0.0) <= tolerance)

    return all((x - y).is_zero() for x, y in zip(a.entries.flat, b.entries.flat))


def equal_up_to_scalar(a: Matrix, b: Matrix, tolerance: float = DEFAULT_TOLERANCE) -> 'Union[Scalar, None]':
    """Finds a nonzero λ with a = λ·b

    Note:
        Exact matrices take λ from the first row-major entry where either matrix is nonzero. Float matrices take it from
        the largest entry of b, which keeps the ratio well conditioned. Two zero matrices give λ = 1

    Raises:
        BackendError: If the matrices come from different backends
        ValueError: If the shapes differ

    Returns:
        Cyclotomic | complex | None: λ, or None when no nonzero scalar relates the matrices
    """
    _check_same_backend(a, b)
    if a.shape != b.shape:
        raise ValueError(f'shapes must match, found {a.shape} and {b.shape}')

    if a.backend == 'float':
        return _float_scalar(a.entries, b.entries, tolerance)

    for x, y in zip(a.entries.flat, b.entries.flat):
        if x.is_zero() and y.is_zero():
            continue
        if x.is_zero() or y.is_zero():
            return None
        ratio = x / y
        if all((u - ratio * v).is_zero() for u, v in zip(a.entries.flat, b.entries.flat)):
            return ratio
        return None

    return Cyclotomic.one(max(a.order, b.order))


def _float_scalar(a: np.ndarray, b: np.ndarray, tolerance: float) -> 'Union[complex, None]':
    pivot = int(np.argmax(np.abs(b)))
    if abs(b.flat[pivot]) <= tolerance:
        return complex(1) if np.max(np.abs(a), initial=0.0) <= tolerance else None

    ratio = complex(a.flat[pivot] / b.flat[pivot])
    if abs(ratio) <= tolerance:
        return None
    if np.max(np.abs(a - ratio * b), initial=0.0) > tolerance:
        return None
    return ratio


def is_scalar_identity(m: Matrix, tolerance: float = DEFAULT_TOLERANCE) -> bool:
    """Whether a square matrix is a nonzero multiple of the identity"""
    identity = identity_matrix(m.inputs, m.backend, m.order)
    return equal_up_to_scalar(m, identity, tolerance) is not None


def identity_matrix(wires: int, backend: str, order: int = 1) -> Matrix:
    size = 2 ** wires
    if backend == 'float':
        return Matrix(np.eye(size, dtype=complex), 'float')
    entries = np.empty((size, size), dtype=object)
    for index in np.ndindex(size, size):
        entries[index] = Cyclotomic.from_rational(int(index[0] == index[1]), order)
    return Matrix(entries, 'exact', order)


def format_entry(value: Scalar) -> str:
    if isinstance(value, Cyclotomic):
        return str(value)
    value = complex(value)
    return f'{value.real:.12g}{value.imag:+.12g}j'


def dump_matrix(m: Matrix) -> str:
    """Plain text dump: a `# backend RxC` header, then one row per line

    Note:
        Exact entries are sums of `a/b*z^k` terms with z = ζ_N, N the order in the header; float entries are `re+imj`
    """
    rows, cols = m.shape
    header = f'# {m.backend} {rows}x{cols}' + (f' order={m.order}' if m.backend == 'exact' else '')
    lines = [' '.join(format_entry(value) for value in row) for row in m.entries]
    return '\n'.join([header] + lines)


def _parse_exact_entry(token: str, order: int) -> Cyclotomic:
    terms: 'dict[int, Fraction]' = {}
    position = 0
    while position < len(token):
        match = _EXACT_TERM.match(token, position)
        if not match or match.end() == position:
            raise ValueError(token)
        sign, coefficient, exponent = match.groups()
        value = Fraction(coefficient) * (-1 if sign == '-' else 1)
        key = int(exponent or 0)
        terms[key] = terms.get(key, 0) + value
        position = match.end()
    return Cyclotomic(order, terms)


def parse_matrix_text(text: str, source: str = '<matrix>') -> Matrix:
    """Reads the dump format back; without a header, entries are read as complex floats

    Raises:
        DiagramParseError: On malformed entries, ragged rows or dimensions that are not powers of two
    """
    backend, order = 'float', 1
    rows: 'list[list[Scalar]]' = []

    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        header = _HEADER.match(stripped)
        if header:
            backend, order = header.group(1), int(header.group(4) or 1)
            continue
        if stripped.startswith('#'):
            continue

        row = []
        for match in re.finditer(r'\S+', line):
            token = match.group()
            try:
                row.append(_parse_exact_entry(token, order) if backend == 'exact' else complex(token))
            except ValueError:
                raise DiagramParseError(f'malformed {backend} entry {token!r}', line_number, match.start() + 1, source)
        if rows and len(row) != len(rows[0]):
            raise DiagramParseError(f'row has {len(row)} entries, expected {len(rows[0])}', line_number, 1, source)
        rows.append(row)

    if not rows:
        raise DiagramParseError('matrix has no rows', source=source)

    try:
        if backend == 'exact':
            return Matrix.exact(rows, order)
        return Matrix.numeric(rows)
    except ValueError as error:
        raise DiagramParseError(str(error), source=source)
