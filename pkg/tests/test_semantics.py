import numpy as np
import pytest

from hypothesis import given, settings, strategies as st
from zx_axiom_verifier.error import BackendError, CapacityError, UnboundVariableError, DiagramParseError
from zx_axiom_verifier.arithmetic import Cyclotomic, RationalAngle
from zx_axiom_verifier.diagram import Generator, z_spider, x_spider, seq, par, tensor_power, parse_diagram_text
from zx_axiom_verifier.semantics import (
    Interpreter,
    Matrix,
    equal_exact,
    equal_up_to_scalar,
    is_scalar_identity,
    identity_matrix,
    dump_matrix,
    parse_matrix_text,
    working_order,
)

IMAG = Cyclotomic.root(4)
R = Cyclotomic.inv_sqrt2()

GENERATOR_TABLE = [
    ('Z(1,1,pi/2)', [[1, 0], [0, IMAG]]),
    ('Z(0,1,pi)', [[1], [-1]]),
    ('Z(1,0,pi/2)', [[1, IMAG]]),
    ('Z(0,0,pi/2)', [[1 + IMAG]]),
    ('Z(2,1,0)', [[1, 0, 0, 0], [0, 0, 0, 1]]),
    ('Z(1,2,pi)', [[1, 0], [0, 0], [0, 0], [0, -1]]),
    ('X(1,1,pi)', [[0, 1], [1, 0]]),
    ('X(1,1,pi/2)', [[(1 + IMAG) / 2, (1 - IMAG) / 2], [(1 - IMAG) / 2, (1 + IMAG) / 2]]),
    ('X(0,1,0)', [[2 * R], [0]]),
    ('X(1,2,0)', [[R, 0], [0, R], [0, R], [R, 0]]),
    ('H', [[R, R], [R, -R]]),
    ('I', [[1, 0], [0, 1]]),
    ('SWAP', [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]),
    ('CUP', [[1, 0, 0, 1]]),
    ('CAP', [[1], [0], [0], [1]]),
    ('E', [[1]]),
    ('TRI', [[1, 1], [0, 1]]),
]


def _term(text):
    return parse_diagram_text(text).term


@pytest.mark.parametrize('text, rows', GENERATOR_TABLE)
def test_generator_table(exact, text, rows):
    matrix = exact.interpret(_term(text))
    assert equal_exact(matrix, Matrix.exact(rows))


def test_hadamard_dump_is_canonical(exact):
    assert dump_matrix(exact.interpret(_term('H'))) == (
        '# exact 2x2 order=8\n'
        '1/2*z^1-1/2*z^3 1/2*z^1-1/2*z^3\n'
        '1/2*z^1-1/2*z^3 -1/2*z^1+1/2*z^3'
    )


@pytest.mark.parametrize('inputs, outputs', [(0, 1), (1, 1), (2, 1), (1, 2), (2, 2), (0, 3)])
@pytest.mark.parametrize('angle', [RationalAngle(0), RationalAngle(1, 3), RationalAngle(7, 4)])
def test_x_spider_is_a_hadamard_conjugated_z_spider(exact, inputs, outputs, angle):
    composite = seq(tensor_power('H', inputs), z_spider(inputs, outputs, angle), tensor_power('H', outputs))
    assert equal_exact(exact.interpret(seq(x_spider(inputs, outputs, angle))), exact.interpret(composite))


def test_sequential_composition_applies_the_top_first(exact):
    matrix = exact.interpret(seq('TRI', 'H'))
    expected = Matrix.exact([[R, 2 * R], [R, 0]])
    assert equal_exact(matrix, expected)


def test_spider_fusion_holds_exactly(exact):
    a, b = RationalAngle(1, 3), RationalAngle(5, 4)
    assert equal_exact(exact.interpret(seq(z_spider(1, 1, a), z_spider(1, 1, b))), exact.interpret(seq(z_spider(1, 1, a + b))))


def test_working_order():
    assert working_order(_term('H')) == 8
    assert working_order(_term('Z(1,1,pi/3)')) == 24
    assert working_order(_term('seq(Z(1,1,pi/5), X(1,1,3*pi/4))')) == 40

    with pytest.raises(CapacityError):
        working_order(seq(z_spider(1, 1, RationalAngle(1, 4097))))


def test_exact_backend_rejects_real_angles(exact, numeric):
    diagram = _term('Z(1,1,1.0r)')

    with pytest.raises(BackendError):
        exact.interpret(diagram)

    assert abs(numeric.interpret(diagram).entries[1, 1] - np.exp(1j)) < 1e-12


def test_free_variables_cannot_be_interpreted(exact):
    with pytest.raises(UnboundVariableError):
        exact.interpret(seq(z_spider(1, 1, 'x')))


def test_wire_cap():
    diagram = seq(z_spider(3, 2, 0))

    with pytest.raises(CapacityError):
        Interpreter('float', max_wires=4).interpret(diagram)
    assert Interpreter('float', max_wires=5).interpret(diagram).shape == (4, 8)


@pytest.mark.parametrize('backend, max_wires', [('exact', 0), ('exact', 21), ('tensor', 14)])
def test_interpreter_validation(backend, max_wires):
    with pytest.raises(ValueError):
        Interpreter(backend, max_wires)


def test_equal_up_to_scalar_exact():
    b = Matrix.exact([[1, IMAG], [0, 1]])
    a = Matrix.exact([[2 * IMAG, -2], [0, 2 * IMAG]])

    assert equal_up_to_scalar(a, b) == 2 * IMAG
    assert equal_up_to_scalar(b, Matrix.exact([[1, 0], [0, 1]])) is None
    assert equal_up_to_scalar(Matrix.exact([[0, 0]]), Matrix.exact([[0, 0]])) == 1
    assert equal_up_to_scalar(Matrix.exact([[0, 1]]), Matrix.exact([[0, 0]])) is None


def test_equal_up_to_scalar_float():
    b = Matrix.numeric([[1e-3, 1], [1, 0.5j]])
    a = Matrix.numeric(np.exp(0.4j) * 3 * b.entries)

    ratio = equal_up_to_scalar(a, b)
    assert ratio is not None and abs(ratio - 3 * np.exp(0.4j)) < 1e-9
    assert equal_up_to_scalar(a, Matrix.numeric([[1, 0], [0, 1]])) is None


def test_float_scalar_is_read_off_the_largest_entry():
    b = Matrix.numeric([[1e-12, 1]])
    a = Matrix.numeric([[2e-12 + 1e-10, 2]])

    assert abs(a.entries[0, 0] / b.entries[0, 0] - 2) > 50
    assert equal_up_to_scalar(a, b, 1e-9) == pytest.approx(2)
    assert equal_up_to_scalar(a, b, 1e-11) is None


def test_equal_up_to_scalar_errors():
    with pytest.raises(ValueError):
        equal_up_to_scalar(Matrix.exact([[1, 0]]), Matrix.exact([[1], [0]]))
    with pytest.raises(BackendError):
        equal_up_to_scalar(Matrix.exact([[1]]), Matrix.numeric([[1]]))


def test_scalar_identity(exact, numeric):
    product = _term('seq(Z(1,1,pi), X(1,1,pi), Z(1,1,pi), X(1,1,pi))')

    assert is_scalar_identity(exact.interpret(product))
    assert is_scalar_identity(numeric.interpret(product))
    assert not is_scalar_identity(exact.interpret(_term('H')))
    assert equal_exact(exact.interpret(par('I', 'I')), identity_matrix(2, 'exact'))


def test_dump_and_parse(exact, numeric):
    diagram = _term('seq(Z(1,2,pi/3), par(H, X(1,1,pi/4)))')

    exact_matrix = exact.interpret(diagram)
    assert equal_exact(parse_matrix_text(dump_matrix(exact_matrix)), exact_matrix)

    float_matrix = numeric.interpret(diagram)
    assert equal_exact(parse_matrix_text(dump_matrix(float_matrix)), float_matrix, 1e-11)


def test_headerless_matrix_is_read_as_floats():
    matrix = parse_matrix_text('1 0\n0 1j\n')
    assert matrix.backend == 'float'
    assert matrix.entries[1, 1] == 1j


@pytest.mark.parametrize('text', [
    '1 0\n0\n',
    '',
    '# exact 2x2 order=8\n1/2*z^1 q\n0 1\n',
    '1 0 0\n0 1 0\n0 0 1\n',
])
def test_malformed_matrices(text):
    with pytest.raises(DiagramParseError):
        parse_matrix_text(text)


def test_exact_entries_can_be_parsed():
    matrix = parse_matrix_text('# exact 1x1 order=8\n1/2*z^1-1/2*z^3\n')
    assert matrix.entries[0, 0] == R


angles = st.builds(RationalAngle, st.integers(0, 23), st.integers(1, 6))

one_wire = st.one_of(
    st.builds(lambda a: z_spider(1, 1, a), angles),
    st.builds(lambda a: x_spider(1, 1, a), angles),
    st.sampled_from([Generator.fixed('H'), Generator.fixed('TRI'), Generator.fixed('I')]),
)

layers = st.one_of(
    st.builds(par, one_wire, one_wire),
    st.just(seq('SWAP')),
    st.builds(lambda a, b: seq(z_spider(2, 1, a), x_spider(1, 2, b)), angles, angles),
    st.builds(lambda a, b: seq(x_spider(2, 1, a), z_spider(1, 2, b)), angles, angles),
)


@given(st.lists(layers, min_size=1, max_size=6))
@settings(max_examples=100, deadline=None)
def test_backends_agree_on_rational_diagrams(layer_list):
    diagram = seq(*layer_list)

    exact_entries = Interpreter('exact').interpret(diagram).to_complex()
    float_entries = Interpreter('float').interpret(diagram).entries

    assert np.max(np.abs(exact_entries - float_entries)) <= 1e-9
