import json
import logging
import shutil
import pytest

from conftest import FIXTURES, SINGLE_POINT_X
from zx_axiom_verifier.cli import main, RunConfig
from zx_axiom_verifier.diagram import parse_diagram_text
from zx_axiom_verifier.semantics import Interpreter, dump_matrix


@pytest.fixture(autouse=True)
def restore_logging():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, '--json', *argv)
    return code, json.loads(out)


def test_eval_prints_arity_and_the_canonical_dump(capsys):
    code, out, _ = run(capsys, 'eval', str(FIXTURES / 'hadamard.zx'))

    assert code == 0
    assert out.splitlines() == [
        'arity: 1 -> 1',
        '# exact 2x2 order=8',
        '1/2*z^1-1/2*z^3 1/2*z^1-1/2*z^3',
        '1/2*z^1-1/2*z^3 -1/2*z^1+1/2*z^3',
    ]


def test_eval_json(capsys):
    code, payload = run_json(capsys, 'eval', str(FIXTURES / 'hadamard.zx'))

    assert code == 0
    assert payload['schema'] == 1
    assert (payload['inputs'], payload['outputs'], payload['backend']) == (1, 1, 'exact')
    assert payload['matrix'][0] == '# exact 2x2 order=8'


@pytest.mark.parametrize('fixture, argv, expected', [
    ('unbalanced.zx', [], 2),
    ('missing.zx', [], 2),
    ('arity_mismatch.zx', [], 3),
    ('real_angle.zx', [], 4),
    ('real_angle.zx', ['--backend', 'float'], 0),
])
def test_eval_exit_codes(capsys, fixture, argv, expected):
    code, _, err = run(capsys, 'eval', str(FIXTURES / fixture), *argv)

    assert code == expected
    if expected:
        assert err.startswith('error: ')


def test_parse_errors_report_the_location(capsys):
    _, _, err = run(capsys, 'eval', str(FIXTURES / 'unbalanced.zx'))
    assert 'unbalanced.zx:' in err


def test_wire_cap_flag(capsys):
    assert run(capsys, '--max-wires', '1', 'eval', str(FIXTURES / 'hadamard.zx'))[0] == 4
    assert run(capsys, '--max-wires', '21', 'eval', str(FIXTURES / 'hadamard.zx'))[0] == 3


def test_verify_axioms_on_the_shipped_catalog(capsys):
    code, payload = run_json(capsys, 'verify-axioms', '--samples', '5')

    assert code == 0
    assert payload['passed'] is True
    assert len(payload['rules']) == 13


def test_verify_axioms_reports_a_corrupted_rule(capsys, tmp_path):
    shutil.copy(FIXTURES / 'corrupted_s1.rule', tmp_path)

    code, out, err = run(capsys, 'verify-axioms', '--catalog', str(tmp_path), '--samples', '5')

    assert code == 1
    assert 'counterexample for S1_corrupted' in out
    assert 'S1_corrupted' in err


def test_verify_axioms_on_an_empty_catalog(capsys, tmp_path):
    code, out, _ = run(capsys, 'verify-axioms', '--catalog', str(tmp_path))

    assert code == 0
    assert '(no rows)' in out


def test_verify_axioms_on_a_missing_catalog(capsys, tmp_path):
    assert run(capsys, 'verify-axioms', '--catalog', str(tmp_path / 'nowhere'))[0] == 2


def test_verify_axioms_with_a_prime_and_a_plot(capsys, tmp_path):
    plot = tmp_path / 'deviations.png'
    code, payload = run_json(capsys, 'verify-axioms', '--samples', '2', '--p', '3', '--plot', str(plot))

    assert code == 0
    assert {'SUP_3', 'CYC_3'} <= {row['rule'] for row in payload['rules']}
    assert plot.exists()


def test_sup_to_cyc(capsys):
    code, payload = run_json(capsys, 'sup-to-cyc', '--p', '11')

    assert code == 0
    assert payload['passed'] is True
    assert payload['extraction_width'] == 5


def test_sup_to_cyc_rejects_unsupported_primes(capsys):
    assert run(capsys, 'sup-to-cyc', '--p', '17')[0] == 3


def test_euler_classify(capsys):
    code, payload = run_json(capsys, 'euler', 'classify', '--lhs', '0,1.0r,0.7r', '--rhs', '1.0r,0.7r,0')

    assert code == 0
    assert payload['verdict'] == 'classified'
    assert payload['match']['family'] == 1


@pytest.mark.parametrize('lhs, rhs, verdict', [
    ('pi/3,pi/3,pi/3', 'pi/3,pi/3,pi/3', 'not-equal'),
    ('pi/2,pi/2,pi/2', 'pi/2,pi/2,pi/2', 'classified'),
])
def test_euler_classify_verdicts(capsys, lhs, rhs, verdict):
    code, out, _ = run(capsys, 'euler', 'classify', '--lhs', lhs, '--rhs', rhs)

    assert code == 0
    assert f'verdict: {verdict}' in out


@pytest.mark.parametrize('lhs', ['pi,pi', 'x,0,0'])
def test_euler_classify_rejects_bad_triples(capsys, lhs):
    assert run(capsys, 'euler', 'classify', '--lhs', lhs, '--rhs', '0,0,0')[0] == 3


def test_euler_solve(capsys, tmp_path):
    path = tmp_path / 'hadamard.mat'
    path.write_text(dump_matrix(Interpreter('exact').interpret(parse_diagram_text('H').term)), encoding='utf-8')

    code, payload = run_json(capsys, 'euler', 'solve', '--matrix', str(path))

    assert code == 0
    assert payload['verdict'] == 'classified'


def test_euler_solve_rejects_larger_matrices(capsys, tmp_path):
    path = tmp_path / 'swap.mat'
    path.write_text('1 0 0 0\n0 0 1 0\n0 1 0 0\n0 0 0 1\n', encoding='utf-8')

    assert run(capsys, 'euler', 'solve', '--matrix', str(path))[0] == 3


def test_euler_enumerate(capsys, tmp_path):
    plot = tmp_path / 'families.png'
    code, payload = run_json(capsys, 'euler', 'enumerate', '--max-den', '2', '--plot', str(plot))

    assert code == 0
    assert payload['unclassified'] == 0
    assert payload['equalities']
    assert plot.exists()


def test_euler_enumerate_capacity(capsys):
    assert run(capsys, 'euler', 'enumerate', '--max-den', '13')[0] == 4


def test_radin_sadun(capsys):
    code, payload = run_json(capsys, 'radin-sadun', '--len', '2', '--max-den', '4')

    assert code == 0
    assert payload['by_length'] == {'1': 1, '2': 1}
    assert payload['counterexamples'] == []


def test_radin_sadun_capacity(capsys):
    assert run(capsys, 'radin-sadun', '--len', '6', '--max-den', '4')[0] == 4


def test_scale_test_finds_the_first_failure(capsys):
    code, out, _ = run(capsys, 'scale-test', '--file', str(FIXTURES / 'single_point.zx'), '--n', '2', '--kmax', '9', '--assign', f'x={SINGLE_POINT_X!r}r')

    assert code == 1
    assert out.splitlines()[0] == 'k = 1: pass'
    assert out.splitlines()[-1] == 'first failure at k = 3'


def test_scale_test_rejects_malformed_assignments(capsys):
    assert run(capsys, 'scale-test', '--file', str(FIXTURES / 'single_point.zx'), '--n', '2', '--kmax', '5', '--assign', 'x')[0] == 3


def test_json_output_is_byte_identical_across_runs(capsys):
    argv = ['--seed', '3', 'verify-axioms', '--samples', '3']

    first = run(capsys, '--json', *argv)[1]
    second = run(capsys, '--json', *argv)[1]

    assert first == second


@pytest.mark.parametrize('argv', [
    ['euler', 'enumerate', '--max-den', '1', '--json'],
    ['sup-to-cyc', '--p', '3', '--json'],
    ['eval', str(FIXTURES / 'hadamard.zx'), '--json', '--seed', '4', '-v'],
])
def test_run_options_after_the_subcommand(capsys, argv):
    code, out, _ = run(capsys, *argv)

    assert code == 0
    assert json.loads(out)['schema'] == 1


def test_run_options_on_both_sides_of_the_subcommand(capsys):
    assert run(capsys, 'eval', str(FIXTURES / 'hadamard.zx'), '--max-wires', '1')[0] == 4
    assert run(capsys, '--json', 'eval', str(FIXTURES / 'hadamard.zx'), '--max-wires', '14')[0] == 0

    first = run(capsys, '--seed', '3', 'verify-axioms', '--samples', '2', '--json')[1]
    second = run(capsys, 'verify-axioms', '--samples', '2', '--seed', '3', '--json')[1]
    assert first == second


def test_run_config_precedence():
    environ = {'ZXV_TOLERANCE': '1e-6', 'ZXV_SEED': '11', 'ZXV_MAX_WIRES': '8'}

    config = RunConfig.resolve('eval', {'tolerance': 1e-3, 'max_wires': None, 'seed': None, 'json': True}, environ)

    assert config.tolerance == 1e-3
    assert config.seed == 11
    assert config.max_wires == 8
    assert config.json


def test_run_config_defaults():
    config = RunConfig.resolve('eval', {}, {})
    assert (config.seed, config.tolerance, config.max_wires, config.output_format) == (0, 1e-9, 14, 'text')


@pytest.mark.parametrize('environ', [{'ZXV_MAX_WIRES': 'many'}, {'ZXV_TOLERANCE': '-1'}, {'ZXV_MAX_WIRES': '30'}])
def test_run_config_rejects_bad_environment(environ):
    with pytest.raises(ValueError):
        RunConfig.resolve('eval', {}, environ)


def test_bad_environment_exits_with_a_validation_error(capsys, monkeypatch):
    monkeypatch.setenv('ZXV_TOLERANCE', 'tiny')
    assert run(capsys, 'eval', str(FIXTURES / 'hadamard.zx'))[0] == 3
