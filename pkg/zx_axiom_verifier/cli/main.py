"""Command line front end, `zx-verify`

Exit codes: 0 success, 1 verification failure, 2 parse error or missing catalog, 3 validation error,
4 backend or capacity error.
"""
import sys
import logging
import argparse
import pathlib
import pandas as pd

from typing import Any, Callable, NamedTuple, Sequence, Union
from zx_axiom_verifier import __version__
from zx_axiom_verifier.util import to_json
from zx_axiom_verifier.error import DiagramParseError, EmptyCatalogError, ArityMismatchError, UnboundVariableError, BackendError, CapacityError
from zx_axiom_verifier.cli.config import RunConfig
from zx_axiom_verifier.verifier import ZXVerifier
from zx_axiom_verifier.diagram import Angle, parse_angle, parse_diagram_file, validate
from zx_axiom_verifier.semantics import dump_matrix, parse_matrix_text, BACKENDS
from zx_axiom_verifier.rules.soundness import DEFAULT_SAMPLES
from zx_axiom_verifier.supplementarity import SUPPORTED_PRIMES

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_BACKEND = 4

EXIT_CODES = [
    ((DiagramParseError, EmptyCatalogError, FileNotFoundError), EXIT_PARSE),
    ((ArityMismatchError, UnboundVariableError, ValueError), EXIT_VALIDATION),
    ((BackendError, CapacityError), EXIT_BACKEND),
]


class Outcome(NamedTuple):
    payload: 'dict[str, Any]'
    text: str
    passed: bool = True


def parse_angle_literal(text: str) -> Angle:
    """A concrete angle such as `pi/2`, `3*pi/4` or `0.7r`

    Raises:
        DiagramParseError: If the literal does not parse
        ValueError: If the literal mentions a variable
    """
    expression = parse_angle(text.strip())
    if not expression.is_concrete():
        raise ValueError(f'angle literal must not contain variables, found {text!r}')
    return expression.constant


def parse_angle_triple(text: str) -> 'tuple[Angle, Angle, Angle]':
    angles = tuple(parse_angle_literal(part) for part in text.split(','))
    if len(angles) != 3:
        raise ValueError(f'an Euler triple must have exactly three comma separated angles, found {text!r}')
    return angles


def parse_assignment(items: 'Sequence[str]') -> 'dict[str, Angle]':
    assignment = {}
    for item in items:
        name, separator, value = item.partition('=')
        if not separator or not name.strip():
            raise ValueError(f'assignments must be written as NAME=ANGLE, found {item!r}')
        assignment[name.strip()] = parse_angle_literal(value)
    return assignment


def _frame_text(df: pd.DataFrame) -> str:
    return df.to_string(index=False) if not df.empty else '(no rows)'


def cmd_eval(args: argparse.Namespace, verifier: ZXVerifier) -> Outcome:
    document = parse_diagram_file(args.file)
    inputs, outputs = validate(document.term)
    matrix = verifier.evaluate(document, args.backend)

    dump = dump_matrix(matrix)
    payload = {'file': str(args.file), 'backend': args.backend, 'inputs': inputs, 'outputs': outputs, 'matrix': dump.splitlines()}
    return Outcome(payload, f'arity: {inputs} -> {outputs}\n{dump}')


def cmd_verify_axioms(args: argparse.Namespace, verifier: ZXVerifier) -> Outcome:
    reports = verifier.verify_axioms(args.catalog, args.samples, args.samples, args.p or ())

    if args.plot and not reports.empty:
        verifier.plot_rule_deviations(reports, args.plot)

    passed = bool(reports['passed'].all()) if not reports.empty else True
    payload = {'rules': reports.to_dict(orient='records'), 'passed': passed}
    text = _frame_text(reports[['rule', 'mode', 'exact_passed', 'float_passed', 'max_deviation', 'passed']])

    failures = reports[~reports['passed']] if not reports.empty else reports
    for _, row in failures.iterrows():
        text += f'\ncounterexample for {row["rule"]}: {row["counterexample"]}'

    return Outcome(payload, text, passed)


def cmd_sup_to_cyc(args: argparse.Namespace, verifier: ZXVerifier) -> Outcome:
    report = verifier.verify_sup_to_cyc(args.p, diagrams=args.diagrams)

    lines = [f'p = {report.p}, extraction width 2^{report.extraction_width}']
    for step in report.steps:
        lines.append(f'  {step.name:<20} {"pass" if step.passed else "FAIL"} ({step.checked} checks){"  " + step.detail if step.detail else ""}')
    if report.diagram_check is not None:
        lines.append(f'  {"diagrams":<20} {"pass" if report.diagram_check else "FAIL"}')

    return Outcome(report.to_dict(), '\n'.join(lines), report.passed)


def _euler_outcome(equality: Any, verdict: str, match: Any) -> Outcome:
    payload = {
        'lhs': [str(angle) for angle in equality.lhs],
        'rhs': [str(angle) for angle in equality.rhs],
        'equality': str(equality),
        'verdict': verdict,
        'match': match.to_dict() if match else None,
    }
    text = f'{equality}\nverdict: {verdict}' + (f'\nfamily: {match}' if match else '')
    return Outcome(payload, text, verdict != 'completeness-violation')


def cmd_euler_solve(args: argparse.Namespace, verifier: ZXVerifier) -> Outcome:
    path = pathlib.Path(args.matrix)
    matrix = parse_matrix_text(path.read_text(encoding='utf-8'), str(path))
    return _euler_outcome(*verifier.solve_euler(matrix))


def cmd_euler_classify(args: argparse.Namespace, verifier: ZXVerifier) -> Outcome:
    equality, verdict, match = verifier.classify_euler(parse_angle_triple(args.lhs), parse_angle_triple(args.rhs))
    return _euler_outcome(equality, verdict, match)


def cmd_euler_enumerate(args: argparse.Namespace, verifier: ZXVerifier) -> Outcome:
    table = verifier.enumerate_euler(args.max_den)

    if args.plot:
        verifier.plot_family_counts(table, args.plot)

    unclassified = int(table['family'].isna().sum())
    payload = {'max_denominator': args.max_den, 'equalities': table.to_dict(orient='records'), 'unclassified': unclassified}
    text = f'{_frame_text(table)}\n{len(table)} equalities, {unclassified} unclassified'
    return Outcome(payload, text, unclassified == 0)


def cmd_radin_sadun(args: argparse.Namespace, verifier: ZXVerifier) -> Outcome:
    report = verifier.radin_sadun(args.len, args.max_den)

    lines = [f'{report.sequences} sequences, {report.identity_instances} scalar identities']
    lines += [f'  length {length}: {count}' for length, count in report.by_length.items()]
    lines += [f'  counterexample: {", ".join(sequence)}' for sequence in report.counterexamples]

    return Outcome(report.to_dict(), '\n'.join(lines), report.passed)


def cmd_scale_test(args: argparse.Namespace, verifier: ZXVerifier) -> Outcome:
    report = verifier.scale_test(args.file, args.n, args.kmax, parse_assignment(args.assign))

    lines = [f'k = {k}: {"pass" if report.results[k] else "FAIL"}' for k in report.tested]
    lines.append('passed' if report.passed else f'first failure at k = {report.first_failure}')

    return Outcome(report.to_dict(), '\n'.join(lines), report.passed)


def _add_run_options(parser: argparse.ArgumentParser, suppress: bool = False) -> argparse.ArgumentParser:
    """The run options, accepted before and after every subcommand

    Note:
        Subcommand copies default to SUPPRESS so that a flag given only before the subcommand is not reset
    """
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument('--seed', type=int, default=default(None), help='run seed (env ZXV_SEED, default 0)')
    parser.add_argument('--tol', dest='tolerance', type=float, default=default(None), help='float tolerance (env ZXV_TOLERANCE, default 1e-9)')
    parser.add_argument('--max-wires', type=int, default=default(None), help='wire cap of the interpreter (env ZXV_MAX_WIRES, default 14)')
    parser.add_argument('--json', action='store_true', default=default(False), help='machine readable output')
    parser.add_argument('-v', '--verbose', action='count', default=default(0), help='-v for info, -vv for debug logging')
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='zx-verify', description='Semantic verification of ZX-calculus rules and Euler equalities')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    _add_run_options(parser)

    run_options = [_add_run_options(argparse.ArgumentParser(add_help=False), suppress=True)]

    commands = parser.add_subparsers(dest='command', required=True)

    evaluate = commands.add_parser('eval', parents=run_options, help='interpret a diagram file')
    evaluate.add_argument('file', type=pathlib.Path)
    evaluate.add_argument('--backend', choices=BACKENDS, default='exact')
    evaluate.set_defaults(handler=cmd_eval)

    axioms = commands.add_parser('verify-axioms', parents=run_options, help='sample every rule of a catalog on both backends')
    axioms.add_argument('--catalog', type=pathlib.Path, default=None, help='catalog directory, default the shipped one')
    axioms.add_argument('--samples', type=int, default=DEFAULT_SAMPLES, help='samples per backend and rule')
    axioms.add_argument('--p', type=int, action='append', help='also check SUP_p, CYC_p and the derivation steps for p')
    axioms.add_argument('--plot', type=pathlib.Path, default=None, help='save a chart of the deviations')
    axioms.set_defaults(handler=cmd_verify_axioms)

    sup = commands.add_parser('sup-to-cyc', parents=run_options, help='run the supplementarity to cyclotomic chain for a prime')
    sup.add_argument('--p', type=int, required=True, help=f'one of {SUPPORTED_PRIMES}')
    sup.add_argument('--diagrams', action='store_true', help='cross-check the D, D1 and D2 diagrams')
    sup.set_defaults(handler=cmd_sup_to_cyc)

    euler = commands.add_parser('euler', parents=run_options, help='Euler equalities')
    euler_commands = euler.add_subparsers(dest='euler_command', required=True)

    solve = euler_commands.add_parser('solve', parents=run_options, help='both Euler decompositions of a 2x2 matrix file')
    solve.add_argument('--matrix', type=pathlib.Path, required=True)
    solve.set_defaults(handler=cmd_euler_solve)

    classify = euler_commands.add_parser('classify', parents=run_options, help='verdict on Z(a1)X(a2)Z(a3) = X(b1)Z(b2)X(b3)')
    classify.add_argument('--lhs', required=True, help='a1,a2,a3')
    classify.add_argument('--rhs', required=True, help='b1,b2,b3')
    classify.set_defaults(handler=cmd_euler_classify)

    enumerate_ = euler_commands.add_parser('enumerate', parents=run_options, help='every Euler equality with angles k*pi/q, q <= Q')
    enumerate_.add_argument('--max-den', type=int, required=True)
    enumerate_.add_argument('--plot', type=pathlib.Path, default=None, help='save a chart of the family counts')
    enumerate_.set_defaults(handler=cmd_euler_enumerate)

    radin_sadun = commands.add_parser('radin-sadun', parents=run_options, help='sweep alternating products equal to the identity up to scalar')
    radin_sadun.add_argument('--len', type=int, required=True)
    radin_sadun.add_argument('--max-den', type=int, required=True)
    radin_sadun.set_defaults(handler=cmd_radin_sadun)

    scale = commands.add_parser('scale-test', parents=run_options, help='scaled equality test on the lhs and rhs of a file')
    scale.add_argument('--file', type=pathlib.Path, required=True)
    scale.add_argument('--n', type=int, required=True)
    scale.add_argument('--kmax', type=int, required=True)
    scale.add_argument('--assign', action='append', default=[], metavar='NAME=ANGLE', help='value of a variable, random otherwise')
    scale.set_defaults(handler=cmd_scale_test)

    return parser


def _exit_code(error: Exception) -> int:
    return next(code for errors, code in EXIT_CODES if isinstance(error, errors))


def main(argv: 'Union[Sequence[str], None]' = None) -> int:
    """Runs one subcommand and returns its exit code"""
    args = build_parser().parse_args(argv)
    handler: 'Callable[[argparse.Namespace, ZXVerifier], Outcome]' = args.handler

    try:
        config = RunConfig.resolve(args.command, vars(args))
        logging.basicConfig(level=config.log_level, format='%(levelname)s: %(message)s', stream=sys.stderr, force=True)

        verifier = ZXVerifier(config.seed, config.tolerance, config.max_wires)
        outcome = handler(args, verifier)
    except tuple(error for errors, _ in EXIT_CODES for error in errors) as error:
        print(f'error: {error}', file=sys.stderr)
        return _exit_code(error)

    print(to_json(outcome.payload) if config.json else outcome.text)

    return EXIT_OK if outcome.passed else EXIT_FAILURE
