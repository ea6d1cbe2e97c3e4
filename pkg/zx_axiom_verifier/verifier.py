import logging
import pathlib
import pandas as pd
import zx_axiom_verifier.util as util
import zx_axiom_verifier.visualization as visualization

from typing                             import Union, Sequence, Mapping
from zx_axiom_verifier.diagram          import Diagram, Angle, DiagramDocument, parse_diagram_file, format_angle
from zx_axiom_verifier.semantics        import Matrix, Interpreter, DEFAULT_TOLERANCE, DEFAULT_MAX_WIRES, MAX_WIRES_LIMIT
from zx_axiom_verifier.rules            import RuleSchema, SoundnessChecker, SoundnessReport, ScalingReport, load_catalog, sup_rule, cyc_rule, sample_assignment, scaled_equality_test
from zx_axiom_verifier.rules.soundness  import DEFAULT_SAMPLES
from zx_axiom_verifier.supplementarity  import SupToCycReport, verify_sup_to_cyc, derivation_rules
from zx_axiom_verifier.euler            import EulerEquality, FamilyMatch, RadinSadunReport, euler_solve, euler_verdict, enumerate_euler, radin_sadun_sweep

ENUMERATION_COLUMNS = ['lhs', 'rhs', 'family', 'n', 'm', 'color_swapped', 'assignment']


class ZXVerifier:
    """ZXVerifier is the Class that drives every check: diagram evaluation, rule soundness, the supplementarity chain and the Euler atlas

    Args:
        seed (int, optional): run seed, the only source of randomness. Defaults to 0.
        tolerance (float, optional): float comparison tolerance. Defaults to 1e-9.
        max_wires (int, optional): wire cap of the interpreter. Defaults to 14.

    Raises:
        ValueError: If the tolerance is not positive or max_wires is outside 1 .. 20
    """

    def __init__(self, seed: int = 0, tolerance: float = DEFAULT_TOLERANCE, max_wires: int = DEFAULT_MAX_WIRES) -> None:
        if tolerance <= 0:
            raise ValueError('tolerance must be positive')
        if not 1 <= max_wires <= MAX_WIRES_LIMIT:
            raise ValueError(f'max_wires must be between 1 and {MAX_WIRES_LIMIT}')

        self.seed = seed
        self.tolerance = tolerance
        self.max_wires = max_wires

    def evaluate(self, diagram: 'Union[Diagram, DiagramDocument, str, pathlib.Path]', backend: str = 'exact') -> Matrix:
        """Interprets a diagram, a parsed document or a diagram file

        Raises:
            DiagramParseError: If the file does not parse
            ArityMismatchError: If the diagram is ill-typed
            BackendError: If the exact backend meets a real angle

        Returns:
            Matrix: the interpretation
        """
        if isinstance(diagram, (str, pathlib.Path)):
            diagram = parse_diagram_file(diagram)
        if isinstance(diagram, DiagramDocument):
            diagram = diagram.term

        return Interpreter(backend, self.max_wires).interpret(diagram)

    def rules_for_primes(self, primes: 'Sequence[int]') -> 'list[RuleSchema]':
        """SUP_p, CYC_p and the derivation steps for each prime"""
        rules = []
        for p in primes:
            rules += [sup_rule(p), cyc_rule(p)] + derivation_rules(p)
        return rules

    def check_rules(
            self,
            rules: 'Sequence[RuleSchema]',
            exact_samples: int = DEFAULT_SAMPLES,
            float_samples: int = DEFAULT_SAMPLES
        ) -> 'list[SoundnessReport]':
        checker = SoundnessChecker(self.tolerance, self.max_wires)

        reports = []
        for index, rule in enumerate(rules):
            reports.append(checker.check(rule, exact_samples, float_samples, self.seed))
            util.progress_bar(index + 1, len(rules), suffix=rule.name)

        return reports

    def verify_axioms(
            self,
            directory: 'Union[str, pathlib.Path, None]' = None,
            exact_samples: int = DEFAULT_SAMPLES,
            float_samples: int = DEFAULT_SAMPLES,
            primes: 'Sequence[int]' = ()
        ) -> pd.DataFrame:
        """Checks the soundness of every rule of a catalog, plus the prime-indexed rules of the given primes

        Args:
            directory (str | Path, optional): catalog directory. Defaults to None, the shipped catalog.
            exact_samples (int, optional): exact samples per rule. Defaults to 200.
            float_samples (int, optional): float samples per rule. Defaults to 200.
            primes (Sequence[int], optional): primes p whose SUP_p, CYC_p and derivation steps are added. Defaults to ().

        Raises:
            EmptyCatalogError: If the directory does not exist

        Returns:
            pd.DataFrame: one row per rule, with pass counts, max deviation and the first counterexample
        """
        rules = load_catalog(directory) + self.rules_for_primes(primes)
        reports = self.check_rules(rules, exact_samples, float_samples)

        failures = [report.rule for report in reports if not report.passed]
        if failures:
            logging.warning(f'unsound rules: {", ".join(failures)}')

        return reports_frame(reports)

    def verify_sup_to_cyc(self, p: int, diagrams: bool = False) -> SupToCycReport:
        return verify_sup_to_cyc(p, seed=self.seed, tolerance=self.tolerance, diagrams=diagrams, max_wires=self.max_wires)

    def solve_euler(self, matrix: Matrix) -> 'tuple[EulerEquality, str, Union[FamilyMatch, None]]':
        return euler_solve(matrix, self.tolerance)

    def classify_euler(self, lhs: 'Sequence[Angle]', rhs: 'Sequence[Angle]') -> 'tuple[EulerEquality, str, Union[FamilyMatch, None]]':
        equality = EulerEquality(tuple(lhs), tuple(rhs))
        verdict, match = euler_verdict(equality, self.tolerance)
        return equality, verdict, match

    def enumerate_euler(self, max_denominator: int) -> pd.DataFrame:
        """Every Euler equality on the grid kπ/Q, one row each, with its family (None when unclassified)"""
        rows = []
        for equality, match in enumerate_euler(max_denominator):
            rows.append({
                'lhs': ', '.join(format_angle(angle) for angle in equality.lhs),
                'rhs': ', '.join(format_angle(angle) for angle in equality.rhs),
                'family': match.family.family_id if match else None,
                'n': match.n if match else None,
                'm': match.m if match else None,
                'color_swapped': match.color_swapped if match else None,
                'assignment': match.to_dict()['assignment'] if match else None,
            })

        return pd.DataFrame(rows, columns=ENUMERATION_COLUMNS)

    def radin_sadun(self, max_length: int, max_denominator: int) -> RadinSadunReport:
        return radin_sadun_sweep(max_length, max_denominator)

    def scale_test(
            self,
            document: 'Union[DiagramDocument, str, pathlib.Path]',
            n: int,
            k_max: int,
            assignment: 'Union[Mapping[str, Angle], None]' = None
        ) -> ScalingReport:
        """Scaled equality test on the lhs and rhs of a document

        Note:
            Variables without a value in the assignment are drawn as seeded uniform reals

        Returns:
            ScalingReport: per-k results and the first failing k
        """
        if not isinstance(document, DiagramDocument):
            document = parse_diagram_file(document)
        document.headers.setdefault('name', pathlib.Path(document.source).stem)

        rule = RuleSchema.from_document(document)
        rule.validate()

        values = dict(assignment or {})
        missing = tuple(name for name in rule.variables if name not in values)
        values.update(sample_assignment(missing, util.task_rng(self.seed, f'{rule.name}/scale', 0), 'float'))

        return scaled_equality_test(rule.lhs, rule.rhs, values, n, k_max, rule.mode, self.tolerance, self.max_wires)

    def plot_family_counts(self, enumeration: pd.DataFrame, path: 'Union[str, pathlib.Path]') -> pathlib.Path:
        return visualization.plot_family_counts(enumeration, path)

    def plot_rule_deviations(self, reports: pd.DataFrame, path: 'Union[str, pathlib.Path]') -> pathlib.Path:
        return visualization.plot_rule_deviations(reports, path)


def reports_frame(reports: 'Sequence[SoundnessReport]') -> pd.DataFrame:
    columns = ['rule', 'mode', 'exact_samples', 'exact_passed', 'float_samples', 'float_passed', 'max_deviation', 'counterexample', 'skipped', 'passed']
    return pd.DataFrame([report.to_dict() for report in reports], columns=columns)
