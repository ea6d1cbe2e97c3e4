import logging
import numpy as np
import pytest

from conftest import FIXTURES
from zx_axiom_verifier.error import ArityMismatchError, EmptyCatalogError
from zx_axiom_verifier.arithmetic import RationalAngle, PI, HALF_PI
from zx_axiom_verifier.diagram import z_spider, seq, parse_diagram_text, substitute
from zx_axiom_verifier.semantics import equal_exact
from zx_axiom_verifier.rules import (
    RuleSchema,
    RULE_A_VARIABLES,
    load_catalog,
    load_rule,
    check_soundness,
    sample_assignment,
    rule_A_condition,
    sample_rule_a,
    sup_rule,
    cyc_rule,
    check_odd_prime,
)

SHIPPED_RULES = ['A', 'B1', 'B2', 'BW', 'C', 'E', 'EU', 'H', 'K', 'S1', 'S2', 'S3', 'SUP']


def test_shipped_catalog_loads_sorted_by_file_name():
    rules = load_catalog()
    assert [rule.name for rule in rules] == SHIPPED_RULES
    assert next(rule for rule in rules if rule.name == 'K').mode == 'scalar'
    assert next(rule for rule in rules if rule.name == 'A').side_condition == 'ruleA'


@pytest.mark.parametrize('rule', load_catalog(), ids=lambda rule: rule.name)
def test_shipped_rules_are_sound(rule):
    report = check_soundness(rule, exact_samples=20, float_samples=20)

    assert report.passed, report.counterexample
    assert report.exact_passed == report.exact_samples == 20
    assert report.float_passed == report.float_samples == 20
    assert report.max_deviation <= 1e-9


@pytest.mark.slow
@pytest.mark.parametrize('rule', load_catalog(), ids=lambda rule: rule.name)
def test_shipped_rules_pass_two_hundred_samples(rule):
    report = check_soundness(rule, exact_samples=200, float_samples=200)
    assert (report.exact_passed, report.float_passed) == (200, 200)


def test_corrupted_rule_fails_with_a_counterexample(caplog):
    rule = load_rule(FIXTURES / 'corrupted_s1.rule')

    with caplog.at_level(logging.WARNING):
        report = check_soundness(rule, exact_samples=10, float_samples=10)

    assert not report.passed
    assert report.counterexample['backend'] in ('exact', 'float')
    assert set(report.counterexample) == {'backend', 'a', 'b'}
    assert report.exact_passed < 10 or report.float_passed < 10
    assert 'S1_corrupted' in caplog.text


def test_soundness_is_deterministic_in_the_seed():
    rule = load_rule(FIXTURES / 'corrupted_s1.rule')

    first = check_soundness(rule, 8, 8, seed=7).to_dict()
    second = check_soundness(rule, 8, 8, seed=7).to_dict()

    assert first == second


def test_rules_with_real_constants_skip_exact_samples():
    document = parse_diagram_text('name: real\nvars: a\nlhs: seq(Z(1,1,a), Z(1,1,0.5r))\nrhs: Z(1,1,a + 0.5r)')
    report = check_soundness(RuleSchema.from_document(document), 5, 5)

    assert report.passed
    assert report.exact_samples == 0
    assert report.skipped == ['exact: rule has real constants']


@pytest.mark.parametrize('p', [3, 5, 7, pytest.param(11, marks=pytest.mark.slow)])
def test_supplementarity_rules_are_sound(p):
    report = check_soundness(sup_rule(p), 5, 5)
    assert report.passed
    assert sup_rule(p).validate() == (0, 1)


@pytest.mark.parametrize('p', [3, 5, 7, 11])
def test_cyclotomic_rules_are_sound(p):
    rule = cyc_rule(p)
    assert rule.name == f'CYC_{p}'
    assert check_soundness(rule, 1, 1).passed


@pytest.mark.parametrize('p', [2, 9, 1, -3, 29])
def test_check_odd_prime_rejects(p):
    with pytest.raises(ValueError):
        check_odd_prime(p)


def test_rule_a_condition():
    third = RationalAngle(1, 3)

    assert rule_A_condition(third, third, third, PI, PI, PI)
    assert not rule_A_condition(third, third, RationalAngle(0), PI, PI, PI)
    assert rule_A_condition(third, PI - third, HALF_PI, RationalAngle(1, 4), RationalAngle(1, 4), RationalAngle(5, 7))
    assert rule_A_condition(1.0, 1.0, 1.0, 0.3, 0.3, 0.3)
    assert not rule_A_condition(1.0, 1.0, 1.1, 0.3, 0.3, 0.3)


@pytest.mark.parametrize('gamma, holds', [(RationalAngle(1, 3), True), (RationalAngle(0), False)])
def test_rule_a_sides_agree_only_under_the_side_condition(exact, gamma, holds):
    rule = next(rule for rule in load_catalog() if rule.name == 'A')
    third = RationalAngle(1, 3)
    assignment = dict(zip(RULE_A_VARIABLES, (third, third, gamma, PI, PI, PI)))

    lhs, rhs = (exact.interpret(substitute(side, assignment)) for side in (rule.lhs, rule.rhs))

    assert rule_A_condition(*assignment.values()) == holds
    assert equal_exact(lhs, rhs) == holds

@pytest.mark.parametrize('backend', ['exact', 'float'])
def test_rule_a_samples_satisfy_the_side_condition(backend):
    rng = np.random.default_rng(99)

    for _ in range(50):
        values = sample_rule_a(rng, backend)
        assert set(values) == set(RULE_A_VARIABLES)
        assert rule_A_condition(*(values[name] for name in RULE_A_VARIABLES), tolerance=1e-9)


def test_sample_assignment(rng):
    exact = sample_assignment(('a', 'b', 'c'), rng, 'exact')
    assert all(isinstance(value, RationalAngle) and value.denominator <= 16 for value in exact.values())

    real = sample_assignment(('a', 'b'), rng, 'float')
    assert all(0 <= value < 2 * np.pi for value in real.values())


def test_rule_schema_validation():
    with pytest.raises(ValueError):
        RuleSchema('r', seq('I'), seq('I'), mode='fuzzy')
    with pytest.raises(ValueError):
        RuleSchema('r', seq('I'), seq('I'), side_condition='ruleB')
    with pytest.raises(ArityMismatchError):
        RuleSchema('r', seq(z_spider(1, 1, 0)), seq(z_spider(1, 2, 0))).validate()
    with pytest.raises(ValueError):
        RuleSchema('r', seq(z_spider(1, 1, 'x')), seq('I')).validate()
    with pytest.raises(ValueError):
        RuleSchema('r', seq(z_spider(1, 1, 'x')), seq('I'), ('x',), side_condition='ruleA').validate()


def test_rule_documents_need_name_and_both_sides():
    with pytest.raises(ValueError, match='name'):
        RuleSchema.from_document(parse_diagram_text('lhs: I\nrhs: I'))
    with pytest.raises(ValueError, match='rhs'):
        RuleSchema.from_document(parse_diagram_text('name: r\nlhs: I'))


def test_empty_catalog_directory_warns(tmp_path, caplog):
    with caplog.at_level(logging.WARNING):
        assert load_catalog(tmp_path) == []
    assert 'has no .rule files' in caplog.text


def test_missing_catalog_directory():
    with pytest.raises(EmptyCatalogError):
        load_catalog(FIXTURES / 'no_such_catalog')
