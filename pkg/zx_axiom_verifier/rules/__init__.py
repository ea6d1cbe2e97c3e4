from zx_axiom_verifier.rules.rule_schema import RuleSchema, MODES, SIDE_CONDITIONS, RULE_A_VARIABLES
from zx_axiom_verifier.rules.catalog import load_catalog, load_rule, shipped_catalog_directory
from zx_axiom_verifier.rules.rule_a import rule_A_condition, sample_rule_a
from zx_axiom_verifier.rules.soundness import SoundnessReport, SoundnessChecker, check_soundness, sample_assignment, compare
from zx_axiom_verifier.rules.families import sup_rule, cyc_rule, check_odd_prime
from zx_axiom_verifier.rules.scaling import ScalingReport, scaled_equality_test, rational_approximations, limit_check
