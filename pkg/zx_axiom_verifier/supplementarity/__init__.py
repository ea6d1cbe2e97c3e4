from zx_axiom_verifier.supplementarity.polynomial import ExpPolynomial, is_zero_value
from zx_axiom_verifier.supplementarity.formulas import D_semantics, D1_semantics, D2_semantics, P_coefficients, Q_coefficients, power_sum
from zx_axiom_verifier.supplementarity.extraction import WMatrix, extract_a1, extraction_width, w_matrix, w_closed_form
from zx_axiom_verifier.supplementarity.diagrams import d_diagram, d1_diagram, d2_diagram, derivation_rules, supplementarity_lemma_rhs
from zx_axiom_verifier.supplementarity.pipeline import SupToCycReport, StepResult, verify_sup_to_cyc, SUPPORTED_PRIMES, STEPS
