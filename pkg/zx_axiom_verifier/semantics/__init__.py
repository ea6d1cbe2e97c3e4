from zx_axiom_verifier.semantics.matrix import Matrix, equal_exact, equal_up_to_scalar, is_scalar_identity, identity_matrix, dump_matrix, parse_matrix_text, BACKENDS, DEFAULT_TOLERANCE
from zx_axiom_verifier.semantics.interpreter import Interpreter, interpret, working_order, DEFAULT_MAX_WIRES, MAX_WIRES_LIMIT
