from zx_axiom_verifier.cli.config import RunConfig, OUTPUT_FORMATS
from zx_axiom_verifier.cli.main import main, build_parser, parse_angle_literal
