from zx_axiom_verifier.diagram.angle_expr import AngleExpr, Angle, add_angles, scale_angle, angle_radians, format_angle
from zx_axiom_verifier.diagram.generator import Generator, z_spider, x_spider, GENERATOR_KINDS
from zx_axiom_verifier.diagram.diagram import Diagram, Leaf, Seq, Par, seq, par, tensor_power, validate, substitute, scale_variables
from zx_axiom_verifier.diagram.gadgets import Gadgets
from zx_axiom_verifier.diagram.parser import DiagramParser, DiagramDocument, parse_diagram_text, parse_diagram_file, parse_angle
