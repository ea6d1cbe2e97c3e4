from zx_axiom_verifier.euler.equality import EulerEquality, euler_compose, alternating_diagram, ORDERS
from zx_axiom_verifier.euler.families import EulerFamily, FAMILIES, PARITIES, family_instance, get_family
from zx_axiom_verifier.euler.classifier import FamilyMatch, classify_euler, euler_verdict, angles_equal, VERDICTS
from zx_axiom_verifier.euler.solver import two_spider_solve, euler_decompose, euler_solve, snap_angle
from zx_axiom_verifier.euler.enumeration import enumerate_euler, angle_grid, common_order, MAX_EULER_DENOMINATOR
from zx_axiom_verifier.euler.radin_sadun import (
    RadinSadunReport,
    radin_sadun_check,
    radin_sadun_sweep,
    conclusion_holds,
    sweep_grid,
    MAX_SWEEP_LENGTH,
    MAX_SWEEP_DENOMINATOR,
    NOT_IDENTITY,
    CONCLUSION_HOLDS,
    COUNTEREXAMPLE,
)
