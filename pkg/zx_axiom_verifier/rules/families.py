"""The prime-indexed rule families: supplementarity SUP_p and the cyclotomic rule CYC_p"""
import sympy

from zx_axiom_verifier.arithmetic import RationalAngle
from zx_axiom_verifier.diagram import AngleExpr, Gadgets, x_spider, z_spider, seq, par
from zx_axiom_verifier.rules.rule_schema import RuleSchema

MAX_FAMILY_PRIME = 23


def check_odd_prime(p: int, maximum: int = MAX_FAMILY_PRIME) -> None:
    """Raises ValueError unless p is an odd prime no larger than maximum"""
    if not isinstance(p, int) or p % 2 == 0 or not sympy.isprime(p):
        raise ValueError(f'p must be an odd prime, found {p}')
    if p > maximum:
        raise ValueError(f'p must be at most {maximum}, found {p}')


def sup_rule(p: int, variable: str = 'a') -> RuleSchema:
    """SUP_p: the p states e^{i(a + 2kπ/p)} merged by an X spider equal the state e^{ipa}, up to the scalar 2^{(1-p)/2}

    Note:
        With X = e^{ia}, ∏(1 + Xζ^k) = 1 + X^p and ∏(1 - Xζ^k) = 1 - X^p for p odd, which gives the right-hand side
    """
    check_odd_prime(p)
    angle = AngleExpr.variable(variable)

    states = par(*(z_spider(0, 1, angle + RationalAngle(2 * k, p)) for k in range(p)))
    lhs = seq(states, x_spider(p, 1, 0))
    rhs = par(z_spider(0, 1, angle * p), Gadgets.sqrt2_power(1 - p))

    return RuleSchema(f'SUP_{p}', lhs, rhs, (variable,), mode='exact', description=f'supplementarity for p = {p}')


def cyc_rule(p: int) -> RuleSchema:
    """CYC_p: the sum 1 + ζ_p + ... + ζ_p^{p-1}, encoded with the triangle-based adder, is the state (1, 0)"""
    check_odd_prime(p)

    lhs = Gadgets.sum_state([RationalAngle(2 * k, p) for k in range(p)])

    return RuleSchema(f'CYC_{p}', lhs, Gadgets.zero_state(), (), mode='exact', description=f'cyclotomic rule for p = {p}')
