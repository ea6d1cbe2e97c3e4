"""The diagrams D, D1 and D2 and the derivation steps between them, as rule schemas over the variables a and b"""
from typing import Union
from zx_axiom_verifier.arithmetic import PI, RationalAngle
from zx_axiom_verifier.diagram import AngleExpr, Diagram, Generator, Gadgets, x_spider, z_spider, seq, par
from zx_axiom_verifier.diagram.gadgets import AngleLike
from zx_axiom_verifier.rules import RuleSchema, check_odd_prime

ALPHA, BETA = 'a', 'b'


def _angles(p: int, alpha: AngleLike, beta: AngleLike) -> 'tuple[AngleExpr, AngleExpr]':
    check_odd_prime(p)
    return AngleExpr.of(alpha), AngleExpr.of(beta)


def d_diagram(p: int, alpha: AngleLike = ALPHA, beta: AngleLike = BETA) -> Diagram:
    """0→1 diagram with interpretation (P, Q)ᵀ

    Note:
        The p states e^{i(α + kβ)} pass through H and merge into a Z spider with phase π, followed by X(pα), Z(π)
        and the scalar 2^{p/2}
    """
    alpha, beta = _angles(p, alpha, beta)

    states = par(*(seq(z_spider(0, 1, alpha + beta * k), 'H') for k in range(p)))
    body = seq(states, z_spider(p, 1, PI), x_spider(1, 1, alpha * p), z_spider(1, 1, PI))

    return par(body, Gadgets.sqrt2_power(p))


def _product_term(prefix: 'list[AngleLike]', offset: AngleLike, alpha: AngleExpr, beta: AngleExpr, p: int) -> Diagram:
    """(1, (e^{iθ0} + e^{iθ1})·∏_k (e^{i·offset} + e^{i(α + kβ)}))ᵀ for prefix = [θ0, θ1]"""
    factors = [Gadgets.sum_state([offset, alpha + beta * k]) for k in range(p)]
    return Gadgets.product_state([Gadgets.sum_state(prefix)] + factors)


def _sum_of_terms(first: Diagram, second: Diagram, scale: Diagram) -> Diagram:
    total = seq(par(first, second), Gadgets.plus())
    return seq(par(total, scale), Gadgets.times())


def d1_diagram(p: int, alpha: AngleLike = ALPHA, beta: AngleLike = BETA) -> Diagram:
    """0→1 diagram with interpretation (1, P)ᵀ, P = ½·[(1 + e^{ipα})·A + (1 - e^{ipα})·B]"""
    alpha, beta = _angles(p, alpha, beta)

    plus_term = _product_term([0, alpha * p], 0, alpha, beta, p)
    minus_term = _product_term([0, alpha * p + PI], PI, alpha, beta, p)

    return _sum_of_terms(plus_term, minus_term, Gadgets.half())


def d2_diagram(p: int, alpha: AngleLike = ALPHA, beta: AngleLike = BETA) -> Diagram:
    """0→1 diagram with interpretation (1, Q)ᵀ, Q = -½·[(1 - e^{ipα})·A + (1 + e^{ipα})·B]"""
    alpha, beta = _angles(p, alpha, beta)

    plus_term = _product_term([0, alpha * p + PI], 0, alpha, beta, p)
    minus_term = _product_term([0, alpha * p], PI, alpha, beta, p)

    return _sum_of_terms(plus_term, minus_term, Gadgets.minus_half())


def _effect(angle: Union[RationalAngle, int]) -> Generator:
    """√2·⟨0| for angle 0, √2·⟨1| for angle π"""
    return x_spider(1, 0, angle)


def supplementarity_lemma_rhs(p: int, alpha: AngleLike = ALPHA) -> Diagram:
    """0→1 diagram with interpretation (2e^{ipα}, 0)ᵀ"""
    alpha = AngleExpr.of(alpha)
    body = seq(z_spider(0, 1, alpha * p), z_spider(1, 2, 0), par('I', _effect(PI)), x_spider(1, 1, PI))
    return par(body, Gadgets.sqrt2())


def derivation_rules(p: int) -> 'list[RuleSchema]':
    """The steps linking D, D1 and D2, each an exact rule schema

    Note:
        Steps (i)-(iv) hold for all a and b. The supplementarity lemma and the first proposition fix b = 2π/p

    Raises:
        ValueError: If p is not an odd prime <= 23

    Returns:
        list[RuleSchema]: in derivation order
    """
    check_odd_prime(p)
    period = RationalAngle(2, p)
    both = (ALPHA, BETA)

    d, d1, d2 = d_diagram(p), d1_diagram(p), d2_diagram(p)
    rules = [
        RuleSchema(f'D_{p}_i', seq(d, _effect(0)), seq(d1, _effect(PI)), both, description='<0|D = <1|D1'),
        RuleSchema(f'D_{p}_ii', seq(d, _effect(PI)), seq(d2, _effect(PI)), both, description='<1|D = <1|D2'),
        RuleSchema(f'D_{p}_iii', seq(d1, _effect(0)), Gadgets.sqrt2(), both, description='<0|D1 = sqrt 2'),
        RuleSchema(f'D_{p}_iv', seq(d2, _effect(0)), Gadgets.sqrt2(), both, description='<0|D2 = sqrt 2'),
        RuleSchema(
            f'D_{p}_lemma',
            d_diagram(p, ALPHA, period),
            supplementarity_lemma_rhs(p),
            (ALPHA,),
            description='D(a, 2pi/p) = (2e^{ipa}, 0)'
        ),
        RuleSchema(
            f'D_{p}_first',
            d2_diagram(p, ALPHA, period),
            Gadgets.zero_state(),
            (ALPHA,),
            description='D2(a, 2pi/p) = (1, 0)'
        ),
    ]

    return rules
