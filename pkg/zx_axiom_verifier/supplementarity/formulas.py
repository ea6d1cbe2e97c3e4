"""Interpretations of the diagrams D, D1 and D2 of the supplementarity-to-cyclotomic derivation

With X = e^{iα}, ζ = e^{iβ}, A = ∏_{k<p} (ζ^k X + 1) and B = ∏_{k<p} (ζ^k X - 1):

    ⟦D(α, β)⟧  = (P, Q)ᵀ
    ⟦D1(α, β)⟧ = (1, P)ᵀ
    ⟦D2(α, β)⟧ = (1, Q)ᵀ

    P = ½·[(1 + X^p)·A + (1 - X^p)·B]
    Q = -½·[(1 - X^p)·A + (1 + X^p)·B]
"""
import numpy as np

from fractions import Fraction
from typing    import Union
from zx_axiom_verifier.arithmetic import Cyclotomic, RationalAngle, root_of_unity
from zx_axiom_verifier.diagram import Angle, angle_radians, add_angles, scale_angle
from zx_axiom_verifier.rules import check_odd_prime
from zx_axiom_verifier.supplementarity.polynomial import ExpPolynomial, Coefficient

HALF = Fraction(1, 2)


def _is_exact(*angles: Angle) -> bool:
    return all(isinstance(angle, RationalAngle) for angle in angles)


def _phase(angle: Angle, exact: bool) -> Coefficient:
    if exact:
        return root_of_unity(angle)
    return complex(np.exp(1j * angle_radians(angle)))


def _products(p: int, alpha: Angle, beta: Angle) -> 'tuple[Coefficient, Coefficient, Coefficient, bool]':
    """(A, B, e^{ipα}) evaluated at the given angles, and whether they are exact"""
    check_odd_prime(p)
    exact = _is_exact(alpha, beta)

    one = Cyclotomic.one() if exact else 1 + 0j
    plus_product, minus_product = one, one
    for k in range(p):
        phase = _phase(add_angles(alpha, scale_angle(beta, k)), exact)
        plus_product = plus_product * (phase + 1)
        minus_product = minus_product * (phase - 1)

    return plus_product, minus_product, _phase(scale_angle(alpha, p), exact), exact


def _half(value: Coefficient, exact: bool) -> Coefficient:
    return value * HALF if exact else value / 2


def D_semantics(p: int, alpha: Angle, beta: Angle) -> 'tuple[Coefficient, Coefficient]':
    """The 2-vector ⟦D(α, β)⟧ = (P, Q)ᵀ, exact when α and β are rational

    Raises:
        ValueError: If p is not an odd prime <= 23
    """
    plus_product, minus_product, y, exact = _products(p, alpha, beta)

    first = _half((1 + y) * plus_product + (1 - y) * minus_product, exact)
    second = _half(-((1 - y) * plus_product) - (1 + y) * minus_product, exact)

    return first, second


def D1_semantics(p: int, alpha: Angle, beta: Angle) -> 'tuple[Coefficient, Coefficient]':
    """(1, P)ᵀ"""
    first, _ = D_semantics(p, alpha, beta)
    return (Cyclotomic.one() if isinstance(first, Cyclotomic) else 1 + 0j), first


def D2_semantics(p: int, alpha: Angle, beta: Angle) -> 'tuple[Coefficient, Coefficient]':
    """(1, Q)ᵀ"""
    _, second = D_semantics(p, alpha, beta)
    return (Cyclotomic.one() if isinstance(second, Cyclotomic) else 1 + 0j), second


def _factor_polynomials(p: int, beta: Angle) -> 'tuple[ExpPolynomial, ExpPolynomial, ExpPolynomial, bool]':
    """A(X), B(X) and X^p as polynomials in X = e^{iα}"""
    check_odd_prime(p)
    exact = _is_exact(beta)
    one = Cyclotomic.one() if exact else 1 + 0j

    plus_product = ExpPolynomial.from_values([one], exact)
    minus_product = ExpPolynomial.from_values([one], exact)
    for k in range(p):
        zeta_k = _phase(scale_angle(beta, k), exact)
        plus_product = plus_product * ExpPolynomial.from_values([one, zeta_k], exact)
        minus_product = minus_product * ExpPolynomial.from_values([-one, zeta_k], exact)

    return plus_product, minus_product, ExpPolynomial.monomial(p, one, exact), exact


def P_coefficients(p: int, beta: Angle) -> ExpPolynomial:
    """P as a polynomial in e^{iα} for fixed β, degree <= 2p"""
    plus_product, minus_product, x_p, exact = _factor_polynomials(p, beta)
    one = ExpPolynomial.monomial(0, 1, exact)

    return ((one + x_p) * plus_product + (one - x_p) * minus_product) * (HALF if exact else 0.5 + 0j)


def Q_coefficients(p: int, beta: Angle) -> ExpPolynomial:
    """Q as a polynomial in e^{iα} for fixed β, degree <= 2p

    Note:
        Its constant term is 0 for every β, its degree-1 term is -(1 + e^{iβ} + ... + e^{i(p-1)β}), and at β = 2π/p
        every coefficient vanishes
    """
    plus_product, minus_product, x_p, exact = _factor_polynomials(p, beta)
    one = ExpPolynomial.monomial(0, 1, exact)

    return ((one - x_p) * plus_product + (one + x_p) * minus_product) * (-HALF if exact else -0.5 + 0j)


def power_sum(p: int, beta: Angle) -> Coefficient:
    """Σ_{k<p} e^{ikβ}"""
    exact = _is_exact(beta)
    total: 'Union[Cyclotomic, complex]' = Cyclotomic.zero() if exact else 0j
    for k in range(p):
        total = total + _phase(scale_angle(beta, k), exact)
    return total
