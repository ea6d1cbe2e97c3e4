"""Exhaustive search for Euler equalities with angles kπ/q, q <= Q

Every ZXZ and XZX product is reduced to a canonical form up to scalar, exactly, by dividing by its first nonzero
entry in row-major order. Equal canonical forms are equal matrices up to scalar, so matching reduces to bucketing.
"""
import math
import logging
import itertools
import numpy as np

from typing import Union
from zx_axiom_verifier.error import CapacityError
from zx_axiom_verifier.util import progress_bar
from zx_axiom_verifier.arithmetic import Cyclotomic, RationalAngle, root_of_unity, rational_angles
from zx_axiom_verifier.euler.equality import EulerEquality
from zx_axiom_verifier.euler.classifier import FamilyMatch, classify_euler

MAX_EULER_DENOMINATOR = 8

Key = 'tuple[tuple[int, tuple], ...]'


def angle_grid(max_denominator: int) -> 'list[RationalAngle]':
    """Every rational angle whose reduced denominator is at most Q

    Raises:
        ValueError: If Q is not positive
        CapacityError: If Q exceeds MAX_EULER_DENOMINATOR, past which the common order 2·lcm(1..Q) outgrows the exact field
    """
    if max_denominator > MAX_EULER_DENOMINATOR:
        raise CapacityError(f'max_denominator must be at most {MAX_EULER_DENOMINATOR}, found {max_denominator}')

    return rational_angles(max_denominator)


def common_order(max_denominator: int) -> int:
    """2·lcm(1..Q), the order at which every spider phase of the grid lives"""
    return 2 * math.lcm(*range(1, max_denominator + 1))


def _spider_entries(color: str, angle: RationalAngle) -> np.ndarray:
    """One-wire spider matrix up to the scalar ½ of the X spider"""
    phase = root_of_unity(angle)
    one = Cyclotomic.one()
    if color == 'Z':
        return np.array([[one, Cyclotomic.zero()], [Cyclotomic.zero(), phase]], dtype=object)
    return np.array([[one + phase, one - phase], [one - phase, one + phase]], dtype=object)


class _Canonicalizer:
    """Canonical keys of 2×2 exact matrices up to scalar, at a fixed common order"""

    def __init__(self, order: int) -> None:
        self.order = order
        self.inverses: 'dict[tuple, Cyclotomic]' = {}

    def _inverse(self, value: Cyclotomic) -> Cyclotomic:
        key = value.lift(self.order).key()
        if key not in self.inverses:
            self.inverses[key] = value.inverse()
        return self.inverses[key]

    def key(self, entries: np.ndarray) -> Key:
        pivot = next(value for value in entries.flat if not value.is_zero())
        inverse = self._inverse(pivot)
        return tuple((value * inverse).lift(self.order).key() for value in entries.flat)


def _products(grid: 'list[RationalAngle]', order: str, canonicalizer: _Canonicalizer) -> 'dict[Key, list[tuple[RationalAngle, ...]]]':
    outer, inner = order[0], order[1]
    outer_matrices = {angle: _spider_entries(outer, angle) for angle in grid}
    inner_matrices = {angle: _spider_entries(inner, angle) for angle in grid}

    buckets: 'dict[Key, list[tuple[RationalAngle, ...]]]' = {}
    for index, (a, b) in enumerate(itertools.product(grid, grid)):
        head = outer_matrices[a].dot(inner_matrices[b])
        for c in grid:
            key = canonicalizer.key(head.dot(outer_matrices[c]))
            buckets.setdefault(key, []).append((a, b, c))
        progress_bar(index + 1, len(grid) ** 2, suffix=f'{order} products')

    return buckets


def enumerate_euler(max_denominator: int) -> 'list[tuple[EulerEquality, Union[FamilyMatch, None]]]':
    """Every Euler equality Z(a1)X(a2)Z(a3) = X(b1)Z(b2)X(b3) up to scalar with angles kπ/q, q <= Q, classified

    Args:
        max_denominator (int): Q, at most 8

    Raises:
        ValueError: If Q is not positive
        CapacityError: If Q exceeds 8

    Returns:
        list[tuple[EulerEquality, FamilyMatch | None]]: equalities sorted by their angles, each with its family match
    """
    grid = angle_grid(max_denominator)
    canonicalizer = _Canonicalizer(common_order(max_denominator))

    zxz = _products(grid, 'ZXZ', canonicalizer)
    xzx = _products(grid, 'XZX', canonicalizer)

    results = []
    for key, lhs_triples in zxz.items():
        for lhs in lhs_triples:
            for rhs in xzx.get(key, []):
                equality = EulerEquality(lhs, rhs)
                results.append((equality, classify_euler(equality)))

    results.sort(key=lambda item: (item[0].lhs, item[0].rhs))

    unclassified = sum(match is None for _, match in results)
    logging.info(f'{max_denominator = }: {len(results)} equalities, {unclassified} unclassified')
    if unclassified:
        logging.error(f'{unclassified} rational Euler equalities match no family')

    return results
