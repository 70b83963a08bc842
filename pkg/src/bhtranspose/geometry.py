"""Exact geometric checks on a weighted hypersurface given only ``(w, d)``."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd, prod

from .errors import NotFanoError, WeightError
from .weights import WeightSystem, fano_index


def _gcd_without(weights, skip) -> int:
    return reduce(gcd, (w for k, w in enumerate(weights) if k not in skip), 0)


def branch_divisors(ws: WeightSystem) -> list[int]:
    """Indices ``i`` whose coordinate divisor ``{z_i = 0}`` is an orbifold stratum.

    That happens when the other weights share a factor.
    """
    return [i for i in range(len(ws)) if _gcd_without(ws.weights, {i}) > 1]


def is_well_formed(ws: WeightSystem) -> bool:
    """Well-formedness of the hypersurface and of its ambient space.

    Requires that no coordinate divisor is an orbifold stratum (the gcd of
    any ``n`` of the ``n+1`` weights is 1) and that the hypersurface meets
    no codimension-2 stratum (the gcd of any ``n-1`` weights divides ``d``).
    """
    m = len(ws)
    if m < 3:
        raise WeightError("well-formedness needs at least three weights")
    if branch_divisors(ws):
        return False
    return all(ws.degree % _gcd_without(ws.weights, {i, j}) == 0 for i, j in combinations(range(m), 2))


def ke_bound(index: int, degree: int, weights) -> bool:
    """The strict inequality ``I*d < n/(n-1) * min_{i<j} w_i*w_j`` in exact arithmetic."""
    n = len(weights) - 1
    smallest = min(a * b for a, b in combinations(weights, 2))
    return index * degree < Fraction(n, n - 1) * smallest


def ke_sufficient(ws: WeightSystem) -> bool:
    """Sufficient test for a Sasaki-Einstein link over a Fano KE base.

    ``False`` is inconclusive, not a negative answer.
    """
    if len(ws) < 3:
        raise WeightError("the KE inequality needs at least three weights")
    index = fano_index(ws)
    if index <= 0:
        raise NotFanoError(f"Fano index {index} is not positive")
    return ke_bound(index, ws.degree, ws.weights)


def milnor_number(ws: WeightSystem) -> int:
    """``prod (d - w_i) / w_i``; must be a positive integer."""
    mu = prod(Fraction(ws.degree - w, w) for w in ws.weights)
    if mu <= 0 or mu.denominator != 1:
        raise WeightError(f"Milnor product {mu} is not a positive integer for {ws}")
    return int(mu)


def branch_genus(ws: WeightSystem, excluded_index: int) -> Fraction:
    """Genus formula for the curve cut out by ``z_k = 0`` (``k = excluded_index``).

    With ``(w1, w2, w3)`` the remaining weights in their original order::

        g = 1/2 * (d^2/(w1 w2 w3) - d * sum_{i<j} gcd(wi,wj)/(wi wj)
                   + sum_i gcd(d,wi)/wi - 1)

    evaluated verbatim, without normalising the remaining weights.
    """
    if len(ws) != 4:
        raise WeightError(f"genus formula needs four weights, got {len(ws)}")
    if not 0 <= excluded_index < 4:
        raise IndexError(excluded_index)
    rest = [w for k, w in enumerate(ws.weights) if k != excluded_index]
    return genus_formula(rest, ws.degree)


def genus_formula(weights, d: int) -> Fraction:
    w1, w2, w3 = weights
    first = Fraction(d * d, w1 * w2 * w3)
    pairs = sum(Fraction(gcd(a, b), a * b) for a, b in combinations(weights, 2))
    ends = sum(Fraction(gcd(d, w), w) for w in weights)
    return (first - d * pairs + ends - 1) / 2
