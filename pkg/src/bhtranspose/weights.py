"""Weight systems ``(w, d)`` and their derivation from exponent matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

from . import linalg
from .errors import WeightError


@dataclass(frozen=True)
class WeightSystem:
    weights: tuple[int, ...]
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(self, "degree", int(self.degree))
        if not self.weights:
            raise WeightError("empty weight vector")
        if any(w <= 0 for w in self.weights):
            raise WeightError(f"weights must be positive: {self.weights}")
        if self.degree <= 0:
            raise WeightError(f"degree must be positive: {self.degree}")
        if reduce(gcd, self.weights) != 1:
            raise WeightError(f"weights {self.weights} are not coprime")

    def __len__(self):
        return len(self.weights)

    @property
    def total(self) -> int:
        return sum(self.weights)

    def __str__(self):
        return f"P({','.join(map(str, self.weights))}), d={self.degree}"


def solve_weights(A: Sequence[Sequence[int]]) -> WeightSystem:
    """Smallest integral solution of ``A w = d (1, ..., 1)``.

    The row sums ``q_i`` of ``A^-1`` give ``w/d``; ``d`` is their least
    common denominator.
    """
    q = linalg.row_sums(linalg.invert(A))
    if any(x <= 0 for x in q):
        raise WeightError(f"row sums of the inverse are not all positive: {[str(x) for x in q]}")
    d = reduce(lcm, (x.denominator for x in q), 1)
    w = tuple(int(x * d) for x in q)
    ws = WeightSystem(w, d)
    assert all(sum(a * wi for a, wi in zip(row, w)) == d for row in A)
    return ws


def fano_index(ws: WeightSystem) -> int:
    """``|w| - d``."""
    return ws.total - ws.degree


def is_calabi_yau(ws: WeightSystem) -> bool:
    return fano_index(ws) == 0


def is_fano(ws: WeightSystem) -> bool:
    return fano_index(ws) > 0


def weight_ratio(ws: WeightSystem) -> Fraction:
    """``|w|/d``, the sum of all entries of ``A^-1``; preserved by transposition."""
    return Fraction(ws.total, ws.degree)
