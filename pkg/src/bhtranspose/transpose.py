"""The Berglund-Huebsch transpose and the theta-suspension ``f -> z^d + f``."""

from __future__ import annotations

import re
from typing import Sequence

from . import linalg
from .errors import InvalidPolynomialError, NotCalabiYauError
from .polynomial import InvertiblePolynomial, Monomial, check_quasi_homogeneous
from .weights import WeightSystem, is_calabi_yau, solve_weights


def transpose(p: InvertiblePolynomial) -> tuple[InvertiblePolynomial, WeightSystem]:
    """Polynomial with exponent matrix ``A^T`` and its solved weight system.

    Variable names and order are kept; monomial ``i`` of the result is
    column ``i`` of ``A``.
    """
    rows = linalg.transpose(p.matrix)
    pt = InvertiblePolynomial(p.variables, tuple(Monomial(r) for r in rows))
    return pt, solve_weights(rows)


_NAME = re.compile(r"^([A-Za-z]+)(\d+)$")


def fresh_variable(names: Sequence[str]) -> str:
    """Name for a new variable that does not clash with ``names``.

    Indexed families such as ``z1..z4`` get the smallest free index
    (``z0``); otherwise ``t``, ``t0``, ``t1``, ... is used.
    """
    taken = set(names)
    matches = [_NAME.match(n) for n in names]
    prefixes = {m.group(1) for m in matches if m}
    if len(prefixes) == 1 and all(matches):
        (prefix,) = prefixes
        k = 0
        while f"{prefix}{k}" in taken:
            k += 1
        return f"{prefix}{k}"
    for cand in ["t"] + [f"t{k}" for k in range(len(names) + 1)]:
        if cand not in taken:
            return cand
    raise AssertionError("unreachable")


def theta_suspend(
    p: InvertiblePolynomial, ws: WeightSystem, name: str | None = None
) -> tuple[InvertiblePolynomial, WeightSystem]:
    """Prepend a weight-one variable ``z`` and add the monomial ``z^d``.

    A Calabi-Yau weight system ``(w, d)`` becomes the Fano system
    ``((1, w), d)`` of index 1; the exponent matrix becomes ``[d] + A``
    block-diagonally.
    """
    if not check_quasi_homogeneous(p, ws):
        raise InvalidPolynomialError(f"polynomial is not quasi-homogeneous for {ws}")
    if not is_calabi_yau(ws):
        raise NotCalabiYauError(f"|w| = {ws.total} differs from d = {ws.degree}")
    name = name or fresh_variable(p.variables)
    if name in p.variables:
        raise InvalidPolynomialError(f"variable name {name!r} already in use")
    n = p.nvars
    rows = [(ws.degree,) + (0,) * n] + [(0,) + m.exponents for m in p.monomials]
    new = InvertiblePolynomial((name,) + p.variables, tuple(Monomial(r) for r in rows))
    return new, WeightSystem((1,) + ws.weights, ws.degree)
