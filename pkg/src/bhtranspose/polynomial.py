"""Invertible polynomials: representation, parsing, atomic classification.

All coefficients are 1, so a polynomial is fully described by its ordered
variable names and the exponent vector of each monomial.  The grammar
accepted by :func:`parse_polynomial` is::

    poly   = term ('+' term)*
    term   = factor ('*' factor)*
    factor = VAR ('^' UINT)?
    VAR    = [A-Za-z][A-Za-z0-9]*

Whitespace is ignored.  Coefficients and '-' are rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from . import linalg
from .errors import (
    DimensionMismatchError,
    InvalidPolynomialError,
    NotAtomicError,
    PolynomialSyntaxError,
)


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")
        if not any(self.exponents):
            raise ValueError("monomial must involve at least one variable")

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def weighted_degree(self, weights: Sequence[int]) -> int:
        return sum(e * w for e, w in zip(self.exponents, weights))


@dataclass(frozen=True)
class InvertiblePolynomial:
    """Sum of ``n`` coefficient-one monomials in ``n`` variables.

    Construction enforces a square, invertible exponent matrix in which every
    variable occurs.  Atomic decomposability is checked separately by
    :func:`classify_atomic`.
    """

    variables: tuple[str, ...]
    monomials: tuple[Monomial, ...]

    def __post_init__(self):
        n = len(self.variables)
        if len(set(self.variables)) != n:
            raise InvalidPolynomialError(f"duplicate variable names in {self.variables}")
        if len(self.monomials) != n:
            raise InvalidPolynomialError(
                f"non-square system: {len(self.monomials)} monomials in {n} variables"
            )
        for m in self.monomials:
            if len(m.exponents) != n:
                raise InvalidPolynomialError(
                    f"monomial {m.exponents} has {len(m.exponents)} exponents, expected {n}"
                )
        unused = [v for j, v in enumerate(self.variables) if not any(m.exponents[j] for m in self.monomials)]
        if unused:
            raise InvalidPolynomialError(f"unused variable(s): {', '.join(unused)}")
        if linalg.determinant(self.matrix) == 0:
            raise InvalidPolynomialError("exponent matrix is singular")

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]], variables: Sequence[str] | None = None):
        rows = [tuple(int(e) for e in r) for r in rows]
        if variables is None:
            variables = [f"z{j}" for j in range(len(rows))]
        return cls(tuple(variables), tuple(Monomial(r) for r in rows))

    @property
    def matrix(self) -> linalg.IntMatrix:
        return tuple(m.exponents for m in self.monomials)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def canonical(self) -> tuple[tuple[int, ...], ...]:
        """Exponent rows in sorted order; equality up to monomial reordering."""
        return tuple(sorted(self.matrix))

    def __str__(self):
        return render(self)


def exponent_matrix(p: InvertiblePolynomial) -> linalg.IntMatrix:
    """Entry ``(i, j)`` is the exponent of variable ``j`` in monomial ``i``."""
    return p.matrix


# --- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<var>[A-Za-z][A-Za-z0-9]*)|(?P<num>\d+)|(?P<op>[+*^])|(?P<bad>\S))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        kind = m.lastgroup
        start = m.start(kind)
        if kind == "bad":
            ch = m.group(kind)
            hint = " (negative terms are not supported)" if ch == "-" else ""
            raise PolynomialSyntaxError(f"unexpected character {ch!r}{hint}", text, start)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_terms(text: str) -> list[dict[str, int]]:
    """Parse ``text`` into a list of ``{variable: exponent}`` maps, one per term.

    Only the grammar is checked here; no structural validation.
    """
    tokens = _tokenize(text)
    i = 0

    def peek():
        return tokens[i]

    def take(kind, what):
        nonlocal i
        tok = tokens[i]
        if tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            if kind == "var" and tok[0] == "num":
                raise PolynomialSyntaxError("coefficients are not supported; all monomials have coefficient 1", text, tok[2])
            raise PolynomialSyntaxError(f"expected {what}, found {found}", text, tok[2])
        i += 1
        return tok

    terms = []
    while True:
        term: dict[str, int] = {}
        while True:
            _, name, _ = take("var", "a variable")
            exp = 1
            if peek()[0] == "op" and peek()[1] == "^":
                i += 1
                _, num, npos = take("num", "an exponent")
                exp = int(num)
                if exp == 0:
                    raise PolynomialSyntaxError("exponent must be positive", text, npos)
            term[name] = term.get(name, 0) + exp
            if peek()[0] == "op" and peek()[1] == "*":
                i += 1
                continue
            break
        terms.append(term)
        if peek()[0] == "op" and peek()[1] == "+":
            i += 1
            continue
        break
    if peek()[0] != "end":
        tok = peek()
        raise PolynomialSyntaxError(f"unexpected {tok[1]!r}", text, tok[2])
    return terms


_INDEXED = re.compile(r"^([A-Za-z]+?)(\d+)$")


def _natural_order(names: list[str]) -> list[str]:
    """Sort an indexed family like ``z3, z1, z2`` by index; keep other orders."""
    matches = [_INDEXED.match(n) for n in names]
    if not all(matches) or len({m.group(1) for m in matches}) != 1:
        return names
    return sorted(names, key=lambda n: int(_INDEXED.match(n).group(2)))


def parse_polynomial(
    text: str,
    expected_vars: int | None = None,
    variables: Sequence[str] | None = None,
) -> InvertiblePolynomial:
    """Parse ``text`` into an :class:`InvertiblePolynomial`.

    Variable order: ``variables`` if given; otherwise by index when all names
    are one letter prefix plus a number (``z0, z1, ...``); otherwise the
    order of first appearance.
    """
    terms = parse_terms(text)
    if variables is None:
        order: list[str] = []
        for term in terms:
            for name in term:
                if name not in order:
                    order.append(name)
        order = _natural_order(order)
    else:
        order = list(variables)
        known = set(order)
        for term in terms:
            for name in term:
                if name not in known:
                    raise InvalidPolynomialError(f"variable {name!r} is not in the declared list {order}")
    if expected_vars is not None and len(order) != expected_vars:
        raise InvalidPolynomialError(f"expected {expected_vars} variables, found {len(order)}")
    rows = [tuple(term.get(v, 0) for v in order) for term in terms]
    return InvertiblePolynomial(tuple(order), tuple(Monomial(r) for r in rows))


def render_monomial(exponents: Sequence[int], variables: Sequence[str]) -> str:
    parts = []
    for name, e in zip(variables, exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render(p: InvertiblePolynomial) -> str:
    return " + ".join(render_monomial(m.exponents, p.variables) for m in p.monomials)


# --- quasi-homogeneity -----------------------------------------------------

def check_quasi_homogeneous(p: InvertiblePolynomial, ws) -> bool:
    """True iff every monomial has weighted degree ``ws.degree``."""
    if len(ws.weights) != p.nvars:
        raise DimensionMismatchError(f"{len(ws.weights)} weights for {p.nvars} variables")
    return all(m.weighted_degree(ws.weights) == ws.degree for m in p.monomials)


# --- atomic types ----------------------------------------------------------

class AtomicKind(str, Enum):
    FERMAT = "fermat"
    LOOP = "loop"
    CHAIN = "chain"


@dataclass(frozen=True)
class AtomicBlock:
    """One atomic summand.

    ``variables`` lists variable indices along the pointer order: for a chain
    ``x0^a0*x1 + x1^a1*x2 + ... + xk^ak`` that is ``(x0, ..., xk)`` ending at
    the Fermat-like tail; for a loop it starts at the smallest index.
    ``exponents[t]`` is the large exponent of ``variables[t]``.
    """

    kind: AtomicKind
    variables: tuple[int, ...]
    exponents: tuple[int, ...]

    def describe(self, names: Sequence[str]) -> str:
        return f"{self.kind.value}({','.join(names[v] for v in self.variables)})"


@dataclass(frozen=True)
class AtomicDecomposition:
    blocks: tuple[AtomicBlock, ...]

    @property
    def kinds(self) -> tuple[AtomicKind, ...]:
        return tuple(b.kind for b in self.blocks)

    @property
    def is_fermat(self) -> bool:
        return all(b.kind is AtomicKind.FERMAT for b in self.blocks)

    def describe(self, names: Sequence[str]) -> str:
        return " + ".join(b.describe(names) for b in self.blocks)


def _pointer_map(matrix: Sequence[Sequence[int]]):
    """Map each variable to (exponent, target) from its owned monomial.

    A monomial ``x_i^a`` is owned by ``x_i`` with no target; ``x_i^a * x_j``
    is owned by ``x_i`` and points at ``x_j``.  Owner exponents must be at
    least 2, which keeps the accepted class closed under transposition.
    """
    n = len(matrix)
    owned: dict[int, tuple[int, int | None]] = {}
    for r, row in enumerate(matrix):
        support = [j for j in range(n) if row[j]]
        if len(support) == 1:
            (i,) = support
            owner, exp, target = i, row[i], None
        elif len(support) == 2:
            i, j = support
            if row[i] >= 2 and row[j] == 1:
                owner, exp, target = i, row[i], j
            elif row[j] >= 2 and row[i] == 1:
                owner, exp, target = j, row[j], i
            else:
                raise NotAtomicError(f"monomial {r} has exponents {row[i]}, {row[j]}; need one >= 2 and the other 1")
        else:
            raise NotAtomicError(f"monomial {r} involves {len(support)} variables")
        if exp < 2:
            raise NotAtomicError(f"monomial {r} is linear in variable {owner}")
        if owner in owned:
            raise NotAtomicError(f"variable {owner} owns more than one monomial")
        owned[owner] = (exp, target)
    return owned


def classify_atomic(p: InvertiblePolynomial | Sequence[Sequence[int]]) -> AtomicDecomposition:
    """Split the variables into atomic blocks.

    Each monomial points from its owner (the variable with the large
    exponent) to at most one other variable.  The polynomial is atomic
    exactly when every variable owns one monomial and is pointed at by at
    most one other; the pointer graph is then a disjoint union of cycles
    (loops) and paths ending at a pure power (chains, or Fermat when the path
    has length one).
    """
    matrix = p.matrix if isinstance(p, InvertiblePolynomial) else p
    n = len(matrix)
    owned = _pointer_map(matrix)
    if len(owned) != n:
        raise NotAtomicError("some variable owns no monomial")
    pointed_by: dict[int, int] = {}
    for i, (_, t) in owned.items():
        if t is None:
            continue
        if t in pointed_by:
            raise NotAtomicError(f"variable {t} is pointed at by both {pointed_by[t]} and {i}")
        pointed_by[t] = i

    seen: set[int] = set()
    blocks = []
    # chains and Fermat blocks start at a variable nobody points at
    for start in range(n):
        if start in pointed_by:
            continue
        path = []
        v = start
        while v is not None:
            path.append(v)
            v = owned[v][1]
        seen.update(path)
        kind = AtomicKind.FERMAT if len(path) == 1 else AtomicKind.CHAIN
        blocks.append(AtomicBlock(kind, tuple(path), tuple(owned[v][0] for v in path)))
    for start in range(n):
        if start in seen:
            continue
        cycle = []
        v = start
        while v not in seen:
            seen.add(v)
            cycle.append(v)
            v = owned[v][1]
        blocks.append(AtomicBlock(AtomicKind.LOOP, tuple(cycle), tuple(owned[v][0] for v in cycle)))
    blocks.sort(key=lambda b: min(b.variables))
    return AtomicDecomposition(tuple(blocks))


def atomic_rows(blocks: Iterable[AtomicBlock], nvars: int) -> list[tuple[int, ...]]:
    """Exponent rows generated by a block structure (inverse of classification)."""
    rows = []
    for b in blocks:
        k = len(b.variables)
        for t, (v, a) in enumerate(zip(b.variables, b.exponents)):
            row = [0] * nvars
            row[v] = a
            if b.kind is AtomicKind.LOOP:
                row[b.variables[(t + 1) % k]] = 1
            elif b.kind is AtomicKind.CHAIN and t + 1 < k:
                row[b.variables[t + 1]] = 1
            rows.append(tuple(row))
    return rows
