"""Middle homology of links from ``(w, d)``: Betti number and Orlik torsion.

For ``m = n + 1`` variables the link is a ``(n-2)``-connected manifold of
dimension ``2n - 1`` and the interesting group is ``H_{n-1}``.  Everything
is computed from the reduced pair ``u_i = d/gcd(d, w_i)``,
``v_i = w_i/gcd(d, w_i)`` by sums and products over the subset lattice of
``{0, ..., n}``.

Subsets are bitmasks.  With ``g(T) = prod_T u/v / lcm(u_T)`` (``g(0) = 1``)

* ``kappa(S) = sum_{T <= S} (-1)^{|S|-|T|} g(T)`` is the additive Moebius
  transform of ``g``, and the Betti number is ``kappa`` of the full set;
* ``c(S)`` is defined by ``prod_{J <= S} c(J) = gcd(u_i : i not in S)``,
  i.e. the multiplicative Moebius transform of those gcds.

Both transforms cost ``O(m 2^m)`` instead of the ``O(3^m)`` of expanding
the definitions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, gcd, lcm
from typing import Any

from .errors import ConventionError, InvalidPolynomialError, NotAtomicError, TooManyVariablesError
from .geometry import is_well_formed, ke_sufficient, milnor_number
from .polynomial import InvertiblePolynomial, check_quasi_homogeneous, classify_atomic, render
from .weights import WeightSystem, is_calabi_yau, is_fano

log = logging.getLogger(__name__)

MAX_VARS = 12


@dataclass(frozen=True)
class ReducedPair:
    u: tuple[int, ...]
    v: tuple[int, ...]


def reduced_pair(ws: WeightSystem) -> ReducedPair:
    d = ws.degree
    gs = [gcd(d, w) for w in ws.weights]
    return ReducedPair(tuple(d // g for g in gs), tuple(w // g for w, g in zip(ws.weights, gs)))


@dataclass(frozen=True)
class HomologyGroup:
    """``Z^rank + Z_{d1} + ... + Z_{dr}`` with ``d_{j+1} | d_j``.

    ``torsion`` is ``None`` when it was deliberately not computed.
    """

    rank: int
    torsion: tuple[int, ...] | None = ()

    def invariant(self):
        """Hashable key: rank and torsion multiset."""
        return (self.rank, None if self.torsion is None else tuple(sorted(self.torsion)))

    def render(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        if self.torsion is None:
            parts.append("(torsion withheld)")
        else:
            i = 0
            t = self.torsion
            while i < len(t):
                j = i
                while j < len(t) and t[j] == t[i]:
                    j += 1
                k = j - i
                parts.append(f"Z_{t[i]}" + (f"^{k}" if k > 1 else ""))
                i = j
        return " + ".join(parts) if parts else "0"

    def __str__(self):
        return self.render()


def _check_size(m: int, max_vars: int) -> None:
    if m > max_vars:
        raise TooManyVariablesError(
            f"{m} variables means 2^{m} subsets; raise max_vars (currently {max_vars}) to proceed"
        )


def _kappa_table(u, v) -> list[Fraction]:
    m = len(u)
    size = 1 << m
    g = [Fraction(1)] * size
    lcms = [1] * size
    ratio = [Fraction(1)] * size
    for S in range(1, size):
        low = S & -S
        i = low.bit_length() - 1
        rest = S ^ low
        lcms[S] = lcm(lcms[rest], u[i])
        ratio[S] = ratio[rest] * Fraction(u[i], v[i])
        g[S] = ratio[S] / lcms[S]
    for i in range(m):
        bit = 1 << i
        for S in range(size):
            if S & bit:
                g[S] -= g[S ^ bit]
    return g


def _c_table(u) -> list[Fraction]:
    m = len(u)
    size = 1 << m
    full = size - 1
    c = [Fraction(1)] * size
    for S in range(size - 1):
        comp = full ^ S
        c[S] = Fraction(_gcd_mask(u, comp))
    # c[full] stays 1: its k vanishes, so it never enters a d_j
    for i in range(m):
        bit = 1 << i
        for S in range(size):
            if S & bit:
                c[S] /= c[S ^ bit]
    return c


def _gcd_mask(u, mask: int) -> int:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out = gcd(out, u[i])
        mask >>= 1
        i += 1
    return out


def _members(S: int) -> list[int]:
    return [i for i in range(S.bit_length()) if S >> i & 1]


def betti_middle(ws: WeightSystem, max_vars: int = MAX_VARS) -> int:
    """Rank of ``H_{n-1}`` of the link (``n + 1`` = number of weights)."""
    _check_size(len(ws), max_vars)
    rp = reduced_pair(ws)
    b = _kappa_table(rp.u, rp.v)[-1]
    if b.denominator != 1 or b < 0:
        raise ConventionError(f"Betti sum {b} for {ws} is not a nonnegative integer")
    return int(b)


def torsion(ws: WeightSystem, max_vars: int = MAX_VARS) -> tuple[int, ...]:
    """Torsion coefficients ``(d_1, ..., d_r)`` of ``H_{n-1}``, ones pruned."""
    _check_size(len(ws), max_vars)
    rp = reduced_pair(ws)
    return _torsion(rp, _kappa_table(rp.u, rp.v))


def _torsion(rp: ReducedPair, kappa: list[Fraction]) -> tuple[int, ...]:
    m = len(rp.u)
    n = m - 1
    full = (1 << m) - 1
    c = _c_table(rp.u)
    buckets: dict[int, int] = {}
    for S in range(full):
        if c[S].denominator != 1:
            raise ConventionError(f"c for subset {_members(S)} is {c[S]}, not an integer")
        s = S.bit_count()
        if (n - s + 1) % 2 == 0:
            continue
        # k is negative for many small S; those never reach j >= 1
        top = floor(kappa[S])
        if top >= 1 and c[S] != 1:
            buckets[top] = buckets.get(top, 1) * int(c[S])
    coeffs = []
    running = 1
    for top in sorted(buckets, reverse=True):
        running *= buckets[top]
        nxt = max((t for t in buckets if t < top), default=0)
        coeffs.extend([running] * (top - nxt))
    # coeffs now runs from d_r down to d_1
    coeffs.reverse()
    return tuple(x for x in coeffs if x != 1)


def link_homology(ws: WeightSystem, max_vars: int = MAX_VARS) -> HomologyGroup:
    """Rank and torsion of ``H_{n-1}`` in one pass over the lattice."""
    _check_size(len(ws), max_vars)
    rp = reduced_pair(ws)
    kappa = _kappa_table(rp.u, rp.v)
    b = kappa[-1]
    if b.denominator != 1 or b < 0:
        raise ConventionError(f"Betti sum {b} for {ws} is not a nonnegative integer")
    return HomologyGroup(int(b), _torsion(rp, kappa))


# --- reports ---------------------------------------------------------------

SE_UNKNOWN = "unknown"


@dataclass(frozen=True)
class LinkReport:
    weights: WeightSystem
    homology: HomologyGroup
    milnor: int | None
    calabi_yau: bool
    fano: bool
    well_formed: bool | None
    ke_sufficient: bool | None
    polynomial: str | None = None
    ke_literature: str | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def nvars(self) -> int:
        return len(self.weights)

    @property
    def dimension(self) -> int:
        return 2 * self.nvars - 3

    @property
    def connectivity(self) -> int:
        return self.nvars - 3

    @property
    def homology_degree(self) -> int:
        return self.nvars - 2

    @property
    def sasaki_einstein(self) -> str:
        if not self.fano:
            return "not applicable (base not Fano)"
        if self.ke_literature:
            return "KE base from literature"
        if self.ke_sufficient:
            return "sufficient inequality holds"
        return SE_UNKNOWN

    def flags(self) -> dict[str, Any]:
        return {
            "calabi_yau": self.calabi_yau,
            "fano": self.fano,
            "well_formed": self.well_formed,
            "ke_sufficient": self.ke_sufficient,
            "ke_literature": self.ke_literature,
            "sasaki_einstein": self.sasaki_einstein,
        }

    def to_dict(self) -> dict[str, Any]:
        return {
            "poly": self.polynomial,
            "weights": list(self.weights.weights),
            "degree": self.weights.degree,
            "link": {
                "dimension": self.dimension,
                "connectivity": self.connectivity,
                "homology_degree": self.homology_degree,
            },
            "flags": self.flags(),
            "homology": {
                "rank": self.homology.rank,
                "torsion": None if self.homology.torsion is None else list(self.homology.torsion),
            },
            "milnor": self.milnor,
            "notes": list(self.notes),
        }


def link_report(
    ws: WeightSystem,
    polynomial: str | None = None,
    *,
    withhold_torsion: str | None = None,
    ke_literature: str | None = None,
    notes=(),
    max_vars: int = MAX_VARS,
) -> LinkReport:
    """Assemble homology and flags for the link of ``(w, d)``."""
    notes = list(notes)
    if withhold_torsion:
        group = HomologyGroup(betti_middle(ws, max_vars), None)
        notes.append(withhold_torsion)
    else:
        group = link_homology(ws, max_vars)
    try:
        mu = milnor_number(ws)
    except ValueError as exc:
        mu = None
        notes.append(str(exc))
    fano = is_fano(ws)
    enough = len(ws) >= 3
    return LinkReport(
        weights=ws,
        homology=group,
        milnor=mu,
        calabi_yau=is_calabi_yau(ws),
        fano=fano,
        well_formed=is_well_formed(ws) if enough else None,
        ke_sufficient=ke_sufficient(ws) if enough and fano else None,
        polynomial=polynomial,
        ke_literature=ke_literature,
        notes=tuple(notes),
    )


def homology_report(
    p: InvertiblePolynomial,
    ws: WeightSystem,
    *,
    ke_literature: str | None = None,
    max_vars: int = MAX_VARS,
) -> LinkReport:
    """Link report for the hypersurface ``{p = 0}`` in ``P(w)``.

    The torsion formula is only known to hold for invertible polynomials,
    so torsion is withheld when ``p`` has no atomic decomposition.
    """
    if not check_quasi_homogeneous(p, ws):
        raise InvalidPolynomialError(f"{render(p)} is not quasi-homogeneous for {ws}")
    withhold = None
    try:
        classify_atomic(p)
    except NotAtomicError as exc:
        log.warning("withholding torsion: %s", exc)
        withhold = f"torsion withheld: not a sum of atomic types ({exc})"
    return link_report(ws, render(p), withhold_torsion=withhold, ke_literature=ke_literature, max_vars=max_vars)
