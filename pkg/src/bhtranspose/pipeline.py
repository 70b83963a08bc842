"""Four Fano hypersurfaces and their links from one Calabi-Yau polynomial.

::

    X_f   --theta-->  Y_f~  --T-->  Y_f~T      (M1, M2)
     |T
    X_fT  --theta-->  Y_g~  --T-->  Y_g~T      (M3, M4)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any

from .errors import FermatInputError, InvalidPolynomialError, NotCalabiYauError
from .homology import MAX_VARS, LinkReport, homology_report
from .polynomial import InvertiblePolynomial, check_quasi_homogeneous, classify_atomic, render
from .transpose import theta_suspend, transpose
from .weights import WeightSystem, is_calabi_yau

CHELTSOV_NOTE = (
    "Kahler-Einstein by Cheltsov for theta-suspensions of K3 weight systems, "
    "except four cases; verify manually"
)

LABELS = ("M1", "M2", "M3", "M4")


@dataclass(frozen=True)
class Stage:
    label: str
    name: str
    polynomial: InvertiblePolynomial
    weights: WeightSystem
    provenance: str


@dataclass(frozen=True)
class PipelineResult:
    polynomial: InvertiblePolynomial
    weights: WeightSystem
    transpose_polynomial: InvertiblePolynomial
    transpose_weights: WeightSystem
    stages: tuple[Stage, ...]
    links: tuple[LinkReport, ...]

    def to_dict(self) -> dict[str, Any]:
        stages = []
        for st, rep in zip(self.stages, self.links):
            entry = {"label": st.label, "hypersurface": st.name, "provenance": st.provenance}
            entry.update(rep.to_dict())
            stages.append(entry)
        return {
            "input": {
                "poly": render(self.polynomial),
                "weights": list(self.weights.weights),
                "degree": self.weights.degree,
            },
            "transpose": {
                "poly": render(self.transpose_polynomial),
                "weights": list(self.transpose_weights.weights),
                "degree": self.transpose_weights.degree,
            },
            "stages": stages,
            "distinctness": distinctness_summary(self).to_dict(),
        }


def run_pipeline(
    p: InvertiblePolynomial, ws: WeightSystem, *, max_vars: int = MAX_VARS
) -> PipelineResult:
    """Build ``Y_f~, Y_f~T, Y_g~, Y_g~T`` and the link reports ``M1..M4``."""
    if not check_quasi_homogeneous(p, ws):
        raise InvalidPolynomialError(f"{render(p)} is not quasi-homogeneous for {ws}")
    if not is_calabi_yau(ws):
        raise NotCalabiYauError(f"input is not Calabi-Yau: |w| = {ws.total}, d = {ws.degree}")
    if classify_atomic(p).is_fermat:
        raise FermatInputError(
            "Fermat input: the exponent matrix is diagonal, so A^T = A and the "
            "transpose returns the same hypersurface"
        )

    f1, w1 = theta_suspend(p, ws)
    f2, w2 = transpose(f1)
    fT, wT = transpose(p)
    f3, w3 = theta_suspend(fT, wT)
    f4, w4 = transpose(f3)

    stages = (
        Stage("M1", "Y_f~", f1, w1, "theta(f)"),
        Stage("M2", "Y_f~T", f2, w2, "T(theta(f))"),
        Stage("M3", "Y_g~", f3, w3, "theta(T(f))"),
        Stage("M4", "Y_g~T", f4, w4, "T(theta(T(f)))"),
    )
    k3_input = p.nvars == 4
    links = tuple(
        homology_report(
            st.polynomial,
            st.weights,
            ke_literature=CHELTSOV_NOTE if k3_input and st.provenance.startswith("theta") else None,
            max_vars=max_vars,
        )
        for st in stages
    )
    return PipelineResult(p, ws, fT, wT, stages, links)


@dataclass(frozen=True)
class DistinctnessSummary:
    pairs: tuple[tuple[str, str, bool], ...]

    @property
    def all_distinct(self) -> bool:
        return all(distinct for _, _, distinct in self.pairs)

    def verdict(self, a: str, b: str) -> str:
        for x, y, distinct in self.pairs:
            if {x, y} == {a, b}:
                return "different homology, not diffeomorphic" if distinct else "indistinguishable by H_n"
        if a == b:
            return "indistinguishable by H_n"
        raise KeyError((a, b))

    def to_dict(self) -> dict[str, Any]:
        return {
            "all_distinct": self.all_distinct,
            "pairs": [{"a": a, "b": b, "verdict": self.verdict(a, b)} for a, b, _ in self.pairs],
        }


def distinctness_summary(result: PipelineResult | list[LinkReport]) -> DistinctnessSummary:
    """Pairwise comparison of the middle homology groups.

    Different groups prove the links are not diffeomorphic; equal groups
    prove nothing.
    """
    links = result.links if isinstance(result, PipelineResult) else list(result)
    labels = LABELS[: len(links)] if len(links) <= 4 else tuple(f"M{i + 1}" for i in range(len(links)))
    keys = [rep.homology.invariant() for rep in links]
    pairs = tuple(
        (labels[i], labels[j], keys[i] != keys[j]) for i, j in combinations(range(len(links)), 2)
    )
    return DistinctnessSummary(pairs)
