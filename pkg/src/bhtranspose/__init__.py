"""Exact Berglund-Huebsch transposition and link homology for weighted hypersurfaces.

Starting from an invertible polynomial that cuts out a Calabi-Yau
hypersurface in weighted projective space, the toolkit builds four Fano
hypersurfaces and computes the middle homology (rank and torsion) of their
links.
"""

from .errors import BHError
from .geometry import branch_divisors, branch_genus, is_well_formed, ke_sufficient, milnor_number
from .homology import (
    HomologyGroup,
    LinkReport,
    betti_middle,
    homology_report,
    link_homology,
    link_report,
    reduced_pair,
    torsion,
)
from .linalg import determinant, invert, row_sums
from .pipeline import PipelineResult, distinctness_summary, run_pipeline
from .polynomial import (
    AtomicKind,
    InvertiblePolynomial,
    Monomial,
    check_quasi_homogeneous,
    classify_atomic,
    exponent_matrix,
    parse_polynomial,
    render,
)
from .transpose import theta_suspend, transpose
from .weights import WeightSystem, fano_index, is_calabi_yau, is_fano, solve_weights

__version__ = "0.1.0"

__all__ = [
    "AtomicKind",
    "BHError",
    "HomologyGroup",
    "InvertiblePolynomial",
    "LinkReport",
    "Monomial",
    "PipelineResult",
    "WeightSystem",
    "betti_middle",
    "branch_divisors",
    "branch_genus",
    "check_quasi_homogeneous",
    "classify_atomic",
    "determinant",
    "distinctness_summary",
    "exponent_matrix",
    "fano_index",
    "homology_report",
    "invert",
    "is_calabi_yau",
    "is_fano",
    "is_well_formed",
    "ke_sufficient",
    "link_homology",
    "link_report",
    "milnor_number",
    "parse_polynomial",
    "reduced_pair",
    "render",
    "row_sums",
    "run_pipeline",
    "solve_weights",
    "theta_suspend",
    "torsion",
    "transpose",
]
