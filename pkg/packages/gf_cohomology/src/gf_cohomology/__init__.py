"""Gelfand–Fuchs cohomology, truncated Weil algebras and orbifold characteristic classes."""

from __future__ import annotations

__version__ = "0.1.0"

from gf_cohomology.ce import build_wx, ce_cohomology, weight_zero_cohomology
from gf_cohomology.classes import char_class_ring, inertia_report, secondary_survivors, vanishing_report
from gf_cohomology.decompose import Decomposition, Factor, GroupAction, decompose_action, inertia_components
from gf_cohomology.errors import GFCohomologyError
from gf_cohomology.gca import FreeGCA, GeneratorSpec, cdga_cohomology
from gf_cohomology.invariants import inv_dim_bruteforce, inv_dim_predicted
from gf_cohomology.linalg import BettiTable, ChainComplexSlice, cohomology_dims
from gf_cohomology.weil import LieFactor, LieProduct, SubalgebraSpec, e2_page, relative_weil, weil_algebra

__all__ = [
    "__version__",
    "BettiTable",
    "ChainComplexSlice",
    "cohomology_dims",
    "FreeGCA",
    "GeneratorSpec",
    "cdga_cohomology",
    "LieFactor",
    "LieProduct",
    "SubalgebraSpec",
    "weil_algebra",
    "relative_weil",
    "e2_page",
    "ce_cohomology",
    "build_wx",
    "weight_zero_cohomology",
    "Decomposition",
    "Factor",
    "GroupAction",
    "decompose_action",
    "inertia_components",
    "char_class_ring",
    "inertia_report",
    "secondary_survivors",
    "vanishing_report",
    "inv_dim_predicted",
    "inv_dim_bruteforce",
    "GFCohomologyError",
]
