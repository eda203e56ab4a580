"""Exact Littlewood-Richardson coefficients, their vector-partition-
function encoding, and the chamber polynomials that govern them."""

from .hive import build_system, count_via_system, hive_count
from .kostant import kostant_count
from .steinberg import steinberg_count
from .stretch import check_ktt, check_linear_k3, stretch_poly
from .tableaux import lr_rule_count

__version__ = "0.1.0"

__all__ = [
    "build_system",
    "check_ktt",
    "check_linear_k3",
    "count_via_system",
    "hive_count",
    "kostant_count",
    "lr_rule_count",
    "steinberg_count",
    "stretch_poly",
    "__version__",
]
