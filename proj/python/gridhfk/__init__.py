"""Knot Floer homology from grid diagrams, and surgery on model complexes."""

from ._gridhfk import (
    CapExceeded,
    Grid,
    InputError,
    InvariantViolation,
    alexander_polynomial,
    bundled_model_names,
    hfk_hat,
    knot_report,
    large_surgery,
    model_check,
    parse_grid,
    staircase_model,
    surgery,
)

__all__ = [
    "CapExceeded",
    "Grid",
    "InputError",
    "InvariantViolation",
    "alexander_polynomial",
    "bundled_model_names",
    "hfk_hat",
    "knot_report",
    "large_surgery",
    "model_check",
    "parse_grid",
    "staircase_model",
    "surgery",
]
