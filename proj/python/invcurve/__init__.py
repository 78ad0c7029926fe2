"""Invariant algebraic curves and strong minimality of planar polynomial vector fields."""

from ._invcurve import (
    InvcurveError,
    VectorField,
    check_strong_minimality,
    darboux_search,
    enumerate_transform_solutions,
    first_integral_drift,
    integrate_rk4,
    is_invariant,
    is_invariant_form,
    lie_derivative,
    lv_field,
    parse_system,
    run_cli,
    singular_points,
    varma_solution,
)

__all__ = [
    "InvcurveError",
    "VectorField",
    "check_strong_minimality",
    "darboux_search",
    "enumerate_transform_solutions",
    "first_integral_drift",
    "integrate_rk4",
    "is_invariant",
    "is_invariant_form",
    "lie_derivative",
    "lv_field",
    "parse_system",
    "run_cli",
    "singular_points",
    "varma_solution",
]
