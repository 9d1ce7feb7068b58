"""Exact computations with probabilistic Frobenius-Euler polynomial families."""

from ._core import (
    MomentModel,
    StirlingTable,
    closed_falling,
    closed_monomial,
    degenerate_falling_factorial,
    expand,
    falling_factorial,
    family,
    parse_poly,
    rational,
    stirling_rows,
    stirling_table,
    verify_suite,
)

__all__ = [
    "MomentModel",
    "StirlingTable",
    "closed_falling",
    "closed_monomial",
    "degenerate_falling_factorial",
    "expand",
    "falling_factorial",
    "family",
    "parse_poly",
    "rational",
    "stirling_rows",
    "stirling_table",
    "verify_suite",
]
