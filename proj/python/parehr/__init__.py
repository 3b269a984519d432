"""Exact parametric weighted Ehrhart computations for smooth polytopes.

The heavy lifting happens in the C++ extension ``parehr._core``; this package
re-exports its surface.  All values crossing the boundary are exact: rationals
arrive as :class:`fractions.Fraction`, polynomials as coefficient lists or
canonical formula strings.
"""

from parehr._core import (
    Count,
    DegenerateError,
    HStar,
    NotMetricError,
    NotSmoothError,
    OutsideTypeConeError,
    ParseError,
    Polytope,
    UnboundedError,
    alcoved,
    count,
    eulerian,
    is_maximal_alcoved,
    is_tight_metric,
    oracle_ehrhart,
    oracle_weighted_count,
    random_maximal_alcoved,
    refine_to_maximal,
)

__all__ = [
    "Count",
    "DegenerateError",
    "HStar",
    "NotMetricError",
    "NotSmoothError",
    "OutsideTypeConeError",
    "ParseError",
    "Polytope",
    "UnboundedError",
    "alcoved",
    "count",
    "eulerian",
    "is_maximal_alcoved",
    "is_tight_metric",
    "oracle_ehrhart",
    "oracle_weighted_count",
    "random_maximal_alcoved",
    "refine_to_maximal",
]
