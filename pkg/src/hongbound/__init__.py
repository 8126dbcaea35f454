"""Hong's upper bound for the positive roots of a real polynomial."""
from ._accel import BACKEND, USE_NUMBA
from .hull import HullStore, build_hulls, hull_chain, slope, tangent_scan
from .linear import hong_linear, trace_linear
from .poly import (BoundReport, EmptyInput, NonFiniteCoefficient,
                   NonPositiveLeadingCoefficient, Polynomial, PolynomialError,
                   TermPoint, hong_naive, hong_naive_log, to_points, validate)
from .variants import hong_buggy, hong_quadratic_corrected

__all__ = [
    "BACKEND", "USE_NUMBA", "BoundReport", "EmptyInput", "HullStore",
    "NonFiniteCoefficient", "NonPositiveLeadingCoefficient", "Polynomial",
    "PolynomialError", "TermPoint", "build_hulls", "hong_buggy", "hong_linear",
    "hong_naive", "hong_naive_log", "hong_quadratic_corrected", "hull_chain",
    "slope", "tangent_scan", "to_points", "trace_linear", "validate",
]
