"""Freeness tests and combinatorial Poincaré polynomials for plane curve arrangements."""

from .analyzer import ArrangementAnalyzer
from .core import (
    AnalysisReport,
    CurveFreeError,
    CurveInvariants,
    Polynomial,
    QuadraticPolynomial,
    ReportRenderer,
    Verdict,
    WeakCombinatorics,
    parse,
)
from .variants import AbstractPoincareVariant, get_variant, select_variant

__version__ = "0.1.0"
__all__ = [
    "AbstractPoincareVariant",
    "AnalysisReport",
    "ArrangementAnalyzer",
    "CurveFreeError",
    "CurveInvariants",
    "Polynomial",
    "QuadraticPolynomial",
    "ReportRenderer",
    "Verdict",
    "WeakCombinatorics",
    "get_variant",
    "parse",
    "select_variant",
]
