"""Core package for curvefree.

This package holds the exact arithmetic (polynomials, rational matrices),
the data models shared by every stage, the error hierarchy and the report
renderer.
"""

from .errors import CurveFreeError
from .generator import ReportRenderer, to_json
from .models import (
    AnalysisReport,
    ArrangementFile,
    CurveInvariants,
    ProjectivePoint,
    QuadraticPolynomial,
    SingularityKind,
    SingularLocusReport,
    SplitResult,
    Verdict,
    WeakCombinatorics,
)
from .polyring import Polynomial, UniPolynomial, parse

__all__ = [
    "AnalysisReport",
    "ArrangementFile",
    "CurveFreeError",
    "CurveInvariants",
    "Polynomial",
    "ProjectivePoint",
    "QuadraticPolynomial",
    "ReportRenderer",
    "SingularLocusReport",
    "SingularityKind",
    "SplitResult",
    "UniPolynomial",
    "Verdict",
    "WeakCombinatorics",
    "parse",
    "to_json",
]
