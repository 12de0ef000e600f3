"""Exceptions raised by the curvefree library.

Library code raises; the command-line front ends translate these into
messages on stderr and exit codes.
"""

from typing import Optional, Sequence


class CurveFreeError(Exception):
    """Base class for all curvefree errors."""


class PolynomialSyntaxError(CurveFreeError):
    """Polynomial text does not conform to the grammar."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class UnknownVariableError(CurveFreeError):
    """Polynomial text uses a variable other than x, y, z."""

    def __init__(self, name: str, position: int):
        self.name = name
        self.position = position
        super().__init__(f"Unknown variable '{name}' (at position {position})")


class NonHomogeneousError(CurveFreeError):
    """A homogeneous polynomial was required."""


class DegenerateCurveError(CurveFreeError):
    """The curve degree is too small for the requested computation."""


class NonStabilizedError(CurveFreeError):
    """Hilbert function of the Milnor algebra did not stabilize on the window."""

    def __init__(self, values: Sequence[int]):
        self.values = tuple(values)
        super().__init__(
            f"Hilbert function not constant on the stabilization window: {list(self.values)}"
        )


class ProductMismatchError(CurveFreeError):
    """Components do not multiply to the given polynomial."""


class NonLineInputError(CurveFreeError):
    """A line-arrangement construction received non-line data."""


class UnsupportedComponentDegreeError(CurveFreeError):
    """Components of an unsupported degree were supplied."""


class PreconditionError(CurveFreeError):
    """Input violates the hypotheses of the requested operation."""


class PointNotOnCurveError(CurveFreeError):
    """A point-local computation was requested at a point off the curve."""


class UnsupportedContactOrderError(CurveFreeError):
    """Two branches meet with a contact order outside A3/A5/A7."""

    def __init__(self, order: int):
        self.order = order
        super().__init__(f"Contact order {order} is outside the supported A3/A5/A7 range")


class ShearExhaustedError(CurveFreeError):
    """No generic coordinate change was found within the retry budget."""

    def __init__(self, attempts: int):
        self.attempts = attempts
        super().__init__(f"No generic coordinate change found after {attempts} attempts")


class ArrangementFileError(CurveFreeError):
    """An arrangement file is malformed."""

    def __init__(self, message: str, line_num: Optional[int] = None):
        self.line_num = line_num
        prefix = f"Line {line_num}: " if line_num is not None else ""
        super().__init__(f"{prefix}{message}")


class VariantMismatchError(CurveFreeError):
    """Combinatorics do not satisfy the chosen Poincaré variant."""
