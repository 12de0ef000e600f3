"""Arrangement file validator.

Arrangement files are line oriented::

    # comment
    name: two lines
    component: x
    component: y
    expect_tau: 1
    expect_exponents: 0, 1
    expect_W: 2; 1
    expect_mdr: 0
    expect_verdict: FREE_CONSISTENT

Component text is normalized before parsing, so equations can be written the
way they appear in print (``-24x^2-23y^2+76yz``).
"""

import re
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from .core.errors import ArrangementFileError, CurveFreeError
from .core.models import ArrangementFile, ExpectedBlock, Verdict, WeakCombinatorics
from .core.polyring import Polynomial, parse
from .syzygy import proportional

KNOWN_KEYS = (
    "name",
    "component",
    "expect_tau",
    "expect_exponents",
    "expect_W",
    "expect_mdr",
    "expect_verdict",
)

_JUXTAPOSITION = re.compile(r"(?<=[0-9A-Za-z)])\s*(?=[A-Za-z(])")
_SUPERSCRIPTS = str.maketrans(
    {"²": "^2", "³": "^3", "⁴": "^4", "−": "-", "·": "*", "⋅": "*"}
)


def normalize_polynomial_text(text: str) -> str:
    """Insert the explicit '*' that printed equations leave out.

    ``24x^2`` becomes ``24*x^2``, ``yz`` becomes ``y*z`` and ``x(x+z)``
    becomes ``x*(x+z)``. Unicode minus signs, middle dots and the superscripts
    2 to 4 are translated as well.
    """
    return _JUXTAPOSITION.sub("*", text.translate(_SUPERSCRIPTS).strip())


def parse_component(text: str, max_degree: Optional[int] = None) -> Polynomial:
    return parse(normalize_polynomial_text(text), max_degree)


class ValidationError:
    """Represents a validation problem in an arrangement file."""

    def __init__(self, line_num: int, message: str):
        self.line_num = line_num
        self.message = message

    def __str__(self):
        return f"Line {self.line_num}: {self.message}"


def _parse_exponents(value: str) -> Tuple[Optional[bool], Optional[Tuple[int, int]]]:
    if value.strip().lower() == "none":
        return False, None
    parts = [int(part) for part in value.replace("(", "").replace(")", "").split(",")]
    if len(parts) != 2 or min(parts) < 0:
        raise ValueError("expected two non-negative integers 'd1, d2' or 'none'")
    return True, tuple(sorted(parts))


def _parse_non_negative(value: str) -> int:
    number = int(value)
    if number < 0:
        raise ValueError("expected a non-negative integer")
    return number


class ArrangementValidator:
    """Validates arrangement files line by line."""

    def __init__(self, max_degree: Optional[int] = None):
        self.errors: List[ValidationError] = []
        self.warnings: List[ValidationError] = []
        self.max_degree = max_degree

    def validate_file(
        self, path: Path
    ) -> Tuple[bool, List[ValidationError], List[ValidationError]]:
        """Validate an arrangement file.

        Args:
            path: Path to the arrangement file

        Returns:
            Tuple of (is_valid, errors, warnings)
        """
        with open(path, encoding="utf-8") as f:
            lines = f.readlines()
        self.parse_lines(lines, str(path))
        return len(self.errors) == 0, self.errors, self.warnings

    def parse_lines(
        self, lines: List[str], path: Optional[str] = None
    ) -> Optional[ArrangementFile]:
        """Parse and check the lines of an arrangement file.

        Returns:
            The ArrangementFile when there are no errors, else None
        """
        self.errors = []
        self.warnings = []
        name = None
        components: List[Tuple[int, str, Polynomial]] = []
        expected = ExpectedBlock()
        seen = set()

        for i, line in enumerate(lines, 1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            key, sep, value = stripped.partition(":")
            key, value = key.strip(), value.strip()
            if not sep:
                self.errors.append(ValidationError(i, f"Expected 'key: value', got '{stripped}'"))
                continue
            if key not in KNOWN_KEYS:
                self.errors.append(ValidationError(i, f"Unknown key: '{key}'"))
                continue
            if key != "component" and key in seen:
                self.errors.append(ValidationError(i, f"Duplicate key: '{key}'"))
                continue
            seen.add(key)

            if key == "name":
                if not value:
                    self.errors.append(ValidationError(i, "Empty name"))
                name = value
            elif key == "component":
                self._check_component(i, value, components)
            else:
                self._check_expectation(i, key, value, expected)

        if not lines or all(not line.strip() for line in lines):
            self.errors.append(ValidationError(0, "Empty file"))
            return None
        if name is None:
            self.errors.append(ValidationError(0, "Missing 'name:' line"))
        if "component" not in seen:
            self.errors.append(ValidationError(0, "No 'component:' lines"))
        self._check_duplicates(components)

        if self.errors:
            return None
        return ArrangementFile(
            name=name,
            components=[str(poly) for _, _, poly in components],
            expected=None if expected.is_empty() else expected,
            path=path,
        )

    def _remaining_degree(self, components: list) -> Optional[int]:
        if self.max_degree is None:
            return None
        return self.max_degree - sum(poly.degree() for _, _, poly in components)

    def _check_component(self, line_num: int, value: str, components: list):
        remaining = self._remaining_degree(components)
        if remaining is not None and remaining < 1:
            self.errors.append(
                ValidationError(
                    line_num, f"Component '{value}' exceeds max degree {self.max_degree}"
                )
            )
            return
        try:
            poly = parse_component(value, remaining)
        except CurveFreeError as e:
            self.errors.append(ValidationError(line_num, f"Invalid component '{value}': {e}"))
            return
        if poly.is_zero() or poly.degree() < 1:
            self.errors.append(ValidationError(line_num, f"Component '{value}' is constant"))
            return
        if not poly.is_homogeneous():
            self.errors.append(
                ValidationError(line_num, f"Component '{value}' is not homogeneous in x, y, z")
            )
            return
        components.append((line_num, value, poly))

    def _check_expectation(self, line_num: int, key: str, value: str, expected: ExpectedBlock):
        try:
            if key == "expect_tau":
                expected.tau = _parse_non_negative(value)
            elif key == "expect_mdr":
                expected.mdr = _parse_non_negative(value)
            elif key == "expect_exponents":
                expected.free, expected.exponents = _parse_exponents(value)
            elif key == "expect_W":
                expected.combinatorics = WeakCombinatorics.from_vector_text(value)
            elif key == "expect_verdict":
                expected.verdict = Verdict(value.upper())
        except (ValueError, CurveFreeError) as e:
            self.errors.append(ValidationError(line_num, f"Invalid {key} '{value}': {e}"))

    def _check_duplicates(self, components: list):
        for a, (line_a, _, poly_a) in enumerate(components):
            for line_b, value_b, poly_b in components[a + 1 :]:
                if proportional(poly_a, poly_b):
                    self.warnings.append(
                        ValidationError(
                            line_b, f"Component '{value_b}' repeats the component on line {line_a}"
                        )
                    )


def load_arrangement(path: Path, max_degree: Optional[int] = None) -> ArrangementFile:
    """Load an arrangement file.

    Args:
        path: Path to the arrangement file
        max_degree: Largest total degree accepted; checked while parsing, before
            any component is expanded

    Raises:
        ArrangementFileError: first validation error, with its line number
        OSError: the file cannot be read
    """
    with open(path, encoding="utf-8") as f:
        lines = f.readlines()
    validator = ArrangementValidator(max_degree)
    arrangement = validator.parse_lines(lines, str(path))
    if arrangement is None:
        first = validator.errors[0]
        raise ArrangementFileError(first.message, first.line_num or None)
    return arrangement


def _report(path: Path, errors, warnings, quiet: bool) -> None:
    if errors:
        print(f"\n❌ {path}: FAILED")
        for error in errors:
            print(f"  {error}")
    elif warnings:
        if not quiet:
            print(f"\n⚠️  {path}: WARNINGS")
            for warning in warnings:
                print(f"  {warning}")
    elif not quiet:
        print(f"✓ {path}: OK")


def validate_and_report(path: Path, *, strict: bool = False, quiet: bool = False) -> bool:
    """Validate an arrangement file and report results to stdout/stderr.

    Args:
        path: Path to the arrangement file
        strict: Treat warnings as errors
        quiet: Only show errors

    Returns:
        True if validation passed (no errors, and no warnings in strict mode)
    """
    return validate_multiple_files([path], strict=strict, quiet=quiet)


def validate_multiple_files(
    file_paths: List[Path], *, strict: bool = False, quiet: bool = False
) -> bool:
    """Validate multiple arrangement files and report aggregate results.

    Args:
        file_paths: List of paths to arrangement files
        strict: Treat warnings as errors
        quiet: Only show errors

    Returns:
        True if all files passed validation
    """
    validator = ArrangementValidator()
    all_valid = True
    total_errors = 0
    total_warnings = 0

    for path in file_paths:
        if not path.exists():
            print(f"Error: File not found: {path}", file=sys.stderr)
            all_valid = False
            continue

        is_valid, errors, warnings = validator.validate_file(path)
        _report(path, errors, warnings, quiet)
        total_errors += len(errors)
        total_warnings += len(warnings)
        if not is_valid or (strict and warnings):
            all_valid = False

    # Summary
    if len(file_paths) > 1 and not quiet:
        print("\n" + "=" * 60)
        print(f"Validated {len(file_paths)} file(s)")
        if total_errors:
            print(f"  Errors: {total_errors}")
        if total_warnings:
            print(f"  Warnings: {total_warnings}")

    return all_valid
