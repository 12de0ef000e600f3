"""Tests for ReportRenderer and to_json (core/generator.py)."""

import json

from curvefree.core import (
    AnalysisReport,
    CurveInvariants,
    QuadraticPolynomial,
    ReportRenderer,
    SplitResult,
    Verdict,
    WeakCombinatorics,
    to_json,
)
from curvefree.core.models import DdInequality


def make_report(**overrides):
    """Build a small report for the near pencil."""
    values = dict(
        name="near pencil",
        degree=4,
        components=["x", "y", "z", "x - y"],
        invariants=CurveInvariants(4, 1, 7, True, (1, 2), (7, 7, 7)),
        combinatorics=WeakCombinatorics.of(k=(4,), n=(3, 1)),
        singular_locus=None,
        variant="lines",
        poincare=QuadraticPolynomial(1, 3, 2),
        split=SplitResult(True, (1, 2)),
        identity_checks={"count_check": True, "betti_identity": True},
        verdict=Verdict.FREE_CONSISTENT,
    )
    values.update(overrides)
    return AnalysisReport(**values)


class TestReportRenderer:
    """Tests for ReportRenderer class."""

    def test_analysis_report(self):
        """Test rendering a free arrangement."""
        output = ReportRenderer().analysis(make_report())

        assert "Arrangement: near pencil" in output
        assert "Degree: 4 (4 components)" in output
        assert "  C3: x - y" in output
        assert "mdr: 1" in output
        assert "exponents: 1, 2" in output
        assert "Weak combinatorics: (4; 3,1)" in output
        assert "Poincaré polynomial (lines): 1 + 3t + 2t^2" in output
        assert "splits: (1+1*t)(1+2*t)" in output
        assert "✓ betti_identity" in output
        assert output.rstrip().endswith("Verdict: FREE_CONSISTENT")

    def test_analysis_report_not_free(self):
        """Test rendering of a failed check and a reason."""
        report = make_report(
            invariants=CurveInvariants(4, 2, 6, False, None, (6, 6, 6)),
            split=SplitResult(False),
            identity_checks={"count_check": False},
            verdict=Verdict.INCONSISTENT_INPUT,
            reason="failed checks: count_check",
            expectation_mismatches=["tau: expected 7, got 6"],
        )
        output = ReportRenderer().analysis(report)

        assert "exponents" not in output
        assert "no rational splitting" in output
        assert "✗ count_check" in output
        assert "✗ tau: expected 7, got 6" in output
        assert "Verdict: INCONSISTENT_INPUT (failed checks: count_check)" in output

    def test_poincare(self):
        """Test rendering a split and a non-split polynomial."""
        renderer = ReportRenderer()
        split = renderer.poincare("cl", QuadraticPolynomial(1, 10, 24), SplitResult(True, (4, 6)))
        assert split == "1 + 10t + 24t^2 = (1+4*t)(1+6*t)\n"
        no_split = renderer.poincare("cl", QuadraticPolynomial(1, 7, 16), SplitResult(False))
        assert no_split == "1 + 7t + 16t^2 (no rational splitting)\n"

    def test_ddcheck(self):
        """Test rendering the inequality check."""
        output = ReportRenderer().ddcheck(2, 2, DdInequality(-8, 3, False), True)
        assert "lhs = -8" in output
        assert "rhs = 3" in output
        assert "freeness excluded" in output
        assert "warning" not in output

    def test_ddcheck_count_warning(self):
        """Test the Bézout warning line."""
        output = ReportRenderer().ddcheck(2, 3, DdInequality(0, 3, False), False)
        assert "warning: point counts are not Bézout-consistent" in output

    def test_euler(self, conic_six_lines_w):
        """Test rendering the Euler number."""
        output = ReportRenderer().euler(
            conic_six_lines_w,
            QuadraticPolynomial(1, 6, 15),
            QuadraticPolynomial(1, 7, 16),
            10,
        )
        assert "Betti polynomial: 1 + 6t + 15t^2, at t = -1: 10" in output
        assert "Euler number: 10" in output

    def test_selftest(self):
        """Test the self-test table."""
        rows = [
            {"name": "braid", "verdict": "FREE_CONSISTENT", "passed": True, "problems": []},
            {
                "name": "triangle",
                "verdict": "INCONSISTENT_INPUT",
                "passed": False,
                "problems": ["tau: expected 4, got 3"],
            },
        ]
        output = ReportRenderer().selftest(rows)
        assert "✓ braid     FREE_CONSISTENT" in output
        assert "✗ triangle  INCONSISTENT_INPUT" in output
        assert "    tau: expected 4, got 3" in output
        assert "1/2 fixtures passed" in output

    def test_custom_template_dir(self, temp_dir):
        """Test loading templates from another directory."""
        (temp_dir / "euler.txt.j2").write_text("chi={{ value }}\n", encoding="utf-8")
        renderer = ReportRenderer(template_dir=temp_dir)
        one = QuadraticPolynomial(1, 0, 0)
        output = renderer.euler(None, one, one, 1)
        assert output == "chi=1\n"


def test_to_json_is_deterministic():
    """Test that JSON output is stable with sorted keys."""
    report = make_report()
    first = to_json(report.to_dict())
    assert first == to_json(make_report().to_dict())
    data = json.loads(first)
    assert list(data) == sorted(data)
    assert data["verdict"] == "FREE_CONSISTENT"
    assert data["invariants"]["exponents"] == [1, 2]
    assert data["combinatorics"]["n"] == {"2": 3, "3": 1}
