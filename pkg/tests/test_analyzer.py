"""Tests for ArrangementAnalyzer and the packaged fixtures."""

import pytest

from conftest import fixture_params
from curvefree.analyzer import (
    REASON_DPW_FAILS,
    REASON_NO_SPLIT,
    ArrangementAnalyzer,
    fixture_paths,
    run_self_test,
)
from curvefree.core.errors import PreconditionError
from curvefree.core.models import (
    ArrangementFile,
    CurveInvariants,
    SplitResult,
    Verdict,
    WeakCombinatorics,
)
from curvefree.validator import load_arrangement


def arrangement(name, *components):
    return ArrangementFile(name=name, components=list(components))


@pytest.fixture
def analyzer(sample_config):
    return ArrangementAnalyzer(sample_config, verbose=False)


class TestArrangementAnalyzer:
    """Tests for ArrangementAnalyzer class."""

    def test_near_pencil(self, analyzer, arrangement_file):
        """Test the full pipeline on a free line arrangement."""
        report = analyzer.analyze_file(arrangement_file)
        assert report.verdict is Verdict.FREE_CONSISTENT
        assert report.invariants.exponents == (1, 2)
        assert report.combinatorics == WeakCombinatorics.of(k=(4,), n=(3, 1))
        assert report.variant == "lines"
        assert report.split.roots == (1, 2)
        assert report.expectation_mismatches == []
        assert all(report.identity_checks.values())
        assert {"tau_conservation", "general_matches_combinatorial", "dd_count"} <= set(
            report.identity_checks
        )

    def test_generic_lines_not_free(self, analyzer):
        """Test that four general lines are not free and P(t) does not split."""
        report = analyzer.analyze(arrangement("generic", "x", "y", "z", "x + y + z"))
        assert report.verdict is Verdict.NOT_FREE
        assert report.reason == REASON_NO_SPLIT
        assert report.poincare.coefficients() == (1, 3, 3)

    def test_conic_and_secant_line(self, analyzer):
        """Test a conic-line arrangement that is not free."""
        report = analyzer.analyze(arrangement("conic line", "x^2 + y^2 - z^2", "x"))
        assert report.variant == "cl"
        assert report.poincare.coefficients() == (1, 2, 2)
        assert report.verdict is Verdict.NOT_FREE
        assert report.reason == REASON_NO_SPLIT

    def test_split_without_freeness(self):
        """Test the verdict when P(t) splits but the du Plessis-Wall equality fails."""
        invariants = CurveInvariants(5, 1, 12, False)
        verdict, reason = ArrangementAnalyzer._verdict(
            invariants, None, SplitResult(True, (2, 2)), {"count_check": True}
        )
        assert verdict is Verdict.NOT_FREE
        assert reason == REASON_DPW_FAILS

    def test_free_curve_without_split_is_inconsistent(self):
        """Test that a free curve whose P(t) does not split is flagged."""
        invariants = CurveInvariants(4, 1, 7, True, (1, 2))
        verdict, _ = ArrangementAnalyzer._verdict(invariants, None, SplitResult(False), {})
        assert verdict is Verdict.INCONSISTENT_INPUT

    def test_two_conics_run_dd_checks(self, analyzer):
        """Test that two smooth conics get the d-arrangement count check."""
        report = analyzer.analyze(arrangement("two conics", "x^2+y^2-2*z^2", "x^2-2*y^2+z^2"))
        assert report.combinatorics == WeakCombinatorics.of(k=(0, 2), n=(4,))
        assert report.identity_checks["dd_count"]
        assert "dd_inequality" not in report.identity_checks
        assert report.verdict is Verdict.NOT_FREE

    def test_tacnodes_use_conics_variant(self, analyzer):
        """Test two conics with two A3 points."""
        report = analyzer.analyze(arrangement("tacnodes", "x*y - z^2", "x*y + z^2"))
        assert report.variant == "conics"
        assert report.combinatorics.t3 == 2
        assert report.singular_locus.quasi_homogeneous_certified
        assert "dd_count" not in report.identity_checks

    def test_expectation_mismatch(self, analyzer, arrangement_file):
        """Test that a wrong expectation turns the verdict into INCONSISTENT_INPUT."""
        parsed = load_arrangement(arrangement_file)
        parsed.expected.mdr = 2
        report = analyzer.analyze(parsed)
        assert report.verdict is Verdict.INCONSISTENT_INPUT
        assert report.reason == "expectation mismatch"
        assert report.expectation_mismatches == ["mdr: expected 2, got 1"]

    def test_supplied_combinatorics(self, sample_config):
        """Test skipping the singular point search with given combinatorics."""
        config = dict(sample_config, skip_singlocus=True)
        analyzer = ArrangementAnalyzer(config, verbose=False)
        w = WeakCombinatorics.of(k=(4,), n=(3, 1))
        report = analyzer.analyze(arrangement("near pencil", "x", "y", "z", "x - y"), w)
        assert report.singular_locus is None
        assert report.combinatorics == w
        assert report.verdict is Verdict.FREE_CONSISTENT

    def test_wrong_supplied_combinatorics(self, sample_config):
        """Test that wrong combinatorics fail the consistency checks."""
        config = dict(sample_config, skip_singlocus=True)
        analyzer = ArrangementAnalyzer(config, verbose=False)
        w = WeakCombinatorics.of(k=(4,), n=(6,))
        report = analyzer.analyze(arrangement("near pencil", "x", "y", "z", "x - y"), w)
        assert report.verdict is Verdict.INCONSISTENT_INPUT
        assert not report.identity_checks["tau_conservation"]
        assert report.reason.startswith("failed checks:")

    def test_unclassified_point_is_uncertified(self, analyzer):
        """Test a contact of order five between a conic and a cubic."""
        report = analyzer.analyze(
            arrangement("osculating", "y*z - x^2", "y*z^2 - x^2*z + x*y^2")
        )
        assert report.verdict is Verdict.UNCERTIFIED
        assert report.variant == "general"
        assert report.singular_locus.unclassified_count == 1
        assert report.singular_locus.residual_tjurina == 9

    def test_repeated_component_rejected(self, analyzer):
        """Test that proportional components are refused."""
        with pytest.raises(PreconditionError):
            analyzer.analyze(arrangement("double", "x", "2*x", "y"))

    def test_singular_component_rejected(self, analyzer):
        """Test that components must be smooth."""
        with pytest.raises(PreconditionError):
            analyzer.analyze(arrangement("cusp", "y^2*z - x^3", "x"))

    def test_max_degree(self, sample_config):
        """Test the degree guard."""
        analyzer = ArrangementAnalyzer(dict(sample_config, max_degree=2), verbose=False)
        with pytest.raises(PreconditionError):
            analyzer.analyze(arrangement("triangle", "x", "y", "z"))

    def test_verbose_progress(self, sample_config, arrangement_file, capsys):
        """Test progress messages in verbose mode."""
        ArrangementAnalyzer(sample_config, verbose=True).analyze_file(arrangement_file)
        out = capsys.readouterr().out
        assert "Analyzing near pencil..." in out
        assert "✓ free with exponents (1, 2)" in out
        assert "Verdict: FREE_CONSISTENT" in out


def test_fixture_paths_sorted(fixtures_dir):
    """Test that fixture discovery is sorted and finds only .arr files."""
    paths = fixture_paths(fixtures_dir)
    assert paths == sorted(paths)
    assert all(path.suffix == ".arr" for path in paths)
    assert [path.name for path in fixture_paths()] == [path.name for path in paths]


def test_run_self_test_rows(analyzer, fixtures_dir):
    """Test self-test rows for two quick fixtures."""
    paths = [fixtures_dir / "two_lines.arr", fixtures_dir / "pencil.arr"]
    rows = run_self_test(analyzer, paths)
    assert [row["name"] for row in rows] == sorted(row["name"] for row in rows)
    assert all(row["passed"] for row in rows)


@pytest.mark.parametrize("path", fixture_params())
def test_packaged_fixture(analyzer, path):
    """Test every packaged fixture against its expectations."""
    report = analyzer.analyze_file(path)
    assert report.expectation_mismatches == []
    assert report.verdict is not Verdict.INCONSISTENT_INPUT
    if report.singular_locus is not None:
        assert report.singular_locus.quasi_homogeneous_certified
    if report.invariants.is_free:
        assert report.split.roots == report.invariants.exponents
