"""Tests for core data models (WeakCombinatorics, QuadraticPolynomial, points and verdicts)."""

from fractions import Fraction

import pytest

from curvefree.core import (
    ProjectivePoint,
    QuadraticPolynomial,
    SingularityKind,
    SplitResult,
    Verdict,
    WeakCombinatorics,
)
from curvefree.core.errors import PreconditionError


class TestWeakCombinatorics:
    """Tests for WeakCombinatorics dataclass."""

    def test_counts_and_degrees(self, conic_six_lines_w):
        """Test derived counts of a conic-line arrangement."""
        assert conic_six_lines_w.d == 6
        assert conic_six_lines_w.k == 1
        assert conic_six_lines_w.total_degree == 8
        assert conic_six_lines_w.component_count == 7
        assert conic_six_lines_w.multiplicity_sum() == 21
        assert conic_six_lines_w.max_multiplicity() == 4

    def test_zero_counts_are_dropped(self):
        """Test that explicit zero counts do not affect equality."""
        a = WeakCombinatorics({1: 3, 2: 0}, {2: 0, 3: 1})
        b = WeakCombinatorics.of(k=(3,), n=(0, 1))
        assert a == b
        assert hash(a) == hash(b)

    def test_string_keys_are_accepted(self):
        """Test construction from YAML-style string keys."""
        w = WeakCombinatorics.from_dict({"k": {"2": 3}, "n": {"3": 1}, "t5": 3})
        assert w == WeakCombinatorics.of(k=(0, 3), n=(0, 1), t5=3)

    def test_family_predicates(self, conic_six_lines_w, three_conics_w):
        """Test lines/conics predicates."""
        assert conic_six_lines_w.is_conic_line()
        assert not conic_six_lines_w.is_lines_only()
        assert three_conics_w.is_conics_only()
        assert three_conics_w.has_tacnodes()
        assert three_conics_w.tacnode_count == 3

    def test_vector_text(self, conic_six_lines_w, three_conics_w):
        """Test the compact vector notation."""
        assert conic_six_lines_w.vector_text() == "6,1; 12,3,1"
        assert three_conics_w.vector_text() == "0,3; 0,1; 0,3,0"
        assert str(WeakCombinatorics()) == "(0; 0)"

    @pytest.mark.parametrize("text", ["6,1; 12,3,1", "(9,1; 6,4,6)", "0,4; 0; 12,0,0"])
    def test_vector_text_parses_back(self, text):
        """Test that vector text is read back to the same data."""
        w = WeakCombinatorics.from_vector_text(text)
        assert WeakCombinatorics.from_vector_text(w.vector_text()) == w

    @pytest.mark.parametrize("text", ["6,1", "1; 2; 3; 4", "0,2; 4; 1,2"])
    def test_malformed_vector_text(self, text):
        """Test rejection of malformed vector text."""
        with pytest.raises(ValueError):
            WeakCombinatorics.from_vector_text(text)

    def test_negative_count_rejected(self):
        """Test that negative counts are rejected."""
        with pytest.raises(PreconditionError):
            WeakCombinatorics.of(k=(3,), n=(-1,))
        with pytest.raises(PreconditionError):
            WeakCombinatorics.of(k=(0, 2), t3=-1)

    def test_multiplicity_one_rejected(self):
        """Test that points of multiplicity below 2 are rejected."""
        with pytest.raises(PreconditionError):
            WeakCombinatorics({1: 2}, {1: 1})

    def test_to_dict(self, three_conics_w):
        """Test JSON-ready dictionary form."""
        assert three_conics_w.to_dict() == {
            "k": {"2": 3},
            "n": {"3": 1},
            "t3": 0,
            "t5": 3,
            "t7": 0,
        }
        assert WeakCombinatorics.from_dict(three_conics_w.to_dict()) == three_conics_w


class TestQuadraticPolynomial:
    """Tests for QuadraticPolynomial dataclass."""

    @pytest.mark.parametrize(
        "coefficients,text",
        [
            ((1, 7, 16), "1 + 7t + 16t^2"),
            ((1, -3, 2), "1 - 3t + 2t^2"),
            ((1, 1, -1), "1 + t - t^2"),
            ((0, 0, 0), "0"),
            ((0, 2, 0), "2t"),
        ],
    )
    def test_str(self, coefficients, text):
        """Test human-readable rendering."""
        assert str(QuadraticPolynomial(*coefficients)) == text

    def test_factored(self):
        """Test factored rendering, dropping trivial factors."""
        p = QuadraticPolynomial(1, 10, 24)
        assert p.factored((4, 6)) == "(1+4*t)(1+6*t)"
        assert QuadraticPolynomial(1, 3, 0).factored((0, 3)) == "(1+3*t)"

    def test_arithmetic(self):
        """Test coefficient-wise addition, subtraction and evaluation."""
        p = QuadraticPolynomial(1, 7, 16)
        q = QuadraticPolynomial(1, 6, 15)
        assert p - q == QuadraticPolynomial(0, 1, 1)
        assert (p - q) + q == p
        assert p.evaluate(-1) == 10

    def test_split_result_dict(self):
        """Test SplitResult serialization."""
        assert SplitResult(True, (2, 3)).to_dict() == {"splits": True, "roots": [2, 3]}
        assert SplitResult(False).to_dict() == {"splits": False, "roots": None}


class TestProjectivePoint:
    """Tests for ProjectivePoint normalization."""

    def test_last_nonzero_coordinate_is_one(self):
        """Test normalization of scaled representatives."""
        p = ProjectivePoint.of(2, 4, 2)
        assert p.coordinates == (1, 2, 1)
        assert p == ProjectivePoint.of(-1, -2, -1)
        assert p.chart() == 2

    def test_points_at_infinity(self):
        """Test normalization when z = 0."""
        p = ProjectivePoint.of(3, -6, 0)
        assert str(p) == "(-1/2:1:0)"
        assert p.chart() == 1
        assert p.to_list() == ["-1/2", "1", "0"]

    def test_zero_vector_rejected(self):
        """Test that (0:0:0) is rejected."""
        with pytest.raises(PreconditionError):
            ProjectivePoint.of(0, 0, 0)

    def test_ordering(self):
        """Test that points sort by normalized coordinates."""
        points = [ProjectivePoint.of(1, 0, 0), ProjectivePoint.of(0, 0, 5)]
        assert sorted(points)[0].coordinates == (0, 0, Fraction(1))


class TestSingularityKind:
    """Tests for SingularityKind."""

    def test_milnor_numbers(self):
        """Test Milnor numbers of named singularities."""
        assert SingularityKind.ordinary(2).milnor == 1
        assert SingularityKind.ordinary(4).milnor == 9
        assert SingularityKind.a_type(5).milnor == 5
        assert SingularityKind.unclassified().milnor == 0

    def test_names(self):
        """Test rendering of kinds."""
        assert str(SingularityKind.ordinary(3)) == "Ordinary(3)"
        assert str(SingularityKind.a_type(7)) == "A7"
        assert str(SingularityKind.unclassified()) == "Unclassified"

    def test_unsupported_a_type(self):
        """Test that only A3, A5 and A7 are named."""
        with pytest.raises(PreconditionError):
            SingularityKind.a_type(9)


class TestVerdict:
    """Tests for Verdict exit codes."""

    @pytest.mark.parametrize(
        "verdict,code",
        [
            (Verdict.FREE_CONSISTENT, 0),
            (Verdict.NOT_FREE, 0),
            (Verdict.INCONSISTENT_INPUT, 2),
            (Verdict.UNCERTIFIED, 3),
        ],
    )
    def test_exit_codes(self, verdict, code):
        """Test the exit code of each verdict."""
        assert verdict.exit_code == code
