"""Tests for singular point search and classification."""

import random

import pytest

from conftest import BRAID, FOUR_CONICS, THREE_CONICS, fixture_components, fixture_params, polys
from curvefree.core.errors import (
    PointNotOnCurveError,
    PreconditionError,
    ShearExhaustedError,
    UnsupportedContactOrderError,
)
from curvefree.core.models import ProjectivePoint, SingularityKind, WeakCombinatorics
from curvefree.core.polyring import Polynomial, monomial_basis, parse
from curvefree.singlocus import (
    classify_tangential_double_point,
    derive_weak_combinatorics,
    find_rational_singular_points,
    is_ordinary_at,
    local_expansion,
    multiplicity_at,
)
from curvefree.validator import load_arrangement

ORIGIN = ProjectivePoint.of(0, 0, 1)
A5_PAIR = ["y*z - x^2", "y*z - x^2 + x*y"]
A7_PAIR = ["y*z - x^2", "y*z - x^2 + y^2"]


class TestLocalAnalysis:
    """Tests for multiplicities and tangent cones at a point."""

    def test_local_expansion_moves_point_to_origin(self):
        f = parse("x*y - z^2")
        assert local_expansion(f, ProjectivePoint.of(1, 1, 1)) == parse("x*y + x + y")

    @pytest.mark.parametrize(
        "text,point,expected",
        [
            ("x*y*z", (0, 0, 1), 2),
            ("x*y*z", (1, 0, 0), 2),
            ("x*y*(x-y)*(x+y)", (0, 0, 1), 4),
            ("x*y - z^2", (1, 1, 1), 1),
        ],
    )
    def test_multiplicity(self, text, point, expected):
        assert multiplicity_at(parse(text), ProjectivePoint.of(*point)) == expected

    def test_point_off_curve(self):
        with pytest.raises(PointNotOnCurveError):
            multiplicity_at(parse("x*y"), ProjectivePoint.of(1, 1, 1))

    def test_ordinary_triple_point(self):
        assert is_ordinary_at(parse("x*y*(x-y)"), ORIGIN)

    def test_cusp_is_not_ordinary(self):
        assert not is_ordinary_at(parse("y^2*z - x^3"), ORIGIN)

    def test_tangency_is_not_ordinary(self):
        assert not is_ordinary_at(parse("(y*z - x^2)*(y*z - x^2 + y^2)"), ORIGIN)

    def test_repeated_tangent_in_x(self):
        assert not is_ordinary_at(parse("x^2*y*z + y^4"), ORIGIN)

    def test_smooth_point_rejected(self):
        with pytest.raises(PreconditionError):
            is_ordinary_at(parse("x*y"), ProjectivePoint.of(1, 0, 0))


class TestTangentialDoublePoints:
    """Tests for A(2m-1) classification of two tangent branches."""

    def test_a5(self):
        c1, c2 = polys(A5_PAIR)
        assert classify_tangential_double_point(c1, c2, ORIGIN) == SingularityKind.a_type(5)

    def test_a7(self):
        c1, c2 = polys(A7_PAIR)
        assert classify_tangential_double_point(c1, c2, ORIGIN) == SingularityKind.a_type(7)

    def test_a3(self):
        c1, c2 = polys(["x*y - z^2", "x*y + z^2"])
        kind = classify_tangential_double_point(c1, c2, ProjectivePoint.of(1, 0, 0))
        assert str(kind) == "A3"

    def test_transversal_point_rejected(self):
        c1, c2 = polys(A5_PAIR)
        with pytest.raises(PreconditionError):
            classify_tangential_double_point(c1, c2, ProjectivePoint.of(0, 1, 0))

    def test_point_not_on_both_curves(self):
        c1, c2 = polys(A5_PAIR)
        with pytest.raises(PointNotOnCurveError):
            classify_tangential_double_point(c1, c2, ProjectivePoint.of(1, 1, 1))

    def test_contact_order_five(self):
        c1, c2 = polys(["y*z - x^2", "(y*z - x^2)*z^3 + x^5"])
        with pytest.raises(UnsupportedContactOrderError) as exc_info:
            classify_tangential_double_point(c1, c2, ORIGIN)
        assert exc_info.value.order == 5


class TestDeriveWeakCombinatorics:
    """Tests for the global singular locus."""

    def test_coordinate_triangle(self):
        points = find_rational_singular_points(polys(["x", "y", "z"]))
        assert points == [
            ProjectivePoint.of(0, 0, 1),
            ProjectivePoint.of(0, 1, 0),
            ProjectivePoint.of(1, 0, 0),
        ]

    def test_braid(self):
        report = derive_weak_combinatorics(polys(BRAID))
        assert report.derived_combinatorics == WeakCombinatorics.of(k=(6,), n=(3, 4))
        assert report.total_tjurina == 19
        assert report.residual_tjurina == 0
        assert report.quasi_homogeneous_certified
        assert report.point_count == 7
        triple = [p for p in report.points if p.multiplicity == 3]
        assert ProjectivePoint.of(1, 1, 1) in [p.point for p in triple]

    @pytest.mark.parametrize("seed", [0, 1, 7])
    def test_result_does_not_depend_on_seed(self, seed):
        report = derive_weak_combinatorics(polys(BRAID), seed=seed, tau=19)
        assert report.derived_combinatorics.vector_text() == "6; 3,4"
        assert report.seed == seed

    def test_conic_and_secant_line(self):
        report = derive_weak_combinatorics(polys(["x^2 + y^2 - z^2", "x"]))
        assert report.derived_combinatorics == WeakCombinatorics.of(k=(1, 1), n=(2,))
        assert [str(p.point) for p in report.points] == ["(0:-1:1)", "(0:1:1)"]

    def test_a5_pair(self):
        report = derive_weak_combinatorics(polys(A5_PAIR), tau=6)
        assert report.derived_combinatorics.vector_text() == "0,2; 1; 0,1,0"
        kinds = {str(p.point): str(p.kind) for p in report.points}
        assert kinds == {"(0:0:1)": "A5", "(0:1:0)": "Ordinary(2)"}

    def test_a7_pair(self):
        report = derive_weak_combinatorics(polys(A7_PAIR))
        assert report.derived_combinatorics.vector_text() == "0,2; 0; 0,0,1"
        assert report.total_tjurina == 7
        assert report.quasi_homogeneous_certified

    def test_three_conics(self):
        report = derive_weak_combinatorics(polys(THREE_CONICS), tau=19)
        assert report.derived_combinatorics.vector_text() == "0,3; 0,1; 0,3,0"
        assert report.quasi_homogeneous_certified

    def test_four_conics_have_conjugate_points(self):
        report = derive_weak_combinatorics(polys(FOUR_CONICS), tau=36)
        assert report.derived_combinatorics.vector_text() == "0,4; 0; 12,0,0"
        assert len(report.points) == 6
        assert sum(group.count for group in report.conjugate_groups) == 6
        assert all(str(group.kind) == "A3" for group in report.conjugate_groups)
        assert report.milnor_sum == 36
        assert report.residual_tjurina == 0

    def test_wrong_tau_leaves_residual(self):
        report = derive_weak_combinatorics(polys(["x", "y", "z"]), tau=4)
        assert report.residual_tjurina == 1
        assert not report.quasi_homogeneous_certified

    def test_single_component_has_no_points(self):
        report = derive_weak_combinatorics(polys(["x^2 + y^2 - z^2"]))
        assert report.points == ()
        assert report.total_tjurina == 0

    def test_retry_budget_exhausted(self):
        with pytest.raises(ShearExhaustedError) as exc_info:
            derive_weak_combinatorics(polys(["x", "y"]), max_retries=0)
        assert exc_info.value.attempts == 0

    def test_non_homogeneous_component(self):
        with pytest.raises(PreconditionError):
            derive_weak_combinatorics(polys(["x^2 + y", "x"]))

    def test_generic_cubics_with_large_coefficients(self):
        """Resultants with many-digit coefficients still split into points quickly."""
        rng = random.Random(5)
        cubics = [
            Polynomial({m: rng.randint(-999, 999) for m in monomial_basis(3)}) for _ in range(2)
        ]
        report = derive_weak_combinatorics(cubics, tau=9)
        w = report.derived_combinatorics
        assert w.k_by_degree == {3: 2}
        # every point lies on both cubics, weighted by intersection multiplicity
        contact = w.n_by_mult.get(2, 0) + 2 * w.t3 + 3 * w.t5 + 4 * w.t7
        assert contact == 9


class TestSeedInvariance:
    """The weak combinatorics of a fixture must not depend on the seed."""

    @pytest.mark.parametrize("path", fixture_params())
    @pytest.mark.parametrize("seed", [0, 3, 11])
    def test_fixture(self, path, seed):
        expected = load_arrangement(path).expected
        report = derive_weak_combinatorics(fixture_components(path), seed=seed, tau=expected.tau)
        assert report.derived_combinatorics == expected.combinatorics
        assert report.quasi_homogeneous_certified
