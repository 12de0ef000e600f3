"""Combinatorial Poincaré polynomials and the identities they satisfy.

Every function here works on ``WeakCombinatorics`` alone; nothing touches
equations. Preconditions mirror the hypotheses under which each formula is
stated and are enforced with exceptions, never silently ignored.
"""

from math import comb, isqrt

from .core.errors import (
    NonLineInputError,
    PreconditionError,
    UnsupportedComponentDegreeError,
)
from .core.models import DdInequality, Moments, QuadraticPolynomial, SplitResult, WeakCombinatorics


def _require_ordinary(w: WeakCombinatorics, operation: str) -> None:
    if w.has_tacnodes():
        raise PreconditionError(f"{operation} needs ordinary singular points only, got {w}")


def _require_conic_line(w: WeakCombinatorics, operation: str) -> None:
    if not w.is_conic_line():
        raise UnsupportedComponentDegreeError(
            f"{operation} accepts lines and conics only, got component degrees {list(w.degrees())}"
        )
    _require_ordinary(w, operation)


def _require_conics(w: WeakCombinatorics, operation: str) -> None:
    if not w.is_conics_only():
        raise PreconditionError(
            f"{operation} accepts conics only, got component degrees {list(w.degrees())}"
        )


def pi0(w: WeakCombinatorics) -> QuadraticPolynomial:
    """Reduced Poincaré polynomial of a line arrangement."""
    if not w.is_lines_only() or w.has_tacnodes():
        raise NonLineInputError(f"pi0 needs a line arrangement, got {w}")
    d = w.d
    return QuadraticPolynomial(1, d - 1, w.multiplicity_sum() - d + 1)


def poincare_cl(w: WeakCombinatorics) -> QuadraticPolynomial:
    """1 + (2k+d-1)t + (Σ(r-1)n_r - d + 1)t² for d lines and k conics."""
    _require_conic_line(w, "poincare_cl")
    d, k = w.d, w.k
    return QuadraticPolynomial(1, 2 * k + d - 1, w.multiplicity_sum() - d + 1)


def poincare_conics(w: WeakCombinatorics) -> QuadraticPolynomial:
    """1 + (2k-1)t + (n2 + 2n3 + 3n4 + t3 + t5 + t7 + 1)t² for k >= 2 conics."""
    _require_conics(w, "poincare_conics")
    if w.k < 2:
        raise PreconditionError(f"poincare_conics needs at least two conics, got k = {w.k}")
    if w.max_multiplicity() > 4:
        raise PreconditionError("poincare_conics allows ordinary points of multiplicity at most 4")
    return QuadraticPolynomial(1, 2 * w.k - 1, w.multiplicity_sum() + w.tacnode_count + 1)


def poincare_general(d: int, tau: int) -> QuadraticPolynomial:
    """1 + (d-1)t + ((d-1)² - τ)t² for a reduced curve of degree d."""
    if d < 2:
        raise PreconditionError(f"poincare_general needs d >= 2, got {d}")
    if not 0 <= tau <= (d - 1) ** 2:
        raise PreconditionError(f"tau must lie in [0, {(d - 1) ** 2}] for d = {d}, got {tau}")
    return QuadraticPolynomial(1, d - 1, (d - 1) ** 2 - tau)


def split_over_rationals(poly: QuadraticPolynomial) -> SplitResult:
    """Factor 1 + c1·t + c2·t² as (1+d1·t)(1+d2·t) with integers 0 <= d1 <= d2.

    With integer coefficients and constant term 1, any rational factorization
    has integer d_i (rational root theorem), so the test is exactly a perfect
    square discriminant with non-negative roots.
    """
    if poly.c0 != 1:
        raise PreconditionError(f"split_over_rationals needs constant term 1, got {poly.c0}")
    discriminant = poly.c1 * poly.c1 - 4 * poly.c2
    if discriminant < 0:
        return SplitResult(False)
    root = isqrt(discriminant)
    if root * root != discriminant or (poly.c1 - root) % 2:
        return SplitResult(False)
    d1, d2 = (poly.c1 - root) // 2, (poly.c1 + root) // 2
    if d1 < 0:
        return SplitResult(False)
    return SplitResult(True, (d1, d2))


def count_check_cl(w: WeakCombinatorics) -> bool:
    """Bézout count 4·C(k,2) + 2kd + C(d,2) = Σ C(r,2)·n_r."""
    _require_conic_line(w, "count_check_cl")
    d, k = w.d, w.k
    pairs = sum(comb(r, 2) * count for r, count in w.n_by_mult.items())
    return 4 * comb(k, 2) + 2 * k * d + comb(d, 2) == pairs


def count_check_conics(w: WeakCombinatorics) -> bool:
    """Bézout count 4·C(k,2) = Σ C(r,2)·n_r + 2t3 + 3t5 + 4t7."""
    _require_conics(w, "count_check_conics")
    pairs = sum(comb(r, 2) * count for r, count in w.n_by_mult.items())
    return 4 * comb(w.k, 2) == pairs + 2 * w.t3 + 3 * w.t5 + 4 * w.t7


def tau_from_combinatorics(w: WeakCombinatorics) -> int:
    """Σ(r-1)²·n_r + 3t3 + 5t5 + 7t7.

    This is the total Tjurina number when every singular point is quasi-homogeneous.
    """
    ordinary = sum((r - 1) ** 2 * count for r, count in w.n_by_mult.items())
    return ordinary + 3 * w.t3 + 5 * w.t5 + 7 * w.t7


def check_exponent_identity_cl(w: WeakCombinatorics, d1: int, d2: int) -> bool:
    _require_conic_line(w, "check_exponent_identity_cl")
    return w.multiplicity_sum() - w.d + 1 == d1 * d2


def check_exponent_identity_conics(w: WeakCombinatorics, d1: int, d2: int) -> bool:
    _require_conics(w, "check_exponent_identity_conics")
    return w.multiplicity_sum() + w.tacnode_count + 1 == d1 * d2


def _require_d_arrangement(w: WeakCombinatorics, d: int, k: int, operation: str) -> None:
    _require_ordinary(w, operation)
    if d < 1 or k < 1:
        raise PreconditionError(f"{operation} needs d >= 1 and k >= 1, got d = {d}, k = {k}")
    if w.k_by_degree and w.k_by_degree != {d: k}:
        raise PreconditionError(
            f"{operation}: combinatorics {w} do not describe {k} curves of degree {d}"
        )


def dd_inequality(w: WeakCombinatorics, d: int, k: int) -> DdInequality:
    """Σ(r²-5r+4)·n_r >= 3 + 3dk(d-2).

    Necessary for a free arrangement of k smooth curves of degree d with
    ordinary singular points.
    """
    if d < 2:
        raise PreconditionError(f"dd_inequality is stated for d >= 2, got d = {d}")
    _require_d_arrangement(w, d, k, "dd_inequality")
    lhs = sum((r * r - 5 * r + 4) * count for r, count in w.n_by_mult.items())
    rhs = 3 + 3 * d * k * (d - 2)
    return DdInequality(lhs, rhs, lhs >= rhs)


def conic_dd_specialization(w: WeakCombinatorics) -> DdInequality:
    """The d = 2 case rearranged: Σ_{r>=5}(r²-5r+4)·n_r >= 3 + 2n2 + 2n3."""
    _require_ordinary(w, "conic_dd_specialization")
    lhs = sum((r * r - 5 * r + 4) * count for r, count in w.n_by_mult.items() if r >= 5)
    rhs = 3 + 2 * w.n_by_mult.get(2, 0) + 2 * w.n_by_mult.get(3, 0)
    return DdInequality(lhs, rhs, lhs >= rhs)


def moments(w: WeakCombinatorics) -> Moments:
    f0 = sum(w.n_by_mult.values())
    f1 = sum(r * count for r, count in w.n_by_mult.items())
    f2 = sum(r * r * count for r, count in w.n_by_mult.items())
    return Moments(f0, f1, f2)


def dd_count_check(w: WeakCombinatorics, d: int, k: int) -> bool:
    """Bézout consistency d²(k²-k) = f2 - f1."""
    _require_d_arrangement(w, d, k, "dd_count_check")
    m = moments(w)
    return d * d * (k * k - k) == m.f2 - m.f1


def betti_polynomial(w: WeakCombinatorics) -> QuadraticPolynomial:
    """Betti polynomial of the complement of a conic-line arrangement."""
    _require_conic_line(w, "betti_polynomial")
    d, k = w.d, w.k
    return QuadraticPolynomial(1, k + d - 1, w.multiplicity_sum() - d - k + 1)


def betti_identity_holds(w: WeakCombinatorics) -> bool:
    """poincare_cl - betti_polynomial = k·t(t+1), coefficient-wise."""
    return poincare_cl(w) - betti_polynomial(w) == QuadraticPolynomial(0, w.k, w.k)


def euler_number(w: WeakCombinatorics) -> int:
    """Euler number of the complement, B_M(-1).

    Raises AssertionError if it disagrees with the Poincaré polynomial at -1,
    which would mean the two closed forms are out of sync.
    """
    value = betti_polynomial(w).evaluate(-1)
    check = poincare_cl(w).evaluate(-1)
    if value != check:
        raise AssertionError(f"Euler number mismatch: B_M(-1) = {value}, P(-1) = {check}")
    return value
