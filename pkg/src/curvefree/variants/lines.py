"""Line arrangements: the reduced Poincaré polynomial of the intersection lattice."""

from typing import Dict, Optional

from ..combin import (
    betti_identity_holds,
    betti_polynomial,
    check_exponent_identity_cl,
    count_check_cl,
    pi0,
    poincare_cl,
)
from ..core.models import QuadraticPolynomial
from .base import AbstractPoincareVariant, PoincareInput


def betti_checks(source: PoincareInput) -> Dict[str, bool]:
    """Betti polynomial relation and Euler number agreement (lines and conics)."""
    w = source.combinatorics
    return {
        "betti_identity": betti_identity_holds(w),
        "euler_agreement": betti_polynomial(w).evaluate(-1) == poincare_cl(w).evaluate(-1),
    }


class LinesVariant(AbstractPoincareVariant):
    name = "lines"
    description = "line arrangements"

    def applies_to(self, source: PoincareInput) -> bool:
        w = source.combinatorics
        return w is not None and w.d > 0 and w.is_lines_only() and not w.has_tacnodes()

    def _build(self, source: PoincareInput) -> QuadraticPolynomial:
        return pi0(source.combinatorics)

    def count_check(self, source: PoincareInput) -> Optional[bool]:
        return count_check_cl(source.combinatorics)

    def exponent_identity(self, source: PoincareInput, d1: int, d2: int) -> Optional[bool]:
        return check_exponent_identity_cl(source.combinatorics, d1, d2)

    def extra_checks(self, source: PoincareInput) -> Dict[str, bool]:
        return betti_checks(source)
