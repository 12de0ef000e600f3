"""Arrangements of lines and conics with ordinary singular points."""

from typing import Dict, Optional

from ..combin import check_exponent_identity_cl, count_check_cl, poincare_cl
from ..core.models import QuadraticPolynomial
from .base import AbstractPoincareVariant, PoincareInput
from .lines import betti_checks


class ConicLineVariant(AbstractPoincareVariant):
    name = "cl"
    description = "conic-line arrangements with ordinary points"

    def applies_to(self, source: PoincareInput) -> bool:
        w = source.combinatorics
        return (
            w is not None and w.component_count > 0 and w.is_conic_line() and not w.has_tacnodes()
        )

    def _build(self, source: PoincareInput) -> QuadraticPolynomial:
        return poincare_cl(source.combinatorics)

    def count_check(self, source: PoincareInput) -> Optional[bool]:
        return count_check_cl(source.combinatorics)

    def exponent_identity(self, source: PoincareInput, d1: int, d2: int) -> Optional[bool]:
        return check_exponent_identity_cl(source.combinatorics, d1, d2)

    def extra_checks(self, source: PoincareInput) -> Dict[str, bool]:
        return betti_checks(source)
