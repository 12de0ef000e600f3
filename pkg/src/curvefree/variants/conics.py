"""Conic arrangements with ordinary points of multiplicity <= 4 and A3/A5/A7 tacnodes."""

from typing import Optional

from ..combin import check_exponent_identity_conics, count_check_conics, poincare_conics
from ..core.models import QuadraticPolynomial
from .base import AbstractPoincareVariant, PoincareInput


class ConicsVariant(AbstractPoincareVariant):
    name = "conics"
    description = "arrangements of at least two conics"

    def applies_to(self, source: PoincareInput) -> bool:
        w = source.combinatorics
        return (
            w is not None
            and w.is_conics_only()
            and w.k >= 2
            and w.max_multiplicity() <= 4
        )

    def _build(self, source: PoincareInput) -> QuadraticPolynomial:
        return poincare_conics(source.combinatorics)

    def count_check(self, source: PoincareInput) -> Optional[bool]:
        return count_check_conics(source.combinatorics)

    def exponent_identity(self, source: PoincareInput, d1: int, d2: int) -> Optional[bool]:
        return check_exponent_identity_conics(source.combinatorics, d1, d2)
