"""Any reduced curve, from its degree and total Tjurina number."""

from typing import Optional

from ..combin import poincare_general
from ..core.models import QuadraticPolynomial
from .base import AbstractPoincareVariant, PoincareInput


class GeneralVariant(AbstractPoincareVariant):
    name = "general"
    description = "reduced curves given by degree and Tjurina number"

    def applies_to(self, source: PoincareInput) -> bool:
        if source.degree is None or source.tau is None:
            return False
        return source.degree >= 2 and 0 <= source.tau <= (source.degree - 1) ** 2

    def _build(self, source: PoincareInput) -> QuadraticPolynomial:
        return poincare_general(source.degree, source.tau)

    def exponent_identity(self, source: PoincareInput, d1: int, d2: int) -> Optional[bool]:
        # d1·d2 = (d-1)² - τ is the du Plessis-Wall equality for d1 + d2 = d - 1
        return (source.degree - 1) ** 2 - source.tau == d1 * d2
