"""Base classes for Poincaré polynomial variants."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from ..core.errors import VariantMismatchError
from ..core.models import QuadraticPolynomial, WeakCombinatorics


@dataclass(frozen=True)
class PoincareInput:
    """Data a variant may build its polynomial from.

    Combinatorial variants read ``combinatorics``; the general variant reads
    ``degree`` and ``tau``.
    """

    combinatorics: Optional[WeakCombinatorics] = None
    degree: Optional[int] = None
    tau: Optional[int] = None


class AbstractPoincareVariant(ABC):
    """Abstract base class for Poincaré polynomial variants.

    Each variant covers one family of arrangements and knows which counts and
    identities hold for it, so the analyzer can audit any input uniformly.
    """

    name = ""
    description = ""

    @abstractmethod
    def applies_to(self, source: PoincareInput) -> bool:
        """Whether the variant's hypotheses hold for this input."""

    @abstractmethod
    def _build(self, source: PoincareInput) -> QuadraticPolynomial:
        pass

    def polynomial(self, source: PoincareInput) -> QuadraticPolynomial:
        """Build the Poincaré polynomial.

        Raises:
            VariantMismatchError: the input does not satisfy the variant's hypotheses
        """
        if not self.applies_to(source):
            raise VariantMismatchError(self.mismatch_message(source))
        return self._build(source)

    def mismatch_message(self, source: PoincareInput) -> str:
        return (
            f"Variant '{self.name}' ({self.description}) "
            f"does not apply to {self._describe(source)}"
        )

    @staticmethod
    def _describe(source: PoincareInput) -> str:
        if source.combinatorics is not None:
            return f"combinatorics {source.combinatorics}"
        return f"d = {source.degree}, tau = {source.tau}"

    def count_check(self, source: PoincareInput) -> Optional[bool]:
        """Bézout-type count for the variant, or None when it has none."""
        return None

    def exponent_identity(self, source: PoincareInput, d1: int, d2: int) -> Optional[bool]:
        return None

    def extra_checks(self, source: PoincareInput) -> Dict[str, bool]:
        return {}

    def identity_checks(
        self, source: PoincareInput, exponents: Optional[Tuple[int, int]] = None
    ) -> Dict[str, bool]:
        """All applicable checks, keyed by name.

        The exponent identity is included only when ``exponents`` are given.
        """
        checks = {}
        count = self.count_check(source)
        if count is not None:
            checks["count_check"] = count
        if exponents is not None:
            identity = self.exponent_identity(source, *exponents)
            if identity is not None:
                checks["exponent_identity"] = identity
        checks.update(self.extra_checks(source))
        return checks
