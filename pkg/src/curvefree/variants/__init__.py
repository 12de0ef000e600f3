"""Poincaré polynomial variants package.

Each variant builds the combinatorial Poincaré polynomial for one family of
arrangements by implementing the AbstractPoincareVariant interface.
"""

from typing import Optional, Type

from ..core.errors import VariantMismatchError
from .base import AbstractPoincareVariant, PoincareInput
from .conic_line import ConicLineVariant
from .conics import ConicsVariant
from .general import GeneralVariant
from .lines import LinesVariant

# Registry of available variants, most specific first
POINCARE_VARIANTS = {
    "lines": LinesVariant,
    "cl": ConicLineVariant,
    "conics": ConicsVariant,
    "general": GeneralVariant,
}


def get_variant(name: str) -> Optional[Type[AbstractPoincareVariant]]:
    """Get a variant class by name.

    Args:
        name: Name of the variant (e.g., 'cl')

    Returns:
        Variant class, or None if not found
    """
    return POINCARE_VARIANTS.get(name)


def select_variant(source: PoincareInput) -> AbstractPoincareVariant:
    """Pick the most specific variant whose hypotheses hold.

    Raises:
        VariantMismatchError: no variant applies
    """
    for variant_class in POINCARE_VARIANTS.values():
        variant = variant_class()
        if variant.applies_to(source):
            return variant
    raise VariantMismatchError(
        f"No Poincaré variant applies to {AbstractPoincareVariant._describe(source)}"
    )


__all__ = [
    "AbstractPoincareVariant",
    "ConicLineVariant",
    "ConicsVariant",
    "GeneralVariant",
    "LinesVariant",
    "POINCARE_VARIANTS",
    "PoincareInput",
    "get_variant",
    "select_variant",
]
