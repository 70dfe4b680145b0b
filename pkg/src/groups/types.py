"""Group family definitions."""

from enum import Enum


class GroupFamily(str, Enum):
    """Supported group families (all have a decidable word problem)."""

    FREE_ABELIAN = "free_abelian"
    FREE = "free"
    FREE_PRODUCT_CYCLIC = "free_product_cyclic"
    HEISENBERG = "heisenberg"
