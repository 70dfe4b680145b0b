"""Group core: normal forms, word metric, balls and relators.

Four families with decidable word problem cover the one-, two- and
infinitely-ended regimes:
- FreeAbelianGroup: Z^d
- FreeGroup: F_r
- FreeProductCyclicGroup: Z/n_1 * ... * Z/n_k
- HeisenbergGroup: the discrete Heisenberg group
"""

from src.groups.base import Ball, Elem, GroupContext, Letter, TorsionInfo, Word
from src.groups.factory import group_spec_of, make_group
from src.groups.free import FreeGroup
from src.groups.free_abelian import FreeAbelianGroup
from src.groups.free_product import FreeProductCyclicGroup
from src.groups.heisenberg import HeisenbergGroup
from src.groups.types import GroupFamily

__all__ = [
    "Ball",
    "Elem",
    "FreeAbelianGroup",
    "FreeGroup",
    "FreeProductCyclicGroup",
    "GroupContext",
    "GroupFamily",
    "HeisenbergGroup",
    "Letter",
    "TorsionInfo",
    "Word",
    "group_spec_of",
    "make_group",
]
