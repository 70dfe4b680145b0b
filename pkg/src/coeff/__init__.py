"""Discrete coefficient groups H (finite tables, Z/n, Z^k)."""

from src.coeff.factory import coeff_spec_of, make_coeff_group
from src.coeff.group import (
    CoeffGroup,
    CoeffKind,
    HElem,
    cyclic_group,
    free_abelian_target,
    symmetric_group_table,
    table_group,
)

__all__ = [
    "CoeffGroup",
    "CoeffKind",
    "HElem",
    "coeff_spec_of",
    "cyclic_group",
    "free_abelian_target",
    "make_coeff_group",
    "symmetric_group_table",
    "table_group",
]
