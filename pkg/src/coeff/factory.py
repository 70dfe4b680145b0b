"""Construction of coefficient groups from ``CoeffSpec`` documents."""

from src.coeff.group import (
    CoeffGroup,
    CoeffKind,
    cyclic_group,
    free_abelian_target,
    table_group,
)
from src.exceptions import ParseError, UnsupportedFamilyError
from src.records import CoeffSpec


def make_coeff_group(spec: CoeffSpec) -> CoeffGroup:
    """
    Build and validate the coefficient group described by ``spec``.

    Raises:
        UnsupportedFamilyError: If the kind is unknown.
        ParseError: If a required field is missing.
        NotAGroupError: If a table violates a group axiom.
    """
    try:
        kind = CoeffKind(spec.kind)
    except ValueError as e:
        raise UnsupportedFamilyError(spec.kind) from e

    if kind == CoeffKind.CYCLIC:
        if spec.n is None:
            raise ParseError("cyclic coefficient group", "missing n")
        return cyclic_group(spec.n)
    if kind == CoeffKind.FREE_ABELIAN:
        if spec.k is None:
            raise ParseError("free abelian coefficient group", "missing k")
        return free_abelian_target(spec.k)
    if spec.elements is None or spec.table is None:
        raise ParseError("table coefficient group", "missing elements or table")
    return table_group(spec.elements, spec.table)


def coeff_spec_of(coeff: CoeffGroup) -> CoeffSpec:
    """The ``CoeffSpec`` that rebuilds ``coeff``."""
    if coeff.kind == CoeffKind.CYCLIC:
        return CoeffSpec(kind="cyclic", n=coeff.size)
    if coeff.kind == CoeffKind.FREE_ABELIAN:
        return CoeffSpec(kind="free_abelian", k=coeff.size)
    return CoeffSpec(
        kind="table",
        elements=list(coeff.names),
        table=[[coeff.names[v] for v in row] for row in coeff.table],
    )
