"""Periodic approximation of homoclinic points on Z^d.

``z`` is copied onto every coset of ``L = (K Z)^d`` that meets the separation
set ``F_2 = (F_1 ∪ Ω) D^-1 D`` with ``F_1 = F D^-1``, ``F = supp(z)`` and ``D``
the SFT window. Distinct elements of ``F_2`` must lie in distinct cosets.
"""

from collections.abc import Iterable

from src.exceptions import (
    NotInSubshiftError,
    ParseError,
    PeriodTooSmallError,
)
from src.groups import Elem, FreeAbelianGroup
from src.shifts.configuration import Configuration, PeriodicConfiguration
from src.shifts.subshift import ShiftKind, SubshiftSpec, membership


def _product(group: FreeAbelianGroup, left: set[Elem], right: set[Elem]) -> set[Elem]:
    return {group.multiply(a, b) for a in left for b in right}


def separation_set(
    spec: SubshiftSpec, z: Configuration, omega: Iterable[Elem]
) -> set[Elem]:
    """``F_2 = (F D^-1 ∪ Ω) D^-1 D``."""
    group = spec.group
    window = set(spec.sft_window)
    window_inverse = {group.inverse(d) for d in window}
    f1 = _product(group, set(z.support), window_inverse)
    return _product(group, _product(group, f1 | set(omega), window_inverse), window)


def periodize_zd(
    spec: SubshiftSpec,
    z: Configuration,
    omega: Iterable[Elem],
    period: int,
) -> PeriodicConfiguration:
    """
    Build the ``(period Z)^d``-periodic point agreeing with ``z`` on ``Ω``.

    Raises:
        ParseError: If the group is not Z^d or the shift is a full shift.
        NotInSubshiftError: If ``z`` is not in X.
        PeriodTooSmallError: If two elements of the separation set share a coset.
    """
    group = spec.group
    if not isinstance(group, FreeAbelianGroup):
        raise ParseError("periodization group", group.describe())
    if spec.kind == ShiftKind.FULL:
        raise ParseError("periodization shift", "expected an SFT or golden mean shift")
    if period < 1:
        raise PeriodTooSmallError(period, "e", "e")
    if not membership(spec, z):
        raise NotInSubshiftError(group.format_element(next(iter(z.support))))

    cosets: dict[Elem, Elem] = {}
    for g in sorted(separation_set(spec, z, omega)):
        residue = tuple(v % period for v in g)
        if residue in cosets:
            raise PeriodTooSmallError(
                period,
                group.format_element(cosets[residue]),
                group.format_element(g),
            )
        cosets[residue] = g

    cells = {tuple(v % period for v in g): symbol for g, symbol in z.cells}
    return PeriodicConfiguration(
        group, z.alphabet, z.background, period, tuple(sorted(cells.items()))
    )
