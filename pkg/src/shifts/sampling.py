"""Seeded random points of a subshift over a constant background."""

import random
from collections.abc import Sequence

from src.groups import Elem
from src.shifts.configuration import Configuration
from src.shifts.subshift import ShiftKind, SubshiftSpec


def random_configuration(
    spec: SubshiftSpec,
    background: Configuration,
    elements: Sequence[Elem],
    rng: random.Random,
) -> Configuration:
    """
    A random member of X with support in ``elements``.

    Cells are visited in the given order; a random symbol is kept only if the
    windows through that cell stay allowed, so the result is always in X.
    """
    symbols = spec.alphabet.symbols
    if spec.kind == ShiftKind.FULL:
        return background.with_overlay({g: rng.choice(symbols) for g in elements})

    overlay: dict[Elem, str] = {}

    def read(g: Elem) -> str:
        return overlay.get(g, background.background)

    for g in elements:
        symbol = rng.choice(symbols)
        if symbol == background.background:
            continue
        overlay[g] = symbol
        if not all(spec.allows_at(read, h) for h in spec.check_set([g])):
            del overlay[g]
    return background.with_overlay(overlay)
