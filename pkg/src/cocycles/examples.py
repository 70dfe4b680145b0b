"""Worked cocycles: the ``c(s, x) = x_s`` counterexamples and random coboundaries.

On Z and on free groups the cocycle ``c(s, x) = x_s`` (A = H = Z/2) is not
cohomologous to a homomorphism: the two constant configurations would force
``φ(s) = 0`` and ``φ(s) = 1``.
"""

import itertools
import random
from dataclasses import dataclass

from src.cocycles.homomorphism import Homomorphism, homomorphism_from_values
from src.cocycles.local import (
    LetterRule,
    LocalCocycle,
    coboundary_cocycle,
    make_local_cocycle,
)
from src.coeff import CoeffGroup, cyclic_group
from src.groups import (
    Elem,
    FreeAbelianGroup,
    FreeGroup,
    GroupContext,
)
from src.shifts import Alphabet, SubshiftSpec, full_shift

BINARY = Alphabet.of(["0", "1"])


def _read_cell(element: Elem) -> LetterRule:
    """``c(s, x) = x_element`` as an element of Z/2."""
    return LetterRule((element,), {("0",): 0, ("1",): 1})


def example_cocycle_z() -> LocalCocycle:
    """``c(1, x) = x_1`` on the full 2-shift over Z."""
    group = FreeAbelianGroup(1)
    generator = group.letter("e1")
    return make_local_cocycle(
        group,
        full_shift(group, BINARY),
        cyclic_group(2),
        {"e1": _read_cell(generator.value)},
    )


def example_cocycle_free(rank: int = 2) -> LocalCocycle:
    """``c(a_i, x) = x_{a_i}`` on the full 2-shift over the free group."""
    group = FreeGroup(rank)
    rules = {
        letter.name: _read_cell(letter.value)
        for letter in group.letters
        if letter.index < letter.inverse_index
    }
    return make_local_cocycle(group, full_shift(group, BINARY), cyclic_group(2), rules)


def non_extension_rules(group: FreeAbelianGroup) -> dict[str, LetterRule]:
    """``c(e_i, x) = x_{e_i}`` on Z^d; for d >= 2 the commutator relator fails."""
    return {
        letter.name: _read_cell(letter.value)
        for letter in group.letters
        if letter.index < letter.inverse_index
    }


@dataclass(frozen=True)
class CoboundaryInstance:
    """``c(s, x) = β(s x)^-1 φ(s) β(x)`` together with its ``β`` and ``φ``."""

    cocycle: LocalCocycle
    beta: LetterRule
    phi: Homomorphism


def random_transfer_rule(
    group: GroupContext,
    shift: SubshiftSpec,
    coeff: CoeffGroup,
    radius: int,
    rng: random.Random,
) -> LetterRule:
    """A uniformly random rule ``β: A^{B(radius)} -> H`` (H finite)."""
    cells = group.ball(radius).elements
    values = coeff.elements()
    table = {
        row: rng.choice(values)
        for row in itertools.product(shift.alphabet.symbols, repeat=len(cells))
    }
    return LetterRule(cells, table)


def random_coboundary_instance(
    rng: random.Random,
    group: GroupContext | None = None,
    coeff: CoeffGroup | None = None,
    radius: int = 1,
) -> CoboundaryInstance:
    """
    A random cohomologically trivial cocycle on the full 2-shift.

    Defaults to Z^2 with H = Z/2 and ``β`` read on ``B(1)``; ``φ`` is drawn on
    the letters and must respect the relators (always true for abelian H on
    Z^d).
    """
    group = group or FreeAbelianGroup(2)
    coeff = coeff or cyclic_group(2)
    shift = full_shift(group, BINARY)
    beta = random_transfer_rule(group, shift, coeff, radius, rng)
    values = {
        letter.name: rng.choice(coeff.elements())
        for letter in group.letters
        if letter.index < letter.inverse_index
    }
    phi = homomorphism_from_values(group, coeff, values)
    return CoboundaryInstance(coboundary_cocycle(shift, beta, phi), beta, phi)
