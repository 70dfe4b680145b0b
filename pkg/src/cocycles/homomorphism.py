"""Homomorphisms G -> H given by their values on the generators."""

from collections.abc import Mapping
from dataclasses import dataclass

from src.coeff import CoeffGroup, HElem
from src.exceptions import HomomorphismInvalidError
from src.groups import Elem, GroupContext, Letter


@dataclass(frozen=True)
class Homomorphism:
    """``φ: G -> H`` as one value per letter, indexed like ``group.letters``."""

    group: GroupContext
    coeff: CoeffGroup
    values: tuple[HElem, ...]

    def letter_value(self, letter: Letter) -> HElem:
        return self.values[letter.index]

    def __call__(self, g: Elem) -> HElem:
        return self.coeff.product(
            [self.letter_value(letter) for letter in self.group.spell(g)]
        )

    def as_mapping(self) -> dict[str, HElem]:
        return {letter.name: self.values[letter.index] for letter in self.group.letters}


def homomorphism_from_values(
    group: GroupContext, coeff: CoeffGroup, values: Mapping[str, HElem]
) -> Homomorphism:
    """
    Build ``φ`` from values on some letters; missing inverses are filled in.

    Raises:
        HomomorphismInvalidError: If a letter has no value, ``φ(s^-1) != φ(s)^-1``,
            or a relator does not map to the identity.
    """
    phi = Homomorphism(group, coeff, _fill_inverses(group, coeff, values))
    for relator in group.relators():
        image = coeff.product([phi.letter_value(letter) for letter in relator])
        if image != coeff.identity:
            raise HomomorphismInvalidError(" ".join(group.format_word(relator)))
    return phi


def _fill_inverses(
    group: GroupContext, coeff: CoeffGroup, values: Mapping[str, HElem]
) -> tuple[HElem, ...]:
    filled = [values.get(letter.name) for letter in group.letters]
    for letter in group.letters:
        inverse = group.inverse_letter(letter)
        own, other = filled[letter.index], filled[inverse.index]
        if own is None and other is None:
            raise HomomorphismInvalidError(letter.name)
        if own is None:
            filled[letter.index] = coeff.inverse(other)
        elif other is not None and coeff.inverse(own) != other:
            raise HomomorphismInvalidError(f"{letter.name} {inverse.name}")
    return tuple(filled)  # type: ignore[arg-type]


def trivial_homomorphism(group: GroupContext, coeff: CoeffGroup) -> Homomorphism:
    return Homomorphism(group, coeff, (coeff.identity,) * len(group.letters))
