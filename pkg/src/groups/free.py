"""Free groups F_r; elements are freely reduced words.

A reduced word is stored as a tuple of non-zero integers: ``i`` for the i-th
generator and ``-i`` for its inverse.
"""

from src.groups.base import Elem, GroupContext, Letter, TorsionInfo, make_letter_pairs

# "e" is reserved for the identity
GENERATOR_NAMES = "abcdfghi"


def _cyclic_core(word: Elem) -> tuple[Elem, int]:
    """Split ``u w u^-1`` into the cyclically reduced ``w`` and ``|u|``."""
    start, end = 0, len(word)
    while end - start >= 2 and word[start] == -word[end - 1]:
        start += 1
        end -= 1
    return word[start:end], start


class FreeGroup(GroupContext):
    """The free group on ``rank`` generators."""

    family = "free"

    def __init__(self, rank: int, **caps: int):
        self.rank = rank
        rows = [
            (name, (i + 1,), f"{name}^-1", (-(i + 1),))
            for i, name in enumerate(GENERATOR_NAMES[:rank])
        ]
        super().__init__(make_letter_pairs(rows), (), **caps)

    def multiply(self, a: Elem, b: Elem) -> Elem:
        out = list(a)
        for symbol in b:
            if out and out[-1] == -symbol:
                out.pop()
            else:
                out.append(symbol)
        return tuple(out)

    def inverse(self, a: Elem) -> Elem:
        return tuple(-symbol for symbol in reversed(a))

    def word_length(self, a: Elem) -> int:
        return len(a)

    def within(self, a: Elem, radius: int) -> bool:
        return len(a) <= radius

    def spell(self, a: Elem) -> tuple[Letter, ...]:
        return tuple(
            self.letters[2 * (s - 1)] if s > 0 else self.letters[2 * (-s - 1) + 1]
            for s in a
        )

    def is_torsion(self, a: Elem) -> TorsionInfo:
        if a:
            return TorsionInfo(False, None)
        return TorsionInfo(True, 1)

    def relator_names(self) -> list[list[str]]:
        return []

    def _monotone_power_bound(self, a: Elem, k: int) -> int:
        core, _ = _cyclic_core(a)
        return k * len(core)

    def format_element(self, a: Elem) -> str:
        if not a:
            return "e"
        return " ".join(self.spell_names(a))

    def spell_names(self, a: Elem) -> list[str]:
        return [letter.name for letter in self.spell(a)]

    def _parse_structured(self, text: str) -> Elem | None:
        return None

    def describe(self) -> str:
        return f"F_{self.rank}"
