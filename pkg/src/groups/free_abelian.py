"""Free abelian groups Z^d with generators ±e_1, …, ±e_d."""

import re

from src.groups.base import Elem, GroupContext, Letter, TorsionInfo, make_letter_pairs

_VECTOR = re.compile(r"^\(\s*-?\d+(\s*,\s*-?\d+)*\s*\)$")
_INTEGER = re.compile(r"^-?\d+$")


class FreeAbelianGroup(GroupContext):
    """Z^d; elements are integer vectors, ``ℓ_S`` is the ℓ1 norm."""

    family = "free_abelian"

    def __init__(self, rank: int, **caps: int):
        self.rank = rank
        rows = []
        for i in range(rank):
            unit = tuple(1 if j == i else 0 for j in range(rank))
            neg = tuple(-v for v in unit)
            rows.append((f"e{i + 1}", unit, f"e{i + 1}^-1", neg))
        super().__init__(make_letter_pairs(rows), (0,) * rank, **caps)

    def multiply(self, a: Elem, b: Elem) -> Elem:
        return tuple(x + y for x, y in zip(a, b))

    def inverse(self, a: Elem) -> Elem:
        return tuple(-x for x in a)

    def power(self, a: Elem, k: int) -> Elem:
        return tuple(k * x for x in a)

    def word_length(self, a: Elem) -> int:
        return sum(abs(x) for x in a)

    def within(self, a: Elem, radius: int) -> bool:
        return self.word_length(a) <= radius

    def spell(self, a: Elem) -> tuple[Letter, ...]:
        word: list[Letter] = []
        for i, coordinate in enumerate(a):
            letter = self.letters[2 * i] if coordinate > 0 else self.letters[2 * i + 1]
            word.extend([letter] * abs(coordinate))
        return tuple(word)

    def is_torsion(self, a: Elem) -> TorsionInfo:
        if any(a):
            return TorsionInfo(False, None)
        return TorsionInfo(True, 1)

    def relator_names(self) -> list[list[str]]:
        return [
            [f"e{i + 1}", f"e{j + 1}", f"e{i + 1}^-1", f"e{j + 1}^-1"]
            for i in range(self.rank)
            for j in range(i + 1, self.rank)
        ]

    def _monotone_power_bound(self, a: Elem, k: int) -> int:
        return k * self.word_length(a)

    def format_element(self, a: Elem) -> str:
        return "(" + ",".join(str(x) for x in a) + ")"

    def _parse_structured(self, text: str) -> Elem | None:
        if _VECTOR.match(text):
            vector = tuple(int(part) for part in text.strip("() ").split(","))
            return vector if len(vector) == self.rank else None
        if self.rank == 1 and _INTEGER.match(text):
            return (int(text),)
        return None

    def describe(self) -> str:
        return f"Z^{self.rank}"
