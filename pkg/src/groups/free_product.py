"""Free products of finite cyclic groups Z/n_1 * … * Z/n_k.

Elements are alternating syllable tuples ``((i, e), …)`` with ``1 <= e < n_i``
and neighbouring syllables in different factors. A syllable ``s_i^e`` costs
``min(e, n_i - e)`` letters.
"""

from math import gcd

from src.groups.base import Elem, GroupContext, Letter, TorsionInfo, make_letter_pairs


class FreeProductCyclicGroup(GroupContext):
    """Free product of cyclic factors with generators ``s_i^{±1}``."""

    family = "free_product_cyclic"

    def __init__(self, orders: tuple[int, ...], **caps: int):
        self.orders = tuple(orders)
        rows = [
            (f"s{i}", ((i, 1),), f"s{i}^-1", ((i, n - 1),))
            for i, n in enumerate(self.orders, start=1)
        ]
        super().__init__(make_letter_pairs(rows), (), **caps)

    def _order(self, factor: int) -> int:
        return self.orders[factor - 1]

    def multiply(self, a: Elem, b: Elem) -> Elem:
        out = list(a)
        for factor, exponent in b:
            if out and out[-1][0] == factor:
                merged = (out.pop()[1] + exponent) % self._order(factor)
                if merged:
                    out.append((factor, merged))
            else:
                out.append((factor, exponent))
        return tuple(out)

    def inverse(self, a: Elem) -> Elem:
        return tuple((i, self._order(i) - e) for i, e in reversed(a))

    def _syllable_cost(self, factor: int, exponent: int) -> int:
        return min(exponent, self._order(factor) - exponent)

    def word_length(self, a: Elem) -> int:
        return sum(self._syllable_cost(i, e) for i, e in a)

    def within(self, a: Elem, radius: int) -> bool:
        return self.word_length(a) <= radius

    def spell(self, a: Elem) -> tuple[Letter, ...]:
        word: list[Letter] = []
        for factor, exponent in a:
            forward = self.letters[2 * (factor - 1)]
            backward = self.letters[2 * (factor - 1) + 1]
            if exponent <= self._order(factor) - exponent:
                word.extend([forward] * exponent)
            else:
                word.extend([backward] * (self._order(factor) - exponent))
        return tuple(word)

    def cyclic_reduction(self, a: Elem) -> tuple[Elem, Elem]:
        """Return ``(core, t)`` with ``a = t core t^-1`` and core cyclically reduced.

        A cyclically reduced core is empty, a single syllable, or has its first
        and last syllables in different factors.
        """
        core = a
        conjugator: Elem = ()
        while len(core) >= 2 and core[0][0] == core[-1][0]:
            head = (core[0],)
            core = self.multiply(self.multiply(self.inverse(head), core), head)
            conjugator = self.multiply(conjugator, head)
        return core, conjugator

    def is_torsion(self, a: Elem) -> TorsionInfo:
        core, _ = self.cyclic_reduction(a)
        if not core:
            return TorsionInfo(True, 1)
        if len(core) == 1:
            factor, exponent = core[0]
            n = self._order(factor)
            return TorsionInfo(True, n // gcd(exponent, n))
        return TorsionInfo(False, None)

    def relator_names(self) -> list[list[str]]:
        return [[f"s{i}"] * n for i, n in enumerate(self.orders, start=1)]

    def _monotone_power_bound(self, a: Elem, k: int) -> int:
        # ℓ(t w^k t^-1) >= k ℓ(w) - 2 ℓ(t), and w^k is reduced for a core w
        core, conjugator = self.cyclic_reduction(a)
        return max(0, k * self.word_length(core) - 2 * self.word_length(conjugator))

    def format_element(self, a: Elem) -> str:
        if not a:
            return "e"
        return " ".join(f"s{i}" if e == 1 else f"s{i}^{e}" for i, e in a)

    def _parse_structured(self, text: str) -> Elem | None:
        return None

    def describe(self) -> str:
        return " * ".join(f"Z/{n}" for n in self.orders)
