"""The discrete Heisenberg group ⟨x, y | [x,[x,y]], [y,[x,y]]⟩.

Elements are triples ``(a, b, c)`` standing for ``x^a y^b z^c`` with
``z = x y x^-1 y^-1`` central. There is no closed form for the word metric
here; lengths come from a memoized breadth-first search with a hard cap.
"""

import re
from math import isqrt

from src.groups.base import Elem, GroupContext, TorsionInfo, make_letter_pairs

_TRIPLE = re.compile(r"^\(\s*-?\d+\s*,\s*-?\d+\s*,\s*-?\d+\s*\)$")

_COMMUTATOR = ["x", "y", "x^-1", "y^-1"]
_COMMUTATOR_INVERSE = ["y", "x", "y^-1", "x^-1"]


def _isoperimetric_bound(area: int) -> int:
    """Least L with L^2 >= 16|area|, a length bound for closed words of that area."""
    if area == 0:
        return 0
    target = 16 * abs(area)
    root = isqrt(target)
    return root if root * root == target else root + 1


class HeisenbergGroup(GroupContext):
    """Upper unitriangular integer 3x3 matrices with generators x^{±1}, y^{±1}."""

    family = "heisenberg"

    def __init__(self, **caps: int):
        rows = [
            ("x", (1, 0, 0), "x^-1", (-1, 0, 0)),
            ("y", (0, 1, 0), "y^-1", (0, -1, 0)),
        ]
        super().__init__(make_letter_pairs(rows), (0, 0, 0), **caps)

    def multiply(self, a: Elem, b: Elem) -> Elem:
        # y^b x^a' = x^a' y^b z^(-a'b)
        return (a[0] + b[0], a[1] + b[1], a[2] + b[2] - b[0] * a[1])

    def inverse(self, a: Elem) -> Elem:
        return (-a[0], -a[1], -a[2] - a[0] * a[1])

    def is_torsion(self, a: Elem) -> TorsionInfo:
        if a == self.identity:
            return TorsionInfo(True, 1)
        return TorsionInfo(False, None)

    def relator_names(self) -> list[list[str]]:
        return [
            ["x", *_COMMUTATOR, "x^-1", *_COMMUTATOR_INVERSE],
            ["y", *_COMMUTATOR, "y^-1", *_COMMUTATOR_INVERSE],
        ]

    def length_lower_bound(self, a: Elem) -> int:
        """``|a| + |b|`` from the abelianisation, or the area bound on the centre."""
        horizontal = abs(a[0]) + abs(a[1])
        if horizontal:
            return horizontal
        return _isoperimetric_bound(a[2])

    def within(self, a: Elem, radius: int) -> bool:
        if self.length_lower_bound(a) > radius:
            return False
        return self.word_length(a) <= radius

    def _monotone_power_bound(self, a: Elem, k: int) -> int:
        horizontal = abs(a[0]) + abs(a[1])
        if horizontal:
            return k * horizontal
        return _isoperimetric_bound(k * a[2])

    def power_length_lower_bound(self, a: Elem, k: int) -> int:
        """Monotone bound, replaced by the exact length when already explored."""
        self.require_non_torsion(a)
        bound = max(self._monotone_power_bound(a, k), 0)
        table = self._bfs()
        target = self.power(a, k)
        if target in table.dist:
            return table.dist[target]
        return max(bound, table.radius + 1)

    def format_element(self, a: Elem) -> str:
        return f"({a[0]},{a[1]},{a[2]})"

    def _parse_structured(self, text: str) -> Elem | None:
        if _TRIPLE.match(text):
            a, b, c = (int(part) for part in text.strip("() ").split(","))
            return (a, b, c)
        return None

    def describe(self) -> str:
        return "H3(Z)"
