"""Discrete coefficient groups H: finite tables, Z/n and Z^k.

Elements (``HElem``) are canonical: a table index, a residue in ``[0, n)``, or an
integer tuple. The metric is the discrete one, which is bi-invariant for every
group, so limit computations over H are exact.
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations, product
from typing import Any

from src.constants import MAX_RANK, MAX_TABLE_SIZE
from src.exceptions import NotAGroupError, ParameterOutOfRangeError, ParseError

HElem = int | tuple[int, ...]

_VECTOR = re.compile(r"^\(\s*-?\d+(\s*,\s*-?\d+)*\s*\)$")
_INTEGER = re.compile(r"^-?\d+$")


class CoeffKind(str, Enum):
    """Supported coefficient group kinds."""

    TABLE = "table"
    CYCLIC = "cyclic"
    FREE_ABELIAN = "free_abelian"


@dataclass(frozen=True)
class CoeffGroup:
    """A discrete group H with a canonical element encoding."""

    kind: CoeffKind
    size: int
    names: tuple[str, ...] = ()
    table: tuple[tuple[int, ...], ...] = ()
    _identity: int = 0
    _inverses: tuple[int, ...] = field(default=(), repr=False)

    @property
    def identity(self) -> HElem:
        if self.kind == CoeffKind.FREE_ABELIAN:
            return (0,) * self.size
        if self.kind == CoeffKind.CYCLIC:
            return 0
        return self._identity

    @property
    def is_finite(self) -> bool:
        return self.kind != CoeffKind.FREE_ABELIAN

    def multiply(self, a: HElem, b: HElem) -> HElem:
        if self.kind == CoeffKind.CYCLIC:
            return (a + b) % self.size  # type: ignore[operator]
        if self.kind == CoeffKind.FREE_ABELIAN:
            return tuple(x + y for x, y in zip(a, b))  # type: ignore[arg-type]
        return self.table[a][b]  # type: ignore[index]

    def inverse(self, a: HElem) -> HElem:
        if self.kind == CoeffKind.CYCLIC:
            return (-a) % self.size  # type: ignore[operator]
        if self.kind == CoeffKind.FREE_ABELIAN:
            return tuple(-x for x in a)  # type: ignore[union-attr]
        return self._inverses[a]  # type: ignore[index]

    def divide_left(self, a: HElem, b: HElem) -> HElem:
        """``a^-1 b``."""
        return self.multiply(self.inverse(a), b)

    def power(self, a: HElem, k: int) -> HElem:
        if k < 0:
            return self.power(self.inverse(a), -k)
        result = self.identity
        for _ in range(k):
            result = self.multiply(result, a)
        return result

    def product(self, values: list[HElem]) -> HElem:
        """Ordered product ``values[0] values[1] ...``."""
        result = self.identity
        for value in values:
            result = self.multiply(result, value)
        return result

    def elements(self) -> list[HElem]:
        """All elements of a finite H, in canonical order."""
        if not self.is_finite:
            raise ParameterOutOfRangeError("|H|", -1, 1, MAX_TABLE_SIZE)
        return list(range(self.size))

    @property
    def is_abelian(self) -> bool:
        if self.kind != CoeffKind.TABLE:
            return True
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(self.size)
            for b in range(a + 1, self.size)
        )

    def conjugacy_class(self, a: HElem) -> frozenset[HElem]:
        if self.is_abelian:
            return frozenset([a])
        return frozenset(
            self.multiply(self.multiply(g, a), self.inverse(g)) for g in self.elements()
        )

    def distance(self, a: HElem, b: HElem) -> int:
        """Discrete bi-invariant metric."""
        return 0 if a == b else 1

    def parse(self, value: Any) -> HElem:
        """Parse a JSON value (name, integer or vector string) into an element."""
        if self.kind == CoeffKind.TABLE:
            if isinstance(value, str) and value in self.names:
                return self.names.index(value)
            if isinstance(value, int) and 0 <= value < self.size:
                return value
            raise ParseError("coefficient", str(value))
        if self.kind == CoeffKind.CYCLIC:
            try:
                return int(value) % self.size
            except (TypeError, ValueError) as e:
                raise ParseError("coefficient", str(value)) from e
        return self._parse_vector(value)

    def _parse_vector(self, value: Any) -> tuple[int, ...]:
        if isinstance(value, list | tuple):
            vector = tuple(int(x) for x in value)
        elif isinstance(value, int) and self.size == 1:
            vector = (value,)
        elif isinstance(value, str) and _VECTOR.match(value.strip()):
            vector = tuple(int(x) for x in value.strip().strip("()").split(","))
        elif isinstance(value, str) and self.size == 1 and _INTEGER.match(value):
            vector = (int(value),)
        else:
            raise ParseError("coefficient", str(value))
        if len(vector) != self.size:
            raise ParseError("coefficient", str(value))
        return vector

    def format(self, a: HElem) -> str:
        if self.kind == CoeffKind.TABLE:
            return self.names[a]  # type: ignore[index]
        if self.kind == CoeffKind.CYCLIC:
            return str(a)
        return "(" + ",".join(str(x) for x in a) + ")"  # type: ignore[union-attr]

    def describe(self) -> str:
        if self.kind == CoeffKind.CYCLIC:
            return f"Z/{self.size}"
        if self.kind == CoeffKind.FREE_ABELIAN:
            return f"Z^{self.size}"
        return f"table group of order {self.size}"


def cyclic_group(n: int) -> CoeffGroup:
    """Z/n (``n = 1`` is the trivial group)."""
    if not 1 <= n <= MAX_TABLE_SIZE:
        raise ParameterOutOfRangeError("n", n, 1, MAX_TABLE_SIZE)
    return CoeffGroup(CoeffKind.CYCLIC, n)


def free_abelian_target(k: int) -> CoeffGroup:
    """Z^k as a target group."""
    if not 1 <= k <= MAX_RANK:
        raise ParameterOutOfRangeError("k", k, 1, MAX_RANK)
    return CoeffGroup(CoeffKind.FREE_ABELIAN, k)


def table_group(names: list[str], rows: list[list[Any]]) -> CoeffGroup:
    """
    Validate a multiplication table and build the group.

    Args:
        names: Element names, distinct.
        rows: Row-major table; ``rows[i][j]`` is ``names[i] * names[j]``, given as
            a name or an index.

    Returns:
        The validated group.

    Raises:
        ParameterOutOfRangeError: If the table has more than 256 elements.
        NotAGroupError: If an axiom fails; the witness names the offending elements.
        ParseError: If an entry is not an element.
    """
    n = len(names)
    if not 1 <= n <= MAX_TABLE_SIZE:
        raise ParameterOutOfRangeError("|H|", n, 1, MAX_TABLE_SIZE)
    if len(set(names)) != n:
        raise NotAGroupError("duplicate element names", tuple(names))
    index = {name: i for i, name in enumerate(names)}
    table = tuple(tuple(_entry(value, index, n) for value in row) for row in rows)
    if len(table) != n or any(len(row) != n for row in table):
        raise NotAGroupError("table is not square", (n,))
    identity = _identity_of(table)
    inverses = _inverses_of(table, identity, names)
    _check_associative(table, names)
    return CoeffGroup(CoeffKind.TABLE, n, tuple(names), table, identity, inverses)


def _identity_of(table: tuple[tuple[int, ...], ...]) -> int:
    n = len(table)
    identity = next(
        (
            e
            for e in range(n)
            if all(table[e][a] == a and table[a][e] == a for a in range(n))
        ),
        None,
    )
    if identity is None:
        raise NotAGroupError("no identity element", ())
    return identity


def _inverses_of(
    table: tuple[tuple[int, ...], ...], identity: int, names: list[str]
) -> tuple[int, ...]:
    n = len(table)
    inverses: list[int] = []
    for a in range(n):
        inverse = next(
            (b for b in range(n) if table[a][b] == identity == table[b][a]), None
        )
        if inverse is None:
            raise NotAGroupError("element without inverse", (names[a],))
        inverses.append(inverse)
    return tuple(inverses)


def _check_associative(table: tuple[tuple[int, ...], ...], names: list[str]) -> None:
    n = len(table)
    for a, b, c in product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise NotAGroupError("associativity fails", (names[a], names[b], names[c]))


def _entry(value: Any, index: dict[str, int], n: int) -> int:
    if isinstance(value, str) and value in index:
        return index[value]
    if isinstance(value, int) and not isinstance(value, bool) and 0 <= value < n:
        return value
    raise ParseError("table entry", str(value))


def _cycle_name(image: tuple[int, ...]) -> str:
    seen: set[int] = set()
    cycles: list[str] = []
    for start in range(len(image)):
        if start in seen or image[start] == start:
            continue
        cycle = []
        point = start
        while point not in seen:
            seen.add(point)
            cycle.append(str(point + 1))
            point = image[point]
        cycles.append("(" + "".join(cycle) + ")")
    return "".join(cycles) or "e"


def symmetric_group_table(degree: int = 3) -> tuple[list[str], list[list[str]]]:
    """
    Names and table of the symmetric group in cycle notation.

    Products follow function composition: ``(p * q)(i) = p(q(i))``, so ``q``
    acts first. Under this convention ``(12) * (23) = (123)``.
    """
    perms = list(permutations(range(degree)))
    names = [_cycle_name(p) for p in perms]
    by_perm = dict(zip(perms, names))
    rows = [
        [by_perm[tuple(p[q[i]] for i in range(degree))] for q in perms] for p in perms
    ]
    return names, rows
