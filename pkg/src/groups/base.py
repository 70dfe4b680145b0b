"""Group contexts: normal-form arithmetic, word metric, balls and relators.

A ``GroupContext`` is immutable after construction apart from its memo store
(balls and the breadth-first search table), which is safe under concurrent
readers and idempotent under concurrent fills.
"""

import re
import threading
from abc import ABC, abstractmethod
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from typing import NamedTuple

from src.cache import MemoStore
from src.constants import DEFAULT_BALL_CAP, DEFAULT_BFS_CAP
from src.exceptions import (
    BallTooLargeError,
    ParseError,
    RadiusBudgetExceededError,
    TorsionElementError,
    UntwistError,
)

# Normal forms are hashable, totally ordered tuples (family specific)
Elem = tuple

_TOKEN = re.compile(r"^([A-Za-z]+\d*)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class Letter:
    """A generator in the symmetric generating set S."""

    name: str
    value: Elem
    index: int
    inverse_index: int


Word = tuple[Letter, ...]


class TorsionInfo(NamedTuple):
    """Answer of ``is_torsion``; ``order`` is None for infinite order."""

    is_torsion: bool
    order: int | None


@dataclass(frozen=True)
class Ball:
    """The ball B(r) in deterministic (length, normal form) order."""

    radius: int
    elements: tuple[Elem, ...]
    lengths: tuple[int, ...]
    _members: dict[Elem, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_members", dict(zip(self.elements, self.lengths)))

    def __contains__(self, element: object) -> bool:
        return element in self._members

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Elem]:
        return iter(self.elements)

    def length(self, element: Elem) -> int:
        """Word length of an element of the ball."""
        return self._members[element]

    def sphere(self, radius: int) -> tuple[Elem, ...]:
        """Elements of exact length ``radius``."""
        return tuple(g for g, n in zip(self.elements, self.lengths) if n == radius)


class _BfsTable:
    """Breadth-first layers of the Cayley graph from the identity.

    Layer ``n`` is sorted by normal form; ``parent[g] = (h, letter)`` with
    ``g = h * letter`` gives a geodesic spelling.
    """

    def __init__(self, group: "GroupContext"):
        self._group = group
        self._lock = threading.Lock()
        self.layers: list[tuple[Elem, ...]] = [(group.identity,)]
        self.dist: dict[Elem, int] = {group.identity: 0}
        self.parent: dict[Elem, tuple[Elem, Letter]] = {}

    @property
    def radius(self) -> int:
        return len(self.layers) - 1

    def extend_to(self, radius: int, cap: int, overflow: Callable[[], Exception]):
        """Grow the table to ``radius``; raise ``overflow()`` past ``cap`` elements."""
        with self._lock:
            while self.radius < radius:
                self._grow_layer(cap, overflow)

    def extend_until(
        self, target: Elem, cap: int, overflow: Callable[[], Exception]
    ) -> int:
        """Grow the table until ``target`` is reached and return its length."""
        with self._lock:
            while target not in self.dist:
                self._grow_layer(cap, overflow)
            return self.dist[target]

    def _grow_layer(self, cap: int, overflow: Callable[[], Exception]) -> None:
        depth = self.radius + 1
        multiply = self._group.multiply
        fresh: dict[Elem, tuple[Elem, Letter]] = {}
        for g in self.layers[-1]:
            for letter in self._group.letters:
                h = multiply(g, letter.value)
                if h not in self.dist and h not in fresh:
                    fresh[h] = (g, letter)
        if len(self.dist) + len(fresh) > cap:
            raise overflow()
        for h, origin in fresh.items():
            self.dist[h] = depth
            self.parent[h] = origin
        self.layers.append(tuple(sorted(fresh)))


class GroupContext(ABC):
    """A finitely generated group with canonical symmetric generators."""

    family: str = ""

    def __init__(
        self,
        letters: Iterable[Letter],
        identity: Elem,
        *,
        ball_cap: int = DEFAULT_BALL_CAP,
        bfs_cap: int = DEFAULT_BFS_CAP,
    ):
        self.letters: tuple[Letter, ...] = tuple(letters)
        self.identity = identity
        self.ball_cap = ball_cap
        self.bfs_cap = bfs_cap
        self._by_name = {letter.name: letter for letter in self.letters}
        self._memo = MemoStore()
        self._bfs_lock = threading.Lock()

    # --- family specific ---

    @abstractmethod
    def multiply(self, a: Elem, b: Elem) -> Elem:
        """Product ``a * b`` in normal form."""

    @abstractmethod
    def inverse(self, a: Elem) -> Elem:
        """Inverse of ``a`` in normal form."""

    @abstractmethod
    def is_torsion(self, a: Elem) -> TorsionInfo:
        """Decide whether ``a`` has finite order."""

    @abstractmethod
    def relator_names(self) -> list[list[str]]:
        """Defining relators as lists of letter names."""

    @abstractmethod
    def format_element(self, a: Elem) -> str:
        """Normal-form string of ``a``."""

    @abstractmethod
    def _parse_structured(self, text: str) -> Elem | None:
        """Parse the family's structured notation, or return None."""

    @abstractmethod
    def _monotone_power_bound(self, a: Elem, k: int) -> int:
        """A lower bound for ``ℓ(a^k)``, non-decreasing in k and unbounded."""

    def word_length(self, a: Elem) -> int:
        """Exact word length ``ℓ_S(a)`` (breadth-first search by default)."""
        return self._bfs().extend_until(a, self.bfs_cap, self._bfs_overflow(a))

    def spell(self, a: Elem) -> Word:
        """Canonical geodesic word for ``a``."""
        self.word_length(a)
        table = self._bfs()
        letters: list[Letter] = []
        while a != self.identity:
            a, letter = table.parent[a]
            letters.append(letter)
        return tuple(reversed(letters))

    def within(self, a: Elem, radius: int) -> bool:
        """Whether ``ℓ_S(a) <= radius``."""
        return self.word_length(a) <= radius

    # --- shared machinery ---

    def letter(self, name: str) -> Letter:
        """Look up a letter by name."""
        try:
            return self._by_name[name]
        except KeyError as e:
            raise ParseError("generator", name) from e

    def inverse_letter(self, letter: Letter) -> Letter:
        return self.letters[letter.inverse_index]

    def power(self, a: Elem, k: int) -> Elem:
        """``a^k`` by repeated squaring; negative k uses the inverse."""
        if k < 0:
            return self.power(self.inverse(a), -k)
        result = self.identity
        base = a
        while k:
            if k & 1:
                result = self.multiply(result, base)
            base = self.multiply(base, base)
            k >>= 1
        return result

    def evaluate_word(self, word: Iterable[Letter]) -> Elem:
        """Product of the letters of ``word`` read left to right."""
        result = self.identity
        for letter in word:
            result = self.multiply(result, letter.value)
        return result

    def relators(self) -> list[Word]:
        """Finite defining relator set as words over S."""
        return [
            tuple(self.letter(name) for name in names)
            for names in self.relator_names()
        ]

    def ball(self, radius: int) -> Ball:
        """Exact ball B(radius), memoized."""
        if radius < 0:
            return Ball(radius, (), ())
        return self._memo.get_or_compute(("ball", radius), lambda: self._ball(radius))

    def _ball(self, radius: int) -> Ball:
        table = self._bfs()
        table.extend_to(
            radius, self.ball_cap, lambda: BallTooLargeError(radius, self.ball_cap)
        )
        elements: list[Elem] = []
        lengths: list[int] = []
        for depth in range(radius + 1):
            layer = table.layers[depth]
            elements.extend(layer)
            lengths.extend([depth] * len(layer))
        if len(elements) > self.ball_cap:
            raise BallTooLargeError(radius, self.ball_cap)
        return Ball(radius, tuple(elements), tuple(lengths))

    def sort_key(self, a: Elem) -> tuple[int, Elem]:
        """Deterministic ordering: word length, then normal form."""
        return (self.word_length(a), a)

    def require_non_torsion(self, a: Elem) -> None:
        info = self.is_torsion(a)
        if info.is_torsion:
            raise TorsionElementError(self.format_element(a), info.order or 1)

    def power_length_lower_bound(self, a: Elem, k: int) -> int:
        """Certified lower bound for ``ℓ_S(a^k)`` (exact for closed-form families)."""
        self.require_non_torsion(a)
        return self.word_length(self.power(a, k))

    def escape_index(self, a: Elem, radius: int) -> int:
        """Least K with ``ℓ_S(a^k) > radius`` for every k >= K (a non-torsion)."""
        self.require_non_torsion(a)
        k = 1
        while self._monotone_power_bound(a, k) <= radius:
            k += 1
        return k

    # --- parsing ---

    def parse_element(self, text: str) -> Elem:
        """Parse a normal-form string or a word of letter names."""
        stripped = text.strip()
        if stripped in ("e", ""):
            return self.identity
        structured = self._parse_structured(stripped)
        if structured is not None:
            return structured
        return self.evaluate_word(self.parse_word(stripped))

    def parse_word(self, text: str | Iterable[str]) -> Word:
        """Parse ``"a b^-1 a^2"`` (or a list of tokens) into a word."""
        tokens = text.split() if isinstance(text, str) else list(text)
        word: list[Letter] = []
        for token in tokens:
            if token in self._by_name:
                word.append(self._by_name[token])
                continue
            match = _TOKEN.match(token)
            if not match or match.group(1) not in self._by_name:
                raise ParseError("word", token)
            letter = self._by_name[match.group(1)]
            exponent = int(match.group(2) or 1)
            if exponent < 0:
                letter = self.inverse_letter(letter)
            word.extend([letter] * abs(exponent))
        return tuple(word)

    def format_word(self, word: Iterable[Letter]) -> list[str]:
        return [letter.name for letter in word]

    # --- internals ---

    def _bfs(self) -> _BfsTable:
        with self._bfs_lock:
            table = self._memo.get("bfs")
            if table is None:
                table = self._memo.set("bfs", _BfsTable(self))
            return table

    def _bfs_overflow(self, a: Elem) -> Callable[[], UntwistError]:
        return lambda: RadiusBudgetExceededError(self.format_element(a), self.bfs_cap)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.describe()})"

    def describe(self) -> str:
        return self.family


def make_letter_pairs(
    names_and_values: Iterable[tuple[str, Elem, str, Elem]],
) -> list[Letter]:
    """Build letters from ``(name, value, inverse_name, inverse_value)`` rows."""
    letters: list[Letter] = []
    for name, value, inverse_name, inverse_value in names_and_values:
        base = len(letters)
        letters.append(Letter(name, value, base, base + 1))
        letters.append(Letter(inverse_name, inverse_value, base + 1, base))
    return letters
