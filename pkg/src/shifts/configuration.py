"""Configurations over a group as finite overlays on a constant background."""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from src.constants import MAX_ALPHABET
from src.exceptions import ParameterOutOfRangeError, ParseError
from src.groups import Elem, GroupContext

if TYPE_CHECKING:
    from src.groups import FreeAbelianGroup

Pattern = dict[Elem, str]


@dataclass(frozen=True)
class Alphabet:
    """A finite symbol set with a designated background symbol."""

    symbols: tuple[str, ...]
    background: str

    def __post_init__(self) -> None:
        if not 1 <= len(self.symbols) <= MAX_ALPHABET:
            raise ParameterOutOfRangeError("|A|", len(self.symbols), 1, MAX_ALPHABET)
        if len(set(self.symbols)) != len(self.symbols):
            raise ParseError("alphabet", ",".join(self.symbols))
        if self.background not in self.symbols:
            raise ParseError("background symbol", self.background)

    @classmethod
    def of(cls, symbols: Iterable[str], background: str | None = None) -> "Alphabet":
        symbols = tuple(symbols)
        return cls(symbols, symbols[0] if background is None else background)

    def require(self, symbol: str) -> str:
        if symbol not in self.symbols:
            raise ParseError("symbol", symbol)
        return symbol

    def __len__(self) -> int:
        return len(self.symbols)


@dataclass(frozen=True)
class Configuration:
    """``x in A^G`` with ``x_g = overlay(g)`` if present, else ``background``.

    The overlay never maps to the background symbol, so equal configurations
    have equal cells.
    """

    group: GroupContext = field(compare=False, repr=False)
    alphabet: Alphabet
    background: str
    cells: tuple[tuple[Elem, str], ...]
    _lookup: dict[Elem, str] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_lookup", dict(self.cells))

    @classmethod
    def build(
        cls,
        group: GroupContext,
        alphabet: Alphabet,
        overlay: Mapping[Elem, str] | None = None,
        background: str | None = None,
    ) -> "Configuration":
        """Canonicalize an overlay (background entries are dropped)."""
        background = alphabet.background if background is None else background
        alphabet.require(background)
        cells = sorted(
            (g, alphabet.require(symbol))
            for g, symbol in (overlay or {}).items()
            if symbol != background
        )
        return cls(group, alphabet, background, tuple(cells))

    def at(self, g: Elem) -> str:
        return self._lookup.get(g, self.background)

    @property
    def support(self) -> frozenset[Elem]:
        return frozenset(self._lookup)

    @property
    def overlay(self) -> Mapping[Elem, str]:
        return self._lookup

    def is_constant(self) -> bool:
        return not self.cells

    def with_overlay(self, overlay: Mapping[Elem, str]) -> "Configuration":
        """Same background, new overlay."""
        return Configuration.build(self.group, self.alphabet, overlay, self.background)

    def shift(self, g: Elem) -> "Configuration":
        """``g x`` with ``(g x)_h = x_{g^-1 h}``."""
        return shift_action(g, self)

    def restrict(self, elements: Iterable[Elem]) -> Pattern:
        return restrict(self, elements)

    def support_radius(self) -> int:
        """Largest word length in the support (-1 when constant)."""
        return max((self.group.word_length(g) for g in self._lookup), default=-1)


def shift_action(g: Elem, x: Configuration) -> Configuration:
    """Translate the overlay: the symbol at ``h`` moves to ``g h``."""
    group = x.group
    moved = {group.multiply(g, h): symbol for h, symbol in x.cells}
    return Configuration.build(group, x.alphabet, moved, x.background)


def restrict(x: Configuration, elements: Iterable[Elem]) -> Pattern:
    """``x_F`` as a map from F to symbols."""
    return {g: x.at(g) for g in elements}


@dataclass(frozen=True)
class HomoclinicPair:
    """Two configurations that differ at finitely many elements."""

    first: Configuration
    second: Configuration

    def __post_init__(self) -> None:
        if (
            self.first.background != self.second.background
            or self.first.alphabet != self.second.alphabet
        ):
            raise ParseError("homoclinic pair", "backgrounds or alphabets differ")

    @property
    def difference(self) -> frozenset[Elem]:
        """``D = {g : x_g != x'_g}``."""
        candidates = self.first.support | self.second.support
        return frozenset(g for g in candidates if self.first.at(g) != self.second.at(g))

    def swapped(self) -> "HomoclinicPair":
        return HomoclinicPair(self.second, self.first)


@dataclass(frozen=True)
class PeriodicConfiguration:
    """A ``(K Z)^d``-periodic configuration on Z^d.

    ``cells`` maps residues in ``[0, K)^d`` to non-background symbols.
    """

    group: "FreeAbelianGroup" = field(compare=False, repr=False)
    alphabet: Alphabet
    background: str
    period: int
    cells: tuple[tuple[Elem, str], ...]
    _lookup: dict[Elem, str] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_lookup", dict(self.cells))

    def residue(self, g: Elem) -> Elem:
        return tuple(v % self.period for v in g)

    def at(self, g: Elem) -> str:
        return self._lookup.get(self.residue(g), self.background)

    def shift(self, g: Elem) -> "PeriodicConfiguration":
        moved = {
            self.residue(self.group.multiply(g, h)): symbol for h, symbol in self.cells
        }
        return PeriodicConfiguration(
            self.group,
            self.alphabet,
            self.background,
            self.period,
            tuple(sorted(moved.items())),
        )

    def restrict(self, elements: Iterable[Elem]) -> Pattern:
        return {g: self.at(g) for g in elements}

    def fundamental_domain(self) -> list[Elem]:
        """All residues ``[0, K)^d`` in lexicographic order."""
        domain: list[Elem] = [()]
        for _ in range(self.group.rank):
            domain = [g + (v,) for g in domain for v in range(self.period)]
        return domain
