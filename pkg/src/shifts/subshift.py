"""Subshifts: full shift, shifts of finite type and generalized golden mean shifts.

For a finite-overlay configuration only the translated windows meeting the
overlay need checking; every other window sees the constant background, which
is required to be admissible.
"""

import itertools
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from enum import Enum

from src.exceptions import (
    BackgroundNotAdmissibleError,
    CapExceededError,
    ParseError,
)
from src.groups import Elem, GroupContext
from src.shifts.configuration import (
    Alphabet,
    Configuration,
    Pattern,
    PeriodicConfiguration,
)


class ShiftKind(str, Enum):
    FULL = "full"
    SFT = "sft"
    GOLDEN_MEAN = "golden_mean"


@dataclass(frozen=True)
class SubshiftSpec:
    """A subshift ``X`` of ``A^G``.

    SFT: ``x in X`` iff ``(x_{h f})_{f in window}`` is allowed for every h.
    Golden mean: for every h and j some ``h f`` with ``f in windows[j]`` reads "0".
    """

    kind: ShiftKind
    group: GroupContext = field(compare=False, repr=False)
    alphabet: Alphabet
    window: tuple[Elem, ...] = ()
    allowed: frozenset[tuple[str, ...]] = frozenset()
    windows: tuple[tuple[Elem, ...], ...] = ()

    def __post_init__(self) -> None:
        if self.kind == ShiftKind.SFT and self.group.identity not in self.window:
            raise ParseError("SFT window", "window must contain the identity")
        if self.kind == ShiftKind.GOLDEN_MEAN:
            if "0" not in self.alphabet.symbols:
                raise ParseError("golden mean alphabet", "symbol 0 is required")
            if not self.windows or not all(self.windows):
                raise ParseError("golden mean windows", "each F_j must be nonempty")

    @property
    def constraint_windows(self) -> tuple[tuple[Elem, ...], ...]:
        if self.kind == ShiftKind.SFT:
            return (self.window,)
        if self.kind == ShiftKind.GOLDEN_MEAN:
            return self.windows
        return ()

    @property
    def sft_window(self) -> tuple[Elem, ...]:
        """A single window defining X as an SFT (golden mean: ``∪F_j ∪ {e}``)."""
        if self.kind == ShiftKind.SFT:
            return self.window
        union = {self.group.identity}
        for window in self.windows:
            union.update(window)
        return tuple(sorted(union, key=self.group.sort_key))

    def window_radius(self) -> int:
        """Least r_0 with every constraint window inside B(r_0)."""
        return max(
            (
                self.group.word_length(f)
                for window in self.constraint_windows
                for f in window
            ),
            default=0,
        )

    def allows_at(self, read: Callable[[Elem], str], h: Elem) -> bool:
        """Check the constraint windows translated to ``h`` (``read`` maps g to x_g)."""
        multiply = self.group.multiply
        if self.kind == ShiftKind.SFT:
            return tuple(read(multiply(h, f)) for f in self.window) in self.allowed
        if self.kind == ShiftKind.GOLDEN_MEAN:
            return all(
                any(read(multiply(h, f)) == "0" for f in window)
                for window in self.windows
            )
        return True

    def constant_allowed(self, symbol: str) -> bool:
        if self.kind == ShiftKind.SFT:
            return (symbol,) * len(self.window) in self.allowed
        if self.kind == ShiftKind.GOLDEN_MEAN:
            return symbol == "0"
        return True

    def require_background(self, symbol: str) -> None:
        if not self.constant_allowed(symbol):
            raise BackgroundNotAdmissibleError(symbol)

    def check_set(self, support: Iterable[Elem]) -> list[Elem]:
        """``{h : h F meets the support}`` over all constraint windows, sorted."""
        group = self.group
        checks: set[Elem] = set()
        for s in support:
            for window in self.constraint_windows:
                for f in window:
                    checks.add(group.multiply(s, group.inverse(f)))
        return sorted(checks, key=group.sort_key)

    def contains(self, x: Configuration) -> bool:
        return membership(self, x)


def membership(spec: SubshiftSpec, x: Configuration) -> bool:
    """
    Decide ``x in X`` exactly for a finite-overlay configuration.

    Raises:
        BackgroundNotAdmissibleError: If the constant background is not in X.
    """
    if spec.kind == ShiftKind.FULL:
        return True
    spec.require_background(x.background)
    return all(spec.allows_at(x.at, h) for h in spec.check_set(x.support))


def periodic_membership(spec: SubshiftSpec, y: PeriodicConfiguration) -> bool:
    """Membership of a periodic point, checked on the fundamental domain."""
    if spec.kind == ShiftKind.FULL:
        return True
    return all(spec.allows_at(y.at, h) for h in y.fundamental_domain())


def full_shift(group: GroupContext, alphabet: Alphabet) -> SubshiftSpec:
    return SubshiftSpec(ShiftKind.FULL, group, alphabet)


def sft(
    group: GroupContext,
    alphabet: Alphabet,
    window: Iterable[Elem],
    allowed: Iterable[Iterable[str]],
) -> SubshiftSpec:
    allowed_set = frozenset(tuple(alphabet.require(s) for s in row) for row in allowed)
    window = tuple(window)
    if any(len(row) != len(window) for row in allowed_set):
        raise ParseError("SFT pattern", "pattern length differs from window size")
    return SubshiftSpec(ShiftKind.SFT, group, alphabet, window, allowed_set)


def golden_mean(
    group: GroupContext, windows: Iterable[Iterable[Elem]], k: int = 1
) -> SubshiftSpec:
    """``X(F_1..F_m)`` over the alphabet ``{0..k}``."""
    alphabet = Alphabet.of(str(i) for i in range(k + 1))
    return SubshiftSpec(
        ShiftKind.GOLDEN_MEAN,
        group,
        alphabet,
        windows=tuple(tuple(window) for window in windows),
    )


def golden_mean_isolated(group: GroupContext, k: int = 1) -> SubshiftSpec:
    """Golden mean shift with ``F_j = {e, s_j}``: every non-zero symbol is isolated."""
    windows = [
        (group.identity, letter.value)
        for letter in group.letters
        if letter.index < letter.inverse_index and letter.value != group.identity
    ]
    return golden_mean(group, windows, k)


def enumerate_patterns(
    elements: tuple[Elem, ...], alphabet: Alphabet, cap: int
) -> Iterator[Pattern]:
    """
    Every pattern on ``elements`` in lexicographic symbol order.

    Raises:
        CapExceededError: If there are more than ``cap`` patterns.
    """
    needed = len(alphabet) ** len(elements)
    if needed > cap:
        raise CapExceededError("pattern enumeration", needed, cap)
    for symbols in itertools.product(alphabet.symbols, repeat=len(elements)):
        yield dict(zip(elements, symbols))


@dataclass(frozen=True)
class DensityReport:
    """Finite-radius density evidence for the homoclinic class of the background."""

    radius: int
    patterns_checked: int
    failures: tuple[Pattern, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def locally_admissible(spec: SubshiftSpec, pattern: Pattern) -> bool:
    """Every translated window lying inside the pattern's domain is allowed."""
    domain = set(pattern)
    group = spec.group
    read = pattern.__getitem__
    for h in spec.check_set(domain):
        if all(
            group.multiply(h, f) in domain
            for window in spec.constraint_windows
            for f in window
        ) and not spec.allows_at(read, h):
            return False
    return True


def density_check(
    spec: SubshiftSpec, background: str, a: Elem, radius: int, cap: int
) -> DensityReport:
    """
    Check that every locally admissible pattern on B(radius), extended by the
    background, lies in X together with its ``a``-translate.
    """
    spec.require_background(background)
    ball = spec.group.ball(radius).elements
    failures: list[Pattern] = []
    checked = 0
    for pattern in enumerate_patterns(ball, spec.alphabet, cap):
        if not locally_admissible(spec, pattern):
            continue
        checked += 1
        x = Configuration.build(spec.group, spec.alphabet, pattern, background)
        if not (membership(spec, x) and membership(spec, x.shift(a))):
            failures.append(pattern)
    return DensityReport(radius, checked, tuple(failures))
