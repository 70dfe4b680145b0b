"""Transfer maps, homomorphism extraction and residual verification.

Convention: a cocycle is untwisted by ``(T, φ)`` when

    c(g, x) = T(g x)^-1 φ(g) T(x)

The limit table ``b(x) = c^{(g),+}(x, x̄)`` satisfies
``b(g x)^-1 c(g, x) b(x) = φ(g)``, so ``T = b^-1``. A transfer written the other
way round (``c(g, x) = T'(g x) φ(g) T'(x)^-1``) is ``T' = T^-1``.
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum

from src.cocycles.homomorphism import Homomorphism, homomorphism_from_values
from src.cocycles.limits import direction_profile, limit_plus, power_value
from src.cocycles.local import LocalCocycle, Reader, evaluate, evaluate_word
from src.coeff import HElem
from src.constants import DEFAULT_TRANSFER_CAP
from src.exceptions import (
    HomomorphismInvalidError,
    NoWitnessConstructorError,
    ParseError,
    PatternEnumerationTooLargeError,
    RadiusInsufficientError,
)
from src.groups import Elem, Letter
from src.shifts import (
    Configuration,
    HomoclinicPair,
    Pattern,
    ShiftKind,
    enumerate_patterns,
    membership,
    specification_n,
)


def untwist_radius(c: LocalCocycle, g: Elem) -> int:
    """
    ``N(g, r_0)``: pairs agreeing on ``B(N)`` have trivial plus limit along ``g``
    once the plus/minus test passes.

    Raises:
        TorsionElementError: If ``g`` has finite order.
        NoWitnessConstructorError: For shifts of finite type.
    """
    shift = c.shift
    if shift.kind == ShiftKind.SFT:
        raise NoWitnessConstructorError(shift.kind.value)
    r0 = c.window_radius()
    if shift.kind == ShiftKind.GOLDEN_MEAN:
        r0 = max(r0, shift.window_radius())
    return specification_n(c.group, g, r0)


class TransferMode(str, Enum):
    TABLE = "table"
    ON_DEMAND = "on_demand"


@dataclass(frozen=True)
class TransferMap:
    """
    ``T(x) = c^{(g),+}(x, x̄)^-1`` on the homoclinic class of ``x̄``.

    In table mode ``table`` maps the symbols of ``x`` on ``cells`` (ball order)
    to ``b(x)``; configurations with support outside the ball are rejected.
    """

    cocycle: LocalCocycle = field(repr=False)
    direction: Elem
    background: Configuration
    radius: int
    mode: TransferMode
    cells: tuple[Elem, ...] = ()
    table: Mapping[tuple[str, ...], HElem] = field(default_factory=dict, repr=False)

    def key(self, x: Configuration) -> tuple[str, ...]:
        if x.background != self.background.background:
            raise ParseError("configuration", "background differs from the basepoint")
        group = self.cocycle.group
        for g in x.support:
            if not group.within(g, self.radius):
                raise RadiusInsufficientError(self.radius, group.format_element(g))
        return tuple(x.at(g) for g in self.cells)

    def limit_value(self, x: Configuration) -> HElem:
        """``b(x) = c^{(g),+}(x, x̄)``."""
        if self.mode == TransferMode.ON_DEMAND:
            return limit_plus(self.cocycle, self.direction, self.pair(x))
        key = self.key(x)
        try:
            return self.table[key]
        except KeyError as e:
            raise ParseError("configuration", "not a point of the subshift") from e

    def __call__(self, x: Configuration) -> HElem:
        return self.cocycle.coeff.inverse(self.limit_value(x))

    def pair(self, x: Configuration) -> HomoclinicPair:
        return HomoclinicPair(x, self.background)

    def configuration(self, key: tuple[str, ...]) -> Configuration:
        """The configuration with symbols ``key`` on ``cells``."""
        return self.background.with_overlay(dict(zip(self.cells, key)))

    def patterns(self) -> list[Configuration]:
        """The tabulated configurations, in table order."""
        return [self.configuration(key) for key in self.table]


def transfer_map(
    c: LocalCocycle,
    g: Elem,
    background: Configuration,
    radius: int,
    *,
    cap: int = DEFAULT_TRANSFER_CAP,
    fallback: bool = True,
) -> TransferMap:
    """
    Tabulate ``b(p) = c^{(g),+}(x_p, x̄)`` over admissible patterns on ``B(radius)``.

    One stabilization index serves every pattern: the last ``j`` at which
    ``g^-j dep(g)`` meets ``B(radius)``, plus one. ``c(g^N, x̄)`` is shared.

    Raises:
        TorsionElementError: If ``g`` has finite order.
        BackgroundNotAdmissibleError: If ``x̄`` is not in X.
        PatternEnumerationTooLargeError: If there are more than ``cap`` patterns
            and ``fallback`` is off (otherwise the map evaluates on demand).
    """
    group, shift = c.group, c.shift
    group.require_non_torsion(g)
    if not background.is_constant():
        raise ParseError("basepoint", "the basepoint must be constant")
    shift.require_background(background.background)
    cells = group.ball(radius).elements
    needed = len(shift.alphabet) ** len(cells)
    if needed > cap:
        if not fallback:
            raise PatternEnumerationTooLargeError(radius, needed, cap)
        return TransferMap(c, g, background, radius, TransferMode.ON_DEMAND)

    profile = direction_profile(c, g, radius)
    n = profile.last_hit(cells) + 1
    base = power_value(c, profile, n, background)
    table: dict[tuple[str, ...], HElem] = {}
    for pattern in enumerate_patterns(cells, shift.alphabet, cap):
        if not _admissible(c, background, pattern):
            continue
        # cells outside the ball read the background
        read = _pattern_reader(pattern, background.background)
        value = profile.product(c, n, read)
        table[tuple(pattern[h] for h in cells)] = c.coeff.divide_left(value, base)
    return TransferMap(c, g, background, radius, TransferMode.TABLE, cells, table)


def _admissible(c: LocalCocycle, background: Configuration, pattern: Pattern) -> bool:
    if c.shift.kind == ShiftKind.FULL:
        return True
    return membership(c.shift, background.with_overlay(pattern))


def _pattern_reader(pattern: Pattern, symbol: str) -> Reader:
    return lambda h: pattern.get(h, symbol)


@dataclass(frozen=True)
class NonConstantCertificate:
    """``L(s) = T(s x) c(s, x) T(x)^-1`` differs between two samples, or the
    constant values fail a relator."""

    letter: Letter | None
    configurations: tuple[Configuration, ...] = ()
    values: tuple[HElem, ...] = ()
    relator: str | None = None


def letter_value(
    c: LocalCocycle, transfer: TransferMap, letter: Letter, x: Configuration
) -> HElem:
    """``L(s)`` at ``x``."""
    coeff = c.coeff
    moved = x.shift(letter.value)
    step = evaluate_word(c, (letter,), x.at)
    return coeff.multiply(
        coeff.multiply(transfer(moved), step), coeff.inverse(transfer(x))
    )


def extract_homomorphism(
    c: LocalCocycle, transfer: TransferMap, samples: Iterable[Configuration]
) -> Homomorphism | NonConstantCertificate:
    """
    Read ``φ(s) = L(s)`` off the samples.

    Raises:
        RadiusInsufficientError: If ``s x`` leaves the table for some sample.
    """
    samples = list(samples)
    values: dict[str, HElem] = {}
    for letter in c.group.letters:
        first: tuple[Configuration, HElem] | None = None
        for x in samples:
            value = letter_value(c, transfer, letter, x)
            if first is None:
                first = (x, value)
            elif value != first[1]:
                return NonConstantCertificate(
                    letter, (first[0], x), (first[1], value)
                )
        if first is not None:
            values[letter.name] = first[1]
    try:
        return homomorphism_from_values(c.group, c.coeff, values)
    except HomomorphismInvalidError as e:
        return NonConstantCertificate(None, relator=e.relator)


@dataclass(frozen=True)
class Residual:
    """One check of ``c(g, x) = T(g x)^-1 φ(g) T(x)``."""

    element: Elem
    configuration: Configuration
    lhs: HElem
    rhs: HElem

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class ResidualReport:
    residuals: tuple[Residual, ...]

    @property
    def failures(self) -> tuple[Residual, ...]:
        return tuple(r for r in self.residuals if not r.ok)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_untwist(
    c: LocalCocycle,
    transfer: TransferMap,
    phi: Homomorphism,
    battery: Iterable[tuple[Elem, Configuration]],
) -> ResidualReport:
    """
    Check the cohomology equation exactly on every ``(g, x)`` of the battery.

    Raises:
        RadiusInsufficientError: If ``x`` or ``g x`` leaves the table.
    """
    coeff = c.coeff
    residuals = []
    for g, x in battery:
        lhs = evaluate(c, g, x)
        rhs = coeff.multiply(
            coeff.divide_left(transfer(x.shift(g)), phi(g)), transfer(x)
        )
        residuals.append(Residual(g, x, lhs, rhs))
    return ResidualReport(tuple(residuals))
