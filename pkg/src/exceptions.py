"""Custom exceptions for untwist.

Every error carries the data that produced it. ``InputError`` subclasses mean
the inputs are wrong; ``BudgetError`` subclasses mean a configured cap or radius
was too small for an otherwise valid request.
"""

from typing import Any

from src.constants import (
    ERROR_AGREEMENT_BALL,
    ERROR_BACKGROUND_NOT_ADMISSIBLE,
    ERROR_BALL_TOO_LARGE,
    ERROR_CAP_EXCEEDED,
    ERROR_HOMOMORPHISM_INVALID,
    ERROR_INVERSE_INCONSISTENCY,
    ERROR_LIMIT_NOT_STABLE,
    ERROR_NO_WITNESS_CONSTRUCTOR,
    ERROR_NOT_A_GROUP,
    ERROR_NOT_CONNECTED,
    ERROR_NOT_IN_SUBSHIFT,
    ERROR_PARAMETER_OUT_OF_RANGE,
    ERROR_PARSE,
    ERROR_PATTERN_ENUMERATION,
    ERROR_PATTERN_NOT_ADMISSIBLE,
    ERROR_PATTERN_OUTSIDE_BALL,
    ERROR_PERIOD_TOO_SMALL,
    ERROR_RADIUS_BUDGET,
    ERROR_RADIUS_INSUFFICIENT,
    ERROR_RELATOR_VIOLATION,
    ERROR_SEPARATION_VIOLATED,
    ERROR_TORSION,
    ERROR_UNSUPPORTED_FAMILY,
)


class UntwistError(Exception):
    """Base class for all untwist errors."""


class InputError(UntwistError):
    """Raised when an input document or argument is invalid."""


class BudgetError(UntwistError):
    """Raised when a cap or radius is too small for the request."""


# --- Input errors ---


class UnsupportedFamilyError(InputError):
    """Raised when a group family is not one of the supported families."""

    def __init__(self, family: str):
        self.family = family
        super().__init__(ERROR_UNSUPPORTED_FAMILY.format(family=family))


class ParameterOutOfRangeError(InputError):
    """Raised when a family parameter is outside its documented bounds."""

    def __init__(self, name: str, value: int, low: int, high: int):
        self.name = name
        self.value = value
        super().__init__(
            ERROR_PARAMETER_OUT_OF_RANGE.format(
                name=name, value=value, low=low, high=high
            )
        )


class ParseError(InputError):
    """Raised when an element, word or document cannot be parsed."""

    def __init__(self, what: str, text: str):
        self.what = what
        self.text = text
        super().__init__(ERROR_PARSE.format(what=what, text=text))


class TorsionElementError(InputError):
    """Raised when a non-torsion element is required."""

    def __init__(self, element: str, order: int):
        self.element = element
        self.order = order
        super().__init__(ERROR_TORSION.format(element=element, order=order))


class NotAGroupError(InputError):
    """Raised when a multiplication table violates a group axiom."""

    def __init__(self, reason: str, witness: tuple[Any, ...]):
        self.reason = reason
        self.witness = witness
        super().__init__(ERROR_NOT_A_GROUP.format(reason=reason, witness=witness))


class BackgroundNotAdmissibleError(InputError):
    """Raised when the constant background is not a point of the subshift."""

    def __init__(self, symbol: str):
        self.symbol = symbol
        super().__init__(ERROR_BACKGROUND_NOT_ADMISSIBLE.format(symbol=symbol))


class NotInSubshiftError(InputError):
    """Raised when a configuration required to lie in X does not."""

    def __init__(self, element: str):
        self.element = element
        super().__init__(ERROR_NOT_IN_SUBSHIFT.format(element=element))


class PatternNotAdmissibleError(InputError):
    """Raised when a glue pattern does not extend to X or leaves its ball."""

    def __init__(
        self, name: str, element: str | None = None, radius: int | None = None
    ):
        self.name = name
        self.element = element
        self.radius = radius
        if element is None:
            message = ERROR_PATTERN_NOT_ADMISSIBLE.format(name=name)
        else:
            message = ERROR_PATTERN_OUTSIDE_BALL.format(
                name=name, element=element, radius=radius
            )
        super().__init__(message)


class AgreementBallViolatedError(InputError):
    """Raised when witness inputs disagree inside the agreement ball."""

    def __init__(self, radius: int, element: str):
        self.radius = radius
        self.element = element
        super().__init__(ERROR_AGREEMENT_BALL.format(radius=radius, element=element))


class RelatorViolationError(InputError):
    """Raised when a cocycle fails the identity along a relator."""

    def __init__(self, relator: str, pattern: dict[str, str], value: str):
        self.relator = relator
        self.pattern = pattern
        self.value = value
        super().__init__(
            ERROR_RELATOR_VIOLATION.format(
                relator=relator, value=value, pattern=pattern
            )
        )


class InverseInconsistencyError(InputError):
    """Raised when explicit rules for s and s^-1 disagree."""

    def __init__(self, letter: str, inverse: str, pattern: dict[str, str]):
        self.letter = letter
        self.inverse = inverse
        self.pattern = pattern
        super().__init__(
            ERROR_INVERSE_INCONSISTENCY.format(
                letter=letter, inverse=inverse, pattern=pattern
            )
        )


class HomomorphismInvalidError(InputError):
    """Raised when letter values do not define a homomorphism."""

    def __init__(self, relator: str):
        self.relator = relator
        super().__init__(ERROR_HOMOMORPHISM_INVALID.format(relator=relator))


class NoWitnessConstructorError(InputError):
    """Raised when a subshift kind has no specification witness constructor."""

    def __init__(self, kind: str):
        self.kind = kind
        super().__init__(ERROR_NO_WITNESS_CONSTRUCTOR.format(kind=kind))


# --- Budget errors ---


class BallTooLargeError(BudgetError):
    """Raised when a ball would exceed the element cap."""

    def __init__(self, radius: int, cap: int):
        self.radius = radius
        self.cap = cap
        super().__init__(ERROR_BALL_TOO_LARGE.format(radius=radius, cap=cap))


class RadiusBudgetExceededError(BudgetError):
    """Raised when a BFS word-length search exceeds its cap."""

    def __init__(self, element: str, cap: int):
        self.element = element
        self.cap = cap
        super().__init__(ERROR_RADIUS_BUDGET.format(element=element, cap=cap))


class CapExceededError(BudgetError):
    """Raised in strict mode when an exhaustive check exceeds its cap."""

    def __init__(self, what: str, needed: int, cap: int):
        self.what = what
        self.needed = needed
        self.cap = cap
        super().__init__(ERROR_CAP_EXCEEDED.format(what=what, needed=needed, cap=cap))


class PatternEnumerationTooLargeError(BudgetError):
    """Raised when a transfer table cannot be enumerated within the cap."""

    def __init__(self, radius: int, needed: int, cap: int):
        self.radius = radius
        self.needed = needed
        self.cap = cap
        super().__init__(
            ERROR_PATTERN_ENUMERATION.format(radius=radius, needed=needed, cap=cap)
        )


class RadiusInsufficientError(BudgetError):
    """Raised when a transfer table does not cover a configuration."""

    def __init__(self, radius: int, support: str):
        self.radius = radius
        self.support = support
        super().__init__(
            ERROR_RADIUS_INSUFFICIENT.format(radius=radius, support=support)
        )


class PeriodTooSmallError(BudgetError):
    """Raised when a period does not separate the cosets of the patch."""

    def __init__(self, period: int, first: str, second: str):
        self.period = period
        self.first = first
        self.second = second
        super().__init__(
            ERROR_PERIOD_TOO_SMALL.format(period=period, first=first, second=second)
        )


class SeparationViolatedError(BudgetError):
    """Raised when a transport path enters the forbidden ball."""

    def __init__(self, element: str, radius: int):
        self.element = element
        self.radius = radius
        super().__init__(
            ERROR_SEPARATION_VIOLATED.format(element=element, radius=radius)
        )


class NotConnectedWithinRError(BudgetError):
    """Raised when two points are not joined outside B(inner) inside B(outer).

    ``source_unbounded`` and ``target_unbounded`` record whether each endpoint's
    component reaches the outer sphere. Both true means a larger outer radius may
    connect them; otherwise the points sit in different components.
    """

    def __init__(
        self,
        source: str,
        target: str,
        inner: int,
        outer: int,
        *,
        source_unbounded: bool,
        target_unbounded: bool,
    ):
        self.source = source
        self.target = target
        self.inner = inner
        self.outer = outer
        self.source_unbounded = source_unbounded
        self.target_unbounded = target_unbounded
        super().__init__(
            ERROR_NOT_CONNECTED.format(
                source=source, target=target, inner=inner, outer=outer
            )
        )


# --- Internal consistency ---


class LimitNotStableError(UntwistError):
    """Raised by the debug limit check when a tail product moves after ``N*``."""

    def __init__(self, direction: str, index: int, moved_at: int):
        self.direction = direction
        self.index = index
        self.moved_at = moved_at
        super().__init__(
            ERROR_LIMIT_NOT_STABLE.format(
                direction=direction, index=index, moved_at=moved_at
            )
        )
