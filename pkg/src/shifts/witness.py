"""Specification witnesses and gluing evidence.

Given ``x, x'`` agreeing on ``B(N)``, the witness ``y`` copies ``x`` on the
forward cone ``P^+(a, r)``, ``x'`` on the backward cone ``P^-(a, r)`` and the
background elsewhere. The two cones meet only inside ``B(N)``, where ``x`` and
``x'`` agree, so ``y`` is well defined.
"""

from dataclasses import dataclass

from src.exceptions import (
    AgreementBallViolatedError,
    NoWitnessConstructorError,
    NotInSubshiftError,
    ParseError,
    PatternNotAdmissibleError,
)
from src.groups import Elem
from src.shifts.cones import in_cone, specification_n
from src.shifts.configuration import Configuration, Pattern
from src.shifts.subshift import ShiftKind, SubshiftSpec, membership


@dataclass(frozen=True)
class Witness:
    """A witness together with the radii it was built for."""

    configuration: Configuration
    direction: Elem
    radius: int
    agreement_radius: int


@dataclass(frozen=True)
class GlueResult:
    """``ok`` with the glued configuration, or ``too_close``."""

    ok: bool
    configuration: Configuration | None = None
    reason: str | None = None


def _check_agreement(x: Configuration, x_prime: Configuration, radius: int) -> None:
    group = x.group
    for g in sorted(x.support | x_prime.support, key=group.sort_key):
        if x.at(g) != x_prime.at(g) and group.within(g, radius):
            raise AgreementBallViolatedError(radius, group.format_element(g))


def _cone_glue(
    x: Configuration, x_prime: Configuration, a: Elem, r: int
) -> Configuration:
    group = x.group
    overlay: dict[Elem, str] = {}
    for g, symbol in x.cells:
        if in_cone(group, a, r, +1, g):
            overlay[g] = symbol
    for g, symbol in x_prime.cells:
        if in_cone(group, a, r, -1, g):
            overlay[g] = symbol
    return x.with_overlay(overlay)


def witness_full_shift(
    a: Elem,
    r: int,
    x: Configuration,
    x_prime: Configuration,
    basepoint: Configuration,
) -> Witness:
    """
    Full-shift witness: ``(x, y) in Δ^+(a, r)`` and ``(x', y) in Δ^-(a, r)``.

    Raises:
        ParseError: If the configurations are not over the basepoint's background.
        AgreementBallViolatedError: If ``x`` and ``x'`` differ inside ``B(N(a, r))``.
    """
    if not basepoint.is_constant():
        raise ParseError("basepoint", "the basepoint must be constant")
    for config in (x, x_prime):
        if config.background != basepoint.background:
            raise ParseError("configuration", "background differs from the basepoint")
    n = specification_n(x.group, a, r)
    _check_agreement(x, x_prime, n)
    return Witness(_cone_glue(x, x_prime, a, r), a, r, n)


def golden_mean_agreement_radius(spec: SubshiftSpec, a: Elem, r: int) -> int:
    """``N = M + r_0`` with ``M = N(a, r + r_0)`` and ``F_j ⊆ B(r_0)``."""
    r0 = spec.window_radius()
    return specification_n(spec.group, a, r + r0) + r0


def witness_golden_mean(
    spec: SubshiftSpec,
    a: Elem,
    r: int,
    x: Configuration,
    x_prime: Configuration,
) -> Witness:
    """
    Golden-mean witness over the zero background; ``y`` is verified to lie in X.

    Raises:
        NoWitnessConstructorError: If ``spec`` is not a golden mean shift.
        NotInSubshiftError: If ``x`` or ``x'`` is not in X.
        AgreementBallViolatedError: If ``x`` and ``x'`` differ inside ``B(N)``.
    """
    if spec.kind != ShiftKind.GOLDEN_MEAN:
        raise NoWitnessConstructorError(spec.kind.value)
    for config in (x, x_prime):
        if not membership(spec, config):
            raise NotInSubshiftError(_first_cell(config))
    n = golden_mean_agreement_radius(spec, a, r)
    _check_agreement(x, x_prime, n)
    y = _cone_glue(x, x_prime, a, r)
    if not membership(spec, y):
        raise NotInSubshiftError(_first_cell(y))
    return Witness(y, a, r, n)


def witness(
    spec: SubshiftSpec,
    a: Elem,
    r: int,
    x: Configuration,
    x_prime: Configuration,
) -> Witness:
    """Dispatch to the witness constructor for the subshift kind."""
    if spec.kind == ShiftKind.FULL:
        basepoint = Configuration.build(spec.group, spec.alphabet, {}, x.background)
        return witness_full_shift(a, r, x, x_prime, basepoint)
    return witness_golden_mean(spec, a, r, x, x_prime)


def _first_cell(config: Configuration) -> str:
    group = config.group
    if not config.cells:
        return group.format_element(group.identity)
    return group.format_element(config.cells[0][0])


def glue_check(
    spec: SubshiftSpec, p1: Pattern, p2: Pattern, g: Elem, r: int
) -> GlueResult:
    """
    Mixing evidence: ``y`` with ``y|B(r) = p2`` and ``(g^-1 y)|B(r) = p1``.

    Built by disjoint overlay over the zero background when
    ``ℓ(g) > 2r + 2r_0``; otherwise the result is ``too_close``.

    Raises:
        NoWitnessConstructorError: For shifts of finite type.
        PatternNotAdmissibleError: If a pattern has a cell outside ``B(r)`` or
            does not extend to X by background.
    """
    if spec.kind == ShiftKind.SFT:
        raise NoWitnessConstructorError(spec.kind.value)
    first, second = (
        _admissible_pattern(spec, name, pattern, r)
        for name, pattern in (("p1", p1), ("p2", p2))
    )
    group = spec.group
    r0 = spec.window_radius()
    if group.word_length(g) <= 2 * r + 2 * r0:
        return GlueResult(ok=False, reason="too_close")
    overlay = dict(second.overlay)
    overlay.update(first.shift(g).overlay)
    y = second.with_overlay(overlay)
    if not membership(spec, y):
        raise NotInSubshiftError(_first_cell(y))
    return GlueResult(ok=True, configuration=y)


def _admissible_pattern(
    spec: SubshiftSpec, name: str, pattern: Pattern, r: int
) -> Configuration:
    """The pattern on the zero background, if it lies in ``B(r)`` and in X."""
    group = spec.group
    for h in sorted(pattern, key=group.sort_key):
        if not group.within(h, r):
            raise PatternNotAdmissibleError(name, group.format_element(h), r)
    config = Configuration.build(group, spec.alphabet, pattern)
    if not membership(spec, config):
        raise PatternNotAdmissibleError(name)
    return config
